#pragma once

#include <json.hpp>

#include "vh/classify.hpp"
#include "vh/dsl.hpp"

namespace vh {

using Json = nlohmann::json;

inline Json root_json(const Root& r) { return Json(r.c); }

inline Json rat_json(const Rat& x) { return Json(rat_str(x)); }

// Cosmetic annotation for rank <= 2 components, after the classical rank-2
// classification of real forms.
inline std::optional<std::string> component_label(const VoganDiagram& vd,
                                                  const VoganComponent& comp) {
  int paint = 0;
  for (int v : comp.vertices)
    if (vd.painted[v]) ++paint;
  if (comp.type == ComponentType::Complex) {
    if (comp.vertices.size() == 2) return "sl(2,C)";
    return std::nullopt;
  }
  BlockInfo info = classify_block(vd.rs->cartan, comp.vertices);
  if (info.rank > 2) return std::nullopt;
  if (info.fam == Family::A && info.rank == 1) return paint ? "sl(2,R)" : "su(2)";
  if (info.fam == Family::A && info.rank == 2) {
    if (comp.type == ComponentType::Mixed) return "sl(3,R)";
    return paint == 0 ? "su(3)" : "su(2,1)";
  }
  if (info.fam == Family::B && info.rank == 2) {
    if (paint == 0) return "so(5)";
    if (paint == 2) return "so(3,2)";
    bool long_painted = vd.painted[info.canon[0]];
    return long_painted ? "so(3,2)" : "so(4,1)";
  }
  if (info.fam == Family::G) return paint ? "g2^nc" : "g2^c";
  return std::nullopt;
}

inline Json certificate_json(const AlternativeCertificate& cert) {
  Json j;
  if (cert.kind == AlternativeCertificate::Kind::Primal) {
    j["kind"] = "primal";
    Json xs = Json::array(), ts = Json::array();
    for (const Rat& v : cert.x) xs.push_back(rat_json(v));
    for (const Rat& v : cert.t) ts.push_back(rat_json(v));
    j["x"] = xs;
    j["t"] = ts;
  } else {
    j["kind"] = "dual";
    Json ys = Json::array();
    for (const Rat& v : cert.y) ys.push_back(rat_json(v));
    j["y"] = ys;
  }
  return j;
}

inline Json metric_parameters_json(const MetricParameters& mp) {
  Json j;
  Json lam = Json::array(), mu = Json::array(), dd = Json::array();
  for (const auto& [root, v] : mp.lambda)
    lam.push_back(Json{{"root", root_json(root)}, {"value", rat_json(v)}});
  for (const auto& [root, v] : mp.mu)
    mu.push_back(Json{{"root", root_json(root)},
                      {"value", QC::gauss(v.re, v.im).str()}});
  for (const auto& [root, v] : mp.D)
    dd.push_back(Json{{"root", root_json(root)}, {"value", rat_json(v)}});
  j["lambda"] = lam;
  j["mu"] = mu;
  j["D"] = dd;
  return j;
}

inline Json pluriclosed_json(const PluriclosedVerdict& v) {
  Json j;
  j["status"] = pluriclosed_status_name(v.status);
  j["pluriclosed"] = v.status == PluriclosedStatus::Yes;
  if (v.witness) {
    Json ks = Json::array();
    for (const Rat& k : v.witness->kappa) ks.push_back(rat_json(k));
    j["kappa"] = ks;
    Json lam = Json::array();
    for (const auto& [root, val] : v.witness->lambda)
      lam.push_back(Json{{"root", root_json(root)}, {"value", rat_json(val)}});
    j["lambda"] = lam;
  }
  return j;
}

inline Json ell_json(const EllSubspace& ell) {
  Json rows = Json::array();
  for (const auto& row : ell.rows) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.str());
    rows.push_back(r);
  }
  return rows;
}

// Whether some admissible ell admits a pluriclosed metric: requires an inner
// even-rank diagram whose components all pass table 1, witnessed through
// construct_compatible_ell.
inline bool pluriclosed_for_some_ell(const VoganDiagram& vd) {
  if (vd.rank() % 2 != 0) return false;
  for (const auto& c : vogan_components(vd))
    if (!c.inner_type() || !table1_membership(vd, c, Table1Method::HighestRoot)) return false;
  RegularStructure st = make_structure(vd, Delta0{}, construct_compatible_ell(vd));
  return decide_pluriclosed(st).status == PluriclosedStatus::Yes;
}

struct ClassifyOptions {
  bool best_ell = false;
  std::string method = "both";  // char | oracle | both
};

struct ClassifyOutcome {
  Json report;
  bool method_disagreement = false;
};

inline ClassifyOutcome classify_report(const DiagramExpr& expr, const ClassifyOptions& opt) {
  Elaborated el = elaborate(expr);
  const VoganDiagram& vd = el.vd;
  ClassifyOutcome out;
  Json& j = out.report;
  j["input"] = print_diagram(expr);
  j["rank"] = vd.rank();

  Json comps = Json::array();
  for (const auto& comp : vogan_components(vd)) {
    Json c;
    Json verts = Json::array();
    for (int v : comp.vertices) verts.push_back(v + 1);
    c["vertices"] = verts;
    c["type"] = component_type_name(comp.type);
    c["table1"] = Json{{"highest_root", table1_membership(vd, comp, Table1Method::HighestRoot)},
                       {"pattern", table1_membership(vd, comp, Table1Method::Pattern)},
                       {"no_sum_rule", table1_membership(vd, comp, Table1Method::NoSumRule)}};
    if (auto label = component_label(vd, comp)) c["label"] = *label;
    comps.push_back(std::move(c));
  }
  j["components"] = comps;
  Json d0 = Json::array();
  for (int v : el.delta0.verts) d0.push_back(v + 1);
  j["delta0"] = d0;

  const bool even = vd.rank() % 2 == 0;
  std::optional<EllSubspace> used_ell = el.ell;
  std::string ell_source = "given";
  if (!used_ell && even) {
    used_ell = construct_default_ell(vd, el.delta0);
    ell_source = "default";
  }
  RegularStructure st = make_structure(vd, el.delta0, used_ell);

  BalancedVerdict bal_char = decide_balanced(st, BalancedMethod::Characterization);
  BalancedVerdict bal_oracle = decide_balanced(st, BalancedMethod::Oracle);
  out.method_disagreement = bal_char.balanced != bal_oracle.balanced;
  Json bal;
  bal["characterization"] = bal_char.balanced;
  bal["oracle"] = bal_oracle.balanced;
  bal["balanced"] = opt.method == "char" ? bal_char.balanced : bal_oracle.balanced;
  bal["certificate"] = certificate_json(bal_oracle.certificate);
  if (bal_oracle.witness) bal["witness"] = metric_parameters_json(*bal_oracle.witness);
  j["balanced"] = bal;

  Json moduli = Json::array();
  if (even) {
    for (const auto& d : enumerate_delta0(vd)) {
      Json entry;
      Json dj = Json::array();
      for (int v : d.verts) dj.push_back(v + 1);
      entry["delta0"] = dj;
      entry["dim"] = moduli_dim(vd, d);
      moduli.push_back(std::move(entry));
    }
    j["moduli"] = moduli;
  } else {
    j["moduli"] = nullptr;
  }

  Json plc;
  if (!even) {
    plc["status"] = "odd_rank";
    plc["pluriclosed"] = false;
    plc["note"] = "odd-rank diagrams admit no regular complex structure";
    j["exclusivity"] = true;
  } else {
    PluriclosedVerdict verdict = decide_pluriclosed(st);
    plc = pluriclosed_json(verdict);
    plc["ell_source"] = ell_source;
    plc["ell"] = ell_json(*used_ell);
    plc["some_ell"] = pluriclosed_for_some_ell(vd);
    if (opt.best_ell && vd.inner()) {
      EllSubspace best = construct_compatible_ell(vd);
      RegularStructure st_best = make_structure(vd, el.delta0, best);
      Json bj = pluriclosed_json(decide_pluriclosed(st_best));
      bj["ell"] = ell_json(best);
      plc["best_ell"] = bj;
    }
    j["exclusivity"] = !(bal_oracle.balanced && verdict.status == PluriclosedStatus::Yes);
  }
  j["pluriclosed"] = plc;
  return out;
}

// Canonical textual form of an enumerated diagram: vertices are renumbered
// through the canonical block ordering, so the emitted expression re-parses to
// an isomorphic Vogan diagram.
inline DiagramExpr expr_from_diagram(const VoganDiagram& vd, const Delta0& d0) {
  DiagramExpr expr;
  const auto& comps = vd.rs->components;
  std::vector<int> block_of(vd.rank());
  for (size_t b = 0; b < comps.size(); ++b)
    for (int v : comps[b]) block_of[v] = static_cast<int>(b);
  std::vector<bool> used(comps.size(), false);
  for (size_t b = 0; b < comps.size(); ++b) {
    if (used[b]) continue;
    used[b] = true;
    BlockInfo info = classify_block(vd.rs->cartan, comps[b]);
    FactorExpr f;
    f.fam = info.fam;
    f.rank = info.rank;
    std::vector<int> verts = info.canon;  // local position -> global vertex
    int image_block = block_of[vd.theta[comps[b][0]]];
    if (image_block != static_cast<int>(b)) {
      used[image_block] = true;
      f.paired = true;
      for (int k = 0; k < info.rank; ++k) verts.push_back(vd.theta[info.canon[k]]);
    } else {
      auto local = [&](int v) {
        for (size_t k = 0; k < verts.size(); ++k)
          if (verts[k] == v) return static_cast<int>(k) + 1;
        throw Error("expr_from_diagram: vertex outside its block");
      };
      for (int k = 0; k < info.rank; ++k) {
        int v = verts[k], img = vd.theta[v];
        if (v < img) {
          int a = local(v), bb = local(img);
          f.inv.emplace_back(std::min(a, bb), std::max(a, bb));
        }
        if (vd.painted[v]) f.paint.push_back(k + 1);
      }
    }
    for (size_t k = 0; k < verts.size(); ++k)
      for (int dv : d0.verts)
        if (dv == verts[k]) f.delta0.push_back(static_cast<int>(k) + 1);
    std::sort(f.inv.begin(), f.inv.end());
    std::sort(f.paint.begin(), f.paint.end());
    std::sort(f.delta0.begin(), f.delta0.end());
    expr.factors.push_back(std::move(f));
  }
  return expr;
}

inline Json enumeration_line(int seq, const VoganDiagram& vd, const Delta0& d0) {
  Json j;
  j["seq"] = seq;
  j["expr"] = print_diagram(expr_from_diagram(vd, d0));
  RegularStructure st = make_structure(vd, d0);
  BalancedVerdict bal = decide_balanced(st, BalancedMethod::Oracle);
  j["balanced"] = bal.balanced;
  Json types = Json::array(), table1 = Json::array();
  for (const auto& comp : vogan_components(vd)) {
    types.push_back(component_type_name(comp.type));
    table1.push_back(table1_membership(vd, comp, Table1Method::HighestRoot));
  }
  j["component_types"] = types;
  j["table1"] = table1;
  if (vd.rank() % 2 == 0) {
    j["moduli_dim"] = moduli_dim(vd, d0);
    j["pluriclosed_some_ell"] = pluriclosed_for_some_ell(vd);
  } else {
    j["moduli_dim"] = nullptr;
    j["pluriclosed_some_ell"] = nullptr;
  }
  return j;
}

}  // namespace vh
