#pragma once

#include <map>
#include <optional>
#include <vector>

#include "vh/alternative.hpp"
#include "vh/regular.hpp"

namespace vh {

struct GaussQ {
  Rat re, im;

  GaussQ conj() const { return {re, -im}; }
  Rat norm2() const { return re * re + im * im; }
};

// Off-Cartan data of a right-T-invariant Hermitian metric: lambda_alpha > 0 for
// alpha in R, mu_alpha on the R3 orbit representatives (mu_{-sigma a} is the
// conjugate), and D_alpha = lambda_alpha lambda_{-sigma alpha} - |mu_alpha|^2 > 0.
struct MetricParameters {
  std::map<Root, Rat> lambda;
  std::map<Root, GaussQ> mu;
  std::map<Root, Rat> D;
};

inline bool metric_parameters_valid(const VoganDiagram& vd, const RSet& rset,
                                    const MetricParameters& mp) {
  for (const Root& a : rset.R) {
    auto it = mp.lambda.find(a);
    if (it == mp.lambda.end() || it->second <= 0) return false;
  }
  for (const Root& a : rset.R2) {
    Root partner = -sigma_root(vd, a);
    Root rep = std::min(a, partner);
    auto mu_it = mp.mu.find(rep);
    auto d_it = mp.D.find(a);
    auto la = mp.lambda.find(a), lp = mp.lambda.find(partner);
    if (mu_it == mp.mu.end() || d_it == mp.D.end()) return false;
    if (la == mp.lambda.end() || lp == mp.lambda.end()) return false;
    if (d_it->second != la->second * lp->second - mu_it->second.norm2()) return false;
    if (d_it->second <= 0) return false;
  }
  return true;
}

// Linearized balanced equation as a homogeneous alternative: one positive
// column s_alpha (c_1(alpha), ..., c_r(alpha)) per imaginary positive root, one
// free column beta - sigma beta per R3 orbit.
struct BalancedProblem {
  AlternativeProblem prob;
  std::vector<Root> x_roots;  // imaginary positive roots, (height, lex) order
  std::vector<Root> t_roots;  // R3 orbit representatives
};

inline BalancedProblem balanced_problem_labeled(const VoganDiagram& vd, const Delta0& d0) {
  require_delta0(vd, d0);
  RSet rset = build_R(vd, d0);
  BalancedProblem out;
  const int r = vd.rank();
  out.prob.rows = r;
  for (const Root& a : vd.rs->positive_roots)
    if (classify_root(vd, a) != RootClass::Complex) out.x_roots.push_back(a);
  out.t_roots = rset.R3;
  out.prob.M.assign(r, Vec<Rat>(out.x_roots.size(), Rat(0)));
  out.prob.N.assign(r, Vec<Rat>(out.t_roots.size(), Rat(0)));
  for (size_t j = 0; j < out.x_roots.size(); ++j) {
    int s = root_sign(vd, out.x_roots[j]);
    for (int i = 0; i < r; ++i) out.prob.M[i][j] = Rat(s * out.x_roots[j].c[i]);
  }
  for (size_t k = 0; k < out.t_roots.size(); ++k) {
    Root diff = out.t_roots[k] + (-sigma_root(vd, out.t_roots[k]));
    for (int i = 0; i < r; ++i) out.prob.N[i][k] = Rat(diff.c[i]);
  }
  return out;
}

inline AlternativeProblem balanced_problem(const VoganDiagram& vd, const Delta0& d0) {
  return balanced_problem_labeled(vd, d0).prob;
}

enum class BalancedMethod { Characterization, Oracle };

struct BalancedVerdict {
  bool balanced;
  std::vector<bool> table1_flags;  // per connected Vogan component
  AlternativeCertificate certificate;
  std::optional<MetricParameters> witness;
};

// Rational witness from a primal certificate: lambda = 1/x on imaginary roots,
// and on each R3 orbit mu = t, lambda pair (1, 1 + t^2), so D = 1 and the free
// coefficient mu/D equals t exactly.
inline MetricParameters balanced_witness(const RegularStructure& st,
                                         const AlternativeCertificate& cert) {
  const VoganDiagram& vd = st.vd;
  BalancedProblem bp = balanced_problem_labeled(vd, st.delta0);
  if (cert.kind != AlternativeCertificate::Kind::Primal || !verify_certificate(bp.prob, cert))
    throw Error("balanced_witness: certificate is not a verified primal");
  MetricParameters mp;
  for (const Root& a : st.rset.R0) mp.lambda[a] = 1;
  for (size_t j = 0; j < bp.x_roots.size(); ++j) mp.lambda[bp.x_roots[j]] = Rat(1) / cert.x[j];
  for (size_t k = 0; k < bp.t_roots.size(); ++k) {
    const Root& b = bp.t_roots[k];
    const Rat& t = cert.t[k];
    Root partner = -sigma_root(vd, b);
    mp.mu[b] = GaussQ{t, Rat(0)};
    mp.lambda[b] = 1;
    mp.lambda[partner] = Rat(1) + t * t;
    mp.D[b] = 1;
    mp.D[partner] = 1;
  }
  return mp;
}

// Evaluates the balanced equation exactly over the Gaussian rationals.
inline bool verify_balanced_witness(const RegularStructure& st, const MetricParameters& mp) {
  const VoganDiagram& vd = st.vd;
  if (!metric_parameters_valid(vd, st.rset, mp)) return false;
  const int r = vd.rank();
  Vec<Rat> re(r, Rat(0)), im(r, Rat(0));
  for (const Root& a : vd.rs->positive_roots) {
    RootClass cls = classify_root(vd, a);
    if (cls == RootClass::Complex) continue;
    Rat coef = Rat(cls == RootClass::CompactImaginary ? 1 : -1) / mp.lambda.at(a);
    for (int i = 0; i < r; ++i) re[i] += coef * a.c[i];
  }
  for (const Root& a : st.rset.R2) {
    Root partner = -sigma_root(vd, a);
    GaussQ mu_ms;  // mu_{-sigma alpha}
    if (a < partner || a == partner)
      mu_ms = mp.mu.at(a).conj();
    else
      mu_ms = mp.mu.at(partner);
    const Rat& d = mp.D.at(a);
    for (int i = 0; i < r; ++i) {
      re[i] += mu_ms.re / d * a.c[i];
      im[i] += mu_ms.im / d * a.c[i];
    }
  }
  for (int i = 0; i < r; ++i)
    if (re[i] != 0 || im[i] != 0) return false;
  return true;
}

inline BalancedVerdict decide_balanced(const RegularStructure& st, BalancedMethod method) {
  const VoganDiagram& vd = st.vd;
  BalancedVerdict out;
  for (const auto& comp : vogan_components(vd))
    out.table1_flags.push_back(table1_membership(vd, comp, Table1Method::HighestRoot));
  BalancedProblem bp = balanced_problem_labeled(vd, st.delta0);
  out.certificate = solve_alternative(bp.prob);
  bool oracle_balanced = out.certificate.kind == AlternativeCertificate::Kind::Primal;
  bool char_balanced = true;
  for (bool f : out.table1_flags)
    if (f) char_balanced = false;
  out.balanced = (method == BalancedMethod::Oracle) ? oracle_balanced : char_balanced;
  if (oracle_balanced) out.witness = balanced_witness(st, out.certificate);
  return out;
}

enum class PluriclosedStatus { Yes, NotInner, NotTable1, NoKappa };

inline const char* pluriclosed_status_name(PluriclosedStatus s) {
  switch (s) {
    case PluriclosedStatus::Yes: return "yes";
    case PluriclosedStatus::NotInner: return "not_inner";
    case PluriclosedStatus::NotTable1: return "not_table1";
    case PluriclosedStatus::NoKappa: return "no_kappa";
  }
  return "?";
}

// Canonical pluriclosed metric data: kappa_i > 0 per simple factor, the induced
// lambda_alpha = kappa_i, and the Cartan block G(kappa) of the metric.
struct PluriclosedWitness {
  std::vector<Rat> kappa;  // per connected Vogan component
  std::map<Root, Rat> lambda;
  Mat<Rat> cartan_form;
};

struct PluriclosedVerdict {
  PluriclosedStatus status;
  std::optional<PluriclosedWitness> witness;
};

namespace detail {

inline Mat<Rat> factor_gram(const RootSystem& rs, const std::vector<int>& verts) {
  const int r = rs.rank();
  Mat<Rat> g(r, Vec<Rat>(r, Rat(0)));
  for (int u : verts)
    for (int v : verts) g[u][v] = Rat(rs.gram[u][v]);
  return g;
}

}  // namespace detail

// Inner case: find kappa_i > 0 with J^T G(kappa) J = G(kappa), where
// G(kappa) = sum_i kappa_i G_i on the real Cartan basis. The linear system in
// kappa is expanded over the rational basis of the coefficient field, so the
// feasibility oracle itself stays rational.
inline PluriclosedVerdict decide_pluriclosed(const RegularStructure& st) {
  if (!st.ell) throw MissingEll("decide_pluriclosed: ell subspace required");
  const VoganDiagram& vd = st.vd;
  auto comps = vogan_components(vd);
  for (const auto& c : comps)
    if (!c.inner_type()) return {PluriclosedStatus::NotInner, std::nullopt};
  for (const auto& c : comps)
    if (!table1_membership(vd, c, Table1Method::HighestRoot))
      return {PluriclosedStatus::NotTable1, std::nullopt};

  const int r = vd.rank();
  Mat<QNum> J = j_on_cartan(vd, *st.ell);
  const int s = static_cast<int>(comps.size());
  std::vector<Mat<QNum>> defects;  // J^T G_i J - G_i
  std::vector<Mat<Rat>> grams;
  for (const auto& c : comps) {
    Mat<Rat> gi = detail::factor_gram(*vd.rs, c.vertices);
    grams.push_back(gi);
    Mat<QNum> giq(r, Vec<QNum>(r, QNum(0)));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) giq[a][b] = QNum(gi[a][b]);
    Mat<QNum> e = mat_mul(mat_mul(mat_transpose(J), giq), J);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) e[a][b] = e[a][b] - giq[a][b];
    defects.push_back(std::move(e));
  }
  const size_t width = size_t(1) << st.ell->tower->gens.size();
  AlternativeProblem prob;
  for (int a = 0; a < r; ++a)
    for (int b = a; b < r; ++b)
      for (size_t w = 0; w < width; ++w) {
        Vec<Rat> row(s, Rat(0));
        bool nonzero = false;
        for (int i = 0; i < s; ++i) {
          QNum lifted = defects[i][a][b].lifted(st.ell->tower);
          row[i] = lifted.coeffs()[w];
          if (row[i] != 0) nonzero = true;
        }
        if (nonzero) prob.M.push_back(std::move(row));
      }
  if (prob.M.empty()) prob.M.push_back(Vec<Rat>(s, Rat(0)));
  prob.rows = static_cast<int>(prob.M.size());
  prob.N.assign(prob.rows, Vec<Rat>{});
  AlternativeCertificate cert = solve_alternative(prob);
  if (cert.kind != AlternativeCertificate::Kind::Primal)
    return {PluriclosedStatus::NoKappa, std::nullopt};

  PluriclosedWitness wit;
  wit.kappa = cert.x;
  wit.cartan_form.assign(r, Vec<Rat>(r, Rat(0)));
  for (int i = 0; i < s; ++i)
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) wit.cartan_form[a][b] += wit.kappa[i] * grams[i][a][b];
  for (int i = 0; i < s; ++i) {
    std::vector<bool> in(r, false);
    for (int v : comps[i].vertices) in[v] = true;
    for (const Root& a : vd.rs->positive_roots) {
      bool on_comp = true;
      for (int k = 0; k < r; ++k)
        if (a.c[k] != 0 && !in[k]) on_comp = false;
      if (on_comp) wit.lambda[a] = wit.kappa[i];
    }
  }
  // Witness invariants, re-verified exactly.
  {
    Mat<QNum> gk(r, Vec<QNum>(r, QNum(0)));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) gk[a][b] = QNum(wit.cartan_form[a][b]);
    Mat<QNum> lhs = mat_mul(mat_mul(mat_transpose(J), gk), J);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        if (!(lhs[a][b] == gk[a][b]))
          throw Error("decide_pluriclosed: witness fails J-invariance");
    for (const auto& c : comps) {
      std::vector<bool> in(r, false);
      for (int v : c.vertices) in[v] = true;
      std::vector<Root> pos;
      for (const Root& a : vd.rs->positive_roots) {
        bool on_comp = true;
        for (int k = 0; k < r; ++k)
          if (a.c[k] != 0 && !in[k]) on_comp = false;
        if (on_comp) pos.push_back(a);
      }
      for (const Root& a : pos)
        for (const Root& b : pos) {
          Root sum = a + b;
          if (!vd.rs->is_root(sum)) continue;
          if (root_sign(vd, sum) != root_sign(vd, a) + root_sign(vd, b) - 1)
            throw Error("decide_pluriclosed: witness fails the root-sum equation");
        }
    }
  }
  return {PluriclosedStatus::Yes, std::move(wit)};
}

// An ell whose J is compatible with G(kappa = 1): Gram-Schmidt without
// normalization, then a paired rotation scaled exactly inside the quadratic
// tower generated by the products of consecutive norms.
inline EllSubspace construct_compatible_ell(const VoganDiagram& vd) {
  if (!vd.inner()) throw NotInner("construct_compatible_ell: diagram must be inner");
  const int r = vd.rank();
  if (r % 2 != 0) throw OddRank("construct_compatible_ell: rank must be even");
  Mat<Rat> G(r, Vec<Rat>(r, Rat(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) G[i][j] = Rat(vd.rs->gram[i][j]);
  auto gdot = [&](const Vec<Rat>& x, const Vec<Rat>& y) {
    Rat s(0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) s += x[i] * G[i][j] * y[j];
    return s;
  };
  Mat<Rat> u;
  Vec<Rat> norms;
  for (int k = 0; k < r; ++k) {
    Vec<Rat> v(r, Rat(0));
    v[k] = 1;
    for (int j = 0; j < k; ++j) {
      Rat c = gdot(v, u[j]) / norms[j];
      for (int i = 0; i < r; ++i) v[i] -= c * u[j][i];
    }
    norms.push_back(gdot(v, v));
    u.push_back(std::move(v));
  }
  TowerPtr tower = trivial_tower();
  std::vector<QNum> roots;  // sqrt(n_{2j} n_{2j+1})
  for (int j = 0; j + 1 < r; j += 2) {
    auto [tw, sq] = adjoin_sqrt(tower, norms[j] * norms[j + 1]);
    tower = tw;
    roots.push_back(sq);
  }
  Mat<QC> T = real_cartan_basis(vd);
  EllSubspace ell;
  ell.tower = tower;
  for (int j = 0; j + 1 < r; j += 2) {
    QNum c = roots[j / 2].lifted(tower) * QNum(Rat(1) / norms[j + 1]);
    Vec<QC> z(r, QC(0));
    for (int i = 0; i < r; ++i) z[i] = QC(QNum(u[j][i]), -(c * QNum(u[j + 1][i])));
    ell.rows.push_back(mat_vec(T, z));
  }
  if (!validate_ell(vd, Delta0{}, ell))
    throw Error("construct_compatible_ell: postcondition failed");
  return ell;
}

// Theorem-of-the-alternative shape of the main result: a structure is never
// both balanced and pluriclosed.
inline bool exclusivity_check(const VoganDiagram& vd, const Delta0& d0, const EllSubspace& ell) {
  RegularStructure st = make_structure(vd, d0, ell);
  BalancedVerdict bal = decide_balanced(st, BalancedMethod::Characterization);
  PluriclosedVerdict plc = decide_pluriclosed(st);
  return !(bal.balanced && plc.status == PluriclosedStatus::Yes);
}

}  // namespace vh
