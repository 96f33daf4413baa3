// vh: classify regular complex structures on semisimple Lie groups by exact
// Vogan-diagram combinatorics, with machine-checkable certificates.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "vh/parallel.hpp"
#include "vh/report.hpp"
#include "vh/verify_paper.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUser = 1;
constexpr int kExitInternal = 2;

int run_classify(const std::string& text, const vh::ClassifyOptions& opt) {
  vh::ClassifyOutcome outcome = vh::classify_report(vh::parse_diagram(text), opt);
  std::cout << outcome.report.dump(2) << "\n";
  if (outcome.method_disagreement) {
    std::cerr << "internal error: balanced deciders disagree\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run_witness(const std::string& text) {
  vh::ClassifyOptions opt;
  opt.best_ell = true;
  vh::ClassifyOutcome outcome = vh::classify_report(vh::parse_diagram(text), opt);
  vh::Json j;
  j["input"] = outcome.report["input"];
  j["balanced"] = outcome.report["balanced"]["balanced"];
  if (outcome.report["balanced"].contains("witness"))
    j["balanced_witness"] = outcome.report["balanced"]["witness"];
  j["pluriclosed"] = outcome.report["pluriclosed"];
  std::cout << j.dump(2) << "\n";
  return outcome.method_disagreement ? kExitInternal : kExitOk;
}

std::vector<std::pair<vh::CartanMatrix, std::string>> expand_types(
    const std::vector<std::string>& items, int rank_max) {
  std::vector<std::pair<vh::CartanMatrix, std::string>> out;
  for (const std::string& item : items) {
    if (item.size() == 1 && item[0] >= 'A' && item[0] <= 'G') {
      for (auto [fam, r] : vh::finite_types(rank_max))
        if (fam == static_cast<vh::Family>(item[0]))
          out.emplace_back(vh::make_block(fam, r),
                           std::string(1, item[0]) + std::to_string(r));
      continue;
    }
    vh::DiagramExpr expr = vh::parse_diagram(item);
    for (const auto& f : expr.factors)
      if (!f.inv.empty() || !f.paint.empty() || !f.delta0.empty())
        throw vh::ValidationError(0, "enumerate takes bare types like A2 or A2~A2");
    std::vector<vh::CartanMatrix> blocks;
    for (const auto& f : expr.factors) {
      blocks.push_back(vh::make_block(f.fam, f.rank));
      if (f.paired) blocks.push_back(vh::make_block(f.fam, f.rank));
    }
    out.emplace_back(vh::direct_sum(blocks), item);
  }
  return out;
}

int run_enumerate(const std::vector<std::string>& items, int rank_max, bool dedup,
                  const std::string& outfile) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!outfile.empty()) {
    file.open(outfile);
    if (!file) {
      std::cerr << "cannot open " << outfile << "\n";
      return kExitUser;
    }
    os = &file;
  }
  struct Task {
    vh::VoganDiagram vd;
    vh::Delta0 d0;
  };
  std::vector<Task> tasks;
  for (const auto& [cm, label] : expand_types(items, rank_max)) {
    for (const auto& vd : vh::enumerate_vogan(cm, dedup))
      for (const auto& d0 : vh::enumerate_delta0(vd)) tasks.push_back({vd, d0});
  }
  std::vector<std::string> lines(tasks.size());
  vh::parallel_for(static_cast<int>(tasks.size()), vh::worker_count(), [&](int i) {
    lines[i] = vh::enumeration_line(i, tasks[i].vd, tasks[i].d0).dump();
  });
  for (const auto& line : lines) (*os) << line << "\n";
  return kExitOk;
}

int run_verify_paper(int rank_max) {
  if (rank_max < 2 || rank_max > 8) {
    std::cerr << "verify-paper: --rank-max must be between 2 and 8\n";
    return kExitUser;
  }
  auto checks = vh::verify_paper(rank_max, vh::worker_count());
  bool all_pass = true;
  for (const auto& c : checks) {
    all_pass &= c.pass;
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
  }
  return all_pass ? kExitOk : kExitUser;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced/pluriclosed classification of regular complex structures"};
  app.require_subcommand(1);

  std::string expr_text;
  vh::ClassifyOptions copt;
  auto* classify = app.add_subcommand("classify", "classify one diagram expression");
  classify->add_option("expr", expr_text, "diagram expression, e.g. \"A2 paint={1}\"")
      ->required();
  classify->add_flag("--best-ell", copt.best_ell, "also decide with a compatible ell");
  classify->add_option("--method", copt.method, "char | oracle | both")
      ->check(CLI::IsMember({"char", "oracle", "both"}))
      ->default_val("both");

  std::vector<std::string> types;
  int rank_max = 6;
  bool dedup = false;
  std::string outfile;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate diagrams as JSON lines");
  enumerate->add_option("types", types, "types, e.g. A2 G2 A2~A2 or bare families A B")
      ->required();
  enumerate->add_option("--rank-max", rank_max, "rank bound for bare families")
      ->default_val(6);
  enumerate->add_flag("--dedup", dedup, "deduplicate under diagram automorphisms");
  enumerate->add_option("-o,--output", outfile, "write JSON lines to a file");

  int vp_rank = 6;
  auto* verify = app.add_subcommand("verify-paper", "re-check the classification tables");
  verify->add_option("--rank-max", vp_rank, "enumeration rank bound (2..8)")->default_val(6);

  std::string witness_text;
  auto* witness = app.add_subcommand("witness", "print metric parameters for one expression");
  witness->add_option("expr", witness_text, "diagram expression")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return run_classify(expr_text, copt);
    if (enumerate->parsed()) return run_enumerate(types, rank_max, dedup, outfile);
    if (verify->parsed()) return run_verify_paper(vp_rank);
    if (witness->parsed()) return run_witness(witness_text);
  } catch (const vh::ParseError& e) {
    vh::Json j{{"error", e.what()}, {"offset", e.offset}, {"expected", e.expected}};
    std::cout << j.dump(2) << "\n";
    return kExitUser;
  } catch (const vh::ValidationError& e) {
    vh::Json j{{"error", e.what()}, {"offset", e.offset}};
    std::cout << j.dump(2) << "\n";
    return kExitUser;
  } catch (const vh::NotFiniteType& e) {
    std::cout << vh::Json{{"error", e.what()}}.dump(2) << "\n";
    return kExitUser;
  } catch (const vh::Error& e) {
    std::cout << vh::Json{{"error", e.what()}}.dump(2) << "\n";
    return kExitInternal;
  }
  return kExitUser;
}
