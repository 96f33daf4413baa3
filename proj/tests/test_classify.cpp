#include <catch2/catch_amalgamated.hpp>

#include "vh/classify.hpp"
#include "vh/enumerate.hpp"

using namespace vh;

namespace {

VoganDiagram inner_diagram(Family fam, int rank, std::vector<int> painted = {}) {
  auto rs = build_root_system(make_block(fam, rank));
  std::vector<int> theta(rank);
  for (int i = 0; i < rank; ++i) theta[i] = i;
  std::vector<bool> p(rank, false);
  for (int v : painted) p[v] = true;
  return make_vogan(rs, theta, p);
}

VoganDiagram pair_swap(Family fam, int rank) {
  auto rs = build_root_system(direct_sum({make_block(fam, rank), make_block(fam, rank)}));
  std::vector<int> theta(2 * rank);
  for (int i = 0; i < rank; ++i) {
    theta[i] = rank + i;
    theta[rank + i] = i;
  }
  return make_vogan(rs, theta, std::vector<bool>(2 * rank, false));
}

VoganDiagram flip_diagram(Family fam, int rank, std::vector<int> painted = {}) {
  auto rs = build_root_system(make_block(fam, rank));
  std::vector<int> theta(rank);
  for (int i = 0; i < rank; ++i) theta[i] = rank - 1 - i;
  std::vector<bool> p(rank, false);
  for (int v : painted) p[v] = true;
  return make_vogan(rs, theta, p);
}

RegularStructure with_default_ell(const VoganDiagram& vd, Delta0 d0 = {}) {
  return make_structure(vd, d0, construct_default_ell(vd, d0));
}

}  // namespace

TEST_CASE("balanced problem for the both-painted A2") {
  VoganDiagram vd = inner_diagram(Family::A, 2, {0, 1});
  BalancedProblem bp = balanced_problem_labeled(vd, Delta0{});
  REQUIRE(bp.prob.q() == 0);
  // columns in (height, lex) order: alpha_2, alpha_1, alpha_1 + alpha_2
  REQUIRE(bp.prob.M == Mat<Rat>{{Rat(0), Rat(-1), Rat(1)}, {Rat(-1), Rat(0), Rat(1)}});
}

TEST_CASE("balanced problem for a complex pair has no positive columns") {
  VoganDiagram vd = pair_swap(Family::A, 1);
  BalancedProblem bp = balanced_problem_labeled(vd, Delta0{});
  REQUIRE(bp.prob.p() == 0);
  REQUIRE(bp.prob.q() == 1);
  auto cert = solve_alternative(bp.prob);
  REQUIRE(cert.kind == AlternativeCertificate::Kind::Primal);
}

TEST_CASE("balanced problem free columns for the A4 flip") {
  VoganDiagram vd = flip_diagram(Family::A, 4);
  BalancedProblem bp = balanced_problem_labeled(vd, Delta0{});
  REQUIRE(bp.prob.p() == 2);  // two imaginary positive roots
  REQUIRE(bp.prob.q() == 4);  // four complex orbits
}

TEST_CASE("rank-2 balanced verdicts match the classification table") {
  auto balanced_of = [](const VoganDiagram& vd) {
    RegularStructure st = make_structure(vd, Delta0{});
    BalancedVerdict a = decide_balanced(st, BalancedMethod::Characterization);
    BalancedVerdict b = decide_balanced(st, BalancedMethod::Oracle);
    REQUIRE(a.balanced == b.balanced);
    return a.balanced;
  };
  REQUIRE(balanced_of(inner_diagram(Family::A, 2, {0, 1})));        // su(2,1), both painted
  REQUIRE_FALSE(balanced_of(inner_diagram(Family::A, 2, {0})));     // su(2,1), table-1 diagram
  REQUIRE_FALSE(balanced_of(inner_diagram(Family::A, 2)));          // su(3)
  REQUIRE(balanced_of(inner_diagram(Family::B, 2, {1})));           // so(4,1): short end painted
  REQUIRE_FALSE(balanced_of(inner_diagram(Family::B, 2, {0})));     // so(3,2) table-1 diagram
  REQUIRE(balanced_of(inner_diagram(Family::B, 2, {0, 1})));        // so(3,2) both painted
  REQUIRE(balanced_of(inner_diagram(Family::G, 2, {0})));
  REQUIRE(balanced_of(inner_diagram(Family::G, 2, {1})));
  REQUIRE(balanced_of(inner_diagram(Family::G, 2, {0, 1})));
  REQUIRE_FALSE(balanced_of(inner_diagram(Family::G, 2)));
}

TEST_CASE("balanced witness from the standard primal certificate") {
  VoganDiagram vd = inner_diagram(Family::A, 2, {0, 1});
  RegularStructure st = make_structure(vd, Delta0{});
  BalancedVerdict v = decide_balanced(st, BalancedMethod::Oracle);
  REQUIRE(v.balanced);
  REQUIRE(v.witness);
  for (const auto& [root, lam] : v.witness->lambda) REQUIRE(lam == 1);
  REQUIRE(v.witness->mu.empty());
  REQUIRE(verify_balanced_witness(st, *v.witness));
}

TEST_CASE("all-compact metric parameters are not balanced") {
  VoganDiagram vd = inner_diagram(Family::A, 2);
  RegularStructure st = make_structure(vd, Delta0{});
  MetricParameters mp;
  for (const Root& a : st.rset.R) mp.lambda[a] = 1;
  REQUIRE_FALSE(verify_balanced_witness(st, mp));
}

TEST_CASE("the A5 middle-painted flip reproduces the textbook witness") {
  auto rs = build_root_system(make_block(Family::A, 5));
  VoganDiagram vd = make_vogan(rs, {4, 3, 2, 1, 0}, {false, false, true, false, false});
  RegularStructure st = make_structure(vd, Delta0{});
  BalancedProblem bp = balanced_problem_labeled(vd, st.delta0);
  REQUIRE(bp.prob.p() == 3);
  // lambda_{alpha_k} = 1/(k-1) = 1/2 on the painted middle vertex, 1 elsewhere.
  Vec<Rat> x(3, Rat(1));
  for (size_t j = 0; j < bp.x_roots.size(); ++j)
    if (bp.x_roots[j].height() == 1) x[j] = 2;  // 1/lambda
  // Solve N t = -M x exactly.
  Vec<Rat> rhs(vd.rank(), Rat(0));
  for (int i = 0; i < vd.rank(); ++i)
    for (size_t j = 0; j < x.size(); ++j) rhs[i] -= bp.prob.M[i][j] * x[j];
  auto t = solve(bp.prob.N, rhs);
  REQUIRE(t);
  AlternativeCertificate cert{AlternativeCertificate::Kind::Primal, x, *t, {}};
  REQUIRE(verify_certificate(bp.prob, cert));
  MetricParameters mp = balanced_witness(st, cert);
  REQUIRE(mp.lambda.at(Root{{0, 0, 1, 0, 0}}) == Rat(1, 2));
  REQUIRE(verify_balanced_witness(st, mp));
}

TEST_CASE("balanced witnesses verify across the small enumeration") {
  for (const auto& vd : connected_vogan_diagrams(4)) {
    for (const auto& d0 : enumerate_delta0(vd)) {
      RegularStructure st = make_structure(vd, d0);
      BalancedVerdict a = decide_balanced(st, BalancedMethod::Characterization);
      BalancedVerdict b = decide_balanced(st, BalancedMethod::Oracle);
      REQUIRE(a.balanced == b.balanced);
      REQUIRE(verify_certificate(balanced_problem(vd, d0), b.certificate));
      if (b.balanced) {
        REQUIRE(b.witness);
        REQUIRE(verify_balanced_witness(st, *b.witness));
      }
    }
  }
}

TEST_CASE("pluriclosed verdicts on the rank-2 forms") {
  // Non-inner: never pluriclosed.
  VoganDiagram sl2c = pair_swap(Family::A, 1);
  auto st = with_default_ell(sl2c);
  REQUIRE(decide_pluriclosed(st).status == PluriclosedStatus::NotInner);

  // su(2,1) with two painted vertices: outside table 1.
  auto su21 = with_default_ell(inner_diagram(Family::A, 2, {0, 1}));
  REQUIRE(decide_pluriclosed(su21).status == PluriclosedStatus::NotTable1);

  // su(3) with the default ell: J is not compatible with the A2 form.
  auto su3 = with_default_ell(inner_diagram(Family::A, 2));
  REQUIRE(decide_pluriclosed(su3).status == PluriclosedStatus::NoKappa);

  // su(3) with the compatible ell: pluriclosed with kappa = 1.
  VoganDiagram su3vd = inner_diagram(Family::A, 2);
  EllSubspace best = construct_compatible_ell(su3vd);
  auto st_best = make_structure(su3vd, Delta0{}, best);
  auto verdict = decide_pluriclosed(st_best);
  REQUIRE(verdict.status == PluriclosedStatus::Yes);
  REQUIRE(verdict.witness->kappa == Vec<Rat>{Rat(1)});

  REQUIRE_THROWS_AS(decide_pluriclosed(make_structure(su3vd, Delta0{})), MissingEll);
}

TEST_CASE("a generic ell on su(2)+su(2) fails while the compatible one works") {
  VoganDiagram vd = make_vogan(
      build_root_system(direct_sum({make_block(Family::A, 1), make_block(Family::A, 1)})),
      {0, 1}, {false, false});
  // +i eigenspace of J = [[1,-2],[1,-1]] in H-coordinates.
  EllSubspace skew;
  skew.rows = {{QC::gauss(Rat(0), Rat(2)), QC::gauss(Rat(-1), Rat(1))}};
  REQUIRE(validate_ell(vd, Delta0{}, skew));
  auto st = make_structure(vd, Delta0{}, skew);
  REQUIRE(decide_pluriclosed(st).status == PluriclosedStatus::NoKappa);

  auto best = make_structure(vd, Delta0{}, construct_compatible_ell(vd));
  auto verdict = decide_pluriclosed(best);
  REQUIRE(verdict.status == PluriclosedStatus::Yes);
  REQUIRE(verdict.witness->kappa.size() == 2);
}

TEST_CASE("compatible ell stays rational when the form allows it") {
  VoganDiagram b2 = inner_diagram(Family::B, 2);
  EllSubspace ell = construct_compatible_ell(b2);
  REQUIRE(ell.tower->gens.empty());
  REQUIRE(decide_pluriclosed(make_structure(b2, Delta0{}, ell)).status == PluriclosedStatus::Yes);
}

TEST_CASE("compatible ell handles towers of several radicands") {
  for (auto [fam, r] :
       std::vector<std::pair<Family, int>>{{Family::G, 2}, {Family::A, 4}, {Family::F, 4}, {Family::D, 4}}) {
    VoganDiagram vd = inner_diagram(fam, r);
    EllSubspace ell = construct_compatible_ell(vd);
    auto verdict = decide_pluriclosed(make_structure(vd, Delta0{}, ell));
    INFO(family_letter(fam) << r);
    REQUIRE(verdict.status == PluriclosedStatus::Yes);
  }
}

TEST_CASE("construct_compatible_ell preconditions") {
  REQUIRE_THROWS_AS(construct_compatible_ell(flip_diagram(Family::A, 4)), NotInner);
  REQUIRE_THROWS_AS(construct_compatible_ell(inner_diagram(Family::A, 3)), OddRank);
}

TEST_CASE("exclusivity on the rank-2 table") {
  VoganDiagram su21 = inner_diagram(Family::A, 2, {0, 1});
  REQUIRE(exclusivity_check(su21, Delta0{}, construct_default_ell(su21, Delta0{})));
  VoganDiagram su3 = inner_diagram(Family::A, 2);
  REQUIRE(exclusivity_check(su3, Delta0{}, construct_compatible_ell(su3)));
  for (auto paint : std::vector<std::vector<int>>{{0}, {1}, {0, 1}}) {
    VoganDiagram g2 = inner_diagram(Family::G, 2, paint);
    REQUIRE(exclusivity_check(g2, Delta0{}, construct_compatible_ell(g2)));
    REQUIRE(exclusivity_check(g2, Delta0{}, construct_default_ell(g2, Delta0{})));
  }
}

TEST_CASE("delta0 choice does not change the balanced verdict, rank <= 4") {
  for (const auto& vd : connected_vogan_diagrams(4)) {
    std::optional<bool> first;
    for (const auto& d0 : enumerate_delta0(vd)) {
      bool b = decide_balanced(make_structure(vd, d0), BalancedMethod::Oracle).balanced;
      if (!first)
        first = b;
      else
        REQUIRE(*first == b);
    }
  }
}
