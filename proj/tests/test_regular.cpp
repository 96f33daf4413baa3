#include <catch2/catch_amalgamated.hpp>

#include "vh/enumerate.hpp"
#include "vh/regular.hpp"

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

VoganDiagram a4_flip() {
  auto rs = build_root_system(make_block(Family::A, 4));
  return make_vogan(rs, {3, 2, 1, 0}, std::vector<bool>(4, false));
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

EllSubspace ell_from_rows(std::vector<std::vector<QC>> rows) {
  EllSubspace e;
  e.rows = std::move(rows);
  return e;
}

QC qi() { return QC::imaginary_unit(); }

}  // namespace

TEST_CASE("inner diagrams admit only the empty Delta_0") {
  for (auto fam : {Family::A, Family::B}) {
    VoganDiagram vd = inner_diagram(fam, 3, {1});
    auto all = enumerate_delta0(vd);
    REQUIRE(all.size() == 1);
    REQUIRE(all[0].verts.empty());
  }
}

TEST_CASE("A4 flip admits exactly three Delta_0 choices") {
  auto all = enumerate_delta0(a4_flip());
  std::vector<std::vector<int>> got;
  for (const auto& d : all) got.push_back(d.verts);
  REQUIRE(got == std::vector<std::vector<int>>{{}, {0}, {3}});
}

TEST_CASE("complex pairs allow a full copy as Delta_0") {
  VoganDiagram vd = pair_swap(Family::A, 2);
  auto all = enumerate_delta0(vd);
  REQUIRE(all.size() == 7);
  Delta0 full_copy{{0, 1}};
  REQUIRE(delta0_valid(vd, full_copy));
  REQUIRE_FALSE(delta0_valid(vd, Delta0{{0, 2}}));  // image adjacent inside copy 1? no: overlap-free but 0-2 cross-copy
}

TEST_CASE("build_R on an inner diagram with empty Delta_0 gives Phi+") {
  VoganDiagram vd = inner_diagram(Family::A, 2, {0});
  RSet rs = build_R(vd, Delta0{});
  std::vector<Root> pos = vd.rs->positive_roots;
  std::sort(pos.begin(), pos.end());
  REQUIRE(rs.R == pos);
  REQUIRE(rs.R2.empty());
  REQUIRE(rs.R0.empty());
}

TEST_CASE("build_R reproduces the A4 flip example") {
  VoganDiagram vd = a4_flip();
  Delta0 d0{{0}};
  RSet rs = build_R(vd, d0);
  Root a1{{1, 0, 0, 0}}, a4{{0, 0, 0, 1}};
  std::vector<Root> expect{-a1};
  for (const Root& r : vd.rs->positive_roots)
    if (!(r == a4)) expect.push_back(r);
  std::sort(expect.begin(), expect.end());
  REQUIRE(rs.R == expect);
  std::vector<Root> r0 = rs.R0;
  std::sort(r0.begin(), r0.end());
  REQUIRE(r0 == std::vector<Root>{-a1, a1});
}

TEST_CASE("build_R on a swapped pair keeps one copy") {
  VoganDiagram vd = pair_swap(Family::A, 1);
  RSet rs = build_R(vd, Delta0{{0}});
  REQUIRE(rs.R == std::vector<Root>{Root{{-1, 0}}, Root{{1, 0}}});
  REQUIRE(rs.R.size() * 2 == vd.rs->all_roots.size());
}

TEST_CASE("RR1 and sigma R1 = -R1 hold across the rank <= 4 enumeration") {
  for (const auto& vd : connected_vogan_diagrams(4)) {
    for (const auto& d0 : enumerate_delta0(vd)) {
      RSet rset = build_R(vd, d0);
      std::vector<bool> in_d0(vd.rank(), false), in_d1(vd.rank(), true);
      for (int v : d0.verts) {
        in_d0[v] = true;
        in_d1[v] = false;
        in_d1[vd.theta[v]] = false;
      }
      std::vector<Root> r0s = rset.R0;
      std::sort(r0s.begin(), r0s.end());
      std::vector<Root> r1;
      for (const Root& r : rset.R)
        if (!std::binary_search(r0s.begin(), r0s.end(), r)) r1.push_back(r);
      std::sort(r1.begin(), r1.end());
      for (const Root& a : vd.rs->positive_roots) {
        bool in_r1 = std::binary_search(r1.begin(), r1.end(), a);
        bool meets_d1 = false;
        for (int i = 0; i < vd.rank(); ++i)
          if (a.c[i] != 0 && in_d1[i]) meets_d1 = true;
        REQUIRE(in_r1 == meets_d1);
      }
      for (const Root& a : r1)
        REQUIRE(std::binary_search(r1.begin(), r1.end(), -sigma_root(vd, a)));
    }
  }
}

TEST_CASE("moduli dimensions") {
  REQUIRE(moduli_dim(a4_flip(), Delta0{{0}}) == 4);
  REQUIRE(moduli_dim(inner_diagram(Family::A, 2), Delta0{}) == 2);
  VoganDiagram pair2 = pair_swap(Family::A, 2);
  REQUIRE(moduli_dim(pair2, Delta0{{0, 1}}) == 0);
  REQUIRE_THROWS_AS(moduli_dim(inner_diagram(Family::A, 3), Delta0{}), OddRank);
  // Consistency with 2m(m - r') under 2m = r.
  for (const auto& vd : connected_vogan_diagrams(4)) {
    if (vd.rank() % 2 != 0) continue;
    for (const auto& d0 : enumerate_delta0(vd)) {
      long m = vd.rank() / 2, rp = static_cast<long>(d0.verts.size());
      REQUIRE(moduli_dim(vd, d0) == 2 * m * (m - rp));
    }
  }
}

TEST_CASE("default ell on a rank-2 inner diagram") {
  VoganDiagram vd = inner_diagram(Family::A, 2);
  EllSubspace ell = construct_default_ell(vd, Delta0{});
  REQUIRE(ell.rows.size() == 1);
  // span must be C(H_1 + i H_2)
  Mat<QC> stacked = ell.rows;
  stacked.push_back({QC(1), qi()});
  REQUIRE(mat_rank(stacked) == 1);
}

TEST_CASE("default ell on the A4 flip contains H_1 and recovers the counterexample data") {
  VoganDiagram vd = a4_flip();
  Delta0 d0{{0}};
  EllSubspace ell = construct_default_ell(vd, d0);
  REQUIRE(ell.rows.size() == 2);
  REQUIRE(validate_ell(vd, d0, ell));
  // span must be C{H_1, H_3}
  Mat<QC> stacked = ell.rows;
  stacked.push_back({QC(1), QC(0), QC(0), QC(0)});
  stacked.push_back({QC(0), QC(0), QC(1), QC(0)});
  REQUIRE(mat_rank(stacked) == 2);
}

TEST_CASE("default ell on a swapped pair with a full copy") {
  VoganDiagram vd = pair_swap(Family::A, 1);
  EllSubspace ell = construct_default_ell(vd, Delta0{{0}});
  REQUIRE(ell.rows.size() == 1);
  Mat<QC> stacked = ell.rows;
  stacked.push_back({QC(1), QC(0)});
  REQUIRE(mat_rank(stacked) == 1);
}

TEST_CASE("validate_ell on the counterexample diagram") {
  VoganDiagram vd = a4_flip();
  Delta0 d0{{0}};
  auto e = [&](int k) {
    std::vector<QC> row(4, QC(0));
    row[k] = QC(1);
    return row;
  };
  REQUIRE(validate_ell(vd, d0, ell_from_rows({e(0), e(2)})));   // C{H1, H3}
  REQUIRE_FALSE(validate_ell(vd, d0, ell_from_rows({e(0), e(3)})));  // sigma-stable span
  VoganDiagram inner2 = inner_diagram(Family::A, 2);
  REQUIRE_FALSE(validate_ell(inner2, Delta0{}, ell_from_rows({{QC(1), QC(0)}})));
  REQUIRE_THROWS_AS(validate_ell(inner2, Delta0{}, ell_from_rows({{QC(1)}})), DimensionMismatch);
}

TEST_CASE("snow decomposition on the counterexample") {
  VoganDiagram vd = a4_flip();
  Delta0 d0{{0}};
  auto e = [&](int k) {
    std::vector<QC> row(4, QC(0));
    row[k] = QC(1);
    return row;
  };
  EllSubspace bad = ell_from_rows({e(0), e(2)});  // C{H1, H3}
  REQUIRE(validate_ell(vd, d0, bad));
  REQUIRE_FALSE(snow_decomposition_exists(vd, d0, bad));
  // C{H1, H4 + 2 H3} lies in h0 + orthocomplement.
  std::vector<QC> h4p2h3(4, QC(0));
  h4p2h3[3] = QC(1);
  h4p2h3[2] = QC(2);
  EllSubspace good = ell_from_rows({e(0), h4p2h3});
  REQUIRE(validate_ell(vd, d0, good));
  REQUIRE(snow_decomposition_exists(vd, d0, good));
  // Inner diagram, empty Delta_0: condition is vacuous.
  VoganDiagram inner2 = inner_diagram(Family::A, 2);
  EllSubspace def = construct_default_ell(inner2, Delta0{});
  REQUIRE(snow_decomposition_exists(inner2, Delta0{}, def));
}

TEST_CASE("j_on_cartan on the rank-2 inner default ell") {
  VoganDiagram vd = inner_diagram(Family::A, 2);
  EllSubspace ell = ell_from_rows({{QC(1), qi()}});  // H1 + i H2
  Mat<QNum> J = j_on_cartan(vd, ell);
  Mat<QNum> expect{{QNum(0), QNum(1)}, {QNum(-1), QNum(0)}};
  REQUIRE(J == expect);
}

TEST_CASE("j_on_cartan pairs the copies of a swapped pair") {
  VoganDiagram vd = pair_swap(Family::A, 1);
  EllSubspace ell = ell_from_rows({{QC(1), QC(0)}});  // first copy
  Mat<QNum> J = j_on_cartan(vd, ell);
  Mat<QNum> expect{{QNum(0), QNum(-1)}, {QNum(1), QNum(0)}};
  REQUIRE(J == expect);
}

TEST_CASE("default ell always validates across the enumeration, rank <= 5") {
  for (const auto& vd : connected_vogan_diagrams(5)) {
    if (vd.rank() % 2 != 0) continue;
    for (const auto& d0 : enumerate_delta0(vd)) {
      EllSubspace ell = construct_default_ell(vd, d0);
      REQUIRE(validate_ell(vd, d0, ell));
      Mat<QNum> J = j_on_cartan(vd, ell);  // asserts J^2 = -Id internally
      REQUIRE(static_cast<int>(J.size()) == vd.rank());
    }
  }
}

TEST_CASE("the A4 flip keeps its middle sums in R2 for every Delta_0") {
  VoganDiagram vd = a4_flip();
  for (const auto& d0 : enumerate_delta0(vd)) {
    RSet rset = build_R(vd, d0);
    // alpha_2 and alpha_1 + alpha_2 stay complex and outside both cones
    for (std::vector<int> c : {std::vector<int>{0, 1, 0, 0}, {1, 1, 0, 0}}) {
      Root root{c};
      REQUIRE(std::binary_search(rset.R2.begin(), rset.R2.end(), root));
    }
  }
}

TEST_CASE("the E6 flip keeps its textbook complex roots in R2") {
  auto rs = build_root_system(make_block(Family::E, 6));
  VoganDiagram vd = make_vogan(rs, {5, 1, 4, 3, 2, 0}, std::vector<bool>(6, false));
  Delta0 d0{{0}};  // alpha_1; image alpha_6 is not adjacent
  REQUIRE(delta0_valid(vd, d0));
  RSet rset = build_R(vd, d0);
  for (std::vector<int> c : {std::vector<int>{0, 0, 1, 1, 0, 0},
                             {1, 0, 1, 1, 0, 0},
                             {1, 1, 1, 1, 0, 0},
                             {1, 1, 2, 2, 1, 0}}) {
    Root root{c};
    REQUIRE(rs->is_root(root));
    REQUIRE(std::binary_search(rset.R2.begin(), rset.R2.end(), root));
  }
}

TEST_CASE("default ell validates for every involution and Delta_0, rank <= 8") {
  // The construction depends only on the involution and Delta_0, so one
  // unpainted diagram per involution covers all paintings.
  for (auto [fam, r] : finite_types(8)) {
    if (r % 2 != 0) continue;
    auto rs = build_root_system(make_block(fam, r));
    for (const auto& g : diagram_automorphisms(rs->cartan)) {
      bool invol = true;
      for (int i = 0; i < r; ++i)
        if (g[g[i]] != i) invol = false;
      if (!invol) continue;
      VoganDiagram vd = make_vogan(rs, g, std::vector<bool>(r, false));
      for (const auto& d0 : enumerate_delta0(vd)) {
        EllSubspace ell = construct_default_ell(vd, d0);
        REQUIRE(validate_ell(vd, d0, ell));
        j_on_cartan(vd, ell);  // asserts J^2 = -Id internally
      }
    }
  }
}
