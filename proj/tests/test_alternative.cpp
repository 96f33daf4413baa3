#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracle_fm.hpp"
#include "vh/alternative.hpp"

using namespace vh;

namespace {

AlternativeProblem make_problem(Mat<Rat> M, Mat<Rat> N = {}) {
  AlternativeProblem p;
  p.rows = static_cast<int>(M.size());
  p.M = std::move(M);
  if (N.empty()) N.assign(p.rows, Vec<Rat>{});
  p.N = std::move(N);
  return p;
}

}  // namespace

TEST_CASE("1x1 infeasible system yields the dual witness") {
  auto prob = make_problem({{Rat(1)}});
  auto cert = solve_alternative(prob);
  REQUIRE(cert.kind == AlternativeCertificate::Kind::Dual);
  REQUIRE(cert.y == Vec<Rat>{Rat(1)});
  REQUIRE(verify_certificate(prob, cert));
}

TEST_CASE("the A2 both-painted system is primal feasible with x = (1,1,1)") {
  auto prob = make_problem({{Rat(-1), Rat(0), Rat(1)}, {Rat(0), Rat(-1), Rat(1)}});
  auto cert = solve_alternative(prob);
  REQUIRE(cert.kind == AlternativeCertificate::Kind::Primal);
  REQUIRE(cert.x == Vec<Rat>{Rat(1), Rat(1), Rat(1)});
  REQUIRE(verify_certificate(prob, cert));
}

TEST_CASE("symmetric cancellation is primal feasible") {
  auto prob = make_problem({{Rat(1), Rat(-1)}});
  auto cert = solve_alternative(prob);
  REQUIRE(cert.kind == AlternativeCertificate::Kind::Primal);
  REQUIRE(cert.x == Vec<Rat>{Rat(1), Rat(1)});
}

TEST_CASE("free columns absorb an imbalance") {
  // x (1) + t = 0 is solvable with t = -x.
  auto prob = make_problem({{Rat(1)}}, {{Rat(1)}});
  auto cert = solve_alternative(prob);
  REQUIRE(cert.kind == AlternativeCertificate::Kind::Primal);
  REQUIRE(verify_certificate(prob, cert));
  REQUIRE(cert.x[0] + cert.t[0] == 0);
}

TEST_CASE("empty positive part is vacuously primal feasible") {
  AlternativeProblem prob;
  prob.rows = 2;
  prob.M.assign(2, Vec<Rat>{});
  prob.N = {{Rat(1)}, {Rat(2)}};
  auto cert = solve_alternative(prob);
  REQUIRE(cert.kind == AlternativeCertificate::Kind::Primal);
  REQUIRE(verify_certificate(prob, cert));
}

TEST_CASE("verify_certificate rejects the wrong kind") {
  auto prob = make_problem({{Rat(1)}});
  AlternativeCertificate bogus{AlternativeCertificate::Kind::Primal, {Rat(1)}, {}, {}};
  REQUIRE_FALSE(verify_certificate(prob, bogus));
  AlternativeCertificate shape{AlternativeCertificate::Kind::Dual, {}, {}, {Rat(1), Rat(1)}};
  REQUIRE_THROWS_AS(verify_certificate(prob, shape), ShapeMismatch);
}

TEST_CASE("property fuzz against the Fourier-Motzkin oracle") {
  std::mt19937 rng(42);
  auto rnd_int = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
  auto rnd_rat = [&](int bound) {
    int den = rnd_int(1, 3);
    int num = rnd_int(-bound * den, bound * den);
    return Rat(num, den);
  };
  int primal_count = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    int r = rnd_int(1, 6), p = rnd_int(1, 6), q = rnd_int(0, 6);
    AlternativeProblem prob;
    prob.rows = r;
    prob.M.assign(r, Vec<Rat>(p));
    prob.N.assign(r, Vec<Rat>(q));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < p; ++j) prob.M[i][j] = rnd_rat(3);
      for (int k = 0; k < q; ++k) prob.N[i][k] = rnd_rat(3);
    }
    auto cert = solve_alternative(prob);
    REQUIRE(verify_certificate(prob, cert));
    bool primal = cert.kind == AlternativeCertificate::Kind::Primal;
    primal_count += primal;
    // Independent oracle: the primal polyhedron is non-empty iff the solver
    // said Primal; with a verified certificate on the other side this rules
    // out "both" and "neither".
    REQUIRE(vh_test::fm_primal_feasible(prob.M, prob.N) == primal);
    // Determinism.
    auto cert2 = solve_alternative(prob);
    REQUIRE(cert2.kind == cert.kind);
    REQUIRE(cert2.x == cert.x);
    REQUIRE(cert2.t == cert.t);
    REQUIRE(cert2.y == cert.y);
    // Positive column scaling preserves the certificate kind.
    AlternativeProblem scaled = prob;
    int col = rnd_int(0, p - 1);
    Rat factor = Rat(rnd_int(1, 5), rnd_int(1, 5));
    for (int i = 0; i < r; ++i) scaled.M[i][col] *= factor;
    REQUIRE((solve_alternative(scaled).kind == AlternativeCertificate::Kind::Primal) == primal);
  }
  REQUIRE(primal_count > 50);
  REQUIRE(primal_count < 950);
}
