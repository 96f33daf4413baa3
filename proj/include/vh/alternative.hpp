#pragma once

#include <vector>

#include "vh/linalg.hpp"
#include "vh/rational.hpp"

namespace vh {

// Homogeneous alternative with free variables: either M x + N t = 0 has a
// solution with every x_i > 0 (t free), or there is y with N^T y = 0,
// M^T y >= 0 and M^T y != 0. Exactly one of the two holds.
struct AlternativeProblem {
  int rows = 0;
  Mat<Rat> M;  // rows x p, columns carry strictly positive variables
  Mat<Rat> N;  // rows x q, columns carry free variables

  int p() const { return M.empty() ? 0 : static_cast<int>(M[0].size()); }
  int q() const { return N.empty() ? 0 : static_cast<int>(N[0].size()); }
};

struct AlternativeCertificate {
  enum class Kind { Primal, Dual } kind;
  Vec<Rat> x;  // Primal: strictly positive part
  Vec<Rat> t;  // Primal: free part
  Vec<Rat> y;  // Dual: obstruction vector
};

namespace detail {

// Exact phase-I simplex with Bland's least-index rule.
struct SimplexResult {
  bool feasible;
  Vec<Rat> z;          // structural solution when feasible
  Vec<Rat> farkas;     // y with y^T A <= 0, y^T b > 0 when infeasible
};

inline SimplexResult phase_one(const Mat<Rat>& A, Vec<Rat> b, int ns) {
  const int rows = static_cast<int>(b.size());
  std::vector<int> flip(rows, 1);
  Mat<Rat> T(rows, Vec<Rat>(ns + rows + 1, Rat(0)));
  for (int i = 0; i < rows; ++i) {
    if (b[i] < 0) flip[i] = -1;
    for (int j = 0; j < ns; ++j) T[i][j] = Rat(flip[i]) * A[i][j];
    T[i][ns + i] = 1;
    T[i][ns + rows] = Rat(flip[i]) * b[i];
  }
  // Reduced-cost row for min(sum of artificials); basis starts all-artificial.
  Vec<Rat> cost(ns + rows + 1, Rat(0));
  for (int j = 0; j < ns + rows + 1; ++j) {
    Rat s(0);
    for (int i = 0; i < rows; ++i) s += T[i][j];
    if (j < ns || j == ns + rows)
      cost[j] = -s;
    else
      cost[j] = Rat(1) - s;
  }
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = ns + i;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < ns + rows; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best(0);
    for (int i = 0; i < rows; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = T[i][ns + rows] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw Error("phase_one: unbounded phase-I objective");
    Rat piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || fzero(T[i][enter])) continue;
      Rat f = T[i][enter];
      for (int j = 0; j <= ns + rows; ++j) T[i][j] -= f * T[leave][j];
    }
    if (!fzero(cost[enter])) {
      Rat f = cost[enter];
      for (int j = 0; j <= ns + rows; ++j) cost[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  SimplexResult res;
  Rat value(0);
  for (int i = 0; i < rows; ++i)
    if (basis[i] >= ns) value += T[i][ns + rows];
  res.feasible = fzero(value);
  if (res.feasible) {
    res.z.assign(ns, Rat(0));
    for (int i = 0; i < rows; ++i)
      if (basis[i] < ns) res.z[basis[i]] = T[i][ns + rows];
  } else {
    res.farkas.assign(rows, Rat(0));
    for (int i = 0; i < rows; ++i) {
      Rat w = Rat(1) - cost[ns + i];  // dual multiplier of the flipped system
      res.farkas[i] = Rat(flip[i]) * w;
    }
  }
  return res;
}

}  // namespace detail

// Decides the alternative by reducing x > 0 to x >= 1 (valid by homogeneity)
// and running exact phase-I on M x' + N(t+ - t-) = -M 1.
inline AlternativeCertificate solve_alternative(const AlternativeProblem& prob) {
  const int r = prob.rows, p = prob.p(), q = prob.q();
  Mat<Rat> A(r, Vec<Rat>(p + 2 * q, Rat(0)));
  Vec<Rat> b(r, Rat(0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < p; ++j) {
      A[i][j] = prob.M[i][j];
      b[i] -= prob.M[i][j];
    }
    for (int k = 0; k < q; ++k) {
      A[i][p + k] = prob.N[i][k];
      A[i][p + q + k] = -prob.N[i][k];
    }
  }
  auto res = detail::phase_one(A, b, p + 2 * q);
  AlternativeCertificate cert;
  if (res.feasible) {
    cert.kind = AlternativeCertificate::Kind::Primal;
    cert.x.assign(p, Rat(1));
    for (int j = 0; j < p; ++j) cert.x[j] += res.z[j];
    cert.t.assign(q, Rat(0));
    for (int k = 0; k < q; ++k) cert.t[k] = res.z[p + k] - res.z[p + q + k];
  } else {
    cert.kind = AlternativeCertificate::Kind::Dual;
    cert.y.assign(r, Rat(0));
    for (int i = 0; i < r; ++i) cert.y[i] = -res.farkas[i];
  }
  return cert;
}

// Re-evaluates the certificate conditions exactly; independent of the solver.
inline bool verify_certificate(const AlternativeProblem& prob, const AlternativeCertificate& cert) {
  const int r = prob.rows, p = prob.p(), q = prob.q();
  if (cert.kind == AlternativeCertificate::Kind::Primal) {
    if (static_cast<int>(cert.x.size()) != p || static_cast<int>(cert.t.size()) != q)
      throw ShapeMismatch("verify_certificate: primal size mismatch");
    for (const Rat& v : cert.x)
      if (v <= 0) return false;
    for (int i = 0; i < r; ++i) {
      Rat s(0);
      for (int j = 0; j < p; ++j) s += prob.M[i][j] * cert.x[j];
      for (int k = 0; k < q; ++k) s += prob.N[i][k] * cert.t[k];
      if (!fzero(s)) return false;
    }
    return true;
  }
  if (static_cast<int>(cert.y.size()) != r)
    throw ShapeMismatch("verify_certificate: dual size mismatch");
  for (int k = 0; k < q; ++k) {
    Rat s(0);
    for (int i = 0; i < r; ++i) s += prob.N[i][k] * cert.y[i];
    if (!fzero(s)) return false;
  }
  bool nonzero = false;
  for (int j = 0; j < p; ++j) {
    Rat s(0);
    for (int i = 0; i < r; ++i) s += prob.M[i][j] * cert.y[i];
    if (s < 0) return false;
    if (s > 0) nonzero = true;
  }
  return nonzero;
}

}  // namespace vh
