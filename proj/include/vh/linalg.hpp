#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "vh/rational.hpp"

// Small dense exact linear algebra, generic over the scalar field.
// The field type F needs F(int), +, -, *, /, == and unary -.
namespace vh {

template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
using Vec = std::vector<F>;

template <class F>
bool fzero(const F& x) {
  return x == F(0);
}

template <class F>
Mat<F> mat_identity(int n) {
  Mat<F> m(n, Vec<F>(n, F(0)));
  for (int i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
  assert(!a.empty() && a[0].size() == b.size());
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = static_cast<int>(b[0].size());
  Mat<F> out(n, Vec<F>(m, F(0)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (fzero(a[i][t])) continue;
      for (int j = 0; j < m; ++j) out[i][j] = out[i][j] + a[i][t] * b[t][j];
    }
  return out;
}

template <class F>
Vec<F> mat_vec(const Mat<F>& a, const Vec<F>& x) {
  int n = static_cast<int>(a.size());
  Vec<F> out(n, F(0));
  for (int i = 0; i < n; ++i)
    for (size_t j = 0; j < x.size(); ++j) out[i] = out[i] + a[i][j] * x[j];
  return out;
}

template <class F>
Mat<F> mat_transpose(const Mat<F>& a) {
  if (a.empty()) return {};
  Mat<F> out(a[0].size(), Vec<F>(a.size(), F(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

// In-place reduced row echelon form. Returns the pivot column of each pivot row.
template <class F>
std::vector<int> rref(Mat<F>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!fzero(m[i][c])) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    F inv = F(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || fzero(m[i][c])) continue;
      F f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int mat_rank(Mat<F> m) {
  return static_cast<int>(rref(m).size());
}

// One solution of A x = b (free variables set to zero); nullopt if inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Mat<F>& a, const Vec<F>& b) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  Mat<F> aug(rows, Vec<F>(cols + 1, F(0)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> piv = rref(aug);
  for (size_t k = 0; k < piv.size(); ++k)
    if (piv[k] == cols) return std::nullopt;
  Vec<F> x(cols, F(0));
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug[k][cols];
  return x;
}

// Basis of {x : A x = 0}.
template <class F>
std::vector<Vec<F>> nullspace(Mat<F> a) {
  if (a.empty()) return {};
  int cols = static_cast<int>(a[0].size());
  std::vector<int> piv = rref(a);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec<F>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    Vec<F> v(cols, F(0));
    v[c] = F(1);
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -a[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Mat<F>> mat_inverse(const Mat<F>& a) {
  int n = static_cast<int>(a.size());
  Mat<F> aug(n, Vec<F>(2 * n, F(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = F(1);
  }
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) != n || piv.back() != n - 1) return std::nullopt;
  Mat<F> inv(n, Vec<F>(n, F(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace vh
