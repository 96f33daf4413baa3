#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "vh/quadfield.hpp"
#include "vh/vogan.hpp"

namespace vh {

// Subset of simple roots Delta_0: complex vertices whose theta-image is
// disjoint from and non-adjacent to Delta_0.
struct Delta0 {
  std::vector<int> verts;  // sorted global indices
};

inline bool delta0_valid(const VoganDiagram& vd, const Delta0& d0) {
  const auto& a = vd.rs->cartan.a;
  for (int v : d0.verts) {
    if (v < 0 || v >= vd.rank()) return false;
    if (vd.fixed(v)) return false;  // must be a complex simple root
  }
  for (int v : d0.verts)
    for (int w : d0.verts) {
      int img = vd.theta[w];
      if (v == img) return false;
      if (a[v][img] != 0) return false;
    }
  return true;
}

inline void require_delta0(const VoganDiagram& vd, const Delta0& d0) {
  if (!delta0_valid(vd, d0)) throw InvalidDelta0("Delta_0 violates the disconnection rule");
}

// All valid Delta_0 subsets, the empty set first, then by (size, vertex list).
inline std::vector<Delta0> enumerate_delta0(const VoganDiagram& vd) {
  std::vector<int> cx;
  for (int v = 0; v < vd.rank(); ++v)
    if (!vd.fixed(v)) cx.push_back(v);
  std::vector<Delta0> out;
  for (unsigned long mask = 0; mask < (1ul << cx.size()); ++mask) {
    Delta0 d0;
    for (size_t k = 0; k < cx.size(); ++k)
      if (mask & (1ul << k)) d0.verts.push_back(cx[k]);
    if (delta0_valid(vd, d0)) out.push_back(std::move(d0));
  }
  std::sort(out.begin(), out.end(), [](const Delta0& x, const Delta0& y) {
    if (x.verts.size() != y.verts.size()) return x.verts.size() < y.verts.size();
    return x.verts < y.verts;
  });
  return out;
}

// The root data of a regular complex structure.
struct RSet {
  std::vector<Root> R0;      // roots supported on Delta_0
  std::vector<Root> R0plus;  // R0 cap Phi+
  std::vector<Root> R;       // (-R0+) cup Phi+ \ (-sigma R0+)
  std::vector<Root> R2;      // complex roots of Phi+ \ (R0+ cup -sigma R0+)
  std::vector<Root> R3;      // lex-least representative of each {a, -sigma a} orbit in R2
};

namespace detail {

inline bool sorted_contains(const std::vector<Root>& v, const Root& r) {
  return std::binary_search(v.begin(), v.end(), r);
}

}  // namespace detail

inline RSet build_R(const VoganDiagram& vd, const Delta0& d0) {
  require_delta0(vd, d0);
  const RootSystem& rs = *vd.rs;
  std::vector<bool> in_d0(vd.rank(), false);
  for (int v : d0.verts) in_d0[v] = true;

  RSet out;
  for (const Root& r : rs.all_roots) {
    bool supp_in = true;
    for (int i = 0; i < vd.rank(); ++i)
      if (r.c[i] != 0 && !in_d0[i]) supp_in = false;
    if (supp_in) out.R0.push_back(r);
  }
  for (const Root& r : out.R0)
    if (r.positive()) out.R0plus.push_back(r);

  std::vector<Root> neg_sigma_r0plus;
  for (const Root& r : out.R0plus) neg_sigma_r0plus.push_back(-sigma_root(vd, r));
  std::sort(neg_sigma_r0plus.begin(), neg_sigma_r0plus.end());

  for (const Root& r : out.R0plus) out.R.push_back(-r);
  for (const Root& r : rs.positive_roots)
    if (!detail::sorted_contains(neg_sigma_r0plus, r)) out.R.push_back(r);
  std::sort(out.R.begin(), out.R.end());

  std::vector<Root> r0plus_sorted = out.R0plus;
  std::sort(r0plus_sorted.begin(), r0plus_sorted.end());
  for (const Root& r : rs.positive_roots) {
    if (detail::sorted_contains(r0plus_sorted, r) ||
        detail::sorted_contains(neg_sigma_r0plus, r))
      continue;
    if (classify_root(vd, r) == RootClass::Complex) out.R2.push_back(r);
  }
  std::sort(out.R2.begin(), out.R2.end());
  for (const Root& r : out.R2) {
    Root partner = -sigma_root(vd, r);
    if (r < partner || r == partner) out.R3.push_back(r);
  }

  // Postconditions (A1)-(A3) of the construction, re-verified on every call.
  for (const Root& x : out.R)
    for (const Root& y : out.R) {
      Root s = x + y;
      if (rs.is_root(s) && !detail::sorted_contains(out.R, s))
        throw Error("build_R: R is not closed (A1)");
    }
  std::vector<Root> sigmaR;
  for (const Root& x : out.R) sigmaR.push_back(sigma_root(vd, x));
  std::sort(sigmaR.begin(), sigmaR.end());
  if (2 * out.R.size() != rs.all_roots.size())
    throw Error("build_R: |R| != |Phi|/2 (A2)");
  for (const Root& x : out.R)
    if (detail::sorted_contains(sigmaR, x)) throw Error("build_R: R meets sigma R (A2)");
  std::vector<Root> r_cap_negr;
  for (const Root& x : out.R)
    if (detail::sorted_contains(out.R, -x)) r_cap_negr.push_back(x);
  std::sort(r_cap_negr.begin(), r_cap_negr.end());
  std::vector<Root> r0_sorted = out.R0;
  std::sort(r0_sorted.begin(), r0_sorted.end());
  if (r_cap_negr != r0_sorted) throw Error("build_R: R cap (-R) != R0 (A3)");
  return out;
}

// dim of the family of admissible ell for fixed discrete data: r(r/2 - |Delta_0|).
inline long moduli_dim(const VoganDiagram& vd, const Delta0& d0) {
  if (vd.rank() % 2 != 0) throw OddRank("moduli_dim: rank must be even");
  require_delta0(vd, d0);
  return static_cast<long>(vd.rank()) *
         (vd.rank() / 2 - static_cast<long>(d0.verts.size()));
}

// Subspace ell of h^C in the basis {H_{alpha_1}, ..., H_{alpha_r}}. Entries are
// complex over a real multiquadratic field; user-supplied subspaces are plain
// Gaussian rationals (trivial tower).
struct EllSubspace {
  TowerPtr tower = trivial_tower();
  Mat<QC> rows;  // m x r
};

// Canonical real basis of the real form h inside h^C, as H-coordinate columns:
// i H_{alpha_k} for fixed k, and (H_k - H_{theta k}, i(H_k + H_{theta k})) for
// swapped pairs k < theta(k). In this basis sigma is plain coordinate
// conjugation.
inline Mat<QC> real_cartan_basis(const VoganDiagram& vd) {
  const int r = vd.rank();
  Mat<QC> cols;
  for (int k = 0; k < r; ++k) {
    if (vd.fixed(k)) {
      Vec<QC> v(r, QC(0));
      v[k] = QC::imaginary_unit();
      cols.push_back(std::move(v));
    } else if (k < vd.theta[k]) {
      Vec<QC> v1(r, QC(0)), v2(r, QC(0));
      v1[k] = QC(1);
      v1[vd.theta[k]] = QC(-1);
      v2[k] = QC::imaginary_unit();
      v2[vd.theta[k]] = QC::imaginary_unit();
      cols.push_back(std::move(v1));
      cols.push_back(std::move(v2));
    }
  }
  return mat_transpose(cols);  // r x r, column j = j-th basis vector
}

// sigma acting antilinearly on H-coordinates: (sigma x)_j = -conj(x_{theta(j)}).
inline Vec<QC> sigma_coords(const VoganDiagram& vd, const Vec<QC>& x) {
  Vec<QC> out(x.size(), QC(0));
  for (size_t j = 0; j < x.size(); ++j) out[j] = -x[vd.theta[j]].conj();
  return out;
}

inline bool validate_ell(const VoganDiagram& vd, const Delta0& d0, const EllSubspace& ell) {
  const int r = vd.rank();
  for (const auto& row : ell.rows)
    if (static_cast<int>(row.size()) != r)
      throw DimensionMismatch("validate_ell: row length != rank");
  require_delta0(vd, d0);
  const int m = static_cast<int>(ell.rows.size());
  if (r % 2 != 0 || m != r / 2) return false;
  if (mat_rank(ell.rows) != m) return false;
  Mat<QC> stacked = ell.rows;
  for (const auto& row : ell.rows) stacked.push_back(sigma_coords(vd, row));
  if (mat_rank(stacked) != r) return false;
  for (int v : d0.verts) {
    Mat<QC> ext = ell.rows;
    Vec<QC> e(r, QC(0));
    e[v] = QC(1);
    ext.push_back(std::move(e));
    if (mat_rank(ext) != m) return false;
  }
  return true;
}

// The Grassmannian-chart construction: U = span{H_alpha : alpha in Delta_0},
// E = Hermitian orthocomplement of U + sigma U in the real-basis coordinates,
// W spanned by f_{2j-1} + i f_{2j} over a rational basis f of the sigma-fixed
// part of E. Returns U + W in H-coordinates; always validates.
inline EllSubspace construct_default_ell(const VoganDiagram& vd, const Delta0& d0) {
  const int r = vd.rank();
  if (r % 2 != 0) throw OddRank("construct_default_ell: rank must be even");
  require_delta0(vd, d0);
  Mat<QC> T = real_cartan_basis(vd);
  Mat<QC> Tinv = *mat_inverse(T);

  Mat<QC> u_vecs;  // real-basis coordinates of H_alpha, alpha in Delta_0
  for (int v : d0.verts) {
    Vec<QC> e(r, QC(0));
    e[v] = QC(1);
    u_vecs.push_back(mat_vec(Tinv, e));
  }
  // Real part of E: rational solutions of <x, u> = 0 for u in U (and conj U,
  // which gives the same real/imaginary row pair).
  Mat<Rat> constraints;
  for (const auto& u : u_vecs) {
    Vec<Rat> re(r), im(r);
    for (int j = 0; j < r; ++j) {
      QC cu = u[j].conj();
      if (!cu.re.is_rational() || !cu.im.is_rational())
        throw Error("construct_default_ell: non-rational U coordinates");
      re[j] = cu.re.rational_part();
      im[j] = cu.im.rational_part();
    }
    constraints.push_back(std::move(re));
    constraints.push_back(std::move(im));
  }
  std::vector<Vec<Rat>> f;
  if (constraints.empty()) {
    for (int j = 0; j < r; ++j) {
      Vec<Rat> e(r, Rat(0));
      e[j] = 1;
      f.push_back(std::move(e));
    }
  } else {
    f = nullspace(constraints);
  }
  if (f.size() % 2 != 0) throw Error("construct_default_ell: odd-dimensional E");

  Mat<QC> rows_real = u_vecs;
  for (size_t j = 0; j + 1 < f.size(); j += 2) {
    Vec<QC> w(r, QC(0));
    for (int k = 0; k < r; ++k) w[k] = QC::gauss(f[j][k], f[j + 1][k]);
    rows_real.push_back(std::move(w));
  }
  EllSubspace ell;
  for (const auto& w : rows_real) ell.rows.push_back(mat_vec(T, w));
  if (!validate_ell(vd, d0, ell)) throw Error("construct_default_ell: postcondition failed");
  return ell;
}

// Whether ell splits as h0 + h1 with h0 = span{H_alpha : alpha in R cap (-R)}
// and h1 inside the Killing-orthocomplement of h0 + sigma h0. Decided exactly:
// dim(ell cap s) must be m - dim h0.
inline bool snow_decomposition_exists(const VoganDiagram& vd, const Delta0& d0,
                                      const EllSubspace& ell) {
  if (!validate_ell(vd, d0, ell)) throw InvalidEll("snow_decomposition_exists: invalid ell");
  const int r = vd.rank();
  const int m = r / 2;
  const int dim_h0 = static_cast<int>(d0.verts.size());
  // s = Killing-orthocomplement of h0 + sigma h0 (bilinear form, Gram matrix of
  // the symmetrized Cartan form in H-coordinates).
  Mat<QC> ortho_rows;
  for (int v : d0.verts) {
    Vec<QC> row1(r, QC(0)), row2(r, QC(0));
    for (int j = 0; j < r; ++j) row1[j] = QC(Rat(vd.rs->gram[v][j]));
    int w = vd.theta[v];
    for (int j = 0; j < r; ++j) row2[j] = QC(Rat(vd.rs->gram[w][j]));
    ortho_rows.push_back(std::move(row1));
    ortho_rows.push_back(std::move(row2));
  }
  std::vector<Vec<QC>> s_basis =
      ortho_rows.empty() ? [&] {
        std::vector<Vec<QC>> full;
        for (int j = 0; j < r; ++j) {
          Vec<QC> e(r, QC(0));
          e[j] = QC(1);
          full.push_back(std::move(e));
        }
        return full;
      }()
                         : nullspace(ortho_rows);
  // dim(ell cap s) = dim ell + dim s - dim(ell + s).
  Mat<QC> stacked = ell.rows;
  for (const auto& v : s_basis) stacked.push_back(v);
  int dim_sum = mat_rank(stacked);
  int dim_cap = m + static_cast<int>(s_basis.size()) - dim_sum;
  return dim_cap == m - dim_h0;
}

// Matrix of J on the real form h in the canonical real basis: J x = i x+ - i x-
// for the decomposition x = x+ + x- over ell + sigma ell. Exact; J^2 = -Id.
inline Mat<QNum> j_on_cartan(const VoganDiagram& vd, const EllSubspace& ell) {
  if (!validate_ell(vd, Delta0{}, ell)) throw InvalidEll("j_on_cartan: invalid ell");
  const int r = vd.rank();
  const int m = r / 2;
  Mat<QC> basis_cols(r, Vec<QC>(r, QC(0)));  // columns: ell rows then sigma ell rows
  for (int k = 0; k < m; ++k) {
    Vec<QC> srow = sigma_coords(vd, ell.rows[k]);
    for (int j = 0; j < r; ++j) {
      basis_cols[j][k] = ell.rows[k][j];
      basis_cols[j][m + k] = srow[j];
    }
  }
  auto binv = mat_inverse(basis_cols);
  if (!binv) throw InvalidEll("j_on_cartan: ell + sigma ell does not span");
  Mat<QC> T = real_cartan_basis(vd);
  Mat<QC> Tinv = *mat_inverse(T);
  const QC I = QC::imaginary_unit();

  Mat<QNum> J(r, Vec<QNum>(r, QNum(0)));
  for (int col = 0; col < r; ++col) {
    Vec<QC> b(r, QC(0));
    for (int j = 0; j < r; ++j) b[j] = T[j][col];
    Vec<QC> coef = mat_vec(*binv, b);
    Vec<QC> xplus(r, QC(0));
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < r; ++j) xplus[j] = xplus[j] + coef[k] * ell.rows[k][j];
    Vec<QC> jb(r, QC(0));
    for (int j = 0; j < r; ++j) jb[j] = QC(Rat(2)) * I * xplus[j] - I * b[j];
    Vec<QC> w = mat_vec(Tinv, jb);
    for (int j = 0; j < r; ++j) {
      if (!w[j].im.is_zero()) throw Error("j_on_cartan: J does not preserve the real form");
      J[j][col] = w[j].re;
    }
  }
  // J^2 = -Id, exactly.
  Mat<QNum> J2 = mat_mul(J, J);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!(J2[i][j] == QNum(i == j ? -1 : 0))) throw Error("j_on_cartan: J^2 != -Id");
  return J;
}

// Full discrete+linear data of a regular complex structure.
struct RegularStructure {
  VoganDiagram vd;
  Delta0 delta0;
  RSet rset;
  std::optional<EllSubspace> ell;
};

inline RegularStructure make_structure(VoganDiagram vd, Delta0 d0,
                                       std::optional<EllSubspace> ell = std::nullopt) {
  RSet rset = build_R(vd, d0);
  if (ell && !validate_ell(vd, d0, *ell)) throw InvalidEll("make_structure: invalid ell");
  return RegularStructure{std::move(vd), std::move(d0), std::move(rset), std::move(ell)};
}

}  // namespace vh
