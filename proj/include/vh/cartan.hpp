#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "vh/rational.hpp"

namespace vh {

// Cartan matrix with the pairing convention a[i][j] = 2(alpha_i, alpha_j)/(alpha_j, alpha_j),
// so column j is normalized by the length of alpha_j. Under this convention the canonical
// G2 block is [[2,-1],[-3,2]] and its highest root has coefficients (3,2).
struct CartanMatrix {
  int n = 0;
  std::vector<std::vector<int>> a;

  bool operator==(const CartanMatrix&) const = default;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char family_letter(Family f) { return static_cast<char>(f); }

inline CartanMatrix make_block(Family fam, int rank) {
  auto chain = [](CartanMatrix& m, int i, int j) { m.a[i][j] = m.a[j][i] = -1; };
  CartanMatrix m;
  m.n = rank;
  m.a.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) m.a[i][i] = 2;
  switch (fam) {
    case Family::A:
      if (rank < 1) throw NotFiniteType("A_r requires r >= 1");
      for (int i = 0; i + 1 < rank; ++i) chain(m, i, i + 1);
      break;
    case Family::B:
      if (rank < 2) throw NotFiniteType("B_r requires r >= 2");
      for (int i = 0; i + 2 < rank; ++i) chain(m, i, i + 1);
      m.a[rank - 2][rank - 1] = -2;
      m.a[rank - 1][rank - 2] = -1;
      break;
    case Family::C:
      if (rank < 2) throw NotFiniteType("C_r requires r >= 2");
      for (int i = 0; i + 2 < rank; ++i) chain(m, i, i + 1);
      m.a[rank - 2][rank - 1] = -1;
      m.a[rank - 1][rank - 2] = -2;
      break;
    case Family::D:
      if (rank < 4) throw NotFiniteType("D_r requires r >= 4");
      for (int i = 0; i + 3 < rank; ++i) chain(m, i, i + 1);
      chain(m, rank - 3, rank - 2);
      chain(m, rank - 3, rank - 1);
      break;
    case Family::E: {
      if (rank < 6 || rank > 8) throw NotFiniteType("E_r requires r in {6,7,8}");
      // Bourbaki numbering: 1-3-4-5-6(-7-8) on the line, 2 attached to 4.
      chain(m, 0, 2);
      chain(m, 1, 3);
      for (int i = 2; i + 1 < rank; ++i) chain(m, i, i + 1);
      break;
    }
    case Family::F:
      if (rank != 4) throw NotFiniteType("F requires rank 4");
      chain(m, 0, 1);
      m.a[1][2] = -2;
      m.a[2][1] = -1;
      chain(m, 2, 3);
      break;
    case Family::G:
      if (rank != 2) throw NotFiniteType("G requires rank 2");
      m.a[0][1] = -1;
      m.a[1][0] = -3;
      break;
  }
  return m;
}

inline CartanMatrix direct_sum(const std::vector<CartanMatrix>& blocks) {
  CartanMatrix m;
  for (const auto& b : blocks) m.n += b.n;
  m.a.assign(m.n, std::vector<int>(m.n, 0));
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.n; ++i)
      for (int j = 0; j < b.n; ++j) m.a[off + i][off + j] = b.a[i][j];
    off += b.n;
  }
  return m;
}

// Connected components of the Dynkin graph, each sorted, ordered by least vertex.
inline std::vector<std::vector<int>> graph_components(const CartanMatrix& m) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(m.n, false);
  for (int s = 0; s < m.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u = 0; u < m.n; ++u)
        if (!seen[u] && m.a[v][u] != 0) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Identification of one connected block, with the vertex order that realizes the
// canonical (Bourbaki-style) numbering of its family. canon[k] is the original
// vertex sitting at canonical position k.
struct BlockInfo {
  Family fam;
  int rank;
  std::vector<int> canon;
};

namespace detail {

inline std::vector<int> walk_path(const CartanMatrix& m, const std::vector<int>& verts, int from,
                                  int avoid) {
  std::vector<int> path{from};
  int prev = avoid, cur = from;
  for (;;) {
    int next = -1;
    for (int u : verts)
      if (u != prev && u != cur && m.a[cur][u] != 0) {
        next = u;
        break;
      }
    if (next < 0) break;
    path.push_back(next);
    prev = cur;
    cur = next;
  }
  return path;
}

}  // namespace detail

inline BlockInfo classify_block(const CartanMatrix& m, const std::vector<int>& verts) {
  const int n = static_cast<int>(verts.size());
  auto fail = [&](const std::string& why) -> BlockInfo {
    throw NotFiniteType("Cartan block is not of finite type: " + why);
  };

  int edges = 0;
  std::vector<int> deg(m.n, 0);
  std::vector<std::pair<int, int>> multi;  // (u,v) with a[u][v]*a[v][u] > 1
  int triple = 0;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) {
      int u = verts[i], v = verts[j];
      if (m.a[u][v] == 0) continue;
      int mult = m.a[u][v] * m.a[v][u];
      if (mult > 3) fail("bond multiplicity exceeds 3");
      ++edges;
      ++deg[u];
      ++deg[v];
      if (mult == 3) {
        ++triple;
        multi.emplace_back(u, v);
      } else if (mult == 2) {
        multi.emplace_back(u, v);
      }
    }
  if (edges != n - 1) fail("graph contains a cycle");
  int branch = -1;
  for (int v : verts) {
    if (deg[v] > 3) fail("vertex of degree > 3");
    if (deg[v] == 3) {
      if (branch >= 0) fail("two branch vertices");
      branch = v;
    }
  }
  if (static_cast<int>(multi.size()) > 1) fail("two multiple bonds");
  if (!multi.empty() && branch >= 0) fail("branch together with a multiple bond");

  if (triple == 1) {
    if (n != 2) fail("triple bond in rank != 2");
    auto [u, v] = multi[0];
    // canonical G2 puts the short root first: a[short][long] = -1.
    if (m.a[u][v] == -1) return {Family::G, 2, {u, v}};
    return {Family::G, 2, {v, u}};
  }

  if (!multi.empty()) {
    auto [u, v] = multi[0];
    if (n == 2) {
      // Rank-2 double bond: canonicalized as B2 = (long, short).
      int lng = (m.a[u][v] == -2) ? u : v;
      int sht = (lng == u) ? v : u;
      return {Family::B, 2, {lng, sht}};
    }
    int e = (deg[u] == 1) ? u : (deg[v] == 1 ? v : -1);
    if (e < 0) {
      // Double bond strictly inside the chain: F4.
      if (n != 4) fail("interior double bond outside F4");
      int lng = (m.a[u][v] == -2) ? u : v;  // long side of the double bond
      int sht = (lng == u) ? v : u;
      std::vector<int> larm = detail::walk_path(m, verts, lng, sht);
      std::vector<int> sarm = detail::walk_path(m, verts, sht, lng);
      if (larm.size() != 2 || sarm.size() != 2) fail("interior double bond outside F4");
      return {Family::F, 4, {larm[1], larm[0], sarm[0], sarm[1]}};
    }
    int w = (e == u) ? v : u;
    std::vector<int> path = detail::walk_path(m, verts, e, -1);
    if (static_cast<int>(path.size()) != n) fail("double-bond component is not a path");
    std::reverse(path.begin(), path.end());  // end vertex of the double bond goes last
    Family fam = (m.a[w][e] == -2) ? Family::B : Family::C;
    // Short end: a[w][e] = -2 means alpha_e is short (B_r); long end gives C_r.
    return {fam, n, path};
  }

  // Simply laced.
  if (branch < 0) {
    if (n == 1) return {Family::A, 1, {verts[0]}};
    std::vector<int> ends;
    for (int v : verts)
      if (deg[v] == 1) ends.push_back(v);
    std::vector<int> path = detail::walk_path(m, verts, std::min(ends[0], ends[1]), -1);
    return {Family::A, n, path};
  }
  std::vector<std::vector<int>> arms;
  for (int v : verts)
    if (m.a[branch][v] != 0 && v != branch) arms.push_back(detail::walk_path(m, verts, v, branch));
  std::sort(arms.begin(), arms.end(),
            [](const auto& x, const auto& y) { return x.size() < y.size(); });
  auto len = [&](int k) { return static_cast<int>(arms[k].size()); };
  if (len(0) == 1 && len(1) == 1) {
    // D_r: long arm from its far end, branch vertex at canonical r-2, fork last.
    std::vector<int> canon(arms[2].rbegin(), arms[2].rend());
    canon.push_back(branch);
    int f1 = arms[0][0], f2 = arms[1][0];
    canon.push_back(std::min(f1, f2));
    canon.push_back(std::max(f1, f2));
    return {Family::D, n, canon};
  }
  if (len(0) == 1 && len(1) == 2 && len(2) >= 2 && len(2) <= 4) {
    // E6/E7/E8 in Bourbaki numbering. For E6 the two length-2 arms are
    // interchangeable; take the one with the smaller far end as (1,3).
    std::vector<int> a13 = arms[1], rest = arms[2];
    if (len(2) == 2 && rest[1] < a13[1]) std::swap(a13, rest);
    std::vector<int> canon{a13[1], arms[0][0], a13[0], branch};
    for (int v : rest) canon.push_back(v);
    return {Family::E, n, canon};
  }
  return fail("branched shape outside D/E");
}

inline void validate_cartan(const CartanMatrix& m) {
  if (m.n < 1) throw NotFiniteType("empty Cartan matrix");
  if (static_cast<int>(m.a.size()) != m.n) throw NotFiniteType("non-square Cartan matrix");
  for (int i = 0; i < m.n; ++i) {
    if (static_cast<int>(m.a[i].size()) != m.n) throw NotFiniteType("non-square Cartan matrix");
    if (m.a[i][i] != 2) throw NotFiniteType("diagonal entry != 2");
    for (int j = 0; j < m.n; ++j) {
      if (i == j) continue;
      if (m.a[i][j] > 0) throw NotFiniteType("positive off-diagonal entry");
      if ((m.a[i][j] == 0) != (m.a[j][i] == 0)) throw NotFiniteType("asymmetric zero pattern");
    }
  }
  for (const auto& comp : graph_components(m)) classify_block(m, comp);
}

// Minimal positive integers d with a[i][j] d_j symmetric; diagonal of the Gram
// form is then 2 d_i.
inline std::vector<long long> symmetrizer(const CartanMatrix& m) {
  std::vector<Rat> d(m.n, Rat(0));
  for (const auto& comp : graph_components(m)) {
    d[comp[0]] = 1;
    std::vector<int> stack{comp[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : comp) {
        if (u == v || m.a[v][u] == 0 || d[u] != 0) continue;
        d[u] = d[v] * m.a[u][v] / m.a[v][u];
        stack.push_back(u);
      }
    }
    BigInt lcm_den = 1, gcd_num = 0;
    for (int v : comp) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(d[v]));
    for (int v : comp) d[v] *= lcm_den;
    for (int v : comp) gcd_num = boost::multiprecision::gcd(gcd_num, numerator(d[v]));
    for (int v : comp) d[v] /= gcd_num;
  }
  std::vector<long long> out(m.n);
  for (int i = 0; i < m.n; ++i) out[i] = static_cast<long long>(numerator(d[i]));
  return out;
}

// Gram matrix (alpha_i, alpha_j) = a[i][j] d_j of the symmetrized Cartan form.
inline std::vector<std::vector<long long>> gram_matrix(const CartanMatrix& m) {
  auto d = symmetrizer(m);
  std::vector<std::vector<long long>> g(m.n, std::vector<long long>(m.n, 0));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) g[i][j] = static_cast<long long>(m.a[i][j]) * d[j];
  return g;
}

}  // namespace vh
