#pragma once

#include <algorithm>
#include <compare>
#include <memory>
#include <numeric>
#include <vector>

#include "vh/cartan.hpp"
#include "vh/linalg.hpp"

namespace vh {

// A root as its integer coefficient vector over the simple roots.
struct Root {
  std::vector<int> c;

  auto operator<=>(const Root&) const = default;

  int height() const { return std::accumulate(c.begin(), c.end(), 0); }
  bool positive() const {
    for (int x : c)
      if (x > 0) return true;
    return false;
  }
  Root operator-() const {
    Root r = *this;
    for (int& x : r.c) x = -x;
    return r;
  }
  Root operator+(const Root& o) const {
    Root r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  std::vector<int> support() const {
    std::vector<int> s;
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) s.push_back(static_cast<int>(i));
    return s;
  }
};

inline bool height_lex_less(const Root& a, const Root& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a.c < b.c;
}

struct RootSystem {
  CartanMatrix cartan;
  std::vector<long long> d;                    // symmetrizer
  std::vector<std::vector<long long>> gram;    // (alpha_i, alpha_j)
  std::vector<std::vector<int>> components;    // Dynkin components (sorted vertex lists)
  std::vector<BlockInfo> blocks;               // classification per component
  std::vector<Root> positive_roots;            // ordered by (height, lex)
  std::vector<Root> all_roots;                 // sorted lexicographically

  int rank() const { return cartan.n; }

  bool is_root(const Root& v) const {
    return std::binary_search(all_roots.begin(), all_roots.end(), v);
  }
  bool is_root(const std::vector<int>& coeffs) const { return is_root(Root{coeffs}); }

  // <beta, alpha_i^vee> = sum_j a[j][i] c_j(beta).
  int coroot_pairing(const Root& b, int i) const {
    int s = 0;
    for (int j = 0; j < cartan.n; ++j) s += cartan.a[j][i] * b.c[j];
    return s;
  }

  Root reflect(const Root& b, int i) const {
    Root r = b;
    r.c[i] -= coroot_pairing(b, i);
    return r;
  }
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Breadth-first closure of the simple roots under the simple reflections.
inline RootSystemPtr build_root_system(const CartanMatrix& cm) {
  validate_cartan(cm);
  auto rs = std::make_shared<RootSystem>();
  rs->cartan = cm;
  rs->d = symmetrizer(cm);
  rs->gram = gram_matrix(cm);
  rs->components = graph_components(cm);
  for (const auto& comp : rs->components) rs->blocks.push_back(classify_block(cm, comp));

  std::vector<Root> frontier;
  std::vector<Root> seen;
  for (int i = 0; i < cm.n; ++i) {
    Root e{std::vector<int>(cm.n, 0)};
    e.c[i] = 1;
    frontier.push_back(e);
    seen.push_back(e);
  }
  std::sort(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& b : frontier)
      for (int i = 0; i < cm.n; ++i) {
        Root r = rs->reflect(b, i);
        if (!std::binary_search(seen.begin(), seen.end(), r)) {
          next.push_back(r);
          seen.insert(std::lower_bound(seen.begin(), seen.end(), r), r);
        }
      }
    frontier = std::move(next);
  }
  rs->all_roots = std::move(seen);
  for (const Root& r : rs->all_roots)
    if (r.positive()) rs->positive_roots.push_back(r);
  std::sort(rs->positive_roots.begin(), rs->positive_roots.end(), height_lex_less);
  return rs;
}

// Unique positive root dominating all others coefficientwise on one component.
inline Root highest_root(const RootSystem& rs, const std::vector<int>& component) {
  std::vector<bool> in(rs.rank(), false);
  for (int v : component) in[v] = true;
  const Root* best = nullptr;
  for (const Root& r : rs.positive_roots) {
    bool on_comp = true;
    for (size_t i = 0; i < r.c.size(); ++i)
      if (r.c[i] != 0 && !in[i]) on_comp = false;
    if (on_comp) best = &r;  // positive_roots is height-ordered
  }
  if (!best) throw Error("highest_root: empty component");
  return *best;
}

inline Rat inner_product(const RootSystem& rs, const Root& a, const Root& b) {
  long long s = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < rs.rank(); ++j) s += a.c[i] * rs.gram[i][j] * b.c[j];
  }
  return Rat(s);
}

}  // namespace vh
