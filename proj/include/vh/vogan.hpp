#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "vh/rootsystem.hpp"

namespace vh {

// Vogan diagram: Dynkin diagram + involutive diagram automorphism + painted
// subset of its fixed vertices.
struct VoganDiagram {
  RootSystemPtr rs;
  std::vector<int> theta;     // involutive Dynkin automorphism, theta[i] = image
  std::vector<bool> painted;  // painted[i] => theta[i] == i

  int rank() const { return rs->rank(); }
  bool fixed(int i) const { return theta[i] == i; }
  bool inner() const {
    for (int i = 0; i < rank(); ++i)
      if (!fixed(i)) return false;
    return true;
  }
  std::vector<int> painted_vertices() const {
    std::vector<int> p;
    for (int i = 0; i < rank(); ++i)
      if (painted[i]) p.push_back(i);
    return p;
  }
};

inline bool is_diagram_automorphism(const CartanMatrix& cm, const std::vector<int>& perm) {
  for (int i = 0; i < cm.n; ++i)
    for (int j = 0; j < cm.n; ++j)
      if (cm.a[perm[i]][perm[j]] != cm.a[i][j]) return false;
  return true;
}

inline VoganDiagram make_vogan(RootSystemPtr rs, std::vector<int> theta,
                               std::vector<bool> painted) {
  const int n = rs->rank();
  if (static_cast<int>(theta.size()) != n || static_cast<int>(painted.size()) != n)
    throw DimensionMismatch("make_vogan: size mismatch");
  for (int i = 0; i < n; ++i)
    if (theta[i] < 0 || theta[i] >= n || theta[theta[i]] != i)
      throw Error("make_vogan: involution is not an order-<=2 permutation");
  if (!is_diagram_automorphism(rs->cartan, theta))
    throw Error("make_vogan: involution is not a diagram automorphism");
  for (int i = 0; i < n; ++i)
    if (painted[i] && theta[i] != i) throw Error("make_vogan: painted vertex is not fixed");
  return VoganDiagram{std::move(rs), std::move(theta), std::move(painted)};
}

// sigma(alpha_i) = -alpha_{theta(i)}, extended linearly; satisfies sigma Phi+ = -Phi+.
inline Root sigma_root(const VoganDiagram& vd, const Root& a) {
  Root r{std::vector<int>(vd.rank(), 0)};
  for (int j = 0; j < vd.rank(); ++j) r.c[j] = -a.c[vd.theta[j]];
  return r;
}

enum class RootClass { Complex, CompactImaginary, NoncompactImaginary };

inline bool is_imaginary(const VoganDiagram& vd, const Root& a) {
  for (int j = 0; j < vd.rank(); ++j)
    if (a.c[j] != a.c[vd.theta[j]]) return false;
  return true;
}

// Imaginary roots are compact iff the painted-coefficient sum is even.
inline RootClass classify_root(const VoganDiagram& vd, const Root& a) {
  if (!is_imaginary(vd, a)) return RootClass::Complex;
  int s = 0;
  for (int i = 0; i < vd.rank(); ++i)
    if (vd.painted[i]) s += a.c[i];
  return (s % 2 == 0) ? RootClass::CompactImaginary : RootClass::NoncompactImaginary;
}

inline int root_sign(const VoganDiagram& vd, const Root& a) {
  switch (classify_root(vd, a)) {
    case RootClass::CompactImaginary: return 1;
    case RootClass::NoncompactImaginary: return -1;
    default: throw Error("root_sign: complex root has no sign");
  }
}

enum class ComponentType { Compact, Inner, Complex, Mixed };

inline const char* component_type_name(ComponentType t) {
  switch (t) {
    case ComponentType::Compact: return "compact";
    case ComponentType::Inner: return "inner";
    case ComponentType::Complex: return "complex";
    case ComponentType::Mixed: return "mixed";
  }
  return "?";
}

// One connected Vogan component: a theta-stable Dynkin component, or a pair of
// Dynkin components swapped by theta.
struct VoganComponent {
  std::vector<int> vertices;  // sorted, global indices
  std::vector<int> blocks;    // indices into rs->components
  ComponentType type;

  bool inner_type() const {
    return type == ComponentType::Compact || type == ComponentType::Inner;
  }
};

inline std::vector<VoganComponent> vogan_components(const VoganDiagram& vd) {
  const auto& comps = vd.rs->components;
  std::vector<int> block_of(vd.rank(), -1);
  for (size_t b = 0; b < comps.size(); ++b)
    for (int v : comps[b]) block_of[v] = static_cast<int>(b);

  std::vector<VoganComponent> out;
  std::vector<bool> used(comps.size(), false);
  for (size_t b = 0; b < comps.size(); ++b) {
    if (used[b]) continue;
    used[b] = true;
    int image = block_of[vd.theta[comps[b][0]]];
    VoganComponent vc;
    vc.blocks.push_back(static_cast<int>(b));
    vc.vertices = comps[b];
    if (image != static_cast<int>(b)) {
      used[image] = true;
      vc.blocks.push_back(image);
      vc.vertices.insert(vc.vertices.end(), comps[image].begin(), comps[image].end());
      std::sort(vc.vertices.begin(), vc.vertices.end());
      vc.type = ComponentType::Complex;
    } else {
      bool all_fixed = true, any_paint = false;
      for (int v : comps[b]) {
        if (vd.theta[v] != v) all_fixed = false;
        if (vd.painted[v]) any_paint = true;
      }
      vc.type = !all_fixed ? ComponentType::Mixed
                           : (any_paint ? ComponentType::Inner : ComponentType::Compact);
    }
    out.push_back(std::move(vc));
  }
  return out;
}

enum class Table1Method { HighestRoot, Pattern, NoSumRule };

namespace detail {

inline void require_component(const VoganDiagram& vd, const VoganComponent& comp) {
  for (const auto& vc : vogan_components(vd))
    if (vc.vertices == comp.vertices) return;
  throw NotConnected("table1_membership: not a connected Vogan component of this diagram");
}

inline bool table1_highest_root(const VoganDiagram& vd, const VoganComponent& comp) {
  if (!comp.inner_type()) return false;
  std::vector<int> paint;
  for (int v : comp.vertices)
    if (vd.painted[v]) paint.push_back(v);
  if (paint.empty()) return true;
  if (paint.size() > 1) return false;
  Root hr = highest_root(*vd.rs, comp.vertices);
  return hr.c[paint[0]] == 1;
}

inline bool table1_pattern(const VoganDiagram& vd, const VoganComponent& comp) {
  if (!comp.inner_type()) return false;
  std::vector<int> paint;
  for (int v : comp.vertices)
    if (vd.painted[v]) paint.push_back(v);
  if (paint.empty()) return true;  // compact row
  if (paint.size() > 1) return false;
  BlockInfo info = classify_block(vd.rs->cartan, comp.vertices);
  int pos = -1;  // canonical 1-based position of the painted vertex
  for (int k = 0; k < info.rank; ++k)
    if (info.canon[k] == paint[0]) pos = k + 1;
  switch (info.fam) {
    case Family::A: return true;              // any single painted vertex
    case Family::B: return pos == 1;          // long end, r >= 2
    case Family::C: return pos == info.rank;  // long end, r >= 3 (rank 2 classifies as B)
    case Family::D: return pos == 1 || pos == info.rank - 1 || pos == info.rank;
    case Family::E:
      if (info.rank == 6) return pos == 1 || pos == 6;
      if (info.rank == 7) return pos == 7;
      return false;
    default: return false;  // F4, G2 have no painted rows
  }
}

inline bool table1_no_sum_rule(const VoganDiagram& vd, const VoganComponent& comp) {
  if (!comp.inner_type()) return false;
  std::vector<bool> in(vd.rank(), false);
  for (int v : comp.vertices) in[v] = true;
  std::vector<const Root*> nc;
  for (const Root& r : vd.rs->positive_roots) {
    bool on_comp = true;
    for (size_t i = 0; i < r.c.size(); ++i)
      if (r.c[i] != 0 && !in[i]) on_comp = false;
    if (on_comp && classify_root(vd, r) == RootClass::NoncompactImaginary) nc.push_back(&r);
  }
  for (size_t i = 0; i < nc.size(); ++i)
    for (size_t j = i; j < nc.size(); ++j)
      if (vd.rs->is_root(*nc[i] + *nc[j])) return false;
  return true;
}

}  // namespace detail

inline bool table1_membership(const VoganDiagram& vd, const VoganComponent& comp,
                              Table1Method method) {
  detail::require_component(vd, comp);
  switch (method) {
    case Table1Method::HighestRoot: return detail::table1_highest_root(vd, comp);
    case Table1Method::Pattern: return detail::table1_pattern(vd, comp);
    case Table1Method::NoSumRule: return detail::table1_no_sum_rule(vd, comp);
  }
  throw Error("table1_membership: bad method");
}

// All Dynkin-diagram automorphisms of cm (as permutations), by backtracking.
inline std::vector<std::vector<int>> diagram_automorphisms(const CartanMatrix& cm) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(cm.n, -1);
  std::vector<bool> used(cm.n, false);
  auto compatible = [&](int v, int img) {
    for (int u = 0; u < cm.n; ++u) {
      if (perm[u] < 0) continue;
      if (cm.a[v][u] != cm.a[img][perm[u]] || cm.a[u][v] != cm.a[perm[u]][img]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == cm.n) {
      out.push_back(perm);
      return;
    }
    for (int img = 0; img < cm.n; ++img) {
      if (used[img] || !compatible(v, img)) continue;
      perm[v] = img;
      used[img] = true;
      self(self, v + 1);
      perm[v] = -1;
      used[img] = false;
    }
  };
  rec(rec, 0);
  return out;
}

namespace detail {

inline std::pair<std::vector<int>, std::vector<bool>> conjugate_diagram(
    const std::vector<int>& theta, const std::vector<bool>& painted, const std::vector<int>& g) {
  const int n = static_cast<int>(theta.size());
  std::vector<int> ginv(n);
  for (int i = 0; i < n; ++i) ginv[g[i]] = i;
  std::vector<int> th(n);
  std::vector<bool> p(n, false);
  for (int i = 0; i < n; ++i) th[i] = g[theta[ginv[i]]];
  for (int i = 0; i < n; ++i)
    if (painted[i]) p[g[i]] = true;
  return {th, p};
}

}  // namespace detail

// Least (theta, P) over the Dynkin-graph automorphism orbit; two diagrams on the
// same Cartan matrix are equivalent iff their keys agree.
inline std::pair<std::vector<int>, std::vector<bool>> vogan_canonical_key(const VoganDiagram& vd) {
  std::pair<std::vector<int>, std::vector<bool>> key{vd.theta, vd.painted};
  for (const auto& g : diagram_automorphisms(vd.rs->cartan))
    key = std::min(key, detail::conjugate_diagram(vd.theta, vd.painted, g));
  return key;
}

// Every (theta, P) on the given Cartan matrix. With dedup, one representative per
// orbit of the Dynkin-graph automorphism group acting by conjugation on theta and
// relabeling on P.
inline std::vector<VoganDiagram> enumerate_vogan(const CartanMatrix& cm, bool dedup = false) {
  RootSystemPtr rs = build_root_system(cm);
  auto autos = diagram_automorphisms(cm);
  std::vector<std::vector<int>> involutions;
  for (const auto& g : autos) {
    bool invol = true;
    for (int i = 0; i < cm.n; ++i)
      if (g[g[i]] != i) invol = false;
    if (invol) involutions.push_back(g);
  }
  std::sort(involutions.begin(), involutions.end());

  std::vector<VoganDiagram> out;
  std::set<std::pair<std::vector<int>, std::vector<bool>>> seen_keys;
  for (const auto& th : involutions) {
    std::vector<int> fixed;
    for (int i = 0; i < cm.n; ++i)
      if (th[i] == i) fixed.push_back(i);
    for (unsigned long mask = 0; mask < (1ul << fixed.size()); ++mask) {
      std::vector<bool> paint(cm.n, false);
      for (size_t k = 0; k < fixed.size(); ++k)
        if (mask & (1ul << k)) paint[fixed[k]] = true;
      if (dedup) {
        std::pair<std::vector<int>, std::vector<bool>> key{th, paint};
        for (const auto& g : autos) key = std::min(key, detail::conjugate_diagram(th, paint, g));
        if (!seen_keys.insert(key).second) continue;
      }
      out.push_back(make_vogan(rs, th, paint));
    }
  }
  return out;
}

}  // namespace vh
