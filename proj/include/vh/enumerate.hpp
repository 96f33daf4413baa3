#pragma once

#include <vector>

#include "vh/vogan.hpp"

namespace vh {

inline std::vector<std::pair<Family, int>> finite_types(int rank_max) {
  std::vector<std::pair<Family, int>> out;
  for (int r = 1; r <= rank_max; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= rank_max; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= rank_max; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= rank_max; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= std::min(rank_max, 8); ++r) out.push_back({Family::E, r});
  if (rank_max >= 4) out.push_back({Family::F, 4});
  if (rank_max >= 2) out.push_back({Family::G, 2});
  return out;
}

// Every connected Vogan diagram of total rank <= rank_max: all (involution,
// painting) pairs on one block, plus the swap diagrams on a doubled block.
inline std::vector<VoganDiagram> connected_vogan_diagrams(int rank_max, bool dedup = false) {
  std::vector<VoganDiagram> out;
  for (auto [fam, r] : finite_types(rank_max)) {
    for (auto& vd : enumerate_vogan(make_block(fam, r), dedup)) out.push_back(std::move(vd));
    if (2 * r <= rank_max) {
      CartanMatrix pair = direct_sum({make_block(fam, r), make_block(fam, r)});
      for (auto& vd : enumerate_vogan(pair, dedup))
        if (vogan_components(vd).size() == 1) out.push_back(std::move(vd));
    }
  }
  return out;
}

// Every Vogan diagram on a one- or two-block Cartan matrix of total rank
// <= rank_max. Two blocks exhaust the componentwise phenomena: swapped pairs,
// direct sums of unlike factors, and the multi-factor kappa system.
inline std::vector<VoganDiagram> enumeration_domain(int rank_max, bool dedup = false) {
  std::vector<VoganDiagram> out;
  auto types = finite_types(rank_max);
  for (auto [fam, r] : types)
    for (auto& vd : enumerate_vogan(make_block(fam, r), dedup)) out.push_back(std::move(vd));
  for (size_t i = 0; i < types.size(); ++i)
    for (size_t j = i; j < types.size(); ++j) {
      if (types[i].second + types[j].second > rank_max) continue;
      CartanMatrix cm = direct_sum({make_block(types[i].first, types[i].second),
                                    make_block(types[j].first, types[j].second)});
      for (auto& vd : enumerate_vogan(cm, dedup)) out.push_back(std::move(vd));
    }
  return out;
}

// Whether a Mixed connected component has one of the shapes that occur for
// simple real forms: the A_r flip, the D_r fork swap, or the E6 flip.
inline bool matches_mixed_family(const VoganDiagram& vd, const VoganComponent& comp) {
  if (comp.type != ComponentType::Mixed) return false;
  BlockInfo info = classify_block(vd.rs->cartan, comp.vertices);
  bool nontrivial = false;
  for (int v : comp.vertices)
    if (vd.theta[v] != v) nontrivial = true;
  if (!nontrivial) return false;
  switch (info.fam) {
    case Family::A: return info.rank >= 2;
    case Family::D: return true;
    case Family::E: return info.rank == 6;
    default: return false;
  }
}

}  // namespace vh
