#pragma once

// Test-only oracle: generates the positive roots height by height using the
// root-string length rule, independently of the reflection closure in the
// library. beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0, where p is
// the number of backward steps beta - k alpha_i that are roots.

#include <set>
#include <vector>

#include "vh/cartan.hpp"
#include "vh/rootsystem.hpp"

namespace vh_test {

inline std::vector<vh::Root> rootstring_positive_roots(const vh::CartanMatrix& cm) {
  const int n = cm.n;
  std::set<std::vector<int>> known;
  std::vector<vh::Root> level;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    known.insert(e);
    level.push_back(vh::Root{e});
  }
  std::vector<vh::Root> all = level;
  while (!level.empty()) {
    std::vector<vh::Root> next;
    for (const vh::Root& b : level)
      for (int i = 0; i < n; ++i) {
        std::vector<int> cand = b.c;
        cand[i] += 1;
        if (known.count(cand)) continue;
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += cm.a[j][i] * b.c[j];
        // For positive beta != alpha_i the downward string stays inside the
        // positive roots until it leaves the root system, so counting known
        // positives gives the exact string length p.
        int p = 0;
        std::vector<int> down = b.c;
        for (;;) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          known.insert(cand);
          next.push_back(vh::Root{cand});
        }
      }
    for (const vh::Root& r : next) all.push_back(r);
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), vh::height_lex_less);
  return all;
}

}  // namespace vh_test
