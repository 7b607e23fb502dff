// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tvcat/error.hpp"
#include "tvcat/vrel.hpp"

namespace tvcat {

/// Depth-first search over assignments var -> value. Variables are assigned
/// in index order, each from its own ordered domain, so solutions are
/// visited in lexicographic order of the value positions. `consistent(v, a)`
/// is asked right after variable v is set (a[0..v] valid) and should test
/// exactly the constraints whose largest variable is v.
struct Backtrack {
  std::vector<std::vector<Index>> domains;
  std::function<bool(std::size_t, const std::vector<Index>&)> consistent;
  /// Called on every complete assignment; return true to stop.
  std::function<bool(const std::vector<Index>&)> leaf;
  std::uint64_t node_guard = 0;  // 0: unlimited

  struct Stats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    bool stopped = false;
  };

  Stats run(const char* what = "search") const {
    Stats st;
    const auto n = domains.size();
    std::vector<Index> a(n, 0);
    std::vector<std::size_t> pos(n, 0);
    if (n == 0) {
      ++st.leaves;
      st.stopped = leaf && leaf(a);
      return st;
    }
    for (const auto& d : domains) {
      if (d.empty()) return st;
    }
    std::size_t v = 0;
    pos[0] = 0;
    while (true) {
      // Try the current position of v, advancing until consistent.
      bool placed = false;
      while (pos[v] < domains[v].size()) {
        a[v] = domains[v][pos[v]];
        ++st.nodes;
        if (node_guard && st.nodes > node_guard) {
          throw GuardError(std::string(what) + " exceeded " + std::to_string(node_guard) + " search nodes");
        }
        if (!consistent || consistent(v, a)) {
          placed = true;
          break;
        }
        ++pos[v];
      }
      if (placed) {
        if (v + 1 == n) {
          ++st.leaves;
          if (leaf && leaf(a)) {
            st.stopped = true;
            return st;
          }
          ++pos[v];
          continue;
        }
        ++v;
        pos[v] = 0;
        continue;
      }
      if (v == 0) return st;
      --v;
      ++pos[v];
    }
  }
};

}  // namespace tvcat
