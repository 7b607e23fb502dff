// SPDX-License-Identifier: Apache-2.0
// Brute-force reference computations shared by the unit and acceptance tests.
// They deliberately avoid the library's lattice tables and search code.
#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "tvcat/category.hpp"

namespace oracle {

using Order = std::vector<std::vector<bool>>;  // le[x][y]

/// Every partial order on {0..n-1}.
inline std::vector<Order> posets(std::size_t n) {
  std::vector<Order> out;
  const std::size_t pairs = n * n;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs); ++mask) {
    Order le(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < pairs; ++i) le[i / n][i % n] = (mask >> i) & 1;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = le[x][x];
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (x != y && le[x][y] && le[y][x]) ok = false;
        for (std::size_t z = 0; z < n && ok; ++z) {
          if (le[x][y] && le[y][z] && !le[x][z]) ok = false;
        }
      }
    }
    if (ok) out.push_back(le);
  }
  return out;
}

inline tvcat::TVStructure ord(const tvcat::TheoryPtr& th, const Order& le) {
  const auto n = le.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  tvcat::VRel a(th->quantale_ptr(), n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) a.set(x, y, le[x][y] ? 1 : 0);
  }
  return tvcat::TVStructure(th, labels, a);
}

/// Monotone maps X -> Y as tables, in lexicographic order.
inline std::vector<std::vector<tvcat::Index>> monotone_maps(const Order& x, const Order& y) {
  std::vector<std::vector<tvcat::Index>> out;
  const auto n = x.size(), m = y.size();
  std::vector<tvcat::Index> f(n, 0);
  while (true) {
    bool mono = true;
    for (std::size_t a = 0; a < n && mono; ++a) {
      for (std::size_t b = 0; b < n && mono; ++b) mono = !x[a][b] || y[f[a]][f[b]];
    }
    if (mono) out.push_back(f);
    std::size_t i = n;
    while (i > 0 && ++f[i - 1] == m) f[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// Down-closed subsets of a finite order, as indicator vectors.
inline std::set<std::vector<bool>> down_sets(const Order& le) {
  std::set<std::vector<bool>> out;
  const auto n = le.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
    bool down = true;
    for (std::size_t x = 0; x < n && down; ++x) {
      for (std::size_t y = 0; y < n && down; ++y) down = !(s[y] && le[x][y]) || s[x];
    }
    if (down) out.insert(s);
  }
  return out;
}

// Least upper bound from the order table alone.
inline tvcat::Elem lub(const tvcat::Quantale& q, const std::vector<tvcat::Elem>& s) {
  const auto n = q.size();
  for (tvcat::Elem c = 0; c < n; ++c) {
    bool upper = true;
    for (tvcat::Elem x : s) upper = upper && q.leq(x, c);
    if (!upper) continue;
    bool least = true;
    for (tvcat::Elem d = 0; d < n && least; ++d) {
      bool du = true;
      for (tvcat::Elem x : s) du = du && q.leq(x, d);
      if (du) least = q.leq(c, d);
    }
    if (least) return c;
  }
  throw std::logic_error("no lub");
}

/// Condition (2) from the order and tensor tables.
inline bool condition_oracle(const tvcat::Quantale& q) {
  const auto n = q.size();
  for (tvcat::Elem u = 0; u < n; ++u) {
    for (tvcat::Elem v = 0; v < n; ++v) {
      for (tvcat::Elem w = 0; w < n; ++w) {
        std::vector<tvcat::Elem> below;
        for (tvcat::Elem u2 = 0; u2 < n; ++u2) {
          for (tvcat::Elem v2 = 0; v2 < n; ++v2) {
            if (q.leq(u2, u) && q.leq(v2, v) && q.leq(q.tensor(u2, v2), w)) below.push_back(q.tensor(u2, v2));
          }
        }
        // Greatest lower bound of w and u (x) v, from the order table.
        tvcat::Elem glb = 0;
        bool found = false;
        for (tvcat::Elem c = 0; c < n && !found; ++c) {
          if (!q.leq(c, w) || !q.leq(c, q.tensor(u, v))) continue;
          bool greatest = true;
          for (tvcat::Elem d = 0; d < n && greatest; ++d) {
            if (q.leq(d, w) && q.leq(d, q.tensor(u, v))) greatest = q.leq(d, c);
          }
          if (greatest) {
            glb = c;
            found = true;
          }
        }
        if (lub(q, below) != glb) return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
