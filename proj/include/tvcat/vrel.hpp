// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tvcat/quantale.hpp"

namespace tvcat {

/// Index into a finite carrier.
using Index = std::uint32_t;

/// A V-relation r : X -|-> Y stored as a dense |X| x |Y| matrix of quantale
/// elements. Product carriers X x Y are always encoded row-major:
/// (x, y) -> x * |Y| + y.
class VRel {
 public:
  /// Constantly bottom.
  VRel(QuantalePtr q, std::size_t rows, std::size_t cols);
  VRel(QuantalePtr q, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  const Quantale& quantale() const { return *q_; }
  const QuantalePtr& quantale_ptr() const { return q_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t x, std::size_t y) const { return e_[x * cols_ + y]; }
  void set(std::size_t x, std::size_t y, Elem v) { e_[x * cols_ + y] = v; }
  /// Joins v into the entry.
  void raise(std::size_t x, std::size_t y, Elem v) {
    auto& cell = e_[x * cols_ + y];
    cell = q_->join(cell, v);
  }
  std::span<const Elem> entries() const { return e_; }

  bool operator==(const VRel& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_ && *q_ == *o.q_;
  }

 private:
  QuantalePtr q_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> e_;
};

/// (s . r)(x,z) = join_y r(x,y) (x) s(y,z).
VRel compose(const VRel& s, const VRel& r);
VRel transpose(const VRel& r);
/// (r owedge s)((x,y),(x',y')) = r(x,x') /\ s(y,y').
VRel owedge(const VRel& r, const VRel& s);
/// Entrywise (x) u.
VRel tensor_scalar(const VRel& r, Elem u);
/// Entrywise order.
bool leq(const VRel& r, const VRel& s);
VRel meet(const VRel& r, const VRel& s);
VRel join(const VRel& r, const VRel& s);
/// k on the diagonal, bottom elsewhere.
VRel id_rel(QuantalePtr q, std::size_t n);
/// Graph of f : X -> Y as a V-relation X -|-> Y.
VRel from_function(QuantalePtr q, std::span<const Index> f, std::size_t codomain);

/// Every V-relation of the given shape, in lexicographic entry order.
std::vector<VRel> all_relations(const QuantalePtr& q, std::size_t rows, std::size_t cols,
                                std::uint64_t guard);

}  // namespace tvcat
