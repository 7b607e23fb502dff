// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tvcat/report.hpp"

namespace tvcat {

/// Index of a quantale element. All quantale data is discrete and exact.
using Elem = std::uint8_t;

/// A finite commutative unital quantale given by its order and tensor tables.
///
/// The constructor only validates table shapes, so that law violations can be
/// reported by check_quantale() with a witness instead of being rejected.
/// Joins, meets, residuation and Heyting implication are precomputed when the
/// order is a lattice.
class Quantale {
 public:
  static constexpr std::size_t kMaxElements = 64;

  Quantale(std::string name, std::vector<std::string> labels, std::vector<std::uint8_t> leq,
           std::vector<Elem> tensor, Elem unit);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem u) const { return labels_.at(u); }
  std::optional<Elem> find(std::string_view label) const;
  /// Throws FormatError for unknown labels.
  Elem index_of(std::string_view label) const;

  bool leq(Elem u, Elem v) const { return leq_[u * size() + v] != 0; }
  Elem tensor(Elem u, Elem v) const { return tensor_[u * size() + v]; }
  Elem unit() const { return unit_; }

  bool is_lattice() const { return lattice_; }
  Elem bottom() const;
  Elem top() const;
  Elem join(Elem u, Elem v) const { return join_[u * size() + v]; }
  Elem meet(Elem u, Elem v) const { return meet_[u * size() + v]; }
  /// hom(u,w) = join of all v with u (x) v <= w.
  Elem hom(Elem u, Elem w) const { return hom_[u * size() + w]; }
  /// u -> w = join of all v with u /\ v <= w.
  Elem heyting(Elem u, Elem w) const { return heyting_[u * size() + w]; }

  template <class Range>
  Elem join_all(const Range& r) const {
    Elem acc = bottom();
    for (Elem v : r) acc = join(acc, v);
    return acc;
  }
  template <class Range>
  Elem meet_all(const Range& r) const {
    Elem acc = top();
    for (Elem v : r) acc = meet(acc, v);
    return acc;
  }

  /// True when the tensor is the binary meet.
  bool is_frame() const;

  std::span<const std::uint8_t> leq_table() const { return leq_; }
  std::span<const Elem> tensor_table() const { return tensor_; }

  bool operator==(const Quantale& o) const;

 private:
  void derive();

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> tensor_;
  Elem unit_;
  bool lattice_ = false;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<Elem> join_, meet_, hom_, heyting_;
};

using QuantalePtr = std::shared_ptr<const Quantale>;

/// ({0,1}, <=, and, 1).
QuantalePtr two();
/// {0,1,...,n-2,inf} ordered by >= with truncated addition; finite analogue of
/// Lawvere's half-line.
QuantalePtr chain_trunc_add(std::size_t n);
/// {0, 1/(n-1), ..., 1} with u (x) v = max(0, u+v-1).
QuantalePtr lukasiewicz(std::size_t n);
/// n-chain with (x) = min.
QuantalePtr godel_chain(std::size_t n);
/// Subsets of a k-element set, (x) = intersection.
QuantalePtr powerset_frame(std::size_t k);

/// Resolves "two", "luk3", "godel4", "trunc5", "powerset2" (and long forms
/// "lukasiewicz3", "trunc_add5"). Returns nullptr for unknown names.
QuantalePtr builtin_quantale(std::string_view name);

/// Every quantale law in a fixed order (order, lattice, commutativity, unit,
/// associativity, join preservation, residuation, Heyting); the first
/// violation is reported.
CheckReport check_quantale(const Quantale& q);

inline Elem residuate(const Quantale& q, Elem u, Elem w) { return q.hom(u, w); }

/// w /\ (u (x) v) = join{u' (x) v' | u' <= u, v' <= v, u' (x) v' <= w}.
CheckReport check_condition_inj(const Quantale& q);

struct QuantaleHom {
  QuantalePtr source;
  QuantalePtr target;
  std::vector<Elem> map;
};

CheckReport check_hom(const QuantaleHom& h);
bool is_surjective(const QuantaleHom& h);

/// Surjective homomorphisms carry the injectivity condition from source to
/// target. Passes vacuously when the hypotheses fail; fails only on a genuine
/// counterexample.
CheckReport check_lemma_surjective_transfer(const QuantaleHom& h);

/// All homomorphisms between two small quantales, by exhaustion.
std::vector<QuantaleHom> enumerate_homs(const QuantalePtr& source, const QuantalePtr& target,
                                        std::uint64_t guard);

/// Enumerates every commutative quantale structure on the n-chain and tests
/// the injectivity condition on each. Reports counts and the first violator.
CheckReport search_condition_inj_on_chains(std::size_t n, std::uint64_t guard);

}  // namespace tvcat
