// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tvcat/report.hpp"
#include "tvcat/theory.hpp"
#include "tvcat/vrel.hpp"

namespace tvcat {

using TheoryPtr = std::shared_ptr<const Theory>;

/// A (T,V)-graph (X, a : TX -|-> X). For the word monad only the in-bound
/// fragment of TX exists, and every report derived from the structure
/// carries the bound.
class TVStructure {
 public:
  TVStructure(TheoryPtr th, std::vector<std::string> carrier, VRel a);

  const Theory& theory() const { return *th_; }
  const TheoryPtr& theory_ptr() const { return th_; }
  const Monad& monad() const { return th_->monad(); }
  const Quantale& quantale() const { return th_->quantale(); }

  std::size_t size() const { return carrier_.size(); }
  std::size_t tsize() const { return a_.rows(); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::string& label(std::size_t x) const { return carrier_.at(x); }
  const VRel& a() const { return a_; }
  Elem operator()(std::size_t tx, std::size_t x) const { return a_(tx, x); }
  /// a0(x, y) = a(e_X(x), y).
  Elem a0(std::size_t x, std::size_t y) const { return a_(e_[x], y); }
  const std::vector<Index>& unit() const { return e_; }

  /// Rendering of an element of TX, e.g. "(x,y)".
  std::string show_t(std::size_t idx) const;
  /// Rendering of an element of TTX.
  std::string show_tt(std::size_t idx) const;

 private:
  TheoryPtr th_;
  std::vector<std::string> carrier_;
  VRel a_;
  std::vector<Index> e_;
};

/// a(x, y) = k iff x = e(y).
TVStructure discrete(const TheoryPtr& th, std::vector<std::string> carrier);
/// Constantly top.
TVStructure indiscrete(const TheoryPtr& th, std::vector<std::string> carrier);
/// The one-point space with a = e_1°, the generator E.
TVStructure unit_space(const TheoryPtr& th);
/// (V, hom_xi): a(v, u) = hom(xi(v), u).
TVStructure vhom_xi(const TheoryPtr& th);
/// The quantale q as a multi-ordered set: (W_L, 2)-structure on q's elements
/// with a((v1..vn), v) = 1 iff v1 (x) ... (x) vn <= v.
TVStructure multiord_of_quantale(const QuantalePtr& q, int max_len);
/// Random sparse graph closed to a category.
TVStructure random_category(const TheoryPtr& th, std::size_t n, Rng& rng);

/// (R) and (T) as two parts.
CheckReport check_category(const TVStructure& s);
bool is_category(const TVStructure& s);

/// a(x, x) <= b(Tf(x), f(x)) for every x in TX, x in X.
CheckReport check_functor(const TVStructure& x, const TVStructure& y, std::span<const Index> f);
CheckReport check_fully_faithful(const TVStructure& x, const TVStructure& y, std::span<const Index> f);
/// f <= g iff k <= b(e(f(x)), g(x)) for all x.
bool functor_leq(const TVStructure& y, std::span<const Index> f, std::span<const Index> g);
bool functor_equiv(const TVStructure& y, std::span<const Index> f, std::span<const Index> g);

struct LiftSource {
  std::vector<Index> map;
  const TVStructure* target;
};
struct LiftSink {
  const TVStructure* source;
  std::vector<Index> map;
};

/// a(x, x) = meet_i b_i(Tf_i(x), f_i(x)); top for the empty family.
TVStructure initial_lift(const TheoryPtr& th, std::vector<std::string> carrier,
                         const std::vector<LiftSource>& family);
/// b(y, y) = join{a_i(x, x) | Tf_i(x) = y, f_i(x) = y}, joined with e°. A graph.
TVStructure final_lift(const TheoryPtr& th, std::vector<std::string> carrier, const std::vector<LiftSink>& sink);
/// Least category structure above the graph.
TVStructure graph_to_category(const TVStructure& s);

/// Carrier X x Y encoded x * |Y| + y.
TVStructure product(const TVStructure& x, const TVStructure& y);
TVStructure coproduct(const TVStructure& x, const TVStructure& y);
/// Final structure along q : X -> classes, closed to a category.
TVStructure quotient(const TVStructure& s, const std::vector<Index>& q, std::vector<std::string> labels);
/// c(w, (x, y)) = a(Tpi_X w, x) (x) b(Tpi_Y w, y). A graph in general.
TVStructure tensor(const TVStructure& x, const TVStructure& y);

bool equivalent(const TVStructure& s, std::size_t x, std::size_t y);
bool separated(const TVStructure& s);

struct Reflection {
  TVStructure rx;
  std::vector<Index> eta;
  bool empty_fiber = false;  // some element of T(X/~) has an empty fibre
};
/// X/~ with canonical class labels (least index) and the induced structure.
Reflection reflect_R(const TVStructure& s);
/// eta initial and final, R idempotent.
CheckReport check_reflection(const TVStructure& s);
CheckReport check_R_preserves_products(const TVStructure& x, const TVStructure& y);

/// X^op = (TX, m . (Ta)° . m).
TVStructure dual(const TVStructure& s);

/// A V-category with an algebra map alpha : TX -> X (kOutOfBound where the
/// bound cuts it).
struct EMAlgebra {
  TheoryPtr theory;
  std::vector<std::string> carrier;
  VRel a0;
  std::vector<std::int64_t> alpha;
};
/// M(X, a) = (TX, Ta . m°, m).
EMAlgebra functor_M(const TVStructure& s);
/// K(X, a0, alpha) = (X, a0 . alpha).
TVStructure functor_K(const EMAlgebra& alg);
CheckReport check_em_algebra(const EMAlgebra& alg);

struct Representation {
  std::vector<Index> alpha;
  CheckReport pseudo_algebra{"pseudo_algebra"};
  std::uint64_t nodes = 0;
};
/// Least alpha : TX -> X (lexicographic on TX) that is a functor from
/// K(M(X)) with alpha . e ~= 1. Refuses with GuardError when |X|^|TX| is
/// above the guard.
std::optional<Representation> find_representation(const TVStructure& s, std::uint64_t guard);

}  // namespace tvcat
