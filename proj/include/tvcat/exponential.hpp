// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "tvcat/category.hpp"
#include "tvcat/error.hpp"

namespace tvcat {

/// <X,Y>: the admissible maps X -> Y with the largest graph structure making
/// evaluation a functor.
struct ExponentialGraph {
  TVStructure z;
  std::vector<std::vector<Index>> maps;  // element h of Z as a table X -> Y
  std::vector<Index> ev;                 // (h, x) at h * |X| + x
  std::size_t nx = 0;

  Index eval(std::size_t h, std::size_t x) const { return ev[h * nx + x]; }
  /// Index of a map in Z, or -1.
  std::int64_t find(const std::vector<Index>& h) const;
};

/// Raised by exponential_in_cats when b^a is not transitive.
class NotTransitive : public Error {
 public:
  NotTransitive(const std::string& what, CheckReport r) : Error(what), report(std::move(r)) {}
  CheckReport report;
};

/// b^a(p, h) = meet over q in T(Z x X) with Tpi_Z(q) = p and x in X of
/// a(Tpi_X q, x) -> b(T ev q, h(x)). Since /\ distributes over joins the
/// defining supremum is attained, so the meet of Heyting implications is it.
ExponentialGraph graph_exponential(const TVStructure& x, const TVStructure& y, std::uint64_t guard);

/// join_x (Ta(X,x) /\ u) (x) (a(x,x) /\ v) >= a(m(X),x) /\ (u (x) v) for all
/// in-bound X, x and u, v.
CheckReport check_exponentiability(const TVStructure& x);
/// a . m = a . Ta on the in-bound fragment; frames only.
CheckReport check_frame_criterion(const TVStructure& x);

/// graph_exponential followed by a category check; throws NotTransitive.
ExponentialGraph exponential_in_cats(const TVStructure& x, const TVStructure& y, std::uint64_t guard);

struct Curried {
  std::vector<Index> map;  // C -> Z
  CheckReport report{"curry"};
};
/// z |-> f(z, -) for f : C x X -> Y (table at c * |X| + x).
Curried curry(const TVStructure& c, const TVStructure& x, const TVStructure& y, std::span<const Index> f,
              const ExponentialGraph& exp);

/// For every test object C and every functor f : C x X -> Y: the curried
/// map exists, ev . (f_bar x 1) = f, and it is the only such functor.
CheckReport check_universal_property(const ExponentialGraph& exp, const TVStructure& x, const TVStructure& y,
                                     const std::vector<TVStructure>& tests, std::uint64_t guard);

/// Every map C -> D (as tables) with |D|^|C| <= guard.
std::vector<std::vector<Index>> all_maps(std::size_t n, std::size_t m, std::uint64_t guard);

}  // namespace tvcat
