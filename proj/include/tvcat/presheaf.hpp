// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "tvcat/category.hpp"
#include "tvcat/exponential.hpp"

namespace tvcat {

/// PX: the functors X^op (x) E -> (V, hom_xi), i.e. maps psi : TX -> V with
/// a^op(e(x), y) (x) psi(x) <= psi(y), ordered lexicographically by value
/// table. The structure is the largest one making evaluation
/// X^op (x) PX -> V a functor:
///   p(P, phi) = meet over q in T(TX x PX) with Tpi_2 q = P and y in TX of
///               hom(a^op(Tpi_1 q, y) (x) xi(T ev q), phi(y)).
struct PresheafCategory {
  TVStructure px;
  std::vector<std::vector<Elem>> psi;  // value tables over TX
  std::uint64_t nodes = 0;

  /// Position of a value table in the carrier, or -1.
  std::int64_t find(const std::vector<Elem>& table) const;
};

PresheafCategory build_presheaf_category(const TVStructure& s, std::uint64_t guard);

/// x |-> a(-, x) as indices into PX. Throws ArgumentError when some a(-, x)
/// is missing from the carrier.
std::vector<Index> yoneda(const TVStructure& s, const PresheafCategory& p);
/// y lands in PX and is fully faithful.
CheckReport check_yoneda(const TVStructure& s, const PresheafCategory& p);

/// Least map Sup : PX -> X (lexicographic on PX) that is a functor with
/// Sup . y ~= 1. Requires a separated input.
std::optional<std::vector<Index>> find_sup(const TVStructure& s, const PresheafCategory& p, std::uint64_t guard);

struct Injective {
  PresheafCategory p;
  std::vector<Index> y;
  std::vector<Index> sup;
};
std::optional<Injective> injective_structure(const TVStructure& s, std::uint64_t guard);
/// Passes iff a Sup exists; also checks the adjunction Sup -| y.
CheckReport certify_injective(const TVStructure& s, std::uint64_t guard);

/// x (+) u = Sup(a(-, x) (x) u).
Index oplus(const TVStructure& s, const Injective& inj, std::size_t x, Elem u);
/// Calculus items (1)-(5) for (+) over every tuple; (1) as an equality.
CheckReport check_calculus(const TVStructure& s, std::uint64_t guard);

/// Under a passing assumptions bundle, injective implies exponentiable.
CheckReport check_thm_injective_exponentiable(const TVStructure& s, std::uint64_t seed, std::uint64_t guard);

/// P(f)(psi)(y) = join_x psi(x) (x) b^op(Tf(x), y), the action of P on a
/// functor f : X -> Y.
std::vector<Index> presheaf_map(const TVStructure& x, const PresheafCategory& px, const TVStructure& y,
                                const PresheafCategory& py, std::span<const Index> f);

/// <<X,Y>>: the members of <PX,PY> sending representables to representables,
/// with the initial structure along the inclusion.
struct WeakExponential {
  PresheafCategory px, py;
  std::vector<Index> yx, yy;
  ExponentialGraph full;
  TVStructure w;
  std::vector<Index> incl;  // w -> full.z
  std::vector<Index> wev;   // (phi, x) at phi * |X| + x

  Index eval(std::size_t phi, std::size_t x) const { return wev[phi * yx.size() + x]; }
};
WeakExponential weak_exponential(const TVStructure& x, const TVStructure& y, std::uint64_t guard);

struct WeakFactorization {
  std::vector<Index> f_tilde;  // Z -> <<X,Y>>
  std::vector<Index> f_prime;  // Z x PX -> PY at z * |PX| + psi
  CheckReport report{"weak_factorize"};
};
/// Factors f : Z x X -> Y (table at z * |X| + x) through the weak evaluation.
/// Identity monad: the colimit formula for f'. Otherwise an exhaustive search
/// for a functor extension; NoExtensionFound is reported as a failure.
WeakFactorization weak_factorize(const WeakExponential& w, const TVStructure& z, const TVStructure& x,
                                 const TVStructure& y, std::span<const Index> f, std::uint64_t guard);

/// The single-f part of the general construction: reflect, factor Rf, form
/// Z_f with the final structure and check h_f and f_hat.
CheckReport weak_factorize_general(const TVStructure& z, const TVStructure& x, const TVStructure& y,
                                   std::span<const Index> f, std::uint64_t guard);

}  // namespace tvcat
