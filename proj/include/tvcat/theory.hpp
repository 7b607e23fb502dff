// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tvcat/monad.hpp"
#include "tvcat/quantale.hpp"
#include "tvcat/report.hpp"
#include "tvcat/vrel.hpp"

namespace tvcat {

/// Deterministic generator used for every sampled quantifier. Values are
/// drawn with plain modular reduction so streams are identical across
/// standard libraries.
using Rng = std::mt19937_64;

/// A monad together with a quantale; xi lives on the monad. This is the
/// strict topological theory and its induced lax extension.
class Theory {
 public:
  Theory(MonadPtr t, QuantalePtr q);

  const Monad& monad() const { return *t_; }
  const MonadPtr& monad_ptr() const { return t_; }
  const Quantale& quantale() const { return *q_; }
  const QuantalePtr& quantale_ptr() const { return q_; }

  std::size_t tsize(std::size_t n) const { return t_->size(n); }
  Elem xi(const TElem& v) const { return t_->xi(*q_, v); }

  /// Tr(x, y) = join of xi(Tr(w)) over w in T(X x Y) with can(w) = (x, y),
  /// by direct enumeration of T(X x Y).
  VRel extend(const VRel& r) const;

  /// The "T-element;point" label used in witnesses.
  std::string show(std::size_t n, std::size_t idx, const std::vector<std::string>& labels) const;

 private:
  MonadPtr t_;
  QuantalePtr q_;
};

/// All relations of the shape when there are at most `exhaustive_limit`,
/// otherwise `samples` seeded random ones.
std::vector<VRel> relation_family(const QuantalePtr& q, std::size_t rows, std::size_t cols,
                                  std::uint64_t exhaustive_limit, std::size_t samples, Rng& rng);
VRel random_relation(const QuantalePtr& q, std::size_t rows, std::size_t cols, Rng& rng);

/// xi . e_V = 1 and xi . m_V = xi . T xi on the in-bound fragment.
CheckReport check_xi_algebra(const Theory& th);

/// Lax functoriality, Tid >= id, T(r°) = (Tr)°, and the op-lax naturality of
/// e and m, over every relation pair on carriers of size <= max_carrier
/// (sampled when the family is too large).
CheckReport check_extension_laws(const Theory& th, std::size_t max_carrier, std::uint64_t seed,
                                 std::size_t samples = 64);

/// can . T(r owedge s) versus (Tr owedge Ts) . can for r : X -|-> X' and
/// s : Y -|-> Y'. The <= direction always holds; a failure of >= is reported
/// with its witness.
CheckReport check_infi(const Theory& th, const VRel& r, const VRel& s);
/// check_infi over every (or sampled) pair on carriers of size <= max_carrier.
CheckReport check_infi_all(const Theory& th, std::size_t max_carrier, std::uint64_t seed,
                           std::size_t samples = 64);

/// xi . T(meet) <= meet . <xi . Tpi1, xi . Tpi2>; equality is reported in the
/// details ("equality") without affecting the status.
CheckReport check_xi_meet(const Theory& th);

/// Two parts: u . ! >= xi . Tu, and u . ! = xi . Tu (forced when T1 = 1).
CheckReport check_xi_point(const Theory& th, Elem u);

/// T(r (x) u) = Tr (x) u entrywise.
CheckReport check_assumption3(const Theory& th, const VRel& r, Elem u);

/// The tensor V (x) V -> V is a functor for hom_xi, and (-,u) is a functor
/// for every u (via check_xi_point's inequality).
CheckReport check_assumption4(const Theory& th);

/// Per-condition verdicts (1) infi, (2) condition_inj, (3) tensor, (4) functors.
CheckReport check_assumptions_bundle(const Theory& th, std::uint64_t seed, std::size_t samples = 32);

}  // namespace tvcat
