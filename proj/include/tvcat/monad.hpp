// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tvcat/quantale.hpp"
#include "tvcat/report.hpp"
#include "tvcat/vrel.hpp"

namespace tvcat {

/// A finite monoid given by its multiplication table.
struct Monoid {
  std::vector<std::string> labels;
  std::vector<Index> table;  // row-major, labels.size()^2
  Index unit = 0;

  std::size_t size() const { return labels.size(); }
  Index mul(Index a, Index b) const { return table[a * size() + b]; }
};

/// Z_n under addition, labels "0".."n-1".
Monoid cyclic_group(std::size_t n);
/// Validates closure, unit and associativity; throws FormatError.
void validate_monoid(const Monoid& h);

enum class MonadKind { Identity, FiniteUltrafilter, Labelled, Word };

/// A T-element over an n-element carrier, in the kind's natural layout:
/// Identity {x}; Labelled {x, h}; Word {x1, ..., xk}.
using TElem = std::vector<Index>;

/// Sentinel in multiplication tables for products that leave the word-length
/// bound.
inline constexpr std::int64_t kOutOfBound = -1;

/// A finite Set-monad with enumerable action on finite carriers. Elements of
/// TX are indexed densely:
///  - Identity: x.
///  - Labelled: x * |H| + h.
///  - Word: by length, then lexicographically; index 0 is the empty word.
/// Ultrafilters on a finite set are principal, so FiniteUltrafilter behaves
/// exactly as Identity everywhere; only its name differs.
class Monad {
 public:
  static Monad identity();
  static Monad finite_ultrafilter();
  static Monad labelled(Monoid h);
  static Monad word(int max_len);

  MonadKind kind() const { return kind_; }
  std::string name() const;
  /// Identity-like: TX = X, e and m are identities.
  bool trivial() const { return kind_ == MonadKind::Identity || kind_ == MonadKind::FiniteUltrafilter; }
  bool bounded() const { return kind_ == MonadKind::Word; }
  int max_len() const { return max_len_; }
  const Monoid& monoid() const { return monoid_; }

  /// |TX| for |X| = n. Throws GuardError if it does not fit in 32 bits.
  std::size_t size(std::size_t n) const;
  TElem decode(std::size_t n, std::size_t idx) const;
  std::size_t encode(std::size_t n, const TElem& e) const;

  /// Applies f to every carrier position of e (letters, or the point of a
  /// labelled pair).
  TElem map_elem(const TElem& e, const std::function<Index(Index)>& f) const;
  /// The carrier positions of e, in order.
  std::vector<Index> points(const TElem& e) const;

  /// Tf as an index table TX -> TY.
  std::vector<Index> fmap(std::span<const Index> f, std::size_t n, std::size_t m) const;
  /// e_X as an index table X -> TX.
  std::vector<Index> unit(std::size_t n) const;
  /// m_X as an index table TTX -> TX; kOutOfBound where undefined.
  std::vector<std::int64_t> mult(std::size_t n) const;
  /// m_X on one element of TTX given as a T-element over TX.
  std::int64_t mult_elem(std::size_t n, const TElem& outer) const;

  /// The structure map xi : TV -> V of the topological theory.
  Elem xi(const Quantale& q, const TElem& v) const;

  /// Human-readable rendering, e.g. "(a,b)", "(x,h1)", "x".
  std::string format(const TElem& e, const std::function<std::string(Index)>& label) const;

  /// Tpi_X and Tpi_Y for an element of T(X x Y), with X x Y encoded row-major.
  std::pair<TElem, TElem> can(const TElem& w, std::size_t ny) const;

 private:
  explicit Monad(MonadKind k) : kind_(k) {}
  MonadKind kind_;
  int max_len_ = 0;
  Monoid monoid_;
};

using MonadPtr = std::shared_ptr<const Monad>;

/// Parses "identity", "ultrafilter", "word:L", "labelled:zN".
MonadPtr monad_from_spec(const std::string& spec);

/// Monad laws on the in-bound fragment over an n-element carrier.
CheckReport check_monad_laws(const Monad& t, std::size_t n);

/// Weak-pullback preservation on every pullback square of maps between
/// carriers of size <= max_carrier, and on the m-naturality squares.
CheckReport check_bc_samples(const Monad& t, std::size_t max_carrier);

}  // namespace tvcat
