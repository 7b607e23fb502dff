// SPDX-License-Identifier: Apache-2.0
#include "tvcat/vrel.hpp"

#include <cmath>

#include "tvcat/error.hpp"

namespace tvcat {
namespace {

void same_quantale(const VRel& r, const VRel& s) {
  if (!(r.quantale() == s.quantale())) throw ArgumentError("V-relations over different quantales");
}

}  // namespace

VRel::VRel(QuantalePtr q, std::size_t rows, std::size_t cols)
    : q_(std::move(q)), rows_(rows), cols_(cols), e_(rows * cols, q_->bottom()) {}

VRel::VRel(QuantalePtr q, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : q_(std::move(q)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_) throw ArgumentError("V-relation entry count does not match its carriers");
  for (Elem v : e_) {
    if (v >= q_->size()) throw ArgumentError("V-relation entry is not a quantale element");
  }
}

VRel compose(const VRel& s, const VRel& r) {
  same_quantale(r, s);
  if (r.cols() != s.rows()) throw ArgumentError("compose: carrier mismatch");
  const auto& q = r.quantale();
  VRel out(r.quantale_ptr(), r.rows(), s.cols());
  const Elem bot = q.bottom();
  for (std::size_t x = 0; x < r.rows(); ++x) {
    for (std::size_t y = 0; y < r.cols(); ++y) {
      const Elem rxy = r(x, y);
      if (rxy == bot) continue;
      for (std::size_t z = 0; z < s.cols(); ++z) out.raise(x, z, q.tensor(rxy, s(y, z)));
    }
  }
  return out;
}

VRel transpose(const VRel& r) {
  VRel out(r.quantale_ptr(), r.cols(), r.rows());
  for (std::size_t x = 0; x < r.rows(); ++x) {
    for (std::size_t y = 0; y < r.cols(); ++y) out.set(y, x, r(x, y));
  }
  return out;
}

VRel owedge(const VRel& r, const VRel& s) {
  same_quantale(r, s);
  const auto& q = r.quantale();
  VRel out(r.quantale_ptr(), r.rows() * s.rows(), r.cols() * s.cols());
  for (std::size_t x = 0; x < r.rows(); ++x) {
    for (std::size_t y = 0; y < s.rows(); ++y) {
      for (std::size_t x2 = 0; x2 < r.cols(); ++x2) {
        for (std::size_t y2 = 0; y2 < s.cols(); ++y2) {
          out.set(x * s.rows() + y, x2 * s.cols() + y2, q.meet(r(x, x2), s(y, y2)));
        }
      }
    }
  }
  return out;
}

VRel tensor_scalar(const VRel& r, Elem u) {
  const auto& q = r.quantale();
  std::vector<Elem> e(r.entries().begin(), r.entries().end());
  for (auto& v : e) v = q.tensor(v, u);
  return VRel(r.quantale_ptr(), r.rows(), r.cols(), std::move(e));
}

bool leq(const VRel& r, const VRel& s) {
  same_quantale(r, s);
  if (r.rows() != s.rows() || r.cols() != s.cols()) throw ArgumentError("leq: shape mismatch");
  const auto& q = r.quantale();
  for (std::size_t i = 0; i < r.entries().size(); ++i) {
    if (!q.leq(r.entries()[i], s.entries()[i])) return false;
  }
  return true;
}

namespace {
template <class Op>
VRel pointwise(const VRel& r, const VRel& s, Op op) {
  same_quantale(r, s);
  if (r.rows() != s.rows() || r.cols() != s.cols()) throw ArgumentError("pointwise: shape mismatch");
  std::vector<Elem> e(r.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = op(r.entries()[i], s.entries()[i]);
  return VRel(r.quantale_ptr(), r.rows(), r.cols(), std::move(e));
}
}  // namespace

VRel meet(const VRel& r, const VRel& s) {
  const auto& q = r.quantale();
  return pointwise(r, s, [&](Elem a, Elem b) { return q.meet(a, b); });
}

VRel join(const VRel& r, const VRel& s) {
  const auto& q = r.quantale();
  return pointwise(r, s, [&](Elem a, Elem b) { return q.join(a, b); });
}

VRel id_rel(QuantalePtr q, std::size_t n) {
  VRel out(q, n, n);
  for (std::size_t x = 0; x < n; ++x) out.set(x, x, q->unit());
  return out;
}

VRel from_function(QuantalePtr q, std::span<const Index> f, std::size_t codomain) {
  VRel out(q, f.size(), codomain);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= codomain) throw ArgumentError("from_function: value outside codomain");
    out.set(x, f[x], q->unit());
  }
  return out;
}

std::vector<VRel> all_relations(const QuantalePtr& q, std::size_t rows, std::size_t cols,
                                std::uint64_t guard) {
  const auto cells = rows * cols;
  const double count = std::pow(static_cast<double>(q->size()), static_cast<double>(cells));
  require_guard(count > 1e18 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(count), guard,
                "relation enumeration");
  std::vector<VRel> out;
  std::vector<Elem> e(cells, 0);
  while (true) {
    out.emplace_back(q, rows, cols, e);
    std::size_t i = cells;
    while (true) {
      if (i == 0) return out;
      --i;
      if (++e[i] < q->size()) break;
      e[i] = 0;
    }
  }
}

}  // namespace tvcat
