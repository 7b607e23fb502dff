// SPDX-License-Identifier: Apache-2.0
#include "tvcat/quantale.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "tvcat/error.hpp"

namespace tvcat {
namespace {

std::string fraction_label(std::size_t i, std::size_t denom) {
  if (i == 0) return "0";
  if (i == denom) return "1";
  const auto g = std::gcd(i, denom);
  return std::to_string(i / g) + "/" + std::to_string(denom / g);
}

WitnessEntry w_elem(const Quantale& q, const char* name, Elem u) {
  return {name, q.label(u), u};
}

}  // namespace

Quantale::Quantale(std::string name, std::vector<std::string> labels, std::vector<std::uint8_t> leq,
                   std::vector<Elem> tensor, Elem unit)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      leq_(std::move(leq)),
      tensor_(std::move(tensor)),
      unit_(unit) {
  const auto n = labels_.size();
  if (n == 0) throw FormatError("quantale " + name_ + ": no elements");
  if (n > kMaxElements) throw FormatError("quantale " + name_ + ": more than 64 elements");
  if (leq_.size() != n * n) throw FormatError("quantale " + name_ + ": order table is not n x n");
  if (tensor_.size() != n * n) throw FormatError("quantale " + name_ + ": tensor table is not n x n");
  for (Elem t : tensor_) {
    if (t >= n) throw FormatError("quantale " + name_ + ": tensor entry out of range");
  }
  if (unit_ >= n) throw FormatError("quantale " + name_ + ": unit out of range");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (labels_[i] == labels_[j]) throw FormatError("quantale " + name_ + ": duplicate label " + labels_[i]);
    }
  }
  derive();
}

std::optional<Elem> Quantale::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

Elem Quantale::index_of(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw FormatError("quantale " + name_ + ": unknown element '" + std::string(label) + "'");
}

Elem Quantale::bottom() const {
  if (!lattice_) throw ArgumentError("quantale " + name_ + " is not a lattice");
  return bottom_;
}

Elem Quantale::top() const {
  if (!lattice_) throw ArgumentError("quantale " + name_ + " is not a lattice");
  return top_;
}

bool Quantale::is_frame() const {
  return lattice_ && tensor_ == meet_;
}

bool Quantale::operator==(const Quantale& o) const {
  return labels_ == o.labels_ && leq_ == o.leq_ && tensor_ == o.tensor_ && unit_ == o.unit_;
}

void Quantale::derive() {
  const auto n = size();
  lattice_ = false;
  for (std::size_t u = 0; u < n; ++u) {
    if (!leq(u, u)) return;
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && leq(u, v) && leq(v, u)) return;
      for (std::size_t w = 0; w < n; ++w) {
        if (leq(u, v) && leq(v, w) && !leq(u, w)) return;
      }
    }
  }
  // Least upper / greatest lower bounds of pairs, by search over the order.
  auto bound = [&](Elem u, Elem v, bool upper) -> std::optional<Elem> {
    std::optional<Elem> best;
    for (std::size_t c = 0; c < n; ++c) {
      const bool is_bound = upper ? (leq(u, c) && leq(v, c)) : (leq(c, u) && leq(c, v));
      if (!is_bound) continue;
      if (!best || (upper ? leq(c, *best) : leq(*best, c))) best = static_cast<Elem>(c);
    }
    if (!best) return std::nullopt;
    for (std::size_t c = 0; c < n; ++c) {
      const bool is_bound = upper ? (leq(u, c) && leq(v, c)) : (leq(c, u) && leq(c, v));
      if (is_bound && !(upper ? leq(*best, c) : leq(c, *best))) return std::nullopt;
    }
    return best;
  };
  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      auto j = bound(u, v, true);
      auto m = bound(u, v, false);
      if (!j || !m) {
        join_.clear();
        meet_.clear();
        return;
      }
      join_[u * n + v] = *j;
      meet_[u * n + v] = *m;
    }
  }
  bottom_ = 0;
  top_ = 0;
  for (std::size_t u = 1; u < n; ++u) {
    bottom_ = meet_[bottom_ * n + u];
    top_ = join_[top_ * n + u];
  }
  lattice_ = true;
  hom_.assign(n * n, bottom_);
  heyting_.assign(n * n, bottom_);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = 0; w < n; ++w) {
      Elem h = bottom_, y = bottom_;
      for (std::size_t v = 0; v < n; ++v) {
        if (leq(tensor(u, v), w)) h = join(h, v);
        if (leq(meet(u, v), w)) y = join(y, v);
      }
      hom_[u * n + w] = h;
      heyting_[u * n + w] = y;
    }
  }
}

QuantalePtr two() {
  return std::make_shared<Quantale>("two", std::vector<std::string>{"0", "1"},
                                    std::vector<std::uint8_t>{1, 1, 0, 1}, std::vector<Elem>{0, 0, 0, 1}, 1);
}

QuantalePtr chain_trunc_add(std::size_t n) {
  if (n < 2) throw ArgumentError("chain_trunc_add needs n >= 2");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i + 1 < n; ++i) labels.push_back(std::to_string(i));
  labels.push_back("inf");
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Elem> tensor(n * n);
  const std::size_t inf = n - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      leq[i * n + j] = i >= j;  // the order is >= on distances
      const std::size_t s = (i == inf || j == inf) ? inf : i + j;
      tensor[i * n + j] = static_cast<Elem>(std::min(s, inf));
    }
  }
  return std::make_shared<Quantale>("trunc" + std::to_string(n), std::move(labels), std::move(leq),
                                    std::move(tensor), 0);
}

QuantalePtr lukasiewicz(std::size_t n) {
  if (n < 2) throw ArgumentError("lukasiewicz needs n >= 2");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(fraction_label(i, n - 1));
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Elem> tensor(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      leq[i * n + j] = i <= j;
      tensor[i * n + j] = static_cast<Elem>(i + j >= n - 1 ? i + j - (n - 1) : 0);
    }
  }
  return std::make_shared<Quantale>("luk" + std::to_string(n), std::move(labels), std::move(leq),
                                    std::move(tensor), static_cast<Elem>(n - 1));
}

QuantalePtr godel_chain(std::size_t n) {
  if (n < 2) throw ArgumentError("godel_chain needs n >= 2");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(fraction_label(i, n - 1));
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Elem> tensor(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      leq[i * n + j] = i <= j;
      tensor[i * n + j] = static_cast<Elem>(std::min(i, j));
    }
  }
  return std::make_shared<Quantale>("godel" + std::to_string(n), std::move(labels), std::move(leq),
                                    std::move(tensor), static_cast<Elem>(n - 1));
}

QuantalePtr powerset_frame(std::size_t k) {
  if (k < 1 || k > 5) throw ArgumentError("powerset_frame needs 1 <= k <= 5");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string s = "{";
    for (std::size_t b = 0; b < k; ++b) {
      if (mask & (std::size_t{1} << b)) {
        s += static_cast<char>('a' + b);
      }
    }
    labels.push_back(s + "}");
  }
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Elem> tensor(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      leq[i * n + j] = (i & j) == i;
      tensor[i * n + j] = static_cast<Elem>(i & j);
    }
  }
  return std::make_shared<Quantale>("powerset" + std::to_string(k), std::move(labels), std::move(leq),
                                    std::move(tensor), static_cast<Elem>(n - 1));
}

QuantalePtr builtin_quantale(std::string_view name) {
  if (name == "two" || name == "2") return two();
  const auto digits = name.find_first_of("0123456789");
  if (digits == std::string_view::npos || digits == 0) return nullptr;
  const auto stem = name.substr(0, digits);
  std::size_t n = 0;
  const auto tail = name.substr(digits);
  auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
  if (ec != std::errc{} || p != tail.data() + tail.size()) return nullptr;
  try {
    if (stem == "luk" || stem == "lukasiewicz") return lukasiewicz(n);
    if (stem == "godel") return godel_chain(n);
    if (stem == "trunc" || stem == "trunc_add") return chain_trunc_add(n);
    if (stem == "powerset") return powerset_frame(n);
  } catch (const ArgumentError&) {
    return nullptr;
  }
  return nullptr;
}

CheckReport check_quantale(const Quantale& q) {
  CheckReport r("quantale");
  const auto n = q.size();
  r.samples = n * n * n;
  for (Elem u = 0; u < n; ++u) {
    if (!q.leq(u, u)) {
      r.fail("order: reflexivity", {w_elem(q, "u", u)});
      return r;
    }
  }
  for (Elem u = 0; u < n; ++u) {
    for (Elem v = 0; v < n; ++v) {
      if (u != v && q.leq(u, v) && q.leq(v, u)) {
        r.fail("order: antisymmetry", {w_elem(q, "u", u), w_elem(q, "v", v)});
        return r;
      }
      for (Elem w = 0; w < n; ++w) {
        if (q.leq(u, v) && q.leq(v, w) && !q.leq(u, w)) {
          r.fail("order: transitivity", {w_elem(q, "u", u), w_elem(q, "v", v), w_elem(q, "w", w)});
          return r;
        }
      }
    }
  }
  if (!q.is_lattice()) {
    // Find a pair without a join or meet for the witness.
    for (Elem u = 0; u < n; ++u) {
      for (Elem v = 0; v < n; ++v) {
        std::vector<Elem> ub, lb;
        for (Elem c = 0; c < n; ++c) {
          if (q.leq(u, c) && q.leq(v, c)) ub.push_back(c);
          if (q.leq(c, u) && q.leq(c, v)) lb.push_back(c);
        }
        auto has_least = [&](const std::vector<Elem>& s, bool least) {
          return std::any_of(s.begin(), s.end(), [&](Elem c) {
            return std::all_of(s.begin(), s.end(), [&](Elem d) { return least ? q.leq(c, d) : q.leq(d, c); });
          });
        };
        if (!has_least(ub, true) || !has_least(lb, false)) {
          r.fail("lattice: missing join or meet", {w_elem(q, "u", u), w_elem(q, "v", v)});
          return r;
        }
      }
    }
    r.fail("lattice", {});
    return r;
  }
  for (Elem u = 0; u < n; ++u) {
    for (Elem v = 0; v < n; ++v) {
      if (q.tensor(u, v) != q.tensor(v, u)) {
        r.fail("commutativity", {w_elem(q, "u", u), w_elem(q, "v", v)});
        return r;
      }
    }
  }
  for (Elem u = 0; u < n; ++u) {
    if (q.tensor(q.unit(), u) != u) {
      r.fail("unit", {w_elem(q, "u", u)});
      return r;
    }
  }
  for (Elem u = 0; u < n; ++u) {
    for (Elem v = 0; v < n; ++v) {
      for (Elem w = 0; w < n; ++w) {
        if (q.tensor(q.tensor(u, v), w) != q.tensor(u, q.tensor(v, w))) {
          r.fail("associativity", {w_elem(q, "u", u), w_elem(q, "v", v), w_elem(q, "w", w)});
          return r;
        }
      }
    }
  }
  for (Elem u = 0; u < n; ++u) {
    if (q.tensor(u, q.bottom()) != q.bottom()) {
      r.fail("join preservation: empty join", {w_elem(q, "u", u)});
      return r;
    }
    for (Elem v = 0; v < n; ++v) {
      for (Elem w = 0; w < n; ++w) {
        if (q.tensor(u, q.join(v, w)) != q.join(q.tensor(u, v), q.tensor(u, w))) {
          r.fail("join preservation", {w_elem(q, "u", u), w_elem(q, "v", v), w_elem(q, "w", w)});
          return r;
        }
      }
    }
  }
  for (Elem u = 0; u < n; ++u) {
    for (Elem v = 0; v < n; ++v) {
      for (Elem w = 0; w < n; ++w) {
        if (q.leq(q.tensor(u, v), w) != q.leq(v, q.hom(u, w))) {
          r.fail("residuation", {w_elem(q, "u", u), w_elem(q, "v", v), w_elem(q, "w", w)});
          return r;
        }
        if (q.leq(q.meet(u, v), w) != q.leq(v, q.heyting(u, w))) {
          r.fail("heyting", {w_elem(q, "u", u), w_elem(q, "v", v), w_elem(q, "w", w)});
          return r;
        }
      }
    }
  }
  return r;
}

CheckReport check_condition_inj(const Quantale& q) {
  CheckReport r("condition_inj");
  const auto n = q.size();
  for (Elem u = 0; u < n; ++u) {
    for (Elem v = 0; v < n; ++v) {
      for (Elem w = 0; w < n; ++w) {
        ++r.samples;
        Elem rhs = q.bottom();
        for (Elem u2 = 0; u2 < n; ++u2) {
          if (!q.leq(u2, u)) continue;
          for (Elem v2 = 0; v2 < n; ++v2) {
            if (!q.leq(v2, v)) continue;
            const Elem t = q.tensor(u2, v2);
            if (q.leq(t, w)) rhs = q.join(rhs, t);
          }
        }
        if (rhs != q.meet(w, q.tensor(u, v))) {
          r.fail("w /\\ (u (x) v) = join{u'(x)v' <= w}", {w_elem(q, "u", u), w_elem(q, "v", v), w_elem(q, "w", w)});
          return r;
        }
      }
    }
  }
  return r;
}

CheckReport check_hom(const QuantaleHom& h) {
  CheckReport r("quantale_hom");
  const auto& s = *h.source;
  const auto& t = *h.target;
  if (h.map.size() != s.size()) throw FormatError("homomorphism table has wrong length");
  for (Elem x : h.map) {
    if (x >= t.size()) throw FormatError("homomorphism value out of range");
  }
  auto f = [&](Elem u) { return h.map[u]; };
  if (f(s.unit()) != t.unit()) {
    r.fail("unit", {w_elem(s, "k", s.unit())});
    return r;
  }
  if (f(s.bottom()) != t.bottom()) {
    r.fail("empty join", {w_elem(s, "bottom", s.bottom())});
    return r;
  }
  for (Elem u = 0; u < s.size(); ++u) {
    for (Elem v = 0; v < s.size(); ++v) {
      ++r.samples;
      if (f(s.tensor(u, v)) != t.tensor(f(u), f(v))) {
        r.fail("tensor", {w_elem(s, "u", u), w_elem(s, "v", v)});
        return r;
      }
      if (f(s.join(u, v)) != t.join(f(u), f(v))) {
        r.fail("binary join", {w_elem(s, "u", u), w_elem(s, "v", v)});
        return r;
      }
    }
  }
  return r;
}

bool is_surjective(const QuantaleHom& h) {
  std::vector<bool> hit(h.target->size(), false);
  for (Elem x : h.map) hit.at(x) = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

CheckReport check_lemma_surjective_transfer(const QuantaleHom& h) {
  CheckReport r("lemma_surjective_transfer");
  const auto hom = check_hom(h);
  const bool surj = is_surjective(h);
  r.details["homomorphism"] = hom.passed();
  r.details["surjective"] = surj;
  if (!hom.passed() || !surj) {
    r.details["vacuous"] = true;
    return r;
  }
  auto src = check_condition_inj(*h.source);
  auto dst = check_condition_inj(*h.target);
  r.details["source_condition"] = src.passed();
  r.details["target_condition"] = dst.passed();
  r.details["vacuous"] = !src.passed();
  r.samples = src.samples + dst.samples;
  if (src.passed() && dst.failed()) {
    r.fail("target violates the condition although the source satisfies it", dst.witness);
  }
  return r;
}

std::vector<QuantaleHom> enumerate_homs(const QuantalePtr& source, const QuantalePtr& target,
                                        std::uint64_t guard) {
  const auto n = source->size();
  const auto m = target->size();
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(m);
  require_guard(static_cast<std::uint64_t>(std::min(total, 1e18)), guard, "homomorphism enumeration");
  std::vector<QuantaleHom> out;
  std::vector<Elem> map(n, 0);
  while (true) {
    QuantaleHom h{source, target, map};
    if (check_hom(h).passed()) out.push_back(std::move(h));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++map[i] < m) break;
      map[i] = 0;
      if (i == 0) return out;
    }
  }
}

CheckReport search_condition_inj_on_chains(std::size_t n, std::uint64_t guard) {
  CheckReport r("search_condition_inj");
  if (n < 2 || n > 7) throw ArgumentError("chain size must be in [2,7]");
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = i <= j;
  }
  std::uint64_t structures = 0, frames = 0, violators = 0, nodes = 0;
  Json first_violator;
  // Cells (i,j) with i <= j in row-major order; the table is kept symmetric.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  }
  for (std::size_t unit = 0; unit < n; ++unit) {
    std::vector<int> t(n * n, -1);
    auto set = [&](std::size_t i, std::size_t j, int v) {
      t[i * n + j] = v;
      t[j * n + i] = v;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
      if (++nodes > guard) throw GuardError("chain quantale search exceeded guard");
      if (c == cells.size()) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t d = 0; d < n; ++d) {
              if (t[t[a * n + b] * n + d] != t[a * n + t[b * n + d]]) return;
            }
          }
        }
        std::vector<Elem> tensor(t.begin(), t.end());
        Quantale q("chain" + std::to_string(n), labels, leq, tensor, static_cast<Elem>(unit));
        ++structures;
        if (q.is_frame()) ++frames;
        if (check_condition_inj(q).failed()) {
          if (violators++ == 0) {
            Json tab = Json::array();
            for (std::size_t a = 0; a < n; ++a) {
              Json row = Json::array();
              for (std::size_t b = 0; b < n; ++b) row.push_back(labels[t[a * n + b]]);
              tab.push_back(row);
            }
            first_violator = Json{{"unit", labels[unit]}, {"tensor", tab}};
            r.fail("condition_inj", check_condition_inj(q).witness);
          }
        }
        return;
      }
      const auto [i, j] = cells[c];
      int lo = 0, hi = static_cast<int>(n) - 1;
      int fixed = -1;
      bool conflict = false;
      auto force = [&](int v) {
        if (fixed >= 0 && fixed != v) conflict = true;
        fixed = v;
      };
      if (i == 0) force(0);
      if (i == unit) force(static_cast<int>(j));
      if (j == unit) force(static_cast<int>(i));
      if (conflict) return;
      if (fixed >= 0) lo = hi = fixed;
      if (i > 0) lo = std::max(lo, t[(i - 1) * n + j]);
      if (j > 0 && t[i * n + (j - 1)] >= 0) lo = std::max(lo, t[i * n + (j - 1)]);
      for (int v = lo; v <= hi; ++v) {
        set(i, j, v);
        rec(c + 1);
      }
      set(i, j, -1);
    };
    rec(0);
  }
  r.samples = structures;
  r.details["chain_size"] = n;
  r.details["structures"] = structures;
  r.details["frames"] = frames;
  r.details["violators"] = violators;
  if (violators) r.details["first_violator"] = first_violator;
  return r;
}

}  // namespace tvcat
