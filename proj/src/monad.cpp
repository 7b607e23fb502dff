// SPDX-License-Identifier: Apache-2.0
#include "tvcat/monad.hpp"

#include <limits>
#include <set>

#include "tvcat/error.hpp"

namespace tvcat {
namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

// Number of words of length <= L over an n-letter alphabet, saturating.
std::uint64_t word_count(std::uint64_t n, int L) {
  std::uint64_t total = 0, block = 1;
  for (int k = 0; k <= L; ++k) {
    total = sat_add(total, block);
    block = sat_mul(block, n);
  }
  return total;
}

}  // namespace

Monoid cyclic_group(std::size_t n) {
  if (n == 0) throw ArgumentError("cyclic group of order 0");
  Monoid h;
  for (std::size_t i = 0; i < n; ++i) h.labels.push_back(std::to_string(i));
  h.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) h.table[a * n + b] = static_cast<Index>((a + b) % n);
  }
  return h;
}

void validate_monoid(const Monoid& h) {
  const auto n = h.size();
  if (n == 0) throw FormatError("monoid has no elements");
  if (h.table.size() != n * n) throw FormatError("monoid table has wrong size");
  if (h.unit >= n) throw FormatError("monoid unit out of range");
  for (Index v : h.table) {
    if (v >= n) throw FormatError("monoid table entry out of range");
  }
  for (Index a = 0; a < n; ++a) {
    if (h.mul(h.unit, a) != a || h.mul(a, h.unit) != a) {
      throw FormatError("monoid unit law fails at " + h.labels[a]);
    }
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (h.mul(h.mul(a, b), c) != h.mul(a, h.mul(b, c))) {
          throw FormatError("monoid is not associative at (" + h.labels[a] + "," + h.labels[b] + "," +
                            h.labels[c] + ")");
        }
      }
    }
  }
}

Monad Monad::identity() { return Monad(MonadKind::Identity); }
Monad Monad::finite_ultrafilter() { return Monad(MonadKind::FiniteUltrafilter); }

Monad Monad::labelled(Monoid h) {
  validate_monoid(h);
  Monad t(MonadKind::Labelled);
  t.monoid_ = std::move(h);
  return t;
}

Monad Monad::word(int max_len) {
  if (max_len < 0 || max_len > 8) throw ArgumentError("word length bound must be in 0..8");
  Monad t(MonadKind::Word);
  t.max_len_ = max_len;
  return t;
}

std::string Monad::name() const {
  switch (kind_) {
    case MonadKind::Identity: return "identity";
    case MonadKind::FiniteUltrafilter: return "ultrafilter";
    case MonadKind::Labelled: return "labelled:" + std::to_string(monoid_.size());
    case MonadKind::Word: return "word:" + std::to_string(max_len_);
  }
  return "?";
}

std::size_t Monad::size(std::size_t n) const {
  std::uint64_t s = n;
  if (kind_ == MonadKind::Labelled) s = sat_mul(n, monoid_.size());
  if (kind_ == MonadKind::Word) s = word_count(n, max_len_);
  if (s > std::numeric_limits<Index>::max()) throw GuardError("T-carrier too large to index");
  return static_cast<std::size_t>(s);
}

TElem Monad::decode(std::size_t n, std::size_t idx) const {
  switch (kind_) {
    case MonadKind::Identity:
    case MonadKind::FiniteUltrafilter:
      return {static_cast<Index>(idx)};
    case MonadKind::Labelled: {
      const auto h = monoid_.size();
      return {static_cast<Index>(idx / h), static_cast<Index>(idx % h)};
    }
    case MonadKind::Word: {
      std::size_t len = 0, block = 1;
      while (idx >= block) {
        idx -= block;
        block *= n;
        ++len;
      }
      TElem w(len);
      for (std::size_t i = len; i-- > 0;) {
        w[i] = static_cast<Index>(idx % n);
        idx /= n;
      }
      return w;
    }
  }
  return {};
}

std::size_t Monad::encode(std::size_t n, const TElem& e) const {
  switch (kind_) {
    case MonadKind::Identity:
    case MonadKind::FiniteUltrafilter:
      return e.at(0);
    case MonadKind::Labelled:
      return e.at(0) * monoid_.size() + e.at(1);
    case MonadKind::Word: {
      if (static_cast<int>(e.size()) > max_len_) throw ArgumentError("word longer than the bound");
      std::size_t offset = 0, block = 1;
      for (std::size_t k = 0; k < e.size(); ++k) {
        offset += block;
        block *= n;
      }
      std::size_t v = 0;
      for (Index x : e) v = v * n + x;
      return offset + v;
    }
  }
  return 0;
}

TElem Monad::map_elem(const TElem& e, const std::function<Index(Index)>& f) const {
  TElem out = e;
  if (kind_ == MonadKind::Labelled) {
    out[0] = f(e[0]);
  } else {
    for (auto& x : out) x = f(x);
  }
  return out;
}

std::vector<Index> Monad::points(const TElem& e) const {
  if (kind_ == MonadKind::Labelled) return {e[0]};
  return e;
}

std::vector<Index> Monad::fmap(std::span<const Index> f, std::size_t n, std::size_t m) const {
  if (f.size() != n) throw ArgumentError("fmap: map does not match carrier");
  const auto tn = size(n);
  std::vector<Index> out(tn);
  for (std::size_t i = 0; i < tn; ++i) {
    out[i] = static_cast<Index>(encode(m, map_elem(decode(n, i), [&](Index x) { return f[x]; })));
  }
  return out;
}

std::vector<Index> Monad::unit(std::size_t n) const {
  std::vector<Index> out(n);
  for (Index x = 0; x < n; ++x) {
    TElem e;
    if (kind_ == MonadKind::Labelled) {
      e = {x, monoid_.unit};
    } else {
      e = {x};
    }
    out[x] = static_cast<Index>(encode(n, e));
  }
  return out;
}

std::int64_t Monad::mult_elem(std::size_t n, const TElem& outer) const {
  const auto tn = size(n);
  switch (kind_) {
    case MonadKind::Identity:
    case MonadKind::FiniteUltrafilter:
      return outer.at(0);
    case MonadKind::Labelled: {
      TElem inner = decode(n, outer.at(0));
      inner[1] = monoid_.mul(inner[1], outer.at(1));
      return static_cast<std::int64_t>(encode(n, inner));
    }
    case MonadKind::Word: {
      TElem flat;
      for (Index letter : outer) {
        if (letter >= tn) throw ArgumentError("mult: letter outside TX");
        TElem w = decode(n, letter);
        flat.insert(flat.end(), w.begin(), w.end());
        if (static_cast<int>(flat.size()) > max_len_) return kOutOfBound;
      }
      return static_cast<std::int64_t>(encode(n, flat));
    }
  }
  return kOutOfBound;
}

std::vector<std::int64_t> Monad::mult(std::size_t n) const {
  const auto tn = size(n);
  const auto ttn = size(tn);
  std::vector<std::int64_t> out(ttn);
  for (std::size_t i = 0; i < ttn; ++i) out[i] = mult_elem(n, decode(tn, i));
  return out;
}

Elem Monad::xi(const Quantale& q, const TElem& v) const {
  if (kind_ == MonadKind::Word) {
    Elem acc = q.unit();
    for (Index u : v) acc = q.tensor(acc, static_cast<Elem>(u));
    return acc;
  }
  return static_cast<Elem>(v.at(0));
}

std::string Monad::format(const TElem& e, const std::function<std::string(Index)>& label) const {
  switch (kind_) {
    case MonadKind::Identity:
    case MonadKind::FiniteUltrafilter:
      return label(e.at(0));
    case MonadKind::Labelled:
      return "(" + label(e.at(0)) + "," + monoid_.labels.at(e.at(1)) + ")";
    case MonadKind::Word: {
      std::string s = "(";
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += label(e[i]);
      }
      return s + ")";
    }
  }
  return {};
}

std::pair<TElem, TElem> Monad::can(const TElem& w, std::size_t ny) const {
  return {map_elem(w, [&](Index p) { return static_cast<Index>(p / ny); }),
          map_elem(w, [&](Index p) { return static_cast<Index>(p % ny); })};
}

MonadPtr monad_from_spec(const std::string& spec) {
  if (spec == "identity") return std::make_shared<Monad>(Monad::identity());
  if (spec == "ultrafilter" || spec == "finite_ultrafilter") {
    return std::make_shared<Monad>(Monad::finite_ultrafilter());
  }
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const auto head = spec.substr(0, colon);
    const auto arg = spec.substr(colon + 1);
    try {
      if (head == "word") return std::make_shared<Monad>(Monad::word(std::stoi(arg)));
      if (head == "labelled" && arg.size() > 1 && arg[0] == 'z') {
        return std::make_shared<Monad>(Monad::labelled(cyclic_group(std::stoul(arg.substr(1)))));
      }
    } catch (const std::logic_error&) {
    }
  }
  throw FormatError("unknown monad '" + spec + "' (expected identity, ultrafilter, word:L or labelled:zN)");
}

namespace {

std::string show(const Monad& t, std::size_t n, std::size_t idx) {
  return t.format(t.decode(n, idx), [](Index x) { return "x" + std::to_string(x); });
}

std::string show2(const Monad& t, std::size_t n, const TElem& outer) {
  return t.format(outer, [&](Index i) { return show(t, n, i); });
}

// Elements of TTTX (as T-elements over TTX) whose outer flattening stays in
// bound; for unbounded monads every element.
void for_each_ttt(const Monad& t, std::size_t n, const std::function<void(const TElem&)>& visit) {
  const auto tn = t.size(n);
  const auto ttn = t.size(tn);
  if (!t.bounded()) {
    const auto tttn = t.size(ttn);
    for (std::size_t i = 0; i < tttn; ++i) visit(t.decode(ttn, i));
    return;
  }
  std::vector<int> len(ttn);
  for (std::size_t i = 0; i < ttn; ++i) len[i] = static_cast<int>(t.decode(tn, i).size());
  TElem w;
  std::function<void(int)> rec = [&](int used) {
    visit(w);
    if (static_cast<int>(w.size()) == t.max_len()) return;
    for (std::size_t i = 0; i < ttn; ++i) {
      if (used + len[i] > t.max_len()) continue;
      w.push_back(static_cast<Index>(i));
      rec(used + len[i]);
      w.pop_back();
    }
  };
  rec(0);
}

}  // namespace

CheckReport check_monad_laws(const Monad& t, std::size_t n) {
  CheckReport rep("monad_laws");
  if (t.bounded()) rep.bound = t.max_len();
  const auto tn = t.size(n);
  const auto e = t.unit(n);
  const auto e_t = t.unit(tn);
  const auto m = t.mult(n);
  const auto te = t.fmap(e, n, tn);

  for (std::size_t i = 0; i < tn; ++i) {
    ++rep.samples;
    if (m[e_t[i]] != static_cast<std::int64_t>(i)) {
      rep.fail("m . e_T = 1", {{"x", show(t, n, i), static_cast<std::int64_t>(i)}});
    }
    if (m[te[i]] != static_cast<std::int64_t>(i)) {
      rep.fail("m . Te = 1", {{"x", show(t, n, i), static_cast<std::int64_t>(i)}});
    }
  }

  std::uint64_t generated = 0;
  for_each_ttt(t, n, [&](const TElem& w) {
    ++generated;
    const auto flat_outer = t.mult_elem(tn, w);  // m_TX
    bool in_bound = flat_outer != kOutOfBound;
    TElem inner_flat;
    if (in_bound) {
      inner_flat = t.map_elem(w, [&](Index i) {
        const auto v = m[i];
        if (v == kOutOfBound) in_bound = false;
        return static_cast<Index>(v == kOutOfBound ? 0 : v);
      });
    }
    if (!in_bound) {
      ++rep.skipped;
      return;
    }
    const auto lhs = m[static_cast<std::size_t>(flat_outer)];
    const auto rhs = t.mult_elem(n, inner_flat);
    if (lhs == kOutOfBound || rhs == kOutOfBound) {
      ++rep.skipped;
      return;
    }
    ++rep.samples;
    if (lhs != rhs) {
      rep.fail("m . m_T = m . Tm", {{"X", t.format(w, [&](Index i) { return show2(t, n, t.decode(tn, i)); }), -1}});
    }
  });
  if (t.bounded()) {
    const auto ttn = t.size(tn);
    rep.details["ttt_generated"] = generated;
    rep.details["ttt_pruned"] = word_count(ttn, t.max_len()) - generated;
  }
  rep.details["carrier"] = n;
  return rep;
}

namespace {

// All maps from an n-set to an m-set, as index tables.
std::vector<std::vector<Index>> all_maps(std::size_t n, std::size_t m) {
  std::vector<std::vector<Index>> out;
  if (m == 0 && n > 0) return out;
  std::vector<Index> f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = n;
    while (true) {
      if (i == 0) return out;
      --i;
      if (++f[i] < m) break;
      f[i] = 0;
    }
  }
}

}  // namespace

CheckReport check_bc_samples(const Monad& t, std::size_t max_carrier) {
  CheckReport rep("bc_samples");
  if (t.bounded()) rep.bound = t.max_len();
  auto sq = [](const std::vector<Index>& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + "]";
  };
  std::uint64_t squares = 0;
  // Pullback squares X -f-> Z <-g- Y.
  for (std::size_t nx = 1; nx <= max_carrier; ++nx) {
    for (std::size_t ny = 1; ny <= max_carrier; ++ny) {
      for (std::size_t nz = 1; nz <= max_carrier; ++nz) {
        for (const auto& f : all_maps(nx, nz)) {
          for (const auto& g : all_maps(ny, nz)) {
            ++squares;
            std::vector<Index> p1, p2;
            for (Index x = 0; x < nx; ++x) {
              for (Index y = 0; y < ny; ++y) {
                if (f[x] == g[y]) {
                  p1.push_back(x);
                  p2.push_back(y);
                }
              }
            }
            const auto np = p1.size();
            const auto tf = t.fmap(f, nx, nz);
            const auto tg = t.fmap(g, ny, nz);
            const auto tp1 = t.fmap(p1, np, nx);
            const auto tp2 = t.fmap(p2, np, ny);
            std::set<std::pair<Index, Index>> hit;
            for (std::size_t i = 0; i < tp1.size(); ++i) hit.insert({tp1[i], tp2[i]});
            for (std::size_t a = 0; a < tf.size(); ++a) {
              for (std::size_t b = 0; b < tg.size(); ++b) {
                if (tf[a] != tg[b]) continue;
                ++rep.samples;
                if (!hit.count({static_cast<Index>(a), static_cast<Index>(b)})) {
                  rep.fail("T preserves the pullback of f and g",
                           {{"f", sq(f), -1}, {"g", sq(g), -1}, {"x", show(t, nx, a), static_cast<std::int64_t>(a)},
                            {"y", show(t, ny, b), static_cast<std::int64_t>(b)}});
                }
              }
            }
          }
        }
      }
    }
  }
  // m-naturality squares for f : X -> Y.
  for (std::size_t nx = 1; nx <= max_carrier; ++nx) {
    for (std::size_t ny = 1; ny <= max_carrier; ++ny) {
      const auto tnx = t.size(nx), tny = t.size(ny);
      const auto mx = t.mult(nx);
      const auto my = t.mult(ny);
      for (const auto& f : all_maps(nx, ny)) {
        ++squares;
        const auto tf = t.fmap(f, nx, ny);
        const auto ttf = t.fmap(tf, tnx, tny);
        std::set<std::pair<Index, Index>> hit;
        for (std::size_t i = 0; i < mx.size(); ++i) {
          if (mx[i] != kOutOfBound) hit.insert({static_cast<Index>(mx[i]), ttf[i]});
        }
        for (std::size_t a = 0; a < tnx; ++a) {
          for (std::size_t b = 0; b < my.size(); ++b) {
            if (my[b] == kOutOfBound) {
              continue;
            }
            if (static_cast<Index>(my[b]) != tf[a]) continue;
            ++rep.samples;
            if (!hit.count({static_cast<Index>(a), static_cast<Index>(b)})) {
              rep.fail("m-naturality square is a weak pullback",
                       {{"f", sq(f), -1}, {"x", show(t, nx, a), static_cast<std::int64_t>(a)},
                        {"Y", show2(t, ny, t.decode(tny, b)), static_cast<std::int64_t>(b)}});
            }
          }
        }
      }
    }
  }
  rep.details["squares"] = squares;
  return rep;
}

}  // namespace tvcat
