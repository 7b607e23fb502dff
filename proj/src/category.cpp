// SPDX-License-Identifier: Apache-2.0
#include "tvcat/category.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tvcat/error.hpp"
#include "tvcat/search.hpp"

namespace tvcat {
namespace {

WitnessEntry entry(std::string name, std::string label, std::size_t idx) {
  return {std::move(name), std::move(label), static_cast<std::int64_t>(idx)};
}

void same_theory(const TVStructure& x, const TVStructure& y) {
  if (!(x.quantale() == y.quantale()) || x.monad().name() != y.monad().name()) {
    throw ArgumentError("structures over different theories");
  }
}

std::vector<std::string> pair_labels(const TVStructure& x, const TVStructure& y) {
  std::vector<std::string> out;
  for (const auto& a : x.carrier()) {
    for (const auto& b : y.carrier()) out.push_back("(" + a + "," + b + ")");
  }
  return out;
}

}  // namespace

TVStructure::TVStructure(TheoryPtr th, std::vector<std::string> carrier, VRel a)
    : th_(std::move(th)), carrier_(std::move(carrier)), a_(std::move(a)) {
  if (!th_) throw ArgumentError("structure without a theory");
  if (a_.cols() != carrier_.size() || a_.rows() != th_->tsize(carrier_.size())) {
    throw ArgumentError("structure relation does not have shape TX x X");
  }
  if (!(a_.quantale() == th_->quantale())) throw ArgumentError("structure over a different quantale");
  e_ = th_->monad().unit(carrier_.size());
}

std::string TVStructure::show_t(std::size_t idx) const { return th_->show(size(), idx, carrier_); }

std::string TVStructure::show_tt(std::size_t idx) const {
  return monad().format(monad().decode(tsize(), idx), [&](Index i) { return show_t(i); });
}

TVStructure discrete(const TheoryPtr& th, std::vector<std::string> carrier) {
  const auto n = carrier.size();
  VRel a(th->quantale_ptr(), th->tsize(n), n);
  const auto e = th->monad().unit(n);
  for (std::size_t x = 0; x < n; ++x) a.set(e[x], x, th->quantale().unit());
  return TVStructure(th, std::move(carrier), std::move(a));
}

TVStructure indiscrete(const TheoryPtr& th, std::vector<std::string> carrier) {
  const auto n = carrier.size();
  const auto tn = th->tsize(n);
  VRel a(th->quantale_ptr(), tn, n, std::vector<Elem>(tn * n, th->quantale().top()));
  return TVStructure(th, std::move(carrier), std::move(a));
}

TVStructure unit_space(const TheoryPtr& th) { return discrete(th, {"*"}); }

TVStructure vhom_xi(const TheoryPtr& th) {
  const auto& q = th->quantale();
  const auto n = q.size();
  const auto tn = th->tsize(n);
  VRel a(th->quantale_ptr(), tn, n);
  for (std::size_t i = 0; i < tn; ++i) {
    const Elem v = th->xi(th->monad().decode(n, i));
    for (Elem u = 0; u < n; ++u) a.set(i, u, q.hom(v, u));
  }
  return TVStructure(th, q.labels(), std::move(a));
}

TVStructure multiord_of_quantale(const QuantalePtr& q, int max_len) {
  auto th = std::make_shared<Theory>(std::make_shared<Monad>(Monad::word(max_len)), two());
  const auto& b = th->quantale();
  const Elem one = b.top(), zero = b.bottom();
  const auto n = q->size();
  const auto tn = th->tsize(n);
  VRel a(th->quantale_ptr(), tn, n);
  for (std::size_t i = 0; i < tn; ++i) {
    Elem acc = q->unit();
    for (Index v : th->monad().decode(n, i)) acc = q->tensor(acc, static_cast<Elem>(v));
    for (Elem v = 0; v < n; ++v) a.set(i, v, q->leq(acc, v) ? one : zero);
  }
  return TVStructure(th, q->labels(), std::move(a));
}

TVStructure random_category(const TheoryPtr& th, std::size_t n, Rng& rng) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  const auto tn = th->tsize(n);
  const auto& q = th->quantale();
  VRel a(th->quantale_ptr(), tn, n);
  for (std::size_t i = 0; i < tn; ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      if (rng() % 3 == 0) a.set(i, x, static_cast<Elem>(rng() % q.size()));
    }
  }
  return graph_to_category(TVStructure(th, std::move(labels), std::move(a)));
}

CheckReport check_category(const TVStructure& s) {
  CheckReport rep("category");
  const auto& t = s.monad();
  const auto& q = s.quantale();
  if (t.bounded()) rep.bound = t.max_len();
  const auto n = s.size();

  CheckReport refl("(R)");
  for (std::size_t x = 0; x < n; ++x) {
    ++refl.samples;
    if (!q.leq(q.unit(), s.a0(x, x))) refl.fail("k <= a(e(x), x)", {entry("x", s.label(x), x)});
  }

  CheckReport trans("(T)");
  if (t.bounded()) trans.bound = t.max_len();
  const auto ta = s.theory().extend(s.a());
  const auto m = t.mult(n);
  const Elem bot = q.bottom();
  for (std::size_t X = 0; X < ta.rows() && !trans.failed(); ++X) {
    if (m[X] == kOutOfBound) {
      ++trans.skipped;
      continue;
    }
    for (std::size_t tx = 0; tx < ta.cols() && !trans.failed(); ++tx) {
      const Elem v = ta(X, tx);
      trans.samples += n;
      if (v == bot) continue;
      for (std::size_t x = 0; x < n; ++x) {
        if (!q.leq(q.tensor(v, s(tx, x)), s(static_cast<std::size_t>(m[X]), x))) {
          trans.fail("Ta(X,x) (x) a(x,x) <= a(m(X),x)",
                     {entry("X", s.show_tt(X), X), entry("x", s.show_t(tx), tx), entry("x", s.label(x), x)});
          trans.details["lhs"] = q.label(q.tensor(v, s(tx, x)));
          trans.details["rhs"] = q.label(s(static_cast<std::size_t>(m[X]), x));
          break;
        }
      }
    }
  }
  rep.add_part(std::move(refl));
  rep.add_part(std::move(trans));
  return rep;
}

bool is_category(const TVStructure& s) { return check_category(s).passed(); }

namespace {

CheckReport functor_report(const TVStructure& x, const TVStructure& y, std::span<const Index> f, bool equality) {
  same_theory(x, y);
  CheckReport rep(equality ? "fully_faithful" : "functor");
  if (x.monad().bounded()) rep.bound = x.monad().max_len();
  if (f.size() != x.size()) throw ArgumentError("map does not match the source carrier");
  for (Index v : f) {
    if (v >= y.size()) throw ArgumentError("map leaves the target carrier");
  }
  const auto& q = x.quantale();
  const auto tf = x.monad().fmap(f, x.size(), y.size());
  for (std::size_t tx = 0; tx < x.tsize(); ++tx) {
    for (std::size_t p = 0; p < x.size(); ++p) {
      ++rep.samples;
      const Elem lhs = x(tx, p), rhs = y(tf[tx], f[p]);
      const bool ok = equality ? lhs == rhs : q.leq(lhs, rhs);
      if (!ok) {
        rep.fail(equality ? "a(x,x) = b(Tf(x),f(x))" : "a(x,x) <= b(Tf(x),f(x))",
                 {entry("x", x.show_t(tx), tx), entry("x", x.label(p), p)});
        rep.details["lhs"] = q.label(lhs);
        rep.details["rhs"] = q.label(rhs);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace

CheckReport check_functor(const TVStructure& x, const TVStructure& y, std::span<const Index> f) {
  return functor_report(x, y, f, false);
}

CheckReport check_fully_faithful(const TVStructure& x, const TVStructure& y, std::span<const Index> f) {
  return functor_report(x, y, f, true);
}

bool functor_leq(const TVStructure& y, std::span<const Index> f, std::span<const Index> g) {
  if (f.size() != g.size()) throw ArgumentError("functor_leq: maps with different domains");
  const auto& q = y.quantale();
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!q.leq(q.unit(), y.a0(f[x], g[x]))) return false;
  }
  return true;
}

bool functor_equiv(const TVStructure& y, std::span<const Index> f, std::span<const Index> g) {
  return functor_leq(y, f, g) && functor_leq(y, g, f);
}

TVStructure initial_lift(const TheoryPtr& th, std::vector<std::string> carrier,
                         const std::vector<LiftSource>& family) {
  const auto n = carrier.size();
  const auto tn = th->tsize(n);
  const auto& q = th->quantale();
  VRel a(th->quantale_ptr(), tn, n, std::vector<Elem>(tn * n, q.top()));
  for (const auto& src : family) {
    if (src.map.size() != n) throw ArgumentError("initial_lift: map does not match carrier");
    const auto tf = th->monad().fmap(src.map, n, src.target->size());
    for (std::size_t tx = 0; tx < tn; ++tx) {
      for (std::size_t x = 0; x < n; ++x) a.set(tx, x, q.meet(a(tx, x), (*src.target)(tf[tx], src.map[x])));
    }
  }
  return TVStructure(th, std::move(carrier), std::move(a));
}

TVStructure final_lift(const TheoryPtr& th, std::vector<std::string> carrier, const std::vector<LiftSink>& sink) {
  const auto n = carrier.size();
  const auto tn = th->tsize(n);
  VRel b(th->quantale_ptr(), tn, n);
  for (const auto& s : sink) {
    const auto& src = *s.source;
    if (s.map.size() != src.size()) throw ArgumentError("final_lift: map does not match source carrier");
    const auto tf = th->monad().fmap(s.map, src.size(), n);
    for (std::size_t tx = 0; tx < src.tsize(); ++tx) {
      for (std::size_t x = 0; x < src.size(); ++x) b.raise(tf[tx], s.map[x], src(tx, x));
    }
  }
  const auto e = th->monad().unit(n);
  for (std::size_t y = 0; y < n; ++y) b.raise(e[y], y, th->quantale().unit());
  return TVStructure(th, std::move(carrier), std::move(b));
}

TVStructure graph_to_category(const TVStructure& s) {
  const auto& th = s.theory();
  const auto& q = s.quantale();
  const auto n = s.size();
  VRel a = s.a();
  for (std::size_t y = 0; y < n; ++y) a.raise(s.unit()[y], y, q.unit());
  const auto m = s.monad().mult(n);
  const Elem bot = q.bottom();
  while (true) {
    const auto ta = th.extend(a);
    VRel next = a;
    for (std::size_t X = 0; X < ta.rows(); ++X) {
      if (m[X] == kOutOfBound) continue;
      for (std::size_t tx = 0; tx < ta.cols(); ++tx) {
        const Elem v = ta(X, tx);
        if (v == bot) continue;
        for (std::size_t x = 0; x < n; ++x) next.raise(static_cast<std::size_t>(m[X]), x, q.tensor(v, a(tx, x)));
      }
    }
    if (next == a) break;
    a = std::move(next);
  }
  return TVStructure(s.theory_ptr(), s.carrier(), std::move(a));
}

TVStructure product(const TVStructure& x, const TVStructure& y) {
  same_theory(x, y);
  const auto nx = x.size(), ny = y.size();
  std::vector<Index> p1(nx * ny), p2(nx * ny);
  for (std::size_t i = 0; i < nx * ny; ++i) {
    p1[i] = static_cast<Index>(i / ny);
    p2[i] = static_cast<Index>(i % ny);
  }
  return initial_lift(x.theory_ptr(), pair_labels(x, y), {{p1, &x}, {p2, &y}});
}

TVStructure coproduct(const TVStructure& x, const TVStructure& y) {
  same_theory(x, y);
  std::vector<std::string> labels;
  bool clash = false;
  for (const auto& l : y.carrier()) {
    clash = clash || std::find(x.carrier().begin(), x.carrier().end(), l) != x.carrier().end();
  }
  for (const auto& l : x.carrier()) labels.push_back(clash ? "1." + l : l);
  for (const auto& l : y.carrier()) labels.push_back(clash ? "2." + l : l);
  std::vector<Index> i1(x.size()), i2(y.size());
  std::iota(i1.begin(), i1.end(), 0);
  std::iota(i2.begin(), i2.end(), static_cast<Index>(x.size()));
  return graph_to_category(final_lift(x.theory_ptr(), std::move(labels), {{&x, i1}, {&y, i2}}));
}

TVStructure quotient(const TVStructure& s, const std::vector<Index>& q, std::vector<std::string> labels) {
  for (Index c : q) {
    if (c >= labels.size()) throw ArgumentError("quotient: class index out of range");
  }
  return graph_to_category(final_lift(s.theory_ptr(), std::move(labels), {{&s, q}}));
}

TVStructure tensor(const TVStructure& x, const TVStructure& y) {
  same_theory(x, y);
  const auto& t = x.monad();
  const auto& q = x.quantale();
  const auto nx = x.size(), ny = y.size();
  const auto tw = t.size(nx * ny);
  VRel c(x.theory().quantale_ptr(), tw, nx * ny);
  for (std::size_t w = 0; w < tw; ++w) {
    const auto [a, b] = t.can(t.decode(nx * ny, w), ny);
    const auto ia = t.encode(nx, a), ib = t.encode(ny, b);
    for (std::size_t p = 0; p < nx; ++p) {
      for (std::size_t r = 0; r < ny; ++r) c.set(w, p * ny + r, q.tensor(x(ia, p), y(ib, r)));
    }
  }
  return TVStructure(x.theory_ptr(), pair_labels(x, y), std::move(c));
}

bool equivalent(const TVStructure& s, std::size_t x, std::size_t y) {
  const auto& q = s.quantale();
  return q.leq(q.unit(), q.meet(s.a0(x, y), s.a0(y, x)));
}

bool separated(const TVStructure& s) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = x + 1; y < s.size(); ++y) {
      if (equivalent(s, x, y)) return false;
    }
  }
  return true;
}

Reflection reflect_R(const TVStructure& s) {
  const auto n = s.size();
  // Classes of the equivalence generated by ~; the least index represents.
  std::vector<Index> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  std::function<Index(Index)> find = [&](Index x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      if (equivalent(s, x, y)) {
        const auto rx = find(x), ry = find(y);
        if (rx != ry) rep[std::max(rx, ry)] = std::min(rx, ry);
      }
    }
  }
  std::vector<Index> eta(n);
  std::vector<std::string> labels;
  std::vector<Index> cls(n, 0);
  for (Index x = 0; x < n; ++x) {
    if (find(x) == x) {
      cls[x] = static_cast<Index>(labels.size());
      labels.push_back(s.label(x));
    }
    eta[x] = cls[find(x)];
  }
  const auto nc = labels.size();
  const auto& th = s.theory_ptr();
  const auto tn = th->tsize(nc);
  VRel a(th->quantale_ptr(), tn, nc);
  const auto teta = s.monad().fmap(eta, n, nc);
  std::vector<bool> hit(tn, false);
  for (std::size_t w = 0; w < s.tsize(); ++w) {
    hit[teta[w]] = true;
    for (std::size_t x = 0; x < n; ++x) a.raise(teta[w], eta[x], s(w, x));
  }
  const bool empty = std::find(hit.begin(), hit.end(), false) != hit.end();
  return Reflection{TVStructure(th, std::move(labels), std::move(a)), std::move(eta), empty};
}

CheckReport check_reflection(const TVStructure& s) {
  CheckReport rep("reflection");
  if (s.monad().bounded()) rep.bound = s.monad().max_len();
  const auto r = reflect_R(s);
  const auto& q = s.quantale();
  rep.details["classes"] = r.rx.size();
  if (r.empty_fiber) rep.details["empty_fiber"] = true;

  CheckReport initial("eta_initial");
  const auto teta = s.monad().fmap(r.eta, s.size(), r.rx.size());
  for (std::size_t w = 0; w < s.tsize() && !initial.failed(); ++w) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      ++initial.samples;
      if (s(w, x) != r.rx(teta[w], r.eta[x])) {
        initial.fail("a(x,x) = a~(T eta(x), eta(x))", {entry("x", s.show_t(w), w), entry("x", s.label(x), x)});
        initial.details["lhs"] = q.label(s(w, x));
        initial.details["rhs"] = q.label(r.rx(teta[w], r.eta[x]));
        break;
      }
    }
  }
  rep.add_part(std::move(initial));

  CheckReport fin("eta_final");
  const auto fl = final_lift(s.theory_ptr(), r.rx.carrier(), {{&s, r.eta}});
  ++fin.samples;
  if (!(fl.a() == r.rx.a())) {
    for (std::size_t z = 0; z < fl.tsize() && !fin.failed(); ++z) {
      for (std::size_t c = 0; c < fl.size(); ++c) {
        if (fl(z, c) != r.rx(z, c)) {
          fin.fail("a~ is the final structure along eta", {entry("z", r.rx.show_t(z), z), entry("c", r.rx.label(c), c)});
          break;
        }
      }
    }
  }
  rep.add_part(std::move(fin));

  CheckReport idem("idempotent");
  ++idem.samples;
  const auto rr = reflect_R(r.rx);
  if (rr.rx.size() != r.rx.size() || !(rr.rx.a() == r.rx.a())) {
    idem.fail("R(R(X)) = R(X)", {entry("classes", std::to_string(rr.rx.size()), rr.rx.size())});
  }
  if (!separated(r.rx)) idem.fail("R(X) is separated", {});
  rep.add_part(std::move(idem));
  return rep;
}

CheckReport check_R_preserves_products(const TVStructure& x, const TVStructure& y) {
  CheckReport rep("R_preserves_products");
  if (x.monad().bounded()) rep.bound = x.monad().max_len();
  const auto xy = product(x, y);
  const auto rxy = reflect_R(xy);
  const auto rx = reflect_R(x);
  const auto ry = reflect_R(y);
  const auto d = product(rx.rx, ry.rx);
  const auto nry = ry.rx.size();

  // f . eta_{XxY} = eta_X x eta_Y determines f.
  std::vector<std::int64_t> f(rxy.rx.size(), -1);
  for (std::size_t p = 0; p < xy.size(); ++p) {
    const auto target = static_cast<std::int64_t>(rx.eta[p / y.size()] * nry + ry.eta[p % y.size()]);
    auto& slot = f[rxy.eta[p]];
    if (slot >= 0 && slot != target) {
      rep.fail("comparison is well defined", {entry("p", xy.label(p), p)});
      return rep;
    }
    slot = target;
  }
  std::vector<Index> fm(f.begin(), f.end());
  std::vector<bool> seen(d.size(), false);
  for (Index v : fm) seen[v] = true;
  ++rep.samples;
  if (fm.size() != d.size() || std::find(seen.begin(), seen.end(), false) != seen.end()) {
    rep.fail("comparison is bijective", {entry("classes", std::to_string(fm.size()), fm.size())});
    return rep;
  }
  auto ff = check_fully_faithful(rxy.rx, d, fm);
  rep.samples += ff.samples;
  if (ff.failed()) rep.fail("comparison is initial: " + ff.law, ff.witness);
  rep.details["classes"] = fm.size();
  return rep;
}

TVStructure dual(const TVStructure& s) {
  const auto& t = s.monad();
  const auto n = s.size();
  const auto tn = s.tsize();
  const auto ta = s.theory().extend(s.a());  // TTX x TX
  const auto m = t.mult(n);
  const auto ttn = ta.rows();
  VRel op(s.theory().quantale_ptr(), ttn, tn);
  for (std::size_t X = 0; X < ttn; ++X) {
    if (m[X] == kOutOfBound) continue;
    for (std::size_t Y = 0; Y < ttn; ++Y) {
      if (m[Y] == kOutOfBound) continue;
      op.raise(X, static_cast<std::size_t>(m[Y]), ta(Y, static_cast<std::size_t>(m[X])));
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < tn; ++i) labels.push_back(s.show_t(i));
  return TVStructure(s.theory_ptr(), std::move(labels), std::move(op));
}

EMAlgebra functor_M(const TVStructure& s) {
  const auto n = s.size();
  const auto tn = s.tsize();
  const auto ta = s.theory().extend(s.a());
  const auto m = s.monad().mult(n);
  VRel a0(s.theory().quantale_ptr(), tn, tn);
  for (std::size_t X = 0; X < ta.rows(); ++X) {
    if (m[X] == kOutOfBound) continue;
    for (std::size_t y = 0; y < tn; ++y) a0.raise(static_cast<std::size_t>(m[X]), y, ta(X, y));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < tn; ++i) labels.push_back(s.show_t(i));
  return EMAlgebra{s.theory_ptr(), std::move(labels), std::move(a0), m};
}

TVStructure functor_K(const EMAlgebra& alg) {
  const auto n = alg.carrier.size();
  const auto tn = alg.theory->tsize(n);
  if (alg.alpha.size() != tn || alg.a0.rows() != n || alg.a0.cols() != n) {
    throw ArgumentError("functor_K: algebra tables have the wrong shape");
  }
  VRel a(alg.theory->quantale_ptr(), tn, n);
  for (std::size_t i = 0; i < tn; ++i) {
    if (alg.alpha[i] == kOutOfBound) continue;
    for (std::size_t x = 0; x < n; ++x) a.set(i, x, alg.a0(static_cast<std::size_t>(alg.alpha[i]), x));
  }
  return TVStructure(alg.theory, alg.carrier, std::move(a));
}

CheckReport check_em_algebra(const EMAlgebra& alg) {
  CheckReport rep("em_algebra");
  const auto& th = *alg.theory;
  const auto& t = th.monad();
  const auto& q = th.quantale();
  if (t.bounded()) rep.bound = t.max_len();
  const auto n = alg.carrier.size();
  const auto tn = th.tsize(n);
  auto lab = [&](std::size_t x) { return alg.carrier.at(x); };
  auto show_t = [&](std::size_t i) { return th.show(n, i, alg.carrier); };

  CheckReport vcat("V-category");
  for (std::size_t x = 0; x < n; ++x) {
    ++vcat.samples;
    if (!q.leq(q.unit(), alg.a0(x, x))) vcat.fail("k <= a0(x,x)", {entry("x", lab(x), x)});
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        ++vcat.samples;
        if (!q.leq(q.tensor(alg.a0(x, y), alg.a0(y, z)), alg.a0(x, z))) {
          vcat.fail("a0(x,y) (x) a0(y,z) <= a0(x,z)", {entry("x", lab(x), x), entry("y", lab(y), y), entry("z", lab(z), z)});
        }
      }
    }
  }
  rep.add_part(std::move(vcat));

  CheckReport laws("algebra_laws");
  const auto e = t.unit(n);
  for (std::size_t x = 0; x < n; ++x) {
    ++laws.samples;
    if (alg.alpha[e[x]] != static_cast<std::int64_t>(x)) laws.fail("alpha . e = 1", {entry("x", lab(x), x)});
  }
  const auto m = t.mult(n);
  for (std::size_t X = 0; X < m.size(); ++X) {
    if (m[X] == kOutOfBound || alg.alpha[m[X]] == kOutOfBound) {
      ++laws.skipped;
      continue;
    }
    bool in_bound = true;
    const auto outer = t.decode(tn, X);
    const auto mapped = t.map_elem(outer, [&](Index i) {
      if (alg.alpha[i] == kOutOfBound) in_bound = false;
      return static_cast<Index>(in_bound ? alg.alpha[i] : 0);
    });
    if (!in_bound) {
      ++laws.skipped;
      continue;
    }
    const auto lhs = alg.alpha[t.encode(n, mapped)];
    if (lhs == kOutOfBound) {
      ++laws.skipped;
      continue;
    }
    ++laws.samples;
    if (lhs != alg.alpha[m[X]]) {
      laws.fail("alpha . m = alpha . T alpha", {entry("X", t.format(outer, [&](Index i) { return show_t(i); }), X)});
    }
  }
  rep.add_part(std::move(laws));

  CheckReport vf("alpha_is_V-functor");
  const auto ta0 = th.extend(alg.a0);
  for (std::size_t a = 0; a < tn && !vf.failed(); ++a) {
    if (alg.alpha[a] == kOutOfBound) continue;
    for (std::size_t b = 0; b < tn; ++b) {
      if (alg.alpha[b] == kOutOfBound) continue;
      ++vf.samples;
      if (!q.leq(ta0(a, b), alg.a0(static_cast<std::size_t>(alg.alpha[a]), static_cast<std::size_t>(alg.alpha[b])))) {
        vf.fail("Ta0(x,y) <= a0(alpha(x),alpha(y))", {entry("x", show_t(a), a), entry("y", show_t(b), b)});
        break;
      }
    }
  }
  rep.add_part(std::move(vf));
  return rep;
}

std::optional<Representation> find_representation(const TVStructure& s, std::uint64_t guard) {
  const auto& t = s.monad();
  const auto& q = s.quantale();
  const auto n = s.size();
  const auto tn = s.tsize();
  const double space = std::pow(static_cast<double>(n), static_cast<double>(tn));
  require_guard(space > 1.8e19 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(space), guard,
                "representation search over |X|^|TX| maps");

  const auto c = functor_K(functor_M(s));  // the structure of TX
  const Elem bot = q.bottom();

  struct Constraint {
    TElem outer;  // element of T(TX) as a T-element over TX
    std::size_t y;
    Elem value;
  };
  std::vector<std::vector<Constraint>> at(tn);
  for (std::size_t X = 0; X < c.tsize(); ++X) {
    auto outer = t.decode(tn, X);
    std::size_t top = 0;
    for (Index p : t.points(outer)) top = std::max<std::size_t>(top, p);
    for (std::size_t y = 0; y < tn; ++y) {
      if (c(X, y) == bot) continue;
      at[std::max(top, y)].push_back({outer, y, c(X, y)});
    }
  }

  Backtrack bt;
  bt.domains.assign(tn, {});
  std::vector<bool> is_unit(tn, false);
  for (std::size_t x = 0; x < n; ++x) {
    const auto ex = s.unit()[x];
    is_unit[ex] = true;
    for (Index z = 0; z < n; ++z) {
      if (equivalent(s, z, x)) bt.domains[ex].push_back(z);
    }
  }
  for (std::size_t i = 0; i < tn; ++i) {
    if (is_unit[i]) continue;
    for (Index z = 0; z < n; ++z) bt.domains[i].push_back(z);
  }
  bt.consistent = [&](std::size_t v, const std::vector<Index>& alpha) {
    for (const auto& k : at[v]) {
      const auto img = t.encode(n, t.map_elem(k.outer, [&](Index i) { return alpha[i]; }));
      if (!q.leq(k.value, s(img, alpha[k.y]))) return false;
    }
    return true;
  };
  std::optional<std::vector<Index>> found;
  bt.leaf = [&](const std::vector<Index>& alpha) {
    found = alpha;
    return true;
  };
  const auto stats = bt.run("representation search");
  if (!found) return std::nullopt;

  Representation r;
  r.alpha = *found;
  r.nodes = stats.nodes;
  if (t.bounded()) r.pseudo_algebra.bound = t.max_len();
  const auto m = t.mult(n);
  for (std::size_t X = 0; X < m.size(); ++X) {
    if (m[X] == kOutOfBound) {
      ++r.pseudo_algebra.skipped;
      continue;
    }
    ++r.pseudo_algebra.samples;
    const auto outer = t.decode(tn, X);
    const auto lhs = r.alpha[t.encode(n, t.map_elem(outer, [&](Index i) { return r.alpha[i]; }))];
    const auto rhs = r.alpha[static_cast<std::size_t>(m[X])];
    if (!equivalent(s, lhs, rhs)) {
      r.pseudo_algebra.fail("alpha . T alpha ~= alpha . m", {entry("X", s.show_tt(X), X)});
    }
  }
  return r;
}

}  // namespace tvcat
