// SPDX-License-Identifier: Apache-2.0
#include "tvcat/presheaf.hpp"

#include <map>
#include <set>

#include "tvcat/search.hpp"

namespace tvcat {
namespace {

WitnessEntry entry(std::string name, std::string label, std::size_t idx) {
  return {std::move(name), std::move(label), static_cast<std::int64_t>(idx)};
}

std::string table_label(const Quantale& q, const std::vector<Elem>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + q.label(t[i]);
  return s + "]";
}

// Functoriality constraints of a map sigma : S -> D, grouped by the largest
// variable they mention (variables are the points of S).
struct FunctorConstraint {
  TElem outer;
  std::size_t point;
  Elem value;
};

std::vector<std::vector<FunctorConstraint>> functor_constraints(const TVStructure& s, std::uint64_t guard) {
  const auto& t = s.monad();
  const auto bot = s.quantale().bottom();
  std::vector<std::vector<FunctorConstraint>> at(s.size());
  std::uint64_t count = 0;
  for (std::size_t w = 0; w < s.tsize(); ++w) {
    auto outer = t.decode(s.size(), w);
    std::size_t top = 0;
    for (Index p : t.points(outer)) top = std::max<std::size_t>(top, p);
    for (std::size_t p = 0; p < s.size(); ++p) {
      if (s(w, p) == bot) continue;
      require_guard(++count, guard, "functor constraints");
      at[std::max(top, p)].push_back({outer, p, s(w, p)});
    }
  }
  return at;
}

bool satisfied(const FunctorConstraint& k, const TVStructure& d, const Monad& t, const std::vector<Index>& sigma) {
  const auto img = t.encode(d.size(), t.map_elem(k.outer, [&](Index i) { return sigma[i]; }));
  return d.quantale().leq(k.value, d(img, sigma[k.point]));
}

}  // namespace

std::int64_t PresheafCategory::find(const std::vector<Elem>& table) const {
  auto it = std::lower_bound(psi.begin(), psi.end(), table);
  if (it == psi.end() || *it != table) return -1;
  return it - psi.begin();
}

PresheafCategory build_presheaf_category(const TVStructure& s, std::uint64_t guard) {
  const auto& t = s.monad();
  const auto& q = s.quantale();
  const auto tn = s.tsize();
  const auto nv = q.size();
  const auto op = dual(s);
  const Elem bot = q.bottom();

  // Carrier: V-functors (TX, a^op_0) -> (V, hom).
  std::vector<std::vector<std::pair<std::size_t, Elem>>> at(tn);  // (other, a^op_0) pairs
  for (std::size_t a = 0; a < tn; ++a) {
    for (std::size_t b = 0; b < tn; ++b) {
      const Elem w = op.a0(a, b);
      if (w == bot) continue;
      at[std::max(a, b)].push_back({a * tn + b, w});
    }
  }
  std::vector<std::vector<Elem>> psi;
  Backtrack bt;
  bt.domains.assign(tn, {});
  for (auto& d : bt.domains) {
    for (Index v = 0; v < nv; ++v) d.push_back(v);
  }
  bt.node_guard = guard;
  bt.consistent = [&](std::size_t v, const std::vector<Index>& val) {
    for (const auto& [ab, w] : at[v]) {
      const auto a = ab / tn, b = ab % tn;
      if (!q.leq(q.tensor(w, static_cast<Elem>(val[a])), static_cast<Elem>(val[b]))) return false;
    }
    return true;
  };
  bt.leaf = [&](const std::vector<Index>& val) {
    psi.emplace_back(val.begin(), val.end());
    require_guard(psi.size(), guard, "presheaf carrier");
    return false;
  };
  const auto stats = bt.run("presheaf enumeration");

  const auto np = psi.size();
  const auto n = tn * np;
  const auto tw = t.size(n);
  require_guard(static_cast<std::uint64_t>(tw) * tn, guard, "presheaf structure over T(TX x PX)");

  // Distinct weight vectors y |-> a^op(Tpi_1 q, y) (x) xi(T ev q), per Tpi_2 q.
  const auto tp = t.size(np);
  std::vector<std::set<std::vector<Elem>>> weights(tp);
  std::vector<Elem> vec(tn);
  for (std::size_t w = 0; w < tw; ++w) {
    const auto word = t.decode(n, w);
    const auto [q1, q2] = t.can(word, np);
    const auto i1 = t.encode(tn, q1), i2 = t.encode(np, q2);
    const Elem x = s.theory().xi(t.map_elem(word, [&](Index p) { return static_cast<Index>(psi[p % np][p / np]); }));
    for (std::size_t y = 0; y < tn; ++y) vec[y] = q.tensor(op(i1, y), x);
    weights[i2].insert(vec);
  }
  VRel p(s.theory().quantale_ptr(), tp, np, std::vector<Elem>(tp * np, q.top()));
  for (std::size_t P = 0; P < tp; ++P) {
    for (const auto& wv : weights[P]) {
      for (std::size_t phi = 0; phi < np; ++phi) {
        Elem v = p(P, phi);
        for (std::size_t y = 0; y < tn && v != bot; ++y) v = q.meet(v, q.hom(wv[y], psi[phi][y]));
        p.set(P, phi, v);
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& f : psi) labels.push_back(table_label(q, f));
  return PresheafCategory{TVStructure(s.theory_ptr(), std::move(labels), std::move(p)), std::move(psi), stats.nodes};
}

std::vector<Index> yoneda(const TVStructure& s, const PresheafCategory& p) {
  std::vector<Index> y(s.size());
  std::vector<Elem> table(s.tsize());
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t i = 0; i < s.tsize(); ++i) table[i] = s(i, x);
    const auto idx = p.find(table);
    if (idx < 0) throw ArgumentError("a(-," + s.label(x) + ") is not a presheaf");
    y[x] = static_cast<Index>(idx);
  }
  return y;
}

CheckReport check_yoneda(const TVStructure& s, const PresheafCategory& p) {
  CheckReport rep("yoneda");
  if (s.monad().bounded()) rep.bound = s.monad().max_len();
  std::vector<Index> y;
  try {
    y = yoneda(s, p);
  } catch (const ArgumentError& e) {
    rep.fail("a(-,x) lies in PX", {entry("reason", e.what(), 0)});
    return rep;
  }
  auto ff = check_fully_faithful(s, p.px, y);
  ff.check = "fully_faithful";
  rep.add_part(std::move(ff));
  rep.details["PX"] = p.px.size();
  return rep;
}

std::optional<std::vector<Index>> find_sup(const TVStructure& s, const PresheafCategory& p, std::uint64_t guard) {
  if (!separated(s)) throw NotSeparated("Sup search needs a separated structure");
  const auto& q = s.quantale();
  const auto& t = s.monad();
  const auto np = p.px.size();
  const auto n = s.size();
  const auto y = yoneda(s, p);

  Backtrack bt;
  bt.domains.assign(np, {});
  std::vector<std::int64_t> rep_of(np, -1);
  for (std::size_t x = 0; x < n; ++x) rep_of[y[x]] = static_cast<std::int64_t>(x);
  for (std::size_t psi = 0; psi < np; ++psi) {
    for (Index c = 0; c < n; ++c) {
      bool ok = rep_of[psi] < 0 || equivalent(s, c, static_cast<std::size_t>(rep_of[psi]));
      for (std::size_t z = 0; z < n && ok; ++z) {
        ok = q.leq(p.px.a0(psi, y[z]), s.a0(c, z)) && q.leq(p.px.a0(y[z], psi), s.a0(z, c));
      }
      if (ok) bt.domains[psi].push_back(c);
    }
  }
  const auto at = functor_constraints(p.px, guard);
  bt.node_guard = guard;
  bt.consistent = [&](std::size_t v, const std::vector<Index>& sigma) {
    for (const auto& k : at[v]) {
      if (!satisfied(k, s, t, sigma)) return false;
    }
    return true;
  };
  std::optional<std::vector<Index>> found;
  bt.leaf = [&](const std::vector<Index>& sigma) {
    found = sigma;
    return true;
  };
  bt.run("Sup search");
  return found;
}

std::optional<Injective> injective_structure(const TVStructure& s, std::uint64_t guard) {
  auto p = build_presheaf_category(s, guard);
  auto sup = find_sup(s, p, guard);
  if (!sup) return std::nullopt;
  auto y = yoneda(s, p);
  return Injective{std::move(p), std::move(y), std::move(*sup)};
}

CheckReport certify_injective(const TVStructure& s, std::uint64_t guard) {
  CheckReport rep("injective");
  const auto& q = s.quantale();
  if (s.monad().bounded()) rep.bound = s.monad().max_len();
  auto p = build_presheaf_category(s, guard);
  rep.details["PX"] = p.px.size();
  const auto sup = find_sup(s, p, guard);
  ++rep.samples;
  if (!sup) {
    rep.fail("a functor Sup : PX -> X with Sup . y ~= 1 exists", {});
    return rep;
  }
  const auto y = yoneda(s, p);
  CheckReport adj("Sup -| y");
  for (std::size_t psi = 0; psi < p.px.size(); ++psi) {
    ++adj.samples;
    if (!q.leq(q.unit(), p.px.a0(psi, y[(*sup)[psi]]))) {
      adj.fail("psi <= y(Sup(psi))", {entry("psi", p.px.label(psi), psi)});
    }
  }
  for (std::size_t x = 0; x < s.size(); ++x) {
    ++adj.samples;
    if (!q.leq(q.unit(), s.a0((*sup)[y[x]], x))) adj.fail("Sup(y(x)) <= x", {entry("x", s.label(x), x)});
  }
  rep.add_part(std::move(adj));
  Json table = Json::array();
  for (Index v : *sup) table.push_back(s.label(v));
  rep.details["sup"] = table;
  return rep;
}

Index oplus(const TVStructure& s, const Injective& inj, std::size_t x, Elem u) {
  const auto& q = s.quantale();
  std::vector<Elem> table(s.tsize());
  for (std::size_t i = 0; i < s.tsize(); ++i) table[i] = q.tensor(s(i, x), u);
  const auto idx = inj.p.find(table);
  if (idx < 0) throw Error("a(-,x) (x) u is not a presheaf");
  return inj.sup[static_cast<std::size_t>(idx)];
}

CheckReport check_calculus(const TVStructure& s, std::uint64_t guard) {
  const auto inj = injective_structure(s, guard);
  if (!inj) throw ArgumentError("calculus needs a certified injective structure");
  const auto& q = s.quantale();
  const auto& t = s.monad();
  const auto n = s.size(), tn = s.tsize(), nv = q.size();
  CheckReport rep("calculus");
  if (t.bounded()) rep.bound = t.max_len();

  std::vector<std::vector<Index>> plus(nv, std::vector<Index>(n));
  for (Elem u = 0; u < nv; ++u) {
    for (std::size_t x = 0; x < n; ++x) plus[u][x] = oplus(s, *inj, x, u);
  }
  CheckReport i1("(1)"), i2("(2)"), i3("(3)"), i4("(4)"), i5("(5)");
  for (Elem u = 0; u < nv; ++u) {
    const auto& pu = plus[u];
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        ++i1.samples;
        ++i2.samples;
        auto wit = [&] { return std::vector<WitnessEntry>{entry("x", s.label(x), x), entry("y", s.label(y), y), entry("u", q.label(u), u)}; };
        if (s.a0(pu[x], y) != q.hom(u, s.a0(x, y))) i1.fail("a0(x+u,y) = hom(u,a0(x,y))", wit());
        if (!q.leq(q.tensor(s.a0(x, y), u), s.a0(x, pu[y]))) i2.fail("a0(x,y+u) >= a0(x,y) (x) u", wit());
      }
    }
    const auto tplus = t.fmap(pu, n, n);
    for (std::size_t i = 0; i < tn; ++i) {
      for (std::size_t y = 0; y < n; ++y) {
        ++i3.samples;
        ++i4.samples;
        auto wit = [&] { return std::vector<WitnessEntry>{entry("x", s.show_t(i), i), entry("y", s.label(y), y), entry("u", q.label(u), u)}; };
        if (!q.leq(q.hom(u, s(i, y)), s(tplus[i], y))) i3.fail("a(x+u,y) >= hom(u,a(x,y))", wit());
        if (!q.leq(q.tensor(s(i, y), u), s(i, pu[y]))) i4.fail("a(x,y+u) >= a(x,y) (x) u", wit());
      }
    }
    const auto ta = s.theory().extend(s.a());
    for (std::size_t X = 0; X < ta.rows(); ++X) {
      for (std::size_t i = 0; i < tn; ++i) {
        ++i5.samples;
        if (!q.leq(q.tensor(ta(X, i), u), ta(X, tplus[i]))) {
          i5.fail("Ta(X,y+u) >= Ta(X,y) (x) u", {entry("X", s.show_tt(X), X), entry("y", s.show_t(i), i), entry("u", q.label(u), u)});
        }
      }
    }
  }
  for (auto* p : {&i1, &i2, &i3, &i4, &i5}) rep.add_part(std::move(*p));
  rep.details["PX"] = inj->p.px.size();
  return rep;
}

CheckReport check_thm_injective_exponentiable(const TVStructure& s, std::uint64_t seed, std::uint64_t guard) {
  CheckReport rep("injective_implies_exponentiable");
  if (s.monad().bounded()) rep.bound = s.monad().max_len();
  const auto bundle = check_assumptions_bundle(s.theory(), seed);
  rep.details["assumptions"] = to_string(bundle.status());
  bool injective = false;
  if (separated(s)) {
    injective = certify_injective(s, guard).passed();
    rep.details["injective"] = injective;
  } else {
    rep.details["injective"] = "not separated, no certificate";
  }
  if (bundle.failed() || !injective) {
    rep.details["implication"] = "vacuous";
    return rep;
  }
  const auto e = check_exponentiability(s);
  rep.details["exponentiable"] = e.passed();
  rep.samples = e.samples;
  if (e.failed()) {
    rep.fail("injective implies exponentiable", e.witness);
    rep.details["implication"] = "violated";
  } else {
    rep.details["implication"] = "holds";
  }
  return rep;
}

std::vector<Index> presheaf_map(const TVStructure& x, const PresheafCategory& px, const TVStructure& y,
                                const PresheafCategory& py, std::span<const Index> f) {
  const auto& q = x.quantale();
  const auto& t = x.monad();
  const auto tf = t.fmap(f, x.size(), y.size());
  const auto op = dual(y);
  std::vector<Index> out;
  std::vector<Elem> table(y.tsize());
  for (const auto& psi : px.psi) {
    for (std::size_t j = 0; j < y.tsize(); ++j) {
      Elem v = q.bottom();
      for (std::size_t i = 0; i < x.tsize(); ++i) v = q.join(v, q.tensor(psi[i], op.a0(tf[i], j)));
      table[j] = v;
    }
    const auto idx = py.find(table);
    if (idx < 0) throw Error("P(f) left the presheaf carrier");
    out.push_back(static_cast<Index>(idx));
  }
  return out;
}

WeakExponential weak_exponential(const TVStructure& x, const TVStructure& y, std::uint64_t guard) {
  if (!separated(x) || !separated(y)) throw NotSeparated("weak exponential needs separated inputs");
  auto px = build_presheaf_category(x, guard);
  auto py = build_presheaf_category(y, guard);
  auto yx = yoneda(x, px);
  auto yy = yoneda(y, py);
  auto full = graph_exponential(px.px, py.px, guard);
  std::vector<std::int64_t> back(py.px.size(), -1);
  for (std::size_t b = 0; b < y.size(); ++b) back[yy[b]] = static_cast<std::int64_t>(b);

  std::vector<Index> incl;
  std::vector<std::string> labels;
  for (std::size_t h = 0; h < full.maps.size(); ++h) {
    bool ok = true;
    for (std::size_t a = 0; a < x.size() && ok; ++a) ok = back[full.maps[h][yx[a]]] >= 0;
    if (ok) {
      incl.push_back(static_cast<Index>(h));
      labels.push_back(full.z.label(h));
    }
  }
  auto w = initial_lift(x.theory_ptr(), std::move(labels), {{incl, &full.z}});
  std::vector<Index> wev;
  for (Index h : incl) {
    for (std::size_t a = 0; a < x.size(); ++a) wev.push_back(static_cast<Index>(back[full.maps[h][yx[a]]]));
  }
  return WeakExponential{std::move(px), std::move(py), std::move(yx), std::move(yy), std::move(full), std::move(w),
                         std::move(incl), std::move(wev)};
}

WeakFactorization weak_factorize(const WeakExponential& w, const TVStructure& z, const TVStructure& x,
                                  const TVStructure& y, std::span<const Index> f, std::uint64_t guard) {
  WeakFactorization out;
  auto& rep = out.report;
  const auto& q = x.quantale();
  const auto& t = x.monad();
  const auto nz = z.size(), nx = x.size(), np = w.px.px.size(), nq = w.py.px.size();
  if (f.size() != nz * nx) throw ArgumentError("weak_factorize: f must be a table on Z x X");
  if (t.bounded()) rep.bound = t.max_len();

  auto fr = check_functor(product(z, x), y, f);
  fr.check = "f_is_functor";
  const bool f_ok = fr.passed();
  rep.add_part(std::move(fr));
  if (!f_ok) return out;

  const auto zp = product(z, w.px.px);
  std::vector<Index> fp(nz * np, 0);
  CheckReport ext("extension");
  if (t.trivial()) {
    // f'(z, psi)(y') = join_x psi(x) (x) b(y', f(z, x)).
    std::vector<Elem> table(y.size());
    for (std::size_t c = 0; c < nz; ++c) {
      for (std::size_t psi = 0; psi < np; ++psi) {
        for (std::size_t b = 0; b < y.size(); ++b) {
          Elem v = q.bottom();
          for (std::size_t a = 0; a < nx; ++a) v = q.join(v, q.tensor(w.px.psi[psi][a], y(b, f[c * nx + a])));
          table[b] = v;
        }
        const auto idx = w.py.find(table);
        ++ext.samples;
        if (idx < 0) {
          ext.fail("f'(z,psi) lies in PY", {entry("z", z.label(c), c), entry("psi", w.px.px.label(psi), psi)});
        } else {
          fp[c * np + psi] = static_cast<Index>(idx);
        }
      }
    }
  } else {
    std::vector<std::int64_t> rep_of(np, -1);
    for (std::size_t a = 0; a < nx; ++a) rep_of[w.yx[a]] = static_cast<std::int64_t>(a);
    Backtrack bt;
    bt.domains.assign(nz * np, {});
    for (std::size_t c = 0; c < nz; ++c) {
      for (std::size_t psi = 0; psi < np; ++psi) {
        auto& d = bt.domains[c * np + psi];
        if (rep_of[psi] >= 0) {
          d.push_back(w.yy[f[c * nx + static_cast<std::size_t>(rep_of[psi])]]);
        } else {
          for (Index v = 0; v < nq; ++v) d.push_back(v);
        }
      }
    }
    const auto at = functor_constraints(zp, guard);
    bt.node_guard = guard;
    bt.consistent = [&](std::size_t v, const std::vector<Index>& g) {
      for (const auto& k : at[v]) {
        if (!satisfied(k, w.py.px, t, g)) return false;
      }
      return true;
    };
    bool found = false;
    bt.leaf = [&](const std::vector<Index>& g) {
      fp = g;
      found = true;
      return true;
    };
    const auto st = bt.run("extension search");
    ext.samples = st.nodes;
    if (!found) ext.fail("NoExtensionFound: no functor Z x PX -> PY extends y . f", {});
  }
  const bool ext_ok = ext.passed();
  rep.add_part(std::move(ext));
  if (!ext_ok) return out;

  auto fpr = check_functor(zp, w.py.px, fp);
  fpr.check = "f_prime_is_functor";
  rep.add_part(std::move(fpr));
  CheckReport extends("f_prime_extends_f");
  for (std::size_t c = 0; c < nz; ++c) {
    for (std::size_t a = 0; a < nx; ++a) {
      ++extends.samples;
      if (fp[c * np + w.yx[a]] != w.yy[f[c * nx + a]]) {
        extends.fail("f'(z, y(x)) = y(f(z,x))", {entry("z", z.label(c), c), entry("x", x.label(a), a)});
      }
    }
  }
  rep.add_part(std::move(extends));

  CheckReport member("f_bar_in_weak_exponential");
  for (std::size_t c = 0; c < nz; ++c) {
    std::vector<Index> h(fp.begin() + c * np, fp.begin() + (c + 1) * np);
    ++member.samples;
    const auto idx = w.full.find(h);
    const auto pos = idx < 0 ? w.incl.end() : std::find(w.incl.begin(), w.incl.end(), static_cast<Index>(idx));
    if (pos == w.incl.end()) {
      member.fail("f'(z,-) is a member of <<X,Y>>", {entry("z", z.label(c), c)});
      out.f_tilde.push_back(0);
    } else {
      out.f_tilde.push_back(static_cast<Index>(pos - w.incl.begin()));
    }
  }
  const bool members = member.passed();
  rep.add_part(std::move(member));
  out.f_prime = std::move(fp);
  if (!members) return out;

  auto ft = check_functor(z, w.w, out.f_tilde);
  ft.check = "f_tilde_is_functor";
  rep.add_part(std::move(ft));
  CheckReport eq("factorization");
  for (std::size_t c = 0; c < nz; ++c) {
    for (std::size_t a = 0; a < nx; ++a) {
      ++eq.samples;
      if (w.eval(out.f_tilde[c], a) != f[c * nx + a]) {
        eq.fail("ev~ . (f~ x 1) = f", {entry("z", z.label(c), c), entry("x", x.label(a), a)});
      }
    }
  }
  rep.add_part(std::move(eq));
  return out;
}

CheckReport weak_factorize_general(const TVStructure& z, const TVStructure& x, const TVStructure& y,
                                   std::span<const Index> f, std::uint64_t guard) {
  CheckReport rep("weak_factorize_general");
  const auto nz = z.size(), nx = x.size();
  if (f.size() != nz * nx) throw ArgumentError("weak_factorize_general: f must be a table on Z x X");
  if (z.monad().bounded()) rep.bound = z.monad().max_len();
  const auto rz = reflect_R(z), rx = reflect_R(x), ry = reflect_R(y);
  const auto nrx = rx.rx.size();

  std::vector<std::int64_t> rf(rz.rx.size() * nrx, -1);
  for (std::size_t c = 0; c < nz; ++c) {
    for (std::size_t a = 0; a < nx; ++a) {
      auto& slot = rf[rz.eta[c] * nrx + rx.eta[a]];
      const auto v = static_cast<std::int64_t>(ry.eta[f[c * nx + a]]);
      if (slot >= 0 && slot != v) {
        rep.fail("Rf is well defined", {entry("z", z.label(c), c), entry("x", x.label(a), a)});
        return rep;
      }
      slot = v;
    }
  }
  const std::vector<Index> rft(rf.begin(), rf.end());
  const auto w = weak_exponential(rx.rx, ry.rx, guard);
  auto fac = weak_factorize(w, rz.rx, rx.rx, ry.rx, rft, guard);
  const bool fac_ok = fac.report.passed();
  rep.add_part(fac.report);
  if (!fac_ok) return rep;

  // Z_f = Z / ~ with z ~ z' iff f(z,-) = f(z',-) and the factorizations agree.
  std::map<std::pair<std::vector<Index>, Index>, Index> classes;
  std::vector<Index> qf(nz);
  std::vector<std::string> labels;
  std::vector<std::size_t> rep_point;
  for (std::size_t c = 0; c < nz; ++c) {
    std::vector<Index> row(f.begin() + c * nx, f.begin() + (c + 1) * nx);
    auto key = std::make_pair(row, fac.f_tilde[rz.eta[c]]);
    auto it = classes.find(key);
    if (it == classes.end()) {
      it = classes.emplace(key, static_cast<Index>(labels.size())).first;
      labels.push_back(z.label(c));
      rep_point.push_back(c);
    }
    qf[c] = it->second;
  }
  const auto zf = quotient(z, qf, labels);
  rep.details["Z_f"] = zf.size();

  std::vector<Index> hf(zf.size());
  for (std::size_t k = 0; k < zf.size(); ++k) hf[k] = fac.f_tilde[rz.eta[rep_point[k]]];
  auto hr = check_functor(zf, w.w, hf);
  hr.check = "h_f_is_functor";
  rep.add_part(std::move(hr));

  std::vector<Index> fhat(zf.size() * nx);
  for (std::size_t k = 0; k < zf.size(); ++k) {
    for (std::size_t a = 0; a < nx; ++a) fhat[k * nx + a] = f[rep_point[k] * nx + a];
  }
  auto fh = check_functor(product(zf, x), y, fhat);
  fh.check = "f_hat_is_functor";
  rep.add_part(std::move(fh));

  CheckReport eq("factorization");
  for (std::size_t c = 0; c < nz; ++c) {
    for (std::size_t a = 0; a < nx; ++a) {
      ++eq.samples;
      if (fhat[qf[c] * nx + a] != f[c * nx + a]) {
        eq.fail("f = f_hat . (q_f x 1)", {entry("z", z.label(c), c), entry("x", x.label(a), a)});
      }
      if (ry.eta[fhat[qf[c] * nx + a]] != w.eval(hf[qf[c]], rx.eta[a])) {
        eq.fail("eta_Y . f_hat = ev~ . (h_f x eta_X)", {entry("z", z.label(c), c), entry("x", x.label(a), a)});
      }
    }
  }
  rep.add_part(std::move(eq));
  return rep;
}

}  // namespace tvcat
