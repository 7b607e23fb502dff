// SPDX-License-Identifier: Apache-2.0
#include "tvcat/exponential.hpp"

#include <cmath>

namespace tvcat {
namespace {

WitnessEntry entry(std::string name, std::string label, std::size_t idx) {
  return {std::move(name), std::move(label), static_cast<std::int64_t>(idx)};
}

std::string map_label(const std::vector<Index>& h, const TVStructure& y) {
  std::string s = "[";
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + y.label(h[i]);
  return s + "]";
}

std::uint64_t power(std::size_t base, std::size_t exp) {
  const double v = std::pow(static_cast<double>(base), static_cast<double>(exp));
  return v > 1.8e19 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(v);
}

}  // namespace

std::vector<std::vector<Index>> all_maps(std::size_t n, std::size_t m, std::uint64_t guard) {
  require_guard(power(m, n), guard, "map enumeration");
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

std::int64_t ExponentialGraph::find(const std::vector<Index>& h) const {
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i] == h) return static_cast<std::int64_t>(i);
  }
  return -1;
}

ExponentialGraph graph_exponential(const TVStructure& x, const TVStructure& y, std::uint64_t guard) {
  const auto& t = x.monad();
  const auto& q = x.quantale();
  const auto nx = x.size(), ny = y.size();

  // The fibre of e_1(*) under T!, i.e. the T-elements of X x 1 lying over the
  // generator E = (1, e_1°).
  const auto bang = t.fmap(std::vector<Index>(nx, 0), nx, 1);
  const auto star = t.unit(1)[0];
  std::vector<std::size_t> fibre;
  for (std::size_t i = 0; i < bang.size(); ++i) {
    if (bang[i] == star) fibre.push_back(i);
  }

  std::vector<std::vector<Index>> maps;
  for (auto& h : all_maps(nx, ny, guard)) {
    const auto th = t.fmap(h, nx, ny);
    bool ok = true;
    for (std::size_t i : fibre) {
      for (std::size_t p = 0; p < nx && ok; ++p) ok = q.leq(q.meet(x(i, p), q.unit()), y(th[i], h[p]));
      if (!ok) break;
    }
    if (ok) maps.push_back(std::move(h));
  }

  const auto nz = maps.size();
  std::vector<Index> ev(nz * nx);
  for (std::size_t h = 0; h < nz; ++h) {
    for (std::size_t p = 0; p < nx; ++p) ev[h * nx + p] = maps[h][p];
  }
  std::vector<std::string> labels;
  for (const auto& h : maps) labels.push_back(map_label(h, y));

  const auto tz = t.size(nz);
  const auto tw = t.size(nz * nx);
  VRel ba(x.theory().quantale_ptr(), tz, nz, std::vector<Elem>(tz * nz, q.top()));
  for (std::size_t w = 0; w < tw; ++w) {
    const auto word = t.decode(nz * nx, w);
    const auto [pz, px] = t.can(word, nx);
    const auto iz = t.encode(nz, pz), ix = t.encode(nx, px);
    const auto iy = t.encode(ny, t.map_elem(word, [&](Index p) { return ev[p]; }));
    for (std::size_t h = 0; h < nz; ++h) {
      Elem v = ba(iz, h);
      for (std::size_t p = 0; p < nx; ++p) v = q.meet(v, q.heyting(x(ix, p), y(iy, maps[h][p])));
      ba.set(iz, h, v);
    }
  }
  ExponentialGraph out{TVStructure(x.theory_ptr(), std::move(labels), std::move(ba)), std::move(maps), std::move(ev),
                       nx};
  return out;
}

CheckReport check_exponentiability(const TVStructure& x) {
  CheckReport rep("exponentiability");
  const auto& t = x.monad();
  const auto& q = x.quantale();
  if (t.bounded()) rep.bound = t.max_len();
  const auto n = x.size();
  const auto ta = x.theory().extend(x.a());
  const auto m = t.mult(n);
  const auto nv = q.size();
  const Elem bot = q.bottom();
  std::vector<std::size_t> support;
  for (std::size_t X = 0; X < ta.rows(); ++X) {
    if (m[X] == kOutOfBound) {
      ++rep.skipped;
      continue;
    }
    support.clear();
    for (std::size_t i = 0; i < ta.cols(); ++i) {
      if (ta(X, i) != bot) support.push_back(i);
    }
    const auto mx = static_cast<std::size_t>(m[X]);
    for (std::size_t p = 0; p < n; ++p) {
      for (Elem u = 0; u < nv; ++u) {
        for (Elem v = 0; v < nv; ++v) {
          ++rep.samples;
          const Elem rhs = q.meet(x(mx, p), q.tensor(u, v));
          if (rhs == bot) continue;
          Elem lhs = bot;
          for (std::size_t i : support) {
            lhs = q.join(lhs, q.tensor(q.meet(ta(X, i), u), q.meet(x(i, p), v)));
          }
          if (!q.leq(rhs, lhs)) {
            rep.fail("join_x (Ta(X,x) /\\ u) (x) (a(x,x) /\\ v) >= a(m(X),x) /\\ (u (x) v)",
                     {entry("X", x.show_tt(X), X), entry("x", x.label(p), p), entry("u", q.label(u), u),
                      entry("v", q.label(v), v)});
            rep.details["lhs"] = q.label(lhs);
            rep.details["rhs"] = q.label(rhs);
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

CheckReport check_frame_criterion(const TVStructure& x) {
  const auto& q = x.quantale();
  if (!q.is_frame()) throw ArgumentError("frame criterion needs a frame quantale");
  CheckReport rep("frame_criterion");
  const auto& t = x.monad();
  if (t.bounded()) rep.bound = t.max_len();
  const auto n = x.size();
  const auto ta = x.theory().extend(x.a());
  const auto m = t.mult(n);
  for (std::size_t X = 0; X < ta.rows() && !rep.failed(); ++X) {
    if (m[X] == kOutOfBound) {
      ++rep.skipped;
      continue;
    }
    for (std::size_t p = 0; p < n; ++p) {
      ++rep.samples;
      Elem rhs = q.bottom();
      for (std::size_t i = 0; i < ta.cols(); ++i) rhs = q.join(rhs, q.meet(ta(X, i), x(i, p)));
      const Elem lhs = x(static_cast<std::size_t>(m[X]), p);
      if (lhs != rhs) {
        rep.fail("a . m = a . Ta", {entry("X", x.show_tt(X), X), entry("x", x.label(p), p)});
        rep.details["a.m"] = q.label(lhs);
        rep.details["a.Ta"] = q.label(rhs);
        break;
      }
    }
  }
  const auto e = check_exponentiability(x);
  rep.details["exponentiability"] = to_string(e.status());
  rep.details["verdicts_agree"] = e.passed() == rep.passed();
  return rep;
}

ExponentialGraph exponential_in_cats(const TVStructure& x, const TVStructure& y, std::uint64_t guard) {
  if (!is_category(y)) throw ArgumentError("exponential_in_cats: target is not a category");
  auto exp = graph_exponential(x, y, guard);
  auto rep = check_category(exp.z);
  if (rep.failed()) {
    throw NotTransitive("exponential structure is not transitive: " + rep.law, std::move(rep));
  }
  return exp;
}

Curried curry(const TVStructure& c, const TVStructure& x, const TVStructure& y, std::span<const Index> f,
              const ExponentialGraph& exp) {
  Curried out;
  auto& rep = out.report;
  const auto nc = c.size(), nx = x.size();
  if (f.size() != nc * nx) throw ArgumentError("curry: f must be a table on C x X");
  const auto cx = product(c, x);
  rep.add_part([&] {
    auto r = check_functor(cx, y, f);
    r.check = "f_is_functor";
    return r;
  }());
  CheckReport member("membership");
  for (std::size_t z = 0; z < nc; ++z) {
    std::vector<Index> h(f.begin() + z * nx, f.begin() + (z + 1) * nx);
    ++member.samples;
    const auto idx = exp.find(h);
    if (idx < 0) {
      member.fail("f(z,-) is in Z", {entry("z", c.label(z), z), entry("h", map_label(h, y), 0)});
      out.map.push_back(0);
    } else {
      out.map.push_back(static_cast<Index>(idx));
    }
  }
  const bool all_members = member.passed();
  rep.add_part(std::move(member));
  if (all_members) {
    auto fr = check_functor(c, exp.z, out.map);
    fr.check = "f_bar_is_functor";
    rep.add_part(std::move(fr));
  }
  return out;
}

CheckReport check_universal_property(const ExponentialGraph& exp, const TVStructure& x, const TVStructure& y,
                                     const std::vector<TVStructure>& tests, std::uint64_t guard) {
  CheckReport rep("universal_property");
  if (x.monad().bounded()) rep.bound = x.monad().max_len();
  const auto nx = x.size(), nz = exp.z.size();
  bool uniqueness_exhaustive = true;
  std::uint64_t functors = 0;
  for (const auto& c : tests) {
    const auto nc = c.size();
    const auto cx = product(c, x);
    for (const auto& f : all_maps(nc * nx, y.size(), guard)) {
      if (check_functor(cx, y, f).failed()) continue;
      ++functors;
      ++rep.samples;
      auto cur = curry(c, x, y, f, exp);
      if (cur.report.failed()) {
        rep.fail("existence: " + cur.report.law, cur.report.witness);
        return rep;
      }
      for (std::size_t z = 0; z < nc; ++z) {
        for (std::size_t p = 0; p < nx; ++p) {
          if (exp.eval(cur.map[z], p) != f[z * nx + p]) {
            rep.fail("ev . (f_bar x 1) = f", {entry("c", c.label(z), z), entry("x", x.label(p), p)});
            return rep;
          }
        }
      }
      if (power(nz, nc) > guard) {
        uniqueness_exhaustive = false;
        continue;
      }
      std::size_t solutions = 0;
      for (const auto& g : all_maps(nc, nz, guard)) {
        bool agrees = true;
        for (std::size_t z = 0; z < nc && agrees; ++z) {
          for (std::size_t p = 0; p < nx && agrees; ++p) agrees = exp.eval(g[z], p) == f[z * nx + p];
        }
        if (agrees && check_functor(c, exp.z, g).passed()) ++solutions;
      }
      if (solutions != 1) {
        rep.fail("uniqueness of f_bar", {entry("solutions", std::to_string(solutions), solutions)});
        return rep;
      }
    }
  }
  rep.details["functors"] = functors;
  rep.details["uniqueness"] = uniqueness_exhaustive ? "exhaustive" : "existence verified, uniqueness sampled";
  return rep;
}

}  // namespace tvcat
