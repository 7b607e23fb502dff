// SPDX-License-Identifier: Apache-2.0
#include "tvcat/theory.hpp"

#include "tvcat/error.hpp"

namespace tvcat {
namespace {

std::vector<std::string> point_labels(std::size_t n, const char* prefix = "x") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string rel_label(const VRel& r) {
  std::string s = "[";
  for (std::size_t x = 0; x < r.rows(); ++x) {
    if (x) s += ";";
    for (std::size_t y = 0; y < r.cols(); ++y) {
      if (y) s += ",";
      s += r.quantale().label(r(x, y));
    }
  }
  return s + "]";
}

WitnessEntry entry(std::string name, std::string label, std::size_t idx) {
  return {std::move(name), std::move(label), static_cast<std::int64_t>(idx)};
}

}  // namespace

Theory::Theory(MonadPtr t, QuantalePtr q) : t_(std::move(t)), q_(std::move(q)) {
  if (!t_ || !q_) throw ArgumentError("theory needs a monad and a quantale");
  if (!q_->is_lattice()) throw ArgumentError("theory needs a lattice-ordered quantale");
}

VRel Theory::extend(const VRel& r) const {
  if (!(r.quantale() == *q_)) throw ArgumentError("extend: relation over a different quantale");
  if (t_->trivial()) return r;
  const auto nx = r.rows(), ny = r.cols();
  VRel out(q_, tsize(nx), tsize(ny));
  if (t_->kind() == MonadKind::Labelled) {
    // T(X x Y) = X x Y x H; can((x,y),h) = ((x,h),(y,h)); xi reads the point.
    const auto nh = t_->monoid().size();
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < ny; ++y) {
        for (std::size_t h = 0; h < nh; ++h) out.raise(x * nh + h, y * nh + h, r(x, y));
      }
    }
    return out;
  }
  // Word: walk T(X x Y) block by block with an odometer over the letters,
  // projecting each word and folding xi as we go.
  const auto n = nx * ny;
  std::size_t off_x = 0, off_y = 0, block_x = 1, block_y = 1;
  for (int k = 0; k <= t_->max_len(); ++k) {
    if (k > 0 && n == 0) break;
    std::vector<std::size_t> p(k, 0);
    while (true) {
      std::size_t ix = 0, iy = 0;
      Elem v = q_->unit();
      for (int i = 0; i < k; ++i) {
        const auto x = p[i] / ny, y = p[i] % ny;
        ix = ix * nx + x;
        iy = iy * ny + y;
        v = q_->tensor(v, r(x, y));
      }
      out.raise(off_x + ix, off_y + iy, v);
      int i = k;
      while (i > 0 && ++p[i - 1] == n) p[--i] = 0;
      if (i == 0) break;
    }
    off_x += block_x;
    off_y += block_y;
    block_x *= nx;
    block_y *= ny;
  }
  return out;
}

std::string Theory::show(std::size_t n, std::size_t idx, const std::vector<std::string>& labels) const {
  return t_->format(t_->decode(n, idx), [&](Index x) { return labels.at(x); });
}

VRel random_relation(const QuantalePtr& q, std::size_t rows, std::size_t cols, Rng& rng) {
  std::vector<Elem> e(rows * cols);
  for (auto& v : e) v = static_cast<Elem>(rng() % q->size());
  return VRel(q, rows, cols, std::move(e));
}

std::vector<VRel> relation_family(const QuantalePtr& q, std::size_t rows, std::size_t cols,
                                  std::uint64_t exhaustive_limit, std::size_t samples, Rng& rng) {
  double count = 1;
  for (std::size_t i = 0; i < rows * cols; ++i) count *= static_cast<double>(q->size());
  if (count <= static_cast<double>(exhaustive_limit)) return all_relations(q, rows, cols, exhaustive_limit);
  std::vector<VRel> out;
  for (std::size_t i = 0; i < samples; ++i) out.push_back(random_relation(q, rows, cols, rng));
  return out;
}

CheckReport check_xi_algebra(const Theory& th) {
  CheckReport rep("xi_algebra");
  const auto& t = th.monad();
  const auto& q = th.quantale();
  if (t.bounded()) rep.bound = t.max_len();
  const auto nv = q.size();
  const auto tv = t.size(nv);
  const auto e = t.unit(nv);
  for (Elem v = 0; v < nv; ++v) {
    ++rep.samples;
    if (th.xi(t.decode(nv, e[v])) != v) rep.fail("xi . e_V = 1", {entry("v", q.label(v), v)});
  }
  const auto m = t.mult(nv);
  const auto& labels = q.labels();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == kOutOfBound) {
      ++rep.skipped;
      continue;
    }
    ++rep.samples;
    const auto outer = t.decode(tv, i);
    const auto lhs = th.xi(t.decode(nv, static_cast<std::size_t>(m[i])));
    const auto rhs = th.xi(t.map_elem(outer, [&](Index j) { return static_cast<Index>(th.xi(t.decode(nv, j))); }));
    if (lhs != rhs) {
      rep.fail("xi . m_V = xi . T xi",
               {entry("V", t.format(outer, [&](Index j) { return th.show(nv, j, labels); }), i)});
    }
  }
  return rep;
}

CheckReport check_extension_laws(const Theory& th, std::size_t max_carrier, std::uint64_t seed,
                                 std::size_t samples) {
  CheckReport rep("extension_laws");
  const auto& t = th.monad();
  const auto& qp = th.quantale_ptr();
  if (t.bounded()) rep.bound = t.max_len();
  Rng rng(seed);
  constexpr std::uint64_t kExhaustive = 256;

  // Families and their extensions, by shape.
  struct Fam {
    std::vector<VRel> rels;
    std::vector<VRel> ext;
  };
  std::vector<std::vector<Fam>> fam(max_carrier + 1, std::vector<Fam>(max_carrier + 1));
  for (std::size_t a = 1; a <= max_carrier; ++a) {
    for (std::size_t b = 1; b <= max_carrier; ++b) {
      auto& f = fam[a][b];
      f.rels = relation_family(qp, a, b, kExhaustive, samples, rng);
      for (const auto& r : f.rels) f.ext.push_back(th.extend(r));
    }
  }

  bool functor_equal = true;
  bool id_equal = true;
  for (std::size_t n = 1; n <= max_carrier; ++n) {
    const auto tn = t.size(n);
    const auto tid = th.extend(id_rel(qp, n));
    const auto id_t = id_rel(qp, tn);
    ++rep.samples;
    if (!leq(id_t, tid)) rep.fail("T1_X >= 1_TX", {entry("carrier", std::to_string(n), n)});
    if (!(tid == id_t)) id_equal = false;
  }

  for (std::size_t a = 1; a <= max_carrier; ++a) {
    for (std::size_t b = 1; b <= max_carrier; ++b) {
      const auto& f = fam[a][b];
      const auto ta = t.size(a), tb = t.size(b);
      const auto ex = t.unit(a), ey = t.unit(b);
      const auto mx = t.mult(a), my = t.mult(b);
      for (std::size_t i = 0; i < f.rels.size(); ++i) {
        const auto& r = f.rels[i];
        const auto& tr = f.ext[i];
        ++rep.samples;
        if (!(th.extend(transpose(r)) == transpose(tr))) {
          rep.fail("T(r°) = (Tr)°", {entry("r", rel_label(r), i)});
        }
        for (std::size_t x = 0; x < a; ++x) {
          for (std::size_t y = 0; y < b; ++y) {
            if (!th.quantale().leq(r(x, y), tr(ex[x], ey[y]))) {
              rep.fail("e_Y . r <= Tr . e_X",
                       {entry("r", rel_label(r), i), entry("x", "x" + std::to_string(x), x),
                        entry("y", "y" + std::to_string(y), y)});
            }
          }
        }
        const auto ttr = th.extend(tr);
        for (std::size_t X = 0; X < ttr.rows(); ++X) {
          if (mx[X] == kOutOfBound) {
            rep.skipped += ttr.cols();
            continue;
          }
          for (std::size_t Y = 0; Y < ttr.cols(); ++Y) {
            if (my[Y] == kOutOfBound) {
              ++rep.skipped;
              continue;
            }
            if (!th.quantale().leq(ttr(X, Y), tr(mx[X], my[Y]))) {
              const auto lx = point_labels(a), ly = point_labels(b, "y");
              rep.fail("m_Y . TTr <= Tr . m_X",
                       {entry("r", rel_label(r), i),
                        entry("X", t.format(t.decode(ta, X), [&](Index j) { return th.show(a, j, lx); }), X),
                        entry("Y", t.format(t.decode(tb, Y), [&](Index j) { return th.show(b, j, ly); }), Y)});
            }
          }
        }
      }
    }
  }

  for (std::size_t a = 1; a <= max_carrier; ++a) {
    for (std::size_t b = 1; b <= max_carrier; ++b) {
      for (std::size_t c = 1; c <= max_carrier; ++c) {
        const auto& fr = fam[a][b];
        const auto& fs = fam[b][c];
        for (std::size_t i = 0; i < fr.rels.size(); ++i) {
          for (std::size_t j = 0; j < fs.rels.size(); ++j) {
            ++rep.samples;
            const auto lhs = th.extend(compose(fs.rels[j], fr.rels[i]));
            const auto rhs = compose(fs.ext[j], fr.ext[i]);
            if (!leq(rhs, lhs)) {
              rep.fail("T(s . r) >= Ts . Tr", {entry("r", rel_label(fr.rels[i]), i), entry("s", rel_label(fs.rels[j]), j)});
            }
            if (!(lhs == rhs)) functor_equal = false;
          }
        }
      }
    }
  }
  rep.details["composition_equality"] = functor_equal;
  rep.details["identity_equality"] = id_equal;
  return rep;
}

CheckReport check_infi(const Theory& th, const VRel& r, const VRel& s) {
  CheckReport rep("infi");
  const auto& t = th.monad();
  const auto& q = th.quantale();
  if (t.bounded()) rep.bound = t.max_len();
  const auto nx = r.rows(), nx2 = r.cols(), ny = s.rows(), ny2 = s.cols();
  const auto tr = th.extend(r);
  const auto ts = th.extend(s);
  const auto trs = th.extend(owedge(r, s));
  const auto tx2 = t.size(nx2), ty2 = t.size(ny2);
  const auto tw = trs.rows(), tw2 = trs.cols();

  // can on both product carriers.
  auto can_table = [&](std::size_t a, std::size_t b, std::size_t count) {
    std::vector<std::pair<Index, Index>> out(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto [u, v] = t.can(t.decode(a * b, i), b);
      out[i] = {static_cast<Index>(t.encode(a, u)), static_cast<Index>(t.encode(b, v))};
    }
    return out;
  };
  const auto can_src = can_table(nx, ny, tw);
  const auto can_dst = can_table(nx2, ny2, tw2);

  const auto lx = point_labels(nx), ly = point_labels(ny, "y");
  const auto lx2 = point_labels(nx2, "x'"), ly2 = point_labels(ny2, "y'");
  std::vector<Elem> lhs(tx2 * ty2);
  for (std::size_t w = 0; w < tw; ++w) {
    std::fill(lhs.begin(), lhs.end(), q.bottom());
    for (std::size_t w2 = 0; w2 < tw2; ++w2) {
      auto& cell = lhs[can_dst[w2].first * ty2 + can_dst[w2].second];
      cell = q.join(cell, trs(w, w2));
    }
    const auto [px, py] = can_src[w];
    for (std::size_t a = 0; a < tx2; ++a) {
      for (std::size_t b = 0; b < ty2; ++b) {
        ++rep.samples;
        const Elem l = lhs[a * ty2 + b];
        const Elem rr = q.meet(tr(px, a), ts(py, b));
        if (l == rr) continue;
        auto wit = std::vector<WitnessEntry>{
            entry("r", rel_label(r), 0), entry("s", rel_label(s), 0),
            entry("w", t.format(t.decode(nx * ny, w), [&](Index p) { return "(" + lx[p / ny] + "," + ly[p % ny] + ")"; }), w),
            entry("x'", th.show(nx2, a, lx2), a), entry("y'", th.show(ny2, b, ly2), b)};
        if (!q.leq(l, rr)) {
          rep.fail("can . T(r owedge s) <= (Tr owedge Ts) . can", std::move(wit));
        } else {
          rep.fail("can . T(r owedge s) >= (Tr owedge Ts) . can", std::move(wit));
        }
        rep.details["lhs"] = q.label(l);
        rep.details["rhs"] = q.label(rr);
        return rep;
      }
    }
  }
  return rep;
}

CheckReport check_infi_all(const Theory& th, std::size_t max_carrier, std::uint64_t seed, std::size_t samples) {
  CheckReport rep("infi");
  if (th.monad().bounded()) rep.bound = th.monad().max_len();
  Rng rng(seed);
  constexpr std::uint64_t kExhaustive = 256;
  const auto& qp = th.quantale_ptr();
  std::uint64_t pairs = 0;
  for (std::size_t nx = 1; nx <= max_carrier; ++nx) {
    for (std::size_t nx2 = 1; nx2 <= max_carrier; ++nx2) {
      const auto rs = relation_family(qp, nx, nx2, kExhaustive, samples, rng);
      for (std::size_t ny = 1; ny <= max_carrier; ++ny) {
        for (std::size_t ny2 = 1; ny2 <= max_carrier; ++ny2) {
          const auto ss = relation_family(qp, ny, ny2, kExhaustive, samples, rng);
          for (const auto& r : rs) {
            for (const auto& s : ss) {
              ++pairs;
              auto part = check_infi(th, r, s);
              rep.samples += part.samples;
              if (part.failed()) {
                rep.fail(part.law, part.witness);
                rep.details["lhs"] = part.details["lhs"];
                rep.details["rhs"] = part.details["rhs"];
                rep.details["pairs"] = pairs;
                return rep;
              }
            }
          }
        }
      }
    }
  }
  rep.details["pairs"] = pairs;
  return rep;
}

CheckReport check_xi_meet(const Theory& th) {
  CheckReport rep("xi_meet");
  const auto& t = th.monad();
  const auto& q = th.quantale();
  if (t.bounded()) rep.bound = t.max_len();
  const auto nv = q.size();
  const auto n = nv * nv;
  const auto tw = t.size(n);
  bool equal = true;
  Json first_strict;
  for (std::size_t i = 0; i < tw; ++i) {
    ++rep.samples;
    const auto w = t.decode(n, i);
    const auto lhs = th.xi(t.map_elem(w, [&](Index p) { return static_cast<Index>(q.meet(p / nv, p % nv)); }));
    const auto [a, b] = t.can(w, nv);
    const auto rhs = q.meet(th.xi(a), th.xi(b));
    auto label = [&] {
      return t.format(w, [&](Index p) { return "(" + q.label(p / nv) + "," + q.label(p % nv) + ")"; });
    };
    if (!q.leq(lhs, rhs)) rep.fail("xi . T(meet) <= meet . <xi . Tpi1, xi . Tpi2>", {entry("w", label(), i)});
    if (lhs != rhs && equal) {
      equal = false;
      first_strict = {{"w", label()}, {"lhs", q.label(lhs)}, {"rhs", q.label(rhs)}};
    }
  }
  rep.details["equality"] = equal;
  if (!equal) rep.details["strict_at"] = first_strict;
  return rep;
}

CheckReport check_xi_point(const Theory& th, Elem u) {
  CheckReport rep("xi_point");
  const auto& t = th.monad();
  const auto& q = th.quantale();
  if (t.bounded()) rep.bound = t.max_len();
  const auto t1 = t.size(1);
  CheckReport ineq("xi_point_inequality");
  CheckReport eq("xi_point_equality");
  const std::vector<std::string> star{"*"};
  for (std::size_t i = 0; i < t1; ++i) {
    const auto e = t.decode(1, i);
    const auto v = th.xi(t.map_elem(e, [&](Index) { return static_cast<Index>(u); }));
    ++ineq.samples;
    ++eq.samples;
    auto wit = std::vector<WitnessEntry>{entry("u", q.label(u), u), entry("t", th.show(1, i, star), i)};
    if (!q.leq(v, u)) {
      ineq.fail("u . ! >= xi . Tu", wit);
      ineq.details["xi_Tu"] = q.label(v);
    }
    if (v != u && t1 > 1) {
      eq.fail("u . ! = xi . Tu", wit);
      eq.details["xi_Tu"] = q.label(v);
    }
  }
  if (t1 == 1) eq.details["forced"] = true;
  rep.add_part(std::move(ineq));
  rep.add_part(std::move(eq));
  return rep;
}

CheckReport check_assumption3(const Theory& th, const VRel& r, Elem u) {
  CheckReport rep("assumption3");
  const auto& t = th.monad();
  const auto& q = th.quantale();
  if (t.bounded()) rep.bound = t.max_len();
  const auto lhs = th.extend(tensor_scalar(r, u));
  const auto rhs = tensor_scalar(th.extend(r), u);
  const auto lx = point_labels(r.rows()), ly = point_labels(r.cols(), "y");
  std::uint64_t mismatches = 0;
  Json listing = Json::array();
  for (std::size_t a = 0; a < lhs.rows(); ++a) {
    for (std::size_t b = 0; b < lhs.cols(); ++b) {
      ++rep.samples;
      if (lhs(a, b) == rhs(a, b)) continue;
      ++mismatches;
      const auto xa = th.show(r.rows(), a, lx), yb = th.show(r.cols(), b, ly);
      if (listing.size() < 8) {
        listing.push_back({{"x", xa}, {"y", yb}, {"lhs", q.label(lhs(a, b))}, {"rhs", q.label(rhs(a, b))}});
      }
      if (!rep.failed()) {
        rep.fail("T(r (x) u) = Tr (x) u", {entry("r", rel_label(r), 0), entry("u", q.label(u), u), entry("x", xa, a),
                                           entry("y", yb, b)});
        rep.details["lhs"] = q.label(lhs(a, b));
        rep.details["rhs"] = q.label(rhs(a, b));
      }
    }
  }
  if (mismatches) {
    rep.details["mismatches"] = mismatches;
    rep.details["first_mismatches"] = listing;
  }
  return rep;
}

CheckReport check_assumption4(const Theory& th) {
  CheckReport rep("assumption4");
  const auto& t = th.monad();
  const auto& q = th.quantale();
  if (t.bounded()) rep.bound = t.max_len();
  const auto nv = q.size();
  const auto n = nv * nv;

  CheckReport tensor_part("tensor_is_functor");
  const auto tw = t.size(n);
  for (std::size_t i = 0; i < tw; ++i) {
    const auto w = t.decode(n, i);
    const auto [a, b] = t.can(w, nv);
    const Elem xa = th.xi(a), xb = th.xi(b);
    const Elem xt = th.xi(t.map_elem(w, [&](Index p) { return static_cast<Index>(q.tensor(p / nv, p % nv)); }));
    for (Elem u = 0; u < nv; ++u) {
      for (Elem v = 0; v < nv; ++v) {
        ++tensor_part.samples;
        const Elem lhs = q.tensor(q.hom(xa, u), q.hom(xb, v));
        const Elem rhs = q.hom(xt, q.tensor(u, v));
        if (!q.leq(lhs, rhs)) {
          tensor_part.fail("c(w,(u,v)) <= hom_xi(T(x)(w), u (x) v)",
                           {entry("w", t.format(w, [&](Index p) { return "(" + q.label(p / nv) + "," + q.label(p % nv) + ")"; }), i),
                            entry("u", q.label(u), u), entry("v", q.label(v), v)});
        }
      }
    }
  }
  rep.add_part(std::move(tensor_part));

  CheckReport point_part("pairing_is_functor");
  for (Elem u = 0; u < nv; ++u) {
    auto p = check_xi_point(th, u);
    point_part.samples += p.parts.at(0).samples;
    if (p.parts.at(0).failed()) point_part.fail(p.parts.at(0).law, p.parts.at(0).witness);
  }
  rep.add_part(std::move(point_part));
  return rep;
}

CheckReport check_assumptions_bundle(const Theory& th, std::uint64_t seed, std::size_t samples) {
  CheckReport rep("assumptions");
  const auto& t = th.monad();
  const auto& qp = th.quantale_ptr();
  if (t.bounded()) rep.bound = t.max_len();

  auto p1 = check_infi_all(th, 2, seed, samples);
  p1.check = "(1) infi";
  auto p2 = check_condition_inj(*qp);
  p2.check = "(2) inj";

  CheckReport p3("(3) tensor");
  Rng rng(seed ^ 0x5bd1e995ULL);
  for (std::size_t a = 1; a <= 2; ++a) {
    for (std::size_t b = 1; b <= 2; ++b) {
      for (const auto& r : relation_family(qp, a, b, 256, samples, rng)) {
        for (Elem u = 0; u < qp->size(); ++u) {
          auto c = check_assumption3(th, r, u);
          p3.samples += c.samples;
          if (c.failed() && !p3.failed()) {
            p3.fail(c.law, c.witness);
            p3.details = c.details;
          }
        }
      }
    }
  }
  if (p3.failed()) {
    // Constant relation r = k on one point is the canonical probe.
    p3.details["note"] = "first failing (r, u) in enumeration order";
  }
  auto p4 = check_assumption4(th);
  p4.check = "(4) functors";

  Json table = Json::object();
  for (auto* p : {&p1, &p2, &p3, &p4}) table[p->check] = to_string(p->status());
  rep.add_part(std::move(p1));
  rep.add_part(std::move(p2));
  rep.add_part(std::move(p3));
  rep.add_part(std::move(p4));
  rep.details["verdicts"] = table;
  return rep;
}

}  // namespace tvcat
