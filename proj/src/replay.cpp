// SPDX-License-Identifier: Apache-2.0
#include "tvcat/replay.hpp"

#include "tvcat/error.hpp"
#include "tvcat/theory.hpp"

namespace tvcat {
namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

template <class T>
const T& need(const T* p, const char* what) {
  if (!p) throw ArgumentError(std::string("replay needs a ") + what);
  return *p;
}

std::size_t idx(const std::vector<WitnessEntry>& w, std::size_t i, std::size_t limit) {
  if (i >= w.size() || w[i].index < 0 || static_cast<std::size_t>(w[i].index) >= limit) {
    throw ArgumentError("witness entry " + std::to_string(i) + " is missing or out of range");
  }
  return static_cast<std::size_t>(w[i].index);
}

// "[u,v;w,z]": rows separated by ';', entries by ','.
VRel parse_relation(const QuantalePtr& q, const std::string& label) {
  if (label.size() < 2 || label.front() != '[' || label.back() != ']') {
    throw ArgumentError("relation label '" + label + "' is malformed");
  }
  std::vector<std::vector<Elem>> rows(1);
  std::string cur;
  for (char c : label.substr(1, label.size() - 2) + ";") {
    if (c == ',' || c == ';') {
      rows.back().push_back(q->index_of(cur));
      cur.clear();
      if (c == ';') rows.emplace_back();
    } else {
      cur += c;
    }
  }
  rows.pop_back();
  VRel r(q, rows.size(), rows.at(0).size());
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != r.cols()) throw ArgumentError("relation label '" + label + "' is ragged");
    for (std::size_t y = 0; y < r.cols(); ++y) r.set(x, y, rows[x][y]);
  }
  return r;
}

}  // namespace

namespace {

CheckReport replay_one(const CheckReport& src, const ReplayInput& in) {
  const auto& law = src.law;
  const auto& w = src.witness;
  CheckReport rep("replay");
  rep.samples = 1;
  rep.details["law"] = law;
  auto fail_if = [&](bool holds, const Quantale& q, Elem lhs, Elem rhs) {
    rep.details["lhs"] = q.label(lhs);
    rep.details["rhs"] = q.label(rhs);
    if (!holds) rep.fail(law, w);
  };

  // Quantale-level laws.
  if (in.quantale) {
    const auto& q = *in.quantale;
    const auto n = q.size();
    auto e = [&](std::size_t i) { return static_cast<Elem>(idx(w, i, n)); };
    if (ends_with(law, "commutativity")) {
      fail_if(q.tensor(e(0), e(1)) == q.tensor(e(1), e(0)), q, q.tensor(e(0), e(1)), q.tensor(e(1), e(0)));
      return rep;
    }
    if (ends_with(law, "associativity")) {
      const auto l = q.tensor(q.tensor(e(0), e(1)), e(2)), r = q.tensor(e(0), q.tensor(e(1), e(2)));
      fail_if(l == r, q, l, r);
      return rep;
    }
    if (ends_with(law, "join preservation")) {
      const auto l = q.tensor(e(0), q.join(e(1), e(2))), r = q.join(q.tensor(e(0), e(1)), q.tensor(e(0), e(2)));
      fail_if(l == r, q, l, r);
      return rep;
    }
    if (ends_with(law, "unit") && w.size() == 1 && w[0].name == "u") {
      fail_if(q.tensor(q.unit(), e(0)) == e(0), q, q.tensor(q.unit(), e(0)), e(0));
      return rep;
    }
    if (ends_with(law, "residuation")) {
      const bool l = q.leq(q.tensor(e(0), e(1)), e(2)), r = q.leq(e(1), q.hom(e(0), e(2)));
      rep.details["lhs"] = l;
      rep.details["rhs"] = r;
      if (l != r) rep.fail(law, w);
      return rep;
    }
    if (ends_with(law, "w /\\ (u (x) v) = join{u'(x)v' <= w}")) {
      const auto u = e(0), v = e(1), c = e(2);
      Elem rhs = q.bottom();
      for (Elem u2 = 0; u2 < n; ++u2) {
        for (Elem v2 = 0; v2 < n; ++v2) {
          if (q.leq(u2, u) && q.leq(v2, v) && q.leq(q.tensor(u2, v2), c)) rhs = q.join(rhs, q.tensor(u2, v2));
        }
      }
      fail_if(rhs == q.meet(c, q.tensor(u, v)), q, q.meet(c, q.tensor(u, v)), rhs);
      return rep;
    }
  }

  // The tensor condition T(r (x) u) = Tr (x) u at one pair.
  if (ends_with(law, "T(r (x) u) = Tr (x) u")) {
    const auto& th = need(in.theory, "theory");
    const auto& q = th.quantale();
    const auto r = parse_relation(th.quantale_ptr(), w.at(0).label);
    const auto u = static_cast<Elem>(idx(w, 1, q.size()));
    const auto a = idx(w, 2, th.tsize(r.rows())), b = idx(w, 3, th.tsize(r.cols()));
    const auto l = th.extend(tensor_scalar(r, u))(a, b), rr = q.tensor(th.extend(r)(a, b), u);
    fail_if(l == rr, q, l, rr);
    return rep;
  }

  const auto& s = need(in.structure, "structure");
  const auto& q = s.quantale();
  const auto& t = s.monad();
  if (ends_with(law, "k <= a(e(x), x)")) {
    const auto x = idx(w, 0, s.size());
    fail_if(q.leq(q.unit(), s.a0(x, x)), q, q.unit(), s.a0(x, x));
    return rep;
  }
  const auto ttn = t.size(s.tsize());
  if (ends_with(law, "Ta(X,x) (x) a(x,x) <= a(m(X),x)")) {
    const auto X = idx(w, 0, ttn), tx = idx(w, 1, s.tsize()), x = idx(w, 2, s.size());
    const auto m = t.mult_elem(s.size(), t.decode(s.tsize(), X));
    if (m == kOutOfBound) throw ArgumentError("witness leaves the word-length bound");
    const auto ta = s.theory().extend(s.a());
    const auto l = q.tensor(ta(X, tx), s(tx, x)), r = s(static_cast<std::size_t>(m), x);
    fail_if(q.leq(l, r), q, l, r);
    return rep;
  }
  if (ends_with(law, "join_x (Ta(X,x) /\\ u) (x) (a(x,x) /\\ v) >= a(m(X),x) /\\ (u (x) v)")) {
    const auto X = idx(w, 0, ttn), x = idx(w, 1, s.size());
    const auto u = static_cast<Elem>(idx(w, 2, q.size())), v = static_cast<Elem>(idx(w, 3, q.size()));
    const auto m = t.mult_elem(s.size(), t.decode(s.tsize(), X));
    if (m == kOutOfBound) throw ArgumentError("witness leaves the word-length bound");
    const auto ta = s.theory().extend(s.a());
    Elem l = q.bottom();
    for (std::size_t i = 0; i < s.tsize(); ++i) l = q.join(l, q.tensor(q.meet(ta(X, i), u), q.meet(s(i, x), v)));
    const auto r = q.meet(s(static_cast<std::size_t>(m), x), q.tensor(u, v));
    fail_if(q.leq(r, l), q, l, r);
    return rep;
  }
  if (ends_with(law, "a . m = a . Ta")) {
    const auto X = idx(w, 0, ttn), x = idx(w, 1, s.size());
    const auto m = t.mult_elem(s.size(), t.decode(s.tsize(), X));
    if (m == kOutOfBound) throw ArgumentError("witness leaves the word-length bound");
    const auto ta = s.theory().extend(s.a());
    Elem r = q.bottom();
    for (std::size_t i = 0; i < s.tsize(); ++i) r = q.join(r, q.meet(ta(X, i), s(i, x)));
    const auto l = s(static_cast<std::size_t>(m), x);
    fail_if(l == r, q, l, r);
    return rep;
  }
  throw ArgumentError("no replay rule for law '" + law + "'");
}

void failing_leaves(const CheckReport& r, std::vector<const CheckReport*>& out) {
  if (!r.failed()) return;
  bool child = false;
  for (const auto& p : r.parts) {
    if (p.failed()) {
      failing_leaves(p, out);
      child = true;
    }
  }
  if (!child) out.push_back(&r);
}

}  // namespace

CheckReport replay_witness(const Json& failure, const ReplayInput& in) {
  const auto src = report_from_json(failure);
  if (!src.failed() || src.witness.empty()) throw ArgumentError("report has no witness to replay");
  std::vector<const CheckReport*> leaves;
  failing_leaves(src, leaves);
  CheckReport rep("replay");
  std::string refused;
  for (const auto* leaf : leaves) {
    if (leaf->witness.empty()) continue;
    try {
      auto r = replay_one(*leaf, in);
      r.check = leaf->check;
      rep.add_part(std::move(r));
    } catch (const ArgumentError& e) {
      if (refused.empty()) refused = e.what();
    }
  }
  if (rep.parts.empty()) throw ArgumentError(refused.empty() ? "no replayable witness" : refused);
  return rep;
}

}  // namespace tvcat
