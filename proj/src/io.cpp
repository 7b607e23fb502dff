// SPDX-License-Identifier: Apache-2.0
#include "tvcat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "tvcat/error.hpp"

namespace tvcat {
namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(where + ": missing field '" + key + "'");
  return *it;
}

std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) throw FormatError(where + ": expected a string, got " + j.dump());
  return j.get<std::string>();
}

std::vector<std::string> strings(const Json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(str(v, where));
  return out;
}

Index lookup(const std::vector<std::string>& labels, const std::string& s, const std::string& where) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == s) return static_cast<Index>(i);
  }
  throw FormatError(where + ": unknown label '" + s + "'");
}

void unique_labels(const std::vector<std::string>& labels, const std::string& where) {
  std::map<std::string, int> seen;
  for (const auto& l : labels) {
    if (seen[l]++) throw FormatError(where + ": duplicate label '" + l + "'");
  }
}

std::pair<std::string, std::string> split_last(const std::string& key, char sep, const std::string& where) {
  const auto pos = key.rfind(sep);
  if (pos == std::string::npos) throw FormatError(where + ": key '" + key + "' lacks '" + sep + "'");
  return {key.substr(0, pos), key.substr(pos + 1)};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "(a,b)" written form of a T-element key.
TElem telem_from_key(const Monad& t, const std::string& s, const std::vector<std::string>& carrier,
                     const std::string& where) {
  if (t.trivial()) return {lookup(carrier, s, where)};
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw FormatError(where + ": T-element '" + s + "' should be parenthesized");
  }
  const auto inner = s.substr(1, s.size() - 2);
  if (t.kind() == MonadKind::Word) {
    TElem w;
    if (!inner.empty()) {
      for (const auto& part : split(inner, ',')) w.push_back(lookup(carrier, part, where));
    }
    return w;
  }
  const auto [x, h] = split_last(inner, ',', where);
  return {lookup(carrier, x, where), lookup(t.monoid().labels, h, where)};
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

QuantalePtr quantale_from_json(const Json& j, const std::string& name) {
  const std::string where = "quantale " + name;
  const auto labels = strings(field(j, "elements", where), where + " elements");
  for (const auto& l : labels) {
    if (l.find(',') != std::string::npos) throw FormatError(where + ": element '" + l + "' contains ','");
  }
  unique_labels(labels, where);
  const auto n = labels.size();
  if (n == 0 || n > Quantale::kMaxElements) throw FormatError(where + ": element count out of range");

  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  const auto& order = field(j, "order", where);
  if (!order.is_array()) throw FormatError(where + ": order must be an array of pairs");
  for (const auto& pr : order) {
    if (!pr.is_array() || pr.size() != 2) throw FormatError(where + ": order entry " + pr.dump() + " is not a pair");
    leq[lookup(labels, str(pr[0], where), where) * n + lookup(labels, str(pr[1], where), where)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t m = 0; m < n; ++m) {
        if (leq[k * n + m]) leq[i * n + m] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = i + 1; m < n; ++m) {
      if (leq[i * n + m] && leq[m * n + i]) {
        throw FormatError(where + ": order is not antisymmetric at " + labels[i] + ", " + labels[m]);
      }
    }
  }

  std::vector<int> tensor(n * n, -1);
  const auto& tj = field(j, "tensor", where);
  if (!tj.is_object()) throw FormatError(where + ": tensor must be an object");
  for (const auto& [key, val] : tj.items()) {
    const auto [a, b] = split_last(key, ',', where + " tensor");
    const auto ia = lookup(labels, a, where), ib = lookup(labels, b, where);
    const int v = lookup(labels, str(val, where), where);
    for (auto idx : {ia * n + ib, ib * n + ia}) {
      if (tensor[idx] >= 0 && tensor[idx] != v) throw FormatError(where + ": conflicting tensor entries for " + key);
      tensor[idx] = v;
    }
  }
  std::vector<Elem> tt(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (tensor[i] < 0) throw FormatError(where + ": tensor missing " + labels[i / n] + "," + labels[i % n]);
    tt[i] = static_cast<Elem>(tensor[i]);
  }
  const auto unit = static_cast<Elem>(lookup(labels, str(field(j, "unit", where), where), where));
  return std::make_shared<Quantale>(name, labels, std::move(leq), std::move(tt), unit);
}

Json quantale_to_json(const Quantale& q) {
  const auto n = q.size();
  Json j;
  j["elements"] = q.labels();
  Json order = Json::array();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !q.leq(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) {
        cover = c == a || c == b || !(q.leq(a, c) && q.leq(c, b));
      }
      if (cover) order.push_back({q.label(a), q.label(b)});
    }
  }
  j["order"] = order;
  Json tensor = Json::object();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) tensor[q.label(a) + "," + q.label(b)] = q.label(q.tensor(a, b));
  }
  j["tensor"] = tensor;
  j["unit"] = q.label(q.unit());
  return j;
}

QuantalePtr load_quantale(const std::string& name_or_path, const std::filesystem::path& base) {
  std::filesystem::path p(name_or_path);
  if (p.is_relative() && !base.empty() && std::filesystem::exists(base / p)) p = base / p;
  if (std::filesystem::exists(p)) return quantale_from_json(read_json_file(p), p.stem().string());
  if (auto q = builtin_quantale(name_or_path)) return q;
  throw FormatError("quantale '" + name_or_path + "': no such file or builtin");
}

MonadPtr monad_from_json(const Json& j, int default_len) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "word") return std::make_shared<Monad>(Monad::word(default_len));
    return monad_from_spec(s);
  }
  const std::string where = "monad";
  const auto kind = str(field(j, "kind", where), where);
  if (kind == "identity") return std::make_shared<Monad>(Monad::identity());
  if (kind == "finite_ultrafilter" || kind == "ultrafilter") return std::make_shared<Monad>(Monad::finite_ultrafilter());
  if (kind == "word") {
    int len = default_len;
    if (j.contains("max_len")) {
      if (!j["max_len"].is_number_integer()) throw FormatError("monad: max_len must be an integer");
      len = j["max_len"].get<int>();
    }
    try {
      return std::make_shared<Monad>(Monad::word(len));
    } catch (const ArgumentError& e) {
      throw FormatError(std::string("monad: ") + e.what());
    }
  }
  if (kind == "labelled") {
    const auto& mj = field(j, "monoid", where);
    Monoid h;
    h.labels = strings(field(mj, "elements", "monoid"), "monoid elements");
    unique_labels(h.labels, "monoid");
    const auto& tab = field(mj, "table", "monoid");
    if (!tab.is_array() || tab.size() != h.size()) throw FormatError("monoid: table must have one row per element");
    for (const auto& row : tab) {
      if (!row.is_array() || row.size() != h.size()) throw FormatError("monoid: table row " + row.dump() + " has wrong length");
      for (const auto& v : row) h.table.push_back(lookup(h.labels, str(v, "monoid table"), "monoid table"));
    }
    h.unit = lookup(h.labels, str(field(mj, "unit", "monoid"), "monoid unit"), "monoid unit");
    return std::make_shared<Monad>(Monad::labelled(std::move(h)));
  }
  throw FormatError("monad: unknown kind '" + kind + "'");
}

Json monad_to_json(const Monad& t) {
  Json j;
  switch (t.kind()) {
    case MonadKind::Identity: j["kind"] = "identity"; break;
    case MonadKind::FiniteUltrafilter: j["kind"] = "finite_ultrafilter"; break;
    case MonadKind::Word:
      j["kind"] = "word";
      j["max_len"] = t.max_len();
      break;
    case MonadKind::Labelled: {
      j["kind"] = "labelled";
      const auto& h = t.monoid();
      Json table = Json::array();
      for (Index a = 0; a < h.size(); ++a) {
        Json row = Json::array();
        for (Index b = 0; b < h.size(); ++b) row.push_back(h.labels[h.mul(a, b)]);
        table.push_back(row);
      }
      j["monoid"] = {{"elements", h.labels}, {"table", table}, {"unit", h.labels[h.unit]}};
      break;
    }
  }
  return j;
}

TElem telem_from_json(const Monad& t, const Json& j, const std::vector<std::string>& carrier) {
  const std::string where = "T-element " + j.dump();
  switch (t.kind()) {
    case MonadKind::Identity:
    case MonadKind::FiniteUltrafilter:
      return {lookup(carrier, str(j, where), where)};
    case MonadKind::Word: {
      TElem w;
      for (const auto& s : strings(j, where)) w.push_back(lookup(carrier, s, where));
      if (static_cast<int>(w.size()) > t.max_len()) throw FormatError(where + ": longer than the word bound");
      return w;
    }
    case MonadKind::Labelled: {
      if (!j.is_array() || j.size() != 2) throw FormatError(where + ": expected a pair [x, h]");
      return {lookup(carrier, str(j[0], where), where), lookup(t.monoid().labels, str(j[1], where), where)};
    }
  }
  return {};
}

Json telem_to_json(const Monad& t, const TElem& e, const std::vector<std::string>& carrier) {
  switch (t.kind()) {
    case MonadKind::Identity:
    case MonadKind::FiniteUltrafilter:
      return carrier.at(e.at(0));
    case MonadKind::Word: {
      Json a = Json::array();
      for (Index x : e) a.push_back(carrier.at(x));
      return a;
    }
    case MonadKind::Labelled:
      return Json::array({carrier.at(e.at(0)), t.monoid().labels.at(e.at(1))});
  }
  return {};
}

TVStructure category_from_json(const Json& j, const std::filesystem::path& base, int default_len) {
  const std::string where = "category";
  const auto& qj = field(j, "quantale", where);
  QuantalePtr q = qj.is_object() ? quantale_from_json(qj, "inline") : load_quantale(str(qj, where), base);
  auto t = monad_from_json(field(j, "monad", where), default_len);
  auto carrier = strings(field(j, "carrier", where), where + " carrier");
  unique_labels(carrier, where + " carrier");
  auto th = std::make_shared<Theory>(t, q);
  const auto n = carrier.size();
  VRel a(q, th->tsize(n), n);
  auto put = [&](const TElem& e, const std::string& x, const Json& v) {
    const auto i = t->encode(n, e);
    a.set(i, lookup(carrier, x, where), q->index_of(str(v, where)));
  };
  if (j.contains("structure")) {
    const auto& sj = j["structure"];
    if (sj.is_object()) {
      for (const auto& [key, val] : sj.items()) {
        const auto [te, x] = split_last(key, ';', where + " structure");
        put(telem_from_key(*t, te, carrier, where + " structure key '" + key + "'"), x, val);
      }
    } else if (sj.is_array()) {
      for (const auto& tr : sj) {
        if (!tr.is_array() || tr.size() != 3) throw FormatError(where + ": structure entry " + tr.dump() + " is not a triple");
        put(telem_from_json(*t, tr[0], carrier), str(tr[1], where), tr[2]);
      }
    } else {
      throw FormatError(where + ": structure must be an object or an array");
    }
  }
  return TVStructure(th, std::move(carrier), std::move(a));
}

Json category_to_json(const TVStructure& s) {
  Json j;
  j["quantale"] = quantale_to_json(s.quantale());
  j["monad"] = monad_to_json(s.monad());
  j["carrier"] = s.carrier();
  Json st = Json::array();
  const auto bot = s.quantale().bottom();
  for (std::size_t i = 0; i < s.tsize(); ++i) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (s(i, x) == bot) continue;
      st.push_back({telem_to_json(s.monad(), s.monad().decode(s.size(), i), s.carrier()), s.label(x),
                    s.quantale().label(s(i, x))});
    }
  }
  j["structure"] = st;
  return j;
}

TVStructure load_category(const std::filesystem::path& path, int default_len) {
  try {
    return category_from_json(read_json_file(path), path.parent_path(), default_len);
  } catch (const FormatError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw FormatError(path.string() + ": " + msg);
  }
}

VRel relation_from_json(const QuantalePtr& q, const Json& j, std::vector<std::string>* rows,
                        std::vector<std::string>* cols) {
  const std::string where = "relation";
  const auto r = strings(field(j, "rows", where), where + " rows");
  const auto c = strings(field(j, "cols", where), where + " cols");
  VRel out(q, r.size(), c.size());
  if (j.contains("entries")) {
    for (const auto& [key, val] : j["entries"].items()) {
      const auto [x, y] = split_last(key, ';', where);
      out.set(lookup(r, x, where), lookup(c, y, where), q->index_of(str(val, where)));
    }
  }
  if (rows) *rows = r;
  if (cols) *cols = c;
  return out;
}

}  // namespace tvcat
