// SPDX-License-Identifier: Apache-2.0
#include "tvcat/tvcat.h"

#include <cstring>
#include <string>

#include "tvcat/error.hpp"
#include "tvcat/exponential.hpp"
#include "tvcat/gallery.hpp"
#include "tvcat/io.hpp"
#include "tvcat/presheaf.hpp"
#include "tvcat/replay.hpp"
#include "tvcat/theory.hpp"

struct tvcat_quantale {
  tvcat::QuantalePtr q;
};
struct tvcat_theory {
  tvcat::TheoryPtr th;
};
struct tvcat_category {
  tvcat::TVStructure s;
};

namespace {

using tvcat::CheckReport;
using tvcat::Index;
using tvcat::Json;

thread_local std::string last_error;

char* dup(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

tvcat_status emit(const CheckReport& r, char** report) {
  if (report) *report = dup(tvcat::to_json(r).dump());
  return r.failed() ? TVCAT_CHECK_FAILED : TVCAT_OK;
}

template <class F>
tvcat_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const tvcat::FormatError& e) {
    last_error = e.what();
    return TVCAT_ERR_FORMAT;
  } catch (const tvcat::GuardError& e) {
    last_error = e.what();
    return TVCAT_ERR_GUARD;
  } catch (const tvcat::NotSeparated& e) {
    last_error = e.what();
    return TVCAT_ERR_NOT_SEPARATED;
  } catch (const tvcat::NotTransitive& e) {
    last_error = e.what();
    return TVCAT_ERR_NOT_TRANSITIVE;
  } catch (const tvcat::ArgumentError& e) {
    last_error = e.what();
    return TVCAT_ERR_ARGUMENT;
  } catch (const Json::exception& e) {
    last_error = e.what();
    return TVCAT_ERR_FORMAT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TVCAT_ERR_INTERNAL;
  }
}

tvcat_options resolve(const tvcat_options* opts) {
  tvcat_options o;
  tvcat_options_init(&o);
  if (opts) {
    o = *opts;
    if (o.guard == 0) o.guard = tvcat::default_guard();
  }
  return o;
}

void require(const void* p, const char* what) {
  if (!p) throw tvcat::ArgumentError(std::string(what) + " is null");
}

tvcat_category* wrap(tvcat::TVStructure s) { return new tvcat_category{std::move(s)}; }

// {"c;x": "y"} as a table on C x X.
std::vector<Index> map_table(const char* f_json, const tvcat::TVStructure& c, const tvcat::TVStructure& x,
                             const tvcat::TVStructure& y) {
  Json j;
  try {
    j = Json::parse(f_json);
  } catch (const Json::parse_error& e) {
    throw tvcat::FormatError(std::string("map: ") + e.what());
  }
  if (!j.is_object()) throw tvcat::FormatError("map: expected an object {\"c;x\": \"y\"}");
  auto find = [](const tvcat::TVStructure& s, const std::string& l) -> Index {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.label(i) == l) return static_cast<Index>(i);
    }
    throw tvcat::FormatError("map: unknown label '" + l + "'");
  };
  std::vector<std::int64_t> f(c.size() * x.size(), -1);
  for (const auto& [key, val] : j.items()) {
    const auto pos = key.rfind(';');
    if (pos == std::string::npos) throw tvcat::FormatError("map: key '" + key + "' lacks ';'");
    if (!val.is_string()) throw tvcat::FormatError("map: value for '" + key + "' is not a string");
    f[find(c, key.substr(0, pos)) * x.size() + find(x, key.substr(pos + 1))] = find(y, val.get<std::string>());
  }
  std::vector<Index> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0) {
      throw tvcat::FormatError("map: missing value at " + c.label(i / x.size()) + ";" + x.label(i % x.size()));
    }
    out.push_back(static_cast<Index>(f[i]));
  }
  return out;
}

}  // namespace

extern "C" {

void tvcat_options_init(tvcat_options* opts) {
  if (!opts) return;
  opts->seed = 1;
  opts->guard = tvcat::default_guard();
  opts->max_word_len = 2;
}

const char* tvcat_last_error(void) { return last_error.c_str(); }

void tvcat_string_free(char* s) { std::free(s); }

const char* tvcat_version(void) { return "0.1.0"; }

tvcat_status tvcat_report_to_text(const char* report_json, char** out) {
  return guarded([&] {
    require(report_json, "report");
    *out = dup(tvcat::to_text(tvcat::report_from_json(Json::parse(report_json))));
    return TVCAT_OK;
  });
}

tvcat_status tvcat_quantale_load(const char* name_or_path, tvcat_quantale** out) {
  return guarded([&] {
    require(name_or_path, "quantale name");
    *out = new tvcat_quantale{tvcat::load_quantale(name_or_path)};
    return TVCAT_OK;
  });
}

void tvcat_quantale_free(tvcat_quantale* q) { delete q; }

tvcat_status tvcat_quantale_to_json(const tvcat_quantale* q, char** out) {
  return guarded([&] {
    require(q, "quantale");
    *out = dup(tvcat::quantale_to_json(*q->q).dump());
    return TVCAT_OK;
  });
}

tvcat_status tvcat_quantale_check(const tvcat_quantale* q, char** report) {
  return guarded([&] {
    require(q, "quantale");
    CheckReport rep("quantale_suite");
    auto laws = tvcat::check_quantale(*q->q);
    const bool lawful = laws.passed();
    rep.add_part(std::move(laws));
    if (lawful) rep.add_part(tvcat::check_condition_inj(*q->q));
    rep.details["elements"] = q->q->size();
    rep.details["frame"] = lawful && q->q->is_frame();
    return emit(rep, report);
  });
}

tvcat_status tvcat_quantale_search_cond2(size_t n, const tvcat_options* opts, char** report) {
  return guarded([&] { return emit(tvcat::search_condition_inj_on_chains(n, resolve(opts).guard), report); });
}

tvcat_status tvcat_monad_check(const char* monad, size_t carrier, const tvcat_options* opts, char** report) {
  return guarded([&] {
    require(monad, "monad");
    const auto o = resolve(opts);
    const std::string text(monad);
    const auto t = tvcat::monad_from_json(text.starts_with("{") ? Json::parse(text) : Json(text), o.max_word_len);
    CheckReport rep("monad");
    rep.add_part(tvcat::check_monad_laws(*t, carrier));
    rep.add_part(tvcat::check_bc_samples(*t, carrier));
    rep.details["monad"] = t->name();
    return emit(rep, report);
  });
}

tvcat_status tvcat_theory_new(const tvcat_quantale* q, const char* monad, const tvcat_options* opts,
                              tvcat_theory** out) {
  return guarded([&] {
    require(q, "quantale");
    require(monad, "monad");
    const auto o = resolve(opts);
    const std::string text(monad);
    auto t = tvcat::monad_from_json(text.starts_with("{") ? Json::parse(text) : Json(text), o.max_word_len);
    *out = new tvcat_theory{std::make_shared<tvcat::Theory>(std::move(t), q->q)};
    return TVCAT_OK;
  });
}

void tvcat_theory_free(tvcat_theory* th) { delete th; }

tvcat_status tvcat_theory_check_assumptions(const tvcat_theory* th, const tvcat_options* opts, char** report) {
  return guarded([&] {
    require(th, "theory");
    return emit(tvcat::check_assumptions_bundle(*th->th, resolve(opts).seed), report);
  });
}

tvcat_status tvcat_category_load(const char* path, const tvcat_options* opts, tvcat_category** out) {
  return guarded([&] {
    require(path, "path");
    *out = wrap(tvcat::load_category(path, resolve(opts).max_word_len));
    return TVCAT_OK;
  });
}

void tvcat_category_free(tvcat_category* c) { delete c; }

size_t tvcat_category_size(const tvcat_category* c) { return c ? c->s.size() : 0; }

tvcat_status tvcat_category_to_json(const tvcat_category* c, char** out) {
  return guarded([&] {
    require(c, "category");
    *out = dup(tvcat::category_to_json(c->s).dump());
    return TVCAT_OK;
  });
}

tvcat_status tvcat_category_check(const tvcat_category* c, const char* check, const tvcat_options* opts,
                                  char** report) {
  return guarded([&] {
    require(c, "category");
    require(check, "check name");
    const auto o = resolve(opts);
    auto r = tvcat::run_named_check(c->s, check, o.seed, o.guard);
    if (r.verdict == "guard") throw tvcat::GuardError(r.report.details.value("reason", std::string("guard")));
    if (r.verdict == "n/a") throw tvcat::ArgumentError(r.report.details.value("reason", std::string("n/a")));
    return emit(r.report, report);
  });
}

tvcat_status tvcat_category_product(const tvcat_category* x, const tvcat_category* y, tvcat_category** out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    *out = wrap(tvcat::product(x->s, y->s));
    return TVCAT_OK;
  });
}

tvcat_status tvcat_category_tensor(const tvcat_category* x, const tvcat_category* y, tvcat_category** out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    *out = wrap(tvcat::tensor(x->s, y->s));
    return TVCAT_OK;
  });
}

tvcat_status tvcat_category_coproduct(const tvcat_category* x, const tvcat_category* y, tvcat_category** out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    *out = wrap(tvcat::coproduct(x->s, y->s));
    return TVCAT_OK;
  });
}

tvcat_status tvcat_category_reflect(const tvcat_category* x, tvcat_category** out, char** report) {
  return guarded([&] {
    require(x, "x");
    *out = wrap(tvcat::reflect_R(x->s).rx);
    return emit(tvcat::check_reflection(x->s), report);
  });
}

tvcat_status tvcat_category_dual(const tvcat_category* x, tvcat_category** out) {
  return guarded([&] {
    require(x, "x");
    *out = wrap(tvcat::dual(x->s));
    return TVCAT_OK;
  });
}

tvcat_status tvcat_exp_build(const tvcat_category* x, const tvcat_category* y, const tvcat_options* opts,
                             tvcat_category** out, char** report) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    const auto o = resolve(opts);
    *out = nullptr;
    try {
      auto e = tvcat::exponential_in_cats(x->s, y->s, o.guard);
      CheckReport rep("exponential");
      rep.details["size"] = e.z.size();
      *out = wrap(std::move(e.z));
      return emit(rep, report);
    } catch (const tvcat::NotTransitive& e) {
      last_error = e.what();
      return emit(e.report, report);
    }
  });
}

tvcat_status tvcat_exp_criterion(const tvcat_category* x, char** report) {
  return guarded([&] {
    require(x, "x");
    if (x->s.quantale().is_frame()) return emit(tvcat::check_frame_criterion(x->s), report);
    return emit(tvcat::check_exponentiability(x->s), report);
  });
}

tvcat_status tvcat_exp_curry(const tvcat_category* c, const tvcat_category* x, const tvcat_category* y,
                             const char* f_json, const tvcat_options* opts, char** report) {
  return guarded([&] {
    require(c, "c");
    require(x, "x");
    require(y, "y");
    const auto o = resolve(opts);
    const auto e = tvcat::exponential_in_cats(x->s, y->s, o.guard);
    if (!f_json) return emit(tvcat::check_universal_property(e, x->s, y->s, {c->s}, o.guard), report);
    const auto f = map_table(f_json, c->s, x->s, y->s);
    auto cur = tvcat::curry(c->s, x->s, y->s, f, e);
    if (cur.report.passed()) {
      Json m = Json::object();
      for (std::size_t i = 0; i < c->s.size(); ++i) m[c->s.label(i)] = e.z.label(cur.map[i]);
      cur.report.details["f_bar"] = m;
    }
    return emit(cur.report, report);
  });
}

tvcat_status tvcat_psh_build(const tvcat_category* x, const tvcat_options* opts, tvcat_category** out,
                             char** report) {
  return guarded([&] {
    require(x, "x");
    auto p = tvcat::build_presheaf_category(x->s, resolve(opts).guard);
    auto rep = tvcat::check_category(p.px);
    rep.details["PX"] = p.px.size();
    rep.details["nodes"] = p.nodes;
    *out = wrap(std::move(p.px));
    return emit(rep, report);
  });
}

tvcat_status tvcat_psh_yoneda(const tvcat_category* x, const tvcat_options* opts, char** report) {
  return guarded([&] {
    require(x, "x");
    const auto o = resolve(opts);
    auto rep = tvcat::check_yoneda(x->s, tvcat::build_presheaf_category(x->s, o.guard));
    rep.details["guard"] = o.guard;
    return emit(rep, report);
  });
}

tvcat_status tvcat_psh_injective(const tvcat_category* x, const tvcat_options* opts, char** report) {
  return guarded([&] {
    require(x, "x");
    const auto o = resolve(opts);
    auto rep = tvcat::certify_injective(x->s, o.guard);
    rep.details["guard"] = o.guard;
    return emit(rep, report);
  });
}

tvcat_status tvcat_psh_weak_exp(const tvcat_category* z, const tvcat_category* x, const tvcat_category* y,
                                const char* f_json, const tvcat_options* opts, char** report) {
  return guarded([&] {
    require(z, "z");
    require(x, "x");
    require(y, "y");
    const auto o = resolve(opts);
    if (f_json) {
      return emit(tvcat::weak_factorize_general(z->s, x->s, y->s, map_table(f_json, z->s, x->s, y->s), o.guard),
                  report);
    }
    CheckReport rep("weak_exponential");
    const auto zx = tvcat::product(z->s, x->s);
    std::uint64_t functors = 0;
    for (const auto& f : tvcat::all_maps(zx.size(), y->s.size(), o.guard)) {
      if (tvcat::check_functor(zx, y->s, f).failed()) continue;
      ++functors;
      ++rep.samples;
      auto r = tvcat::weak_factorize_general(z->s, x->s, y->s, f, o.guard);
      if (r.failed()) {
        rep.add_part(std::move(r));
        break;
      }
    }
    rep.details["functors"] = functors;
    rep.details["guard"] = o.guard;
    return emit(rep, report);
  });
}

tvcat_status tvcat_gallery_run(const char* manifest, const tvcat_options* opts, char** report) {
  return guarded([&] {
    require(manifest, "manifest");
    const auto o = resolve(opts);
    bool ok = false;
    auto j = tvcat::run_gallery(manifest, o.seed, o.guard, &ok);
    if (report) *report = dup(j.dump());
    return ok ? TVCAT_OK : TVCAT_CHECK_FAILED;
  });
}

tvcat_status tvcat_replay(const char* report_json, const tvcat_quantale* q, const tvcat_theory* th,
                          const tvcat_category* c, char** report) {
  return guarded([&] {
    require(report_json, "report");
    Json j;
    try {
      j = Json::parse(report_json);
    } catch (const Json::parse_error& e) {
      throw tvcat::FormatError(std::string("replay: ") + e.what());
    }
    if (j.contains("report")) j = j["report"];
    tvcat::ReplayInput in;
    if (c) {
      in.structure = &c->s;
      in.theory = &c->s.theory();
      in.quantale = &c->s.quantale();
    }
    if (th) {
      in.theory = th->th.get();
      in.quantale = &th->th->quantale();
    }
    if (q) in.quantale = q->q.get();
    return emit(tvcat::replay_witness(j, in), report);
  });
}

}  // extern "C"
