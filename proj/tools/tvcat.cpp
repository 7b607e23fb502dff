// SPDX-License-Identifier: Apache-2.0
// Command-line front end. Links only the C API.
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tvcat/tvcat.h"

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 1;
  int max_word_len = 2;
  std::uint64_t guard = 0;
  std::string replay;
};

struct CString {
  char* p = nullptr;
  ~CString() { tvcat_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Cat {
  tvcat_category* p = nullptr;
  Cat() = default;
  Cat(const Cat&) = delete;
  ~Cat() { tvcat_category_free(p); }
};

struct Quant {
  tvcat_quantale* p = nullptr;
  ~Quant() { tvcat_quantale_free(p); }
};

struct Th {
  tvcat_theory* p = nullptr;
  ~Th() { tvcat_theory_free(p); }
};

// Error raised when an API call returns an error status.
struct Failure {
  tvcat_status status;
  std::string message;
};

const char* status_name(tvcat_status s) {
  switch (s) {
    case TVCAT_OK: return "ok";
    case TVCAT_CHECK_FAILED: return "check-failed";
    case TVCAT_ERR_FORMAT: return "format";
    case TVCAT_ERR_GUARD: return "guard";
    case TVCAT_ERR_ARGUMENT: return "argument";
    case TVCAT_ERR_NOT_SEPARATED: return "not-separated";
    case TVCAT_ERR_NOT_TRANSITIVE: return "not-transitive";
    case TVCAT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

tvcat_status call(tvcat_status s) {
  if (s != TVCAT_OK && s != TVCAT_CHECK_FAILED) throw Failure{s, tvcat_last_error()};
  return s;
}

class Runner {
 public:
  explicit Runner(const Globals& g) : g_(g) {
    tvcat_options_init(&opts_);
    opts_.seed = g.seed;
    opts_.max_word_len = g.max_word_len;
    if (g.guard) opts_.guard = g.guard;
  }

  const tvcat_options* opts() const { return &opts_; }

  void load(Cat& c, const std::string& path) { call(tvcat_category_load(path.c_str(), &opts_, &c.p)); }

  // Prints a report (and an optional resulting structure); returns the exit code.
  int finish(const std::string& command, tvcat_status s, const CString& report, const tvcat_category* result = nullptr) {
    Json out;
    out["schema"] = 1;
    out["command"] = command;
    out["status"] = s == TVCAT_OK ? "ok" : "check-failed";
    if (report.p) out["report"] = Json::parse(report.p);
    if (result) {
      CString cj;
      call(tvcat_category_to_json(result, &cj.p));
      out["result"] = Json::parse(cj.p);
    }
    if (g_.format == "json") {
      std::cout << out.dump(2) << "\n";
    } else {
      if (report.p) {
        CString text;
        call(tvcat_report_to_text(report.p, &text.p));
        std::cout << text.str();
      }
      if (result) std::cout << out["result"].dump(2) << "\n";
    }
    return s == TVCAT_OK ? 0 : 1;
  }

  int replay(const std::string& command, const tvcat_quantale* q, const tvcat_theory* th, const tvcat_category* c) {
    std::ifstream in(g_.replay);
    if (!in) throw Failure{TVCAT_ERR_FORMAT, g_.replay + ": cannot open replay file"};
    std::stringstream ss;
    ss << in.rdbuf();
    CString rep;
    const auto s = call(tvcat_replay(ss.str().c_str(), q, th, c, &rep.p));
    return finish(command + " --replay", s, rep);
  }

  bool replaying() const { return !g_.replay.empty(); }
  const Globals& globals() const { return g_; }

 private:
  Globals g_;
  tvcat_options opts_{};
};

std::string read_map(const std::string& arg) {
  if (arg.empty() || arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw Failure{TVCAT_ERR_FORMAT, arg + ": cannot open map file"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string default_manifest() {
  if (const char* env = std::getenv("TVCAT_DATA_DIR")) return std::string(env) + "/gallery/manifest.json";
  std::ifstream local("data/gallery/manifest.json");
  if (local) return "data/gallery/manifest.json";
  return std::string(TVCAT_DEFAULT_DATA_DIR) + "/gallery/manifest.json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite (T,V)-category laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Sampling seed");
  app.add_option("--max-word-len", g.max_word_len, "Length bound for word monads given without one");
  app.add_option("--guard-size", g.guard, "Size guard for enumerations and searches");
  app.add_option("--replay", g.replay, "Re-evaluate the witness of a saved failure report");

  std::function<int(Runner&)> action;
  auto on = [&](CLI::App* sub, std::function<int(Runner&)> f) { sub->callback([&action, f] { action = f; }); };

  // quantale
  auto* quantale = app.add_subcommand("quantale", "Quantale checks")->require_subcommand(1);
  std::string qname;
  auto* qcheck = quantale->add_subcommand("check", "Quantale laws and the injectivity condition");
  qcheck->add_option("quantale", qname, "Quantale file or builtin name")->required();
  on(qcheck, [&](Runner& r) {
    Quant q;
    call(tvcat_quantale_load(qname.c_str(), &q.p));
    if (r.replaying()) return r.replay("quantale check", q.p, nullptr, nullptr);
    CString rep;
    return r.finish("quantale check", call(tvcat_quantale_check(q.p, &rep.p)), rep);
  });
  std::size_t chain_n = 3;
  auto* qsearch = quantale->add_subcommand("search-cond2", "Search commutative quantales on chains for violations");
  qsearch->add_option("--n", chain_n, "Chain length");
  on(qsearch, [&](Runner& r) {
    CString rep;
    return r.finish("quantale search-cond2", call(tvcat_quantale_search_cond2(chain_n, r.opts(), &rep.p)), rep);
  });

  // monad
  auto* monad = app.add_subcommand("monad", "Monad checks")->require_subcommand(1);
  std::string mspec;
  std::size_t carrier = 2;
  auto* mcheck = monad->add_subcommand("check", "Monad laws and Beck-Chevalley samples");
  mcheck->add_option("monad", mspec, "identity, ultrafilter, word:L, labelled:zN or a JSON fragment")->required();
  mcheck->add_option("--carrier", carrier, "Carrier size");
  on(mcheck, [&](Runner& r) {
    CString rep;
    return r.finish("monad check", call(tvcat_monad_check(mspec.c_str(), carrier, r.opts(), &rep.p)), rep);
  });

  // theory
  auto* theory = app.add_subcommand("theory", "Topological theory checks")->require_subcommand(1);
  std::string tq, tm;
  auto* assumptions = theory->add_subcommand("check-assumptions", "The four standing assumptions");
  assumptions->add_option("--quantale", tq, "Quantale file or builtin name")->required();
  assumptions->add_option("--monad", tm, "Monad spec")->required();
  on(assumptions, [&](Runner& r) {
    Quant q;
    call(tvcat_quantale_load(tq.c_str(), &q.p));
    Th th;
    call(tvcat_theory_new(q.p, tm.c_str(), r.opts(), &th.p));
    if (r.replaying()) return r.replay("theory check-assumptions", nullptr, th.p, nullptr);
    CString rep;
    return r.finish("theory check-assumptions", call(tvcat_theory_check_assumptions(th.p, r.opts(), &rep.p)), rep);
  });

  // cat
  auto* cat = app.add_subcommand("cat", "(T,V)-categories")->require_subcommand(1);
  std::string f1, f2, f3, check_name = "category", map_arg;
  auto* ccheck = cat->add_subcommand("check", "Run a named check on a structure");
  ccheck->add_option("file", f1, "Category file")->required();
  ccheck->add_option("--check", check_name, "Check name");
  on(ccheck, [&](Runner& r) {
    Cat c;
    r.load(c, f1);
    if (r.replaying()) return r.replay("cat check", nullptr, nullptr, c.p);
    CString rep;
    return r.finish("cat check", call(tvcat_category_check(c.p, check_name.c_str(), r.opts(), &rep.p)), rep);
  });
  auto binary = [&](const char* name, const char* help, tvcat_status (*op)(const tvcat_category*, const tvcat_category*,
                                                                             tvcat_category**)) {
    auto* sub = cat->add_subcommand(name, help);
    sub->add_option("x", f1, "First category file")->required();
    sub->add_option("y", f2, "Second category file")->required();
    on(sub, [&, name, op](Runner& r) {
      Cat x, y, out;
      r.load(x, f1);
      r.load(y, f2);
      call(op(x.p, y.p, &out.p));
      CString rep;
      const auto s = call(tvcat_category_check(out.p, "category", r.opts(), &rep.p));
      return r.finish(std::string("cat ") + name, s, rep, out.p);
    });
  };
  binary("product", "Cartesian product", tvcat_category_product);
  binary("tensor", "Tensor product", tvcat_category_tensor);
  binary("coproduct", "Coproduct", tvcat_category_coproduct);
  auto* reflect = cat->add_subcommand("reflect", "Separated reflection");
  reflect->add_option("file", f1, "Category file")->required();
  on(reflect, [&](Runner& r) {
    Cat x, out;
    r.load(x, f1);
    CString rep;
    const auto s = call(tvcat_category_reflect(x.p, &out.p, &rep.p));
    return r.finish("cat reflect", s, rep, out.p);
  });
  auto* dualc = cat->add_subcommand("dual", "Dual structure on TX");
  dualc->add_option("file", f1, "Category file")->required();
  on(dualc, [&](Runner& r) {
    Cat x, out;
    r.load(x, f1);
    call(tvcat_category_dual(x.p, &out.p));
    CString rep;
    const auto s = call(tvcat_category_check(out.p, "category", r.opts(), &rep.p));
    return r.finish("cat dual", s, rep, out.p);
  });
  auto* represent = cat->add_subcommand("represent", "Search for a representation alpha : TX -> X");
  represent->add_option("file", f1, "Category file")->required();
  on(represent, [&](Runner& r) {
    Cat x;
    r.load(x, f1);
    CString rep;
    return r.finish("cat represent", call(tvcat_category_check(x.p, "representable", r.opts(), &rep.p)), rep);
  });

  // exp
  auto* exp = app.add_subcommand("exp", "Exponentials")->require_subcommand(1);
  auto* ebuild = exp->add_subcommand("build", "The exponential <X,Y>");
  ebuild->add_option("x", f1, "X")->required();
  ebuild->add_option("y", f2, "Y")->required();
  on(ebuild, [&](Runner& r) {
    Cat x, y, out;
    r.load(x, f1);
    r.load(y, f2);
    CString rep;
    const auto s = call(tvcat_exp_build(x.p, y.p, r.opts(), &out.p, &rep.p));
    return r.finish("exp build", s, rep, out.p);
  });
  auto* ecrit = exp->add_subcommand("criterion", "Exponentiability criterion");
  ecrit->alias("check-criterion");
  ecrit->add_option("x", f1, "X")->required();
  on(ecrit, [&](Runner& r) {
    Cat x;
    r.load(x, f1);
    if (r.replaying()) return r.replay("exp criterion", nullptr, nullptr, x.p);
    CString rep;
    return r.finish("exp criterion", call(tvcat_exp_criterion(x.p, &rep.p)), rep);
  });
  auto* ecurry = exp->add_subcommand("curry", "Curry f : C x X -> Y");
  ecurry->add_option("c", f1, "C")->required();
  ecurry->add_option("x", f2, "X")->required();
  ecurry->add_option("y", f3, "Y")->required();
  ecurry->add_option("--map", map_arg, "JSON object {\"c;x\": \"y\"} or a file; omitted: every functor");
  on(ecurry, [&](Runner& r) {
    Cat c, x, y;
    r.load(c, f1);
    r.load(x, f2);
    r.load(y, f3);
    const auto m = read_map(map_arg);
    CString rep;
    return r.finish("exp curry", call(tvcat_exp_curry(c.p, x.p, y.p, m.empty() ? nullptr : m.c_str(), r.opts(), &rep.p)),
                    rep);
  });

  // psh
  auto* psh = app.add_subcommand("psh", "Presheaves")->require_subcommand(1);
  auto* pbuild = psh->add_subcommand("build", "PX");
  pbuild->add_option("x", f1, "X")->required();
  on(pbuild, [&](Runner& r) {
    Cat x, out;
    r.load(x, f1);
    CString rep;
    const auto s = call(tvcat_psh_build(x.p, r.opts(), &out.p, &rep.p));
    return r.finish("psh build", s, rep, out.p);
  });
  auto* pyoneda = psh->add_subcommand("yoneda", "Yoneda embedding");
  pyoneda->add_option("x", f1, "X")->required();
  on(pyoneda, [&](Runner& r) {
    Cat x;
    r.load(x, f1);
    CString rep;
    return r.finish("psh yoneda", call(tvcat_psh_yoneda(x.p, r.opts(), &rep.p)), rep);
  });
  auto* pinj = psh->add_subcommand("injective", "Certify injectivity through Sup");
  pinj->add_option("x", f1, "X")->required();
  on(pinj, [&](Runner& r) {
    Cat x;
    r.load(x, f1);
    CString rep;
    return r.finish("psh injective", call(tvcat_psh_injective(x.p, r.opts(), &rep.p)), rep);
  });
  auto* pweak = psh->add_subcommand("weak-exp", "Weak factorization through <<X,Y>>");
  pweak->add_option("z", f1, "Z")->required();
  pweak->add_option("x", f2, "X")->required();
  pweak->add_option("y", f3, "Y")->required();
  pweak->add_option("--map", map_arg, "JSON object {\"z;x\": \"y\"} or a file; omitted: every functor");
  on(pweak, [&](Runner& r) {
    Cat z, x, y;
    r.load(z, f1);
    r.load(x, f2);
    r.load(y, f3);
    const auto m = read_map(map_arg);
    CString rep;
    return r.finish("psh weak-exp",
                    call(tvcat_psh_weak_exp(z.p, x.p, y.p, m.empty() ? nullptr : m.c_str(), r.opts(), &rep.p)), rep);
  });

  // gallery
  auto* gallery = app.add_subcommand("gallery", "Regression gallery")->require_subcommand(1);
  std::string manifest;
  auto* grun = gallery->add_subcommand("run", "Run every gallery entry against its expected verdicts");
  grun->add_option("--manifest", manifest, "Manifest path");
  on(grun, [&](Runner& r) {
    if (manifest.empty()) manifest = default_manifest();
    CString rep;
    const auto s = call(tvcat_gallery_run(manifest.c_str(), r.opts(), &rep.p));
    const auto j = Json::parse(rep.p);
    if (r.globals().format == "json") {
      Json out;
      out["schema"] = 1;
      out["command"] = "gallery run";
      out["status"] = s == TVCAT_OK ? "ok" : "check-failed";
      out["report"] = j;
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& e : j["entries"]) {
        std::cout << e["name"].get<std::string>() << " (" << e["quantale"].get<std::string>() << ", "
                  << e["monad"].get<std::string>() << ")\n";
        for (const auto& st : e["structures"]) {
          std::cout << "  " << st["file"].get<std::string>() << "\n";
          for (const auto& c : st["checks"]) {
            std::cout << "    " << (c["match"].get<bool>() ? "ok  " : "DIFF") << " " << c["check"].get<std::string>()
                      << ": " << c["actual"].get<std::string>();
            if (!c["match"].get<bool>()) std::cout << " (expected " << c["expected"].get<std::string>() << ")";
            std::cout << "\n";
          }
        }
      }
      std::cout << j["checks"].get<int>() << " checks, " << j["mismatches"].get<int>() << " mismatches\n";
    }
    return s == TVCAT_OK ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  Runner runner(g);
  try {
    return action(runner);
  } catch (const Failure& f) {
    std::cerr << "error (" << status_name(f.status) << "): " << f.message << "\n";
    if (g.format == "json") {
      Json out;
      out["schema"] = 1;
      out["error"] = {{"code", status_name(f.status)}, {"message", f.message}};
      std::cout << out.dump(2) << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
