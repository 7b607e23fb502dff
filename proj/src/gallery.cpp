// SPDX-License-Identifier: Apache-2.0
#include "tvcat/gallery.hpp"

#include "tvcat/error.hpp"
#include "tvcat/exponential.hpp"
#include "tvcat/io.hpp"
#include "tvcat/presheaf.hpp"

namespace tvcat {
namespace {

CheckReport from_bool(const std::string& name, bool ok, const std::string& law) {
  CheckReport rep(name);
  rep.samples = 1;
  if (!ok) rep.fail(law, {});
  return rep;
}

NamedCheck verdict_of(CheckReport rep) {
  auto v = to_string(rep.status());
  return {std::move(v), std::move(rep)};
}

NamedCheck special(const std::string& verdict, const std::string& name, const std::string& why) {
  CheckReport rep(name);
  rep.details["verdict"] = verdict;
  rep.details["reason"] = why;
  return {verdict, std::move(rep)};
}

}  // namespace

const std::vector<std::string>& named_checks() {
  static const std::vector<std::string> names{
      "category",    "separated",    "exponentiable", "frame_criterion", "reflection",
      "assumptions", "yoneda",       "px_category",   "px_separated",    "px_injective",
      "injective",   "representable", "calculus",     "injective_implies_exponentiable"};
  return names;
}

NamedCheck run_named_check(const TVStructure& s, const std::string& name, std::uint64_t seed, std::uint64_t guard) {
  try {
    if (name == "category") return verdict_of(check_category(s));
    if (name == "separated") return verdict_of(from_bool(name, separated(s), "x ~= y implies x = y"));
    if (name == "exponentiable") return verdict_of(check_exponentiability(s));
    if (name == "frame_criterion") {
      if (!s.quantale().is_frame()) return special("n/a", name, "quantale is not a frame");
      return verdict_of(check_frame_criterion(s));
    }
    if (name == "reflection") return verdict_of(check_reflection(s));
    if (name == "assumptions") return verdict_of(check_assumptions_bundle(s.theory(), seed));
    if (name == "yoneda") return verdict_of(check_yoneda(s, build_presheaf_category(s, guard)));
    if (name == "px_category" || name == "px_separated" || name == "px_injective") {
      const auto p = build_presheaf_category(s, guard);
      if (name == "px_category") return verdict_of(check_category(p.px));
      if (name == "px_separated") return verdict_of(from_bool(name, separated(p.px), "PX is separated"));
      auto rep = certify_injective(p.px, guard);
      rep.check = name;
      return verdict_of(std::move(rep));
    }
    if (name == "injective") {
      if (!separated(s)) return special("n/a", name, "structure is not separated");
      return verdict_of(certify_injective(s, guard));
    }
    if (name == "representable") {
      auto r = find_representation(s, guard);
      CheckReport rep(name);
      rep.samples = 1;
      if (!r) {
        rep.fail("a left adjoint alpha of e exists", {});
      } else {
        rep.add_part(r->pseudo_algebra);
        Json alpha = Json::array();
        for (Index v : r->alpha) alpha.push_back(s.label(v));
        rep.details["alpha"] = alpha;
      }
      return verdict_of(std::move(rep));
    }
    if (name == "calculus") {
      if (!separated(s) || !injective_structure(s, guard)) return special("n/a", name, "structure is not certified injective");
      return verdict_of(check_calculus(s, guard));
    }
    if (name == "injective_implies_exponentiable") return verdict_of(check_thm_injective_exponentiable(s, seed, guard));
  } catch (const GuardError& e) {
    return special("guard", name, e.what());
  }
  throw ArgumentError("unknown check '" + name + "'");
}

std::vector<GalleryEntry> load_manifest(const std::filesystem::path& path) {
  const auto j = read_json_file(path);
  const std::string where = path.string();
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw FormatError(where + ": expected {\"entries\": [...]}");
  }
  std::vector<GalleryEntry> out;
  for (const auto& ej : j["entries"]) {
    GalleryEntry e;
    try {
      e.name = ej.at("name").get<std::string>();
      e.quantale = ej.at("quantale").get<std::string>();
      e.monad = ej.at("monad").get<std::string>();
      e.note = ej.value("note", "");
      for (const auto& sj : ej.at("structures")) {
        GalleryStructure gs;
        gs.file = sj.at("file").get<std::string>();
        for (const auto& [check, verdict] : sj.at("expected").items()) {
          gs.expected.emplace_back(check, verdict.get<std::string>());
        }
        e.structures.push_back(std::move(gs));
      }
    } catch (const Json::exception& ex) {
      throw FormatError(where + ": malformed entry " + ej.dump() + ": " + ex.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

Json run_gallery(const std::filesystem::path& manifest, std::uint64_t seed, std::uint64_t guard, bool* ok) {
  const auto entries = load_manifest(manifest);
  const auto base = manifest.parent_path();
  bool all = true;
  std::size_t checks = 0, mismatches = 0;
  Json out = Json::array();
  for (const auto& e : entries) {
    Json ej;
    ej["name"] = e.name;
    ej["quantale"] = e.quantale;
    ej["monad"] = e.monad;
    if (!e.note.empty()) ej["note"] = e.note;
    Json sts = Json::array();
    for (const auto& gs : e.structures) {
      const auto s = load_category(base / gs.file);
      Json sj;
      sj["file"] = gs.file;
      sj["size"] = s.size();
      Json cj = Json::array();
      for (const auto& [check, expected] : gs.expected) {
        const auto r = run_named_check(s, check, seed, guard);
        const bool match = r.verdict == expected;
        ++checks;
        if (!match) {
          ++mismatches;
          all = false;
        }
        Json c;
        c["check"] = check;
        c["expected"] = expected;
        c["actual"] = r.verdict;
        c["match"] = match;
        if (!match) c["report"] = to_json(r.report);
        cj.push_back(c);
      }
      sj["checks"] = cj;
      sts.push_back(sj);
    }
    ej["structures"] = sts;
    out.push_back(ej);
  }
  if (ok) *ok = all;
  Json j;
  j["entries"] = out;
  j["checks"] = checks;
  j["mismatches"] = mismatches;
  j["status"] = all ? "pass" : "fail";
  return j;
}

}  // namespace tvcat
