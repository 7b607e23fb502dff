// SPDX-License-Identifier: Apache-2.0
#include "tvcat/report.hpp"

#include <cstdlib>
#include <sstream>

#include "tvcat/error.hpp"

namespace tvcat {

std::uint64_t default_guard() {
  if (const char* env = std::getenv("TVCAT_GUARD_SIZE")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 2'000'000;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::BoundedPass:
      return "bounded-pass";
    case Status::Fail:
      return "fail";
  }
  return "fail";
}

Status CheckReport::status() const {
  if (failed_) return Status::Fail;
  return bound ? Status::BoundedPass : Status::Pass;
}

void CheckReport::fail(std::string violated_law, std::vector<WitnessEntry> w) {
  if (failed_) return;
  failed_ = true;
  law = std::move(violated_law);
  witness = std::move(w);
}

void CheckReport::add_part(CheckReport part) {
  if (part.bound && !bound) bound = part.bound;
  if (part.failed() && !failed_) {
    failed_ = true;
    law = part.check + (part.law.empty() ? "" : ": " + part.law);
    witness = part.witness;
  }
  parts.push_back(std::move(part));
}

Json to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["status"] = to_string(r.status());
  if (r.failed()) {
    j["law"] = r.law;
    Json w = Json::array();
    for (const auto& e : r.witness) {
      w.push_back(Json{{"name", e.name}, {"label", e.label}, {"index", e.index}});
    }
    j["witness"] = std::move(w);
  }
  j["samples"] = r.samples;
  if (r.skipped) j["skipped"] = r.skipped;
  j["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
  if (!r.details.empty()) j["details"] = r.details;
  if (!r.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : r.parts) parts.push_back(to_json(p));
    j["parts"] = std::move(parts);
  }
  return j;
}

CheckReport report_from_json(const Json& j) {
  CheckReport r(j.at("check").get<std::string>());
  r.samples = j.value("samples", std::uint64_t{0});
  r.skipped = j.value("skipped", std::uint64_t{0});
  if (j.contains("bound") && !j["bound"].is_null()) r.bound = j["bound"].get<int>();
  if (j.contains("details")) r.details = j["details"];
  if (j.contains("parts")) {
    for (const auto& p : j["parts"]) r.parts.push_back(report_from_json(p));
  }
  if (j.at("status").get<std::string>() == "fail") {
    std::vector<WitnessEntry> w;
    if (j.contains("witness")) {
      for (const auto& e : j["witness"]) {
        w.push_back({e.at("name").get<std::string>(), e.at("label").get<std::string>(),
                     e.value("index", std::int64_t{-1})});
      }
    }
    r.fail(j.value("law", std::string{}), std::move(w));
  }
  return r;
}

std::string to_text(const CheckReport& r, int indent) {
  std::ostringstream os;
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  os << pad << r.check << ": " << to_string(r.status());
  if (r.bound) os << " (word length <= " << *r.bound << ")";
  os << "  [" << r.samples << " tuples";
  if (r.skipped) os << ", " << r.skipped << " out of bound";
  os << "]\n";
  if (r.failed()) {
    os << pad << "  violated: " << r.law << "\n";
    if (!r.witness.empty()) {
      os << pad << "  witness:";
      for (const auto& e : r.witness) os << " " << e.name << "=" << e.label;
      os << "\n";
    }
  }
  for (const auto& [k, v] : r.details.items()) {
    if (v.is_object() || v.is_array()) continue;
    os << pad << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  for (const auto& p : r.parts) os << to_text(p, indent + 2);
  return os.str();
}

}  // namespace tvcat
