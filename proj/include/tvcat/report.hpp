// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tvcat {

using Json = nlohmann::ordered_json;

enum class Status { Pass, BoundedPass, Fail };

std::string to_string(Status s);

/// One coordinate of a counterexample. `index` is the position in the
/// enumerated carrier, so the tuple can be replayed.
struct WitnessEntry {
  std::string name;
  std::string label;
  std::int64_t index = -1;
};

/// Outcome of a quantified law check.
struct CheckReport {
  std::string check;
  std::string law;  // violated law, empty on pass
  std::vector<WitnessEntry> witness;
  std::uint64_t samples = 0;
  std::uint64_t skipped = 0;  // out-of-bound tuples, never failures
  std::optional<int> bound;   // word-length bound when the fragment is truncated
  Json details = Json::object();
  std::vector<CheckReport> parts;

  explicit CheckReport(std::string name = {}) : check(std::move(name)) {}

  bool failed() const { return failed_; }
  bool passed() const { return !failed_; }
  Status status() const;

  /// Records the first failure only; later calls are ignored so the
  /// lexicographically least witness wins when callers iterate in order.
  void fail(std::string violated_law, std::vector<WitnessEntry> w);

  /// Appends a sub-report; a failing part fails the whole report.
  void add_part(CheckReport part);

 private:
  bool failed_ = false;
};

Json to_json(const CheckReport& r);
CheckReport report_from_json(const Json& j);

/// Human-oriented rendering; not stability-guaranteed.
std::string to_text(const CheckReport& r, int indent = 0);

}  // namespace tvcat
