// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tvcat/category.hpp"
#include "tvcat/report.hpp"

namespace tvcat {

/// Verdict strings used by the gallery: a report status ("pass", "fail",
/// "bounded-pass"), "guard" when a size guard refused the computation, or
/// "n/a" when the check's precondition does not hold for the structure.
struct NamedCheck {
  std::string verdict;
  CheckReport report;
};

/// Check names: category, separated, exponentiable, frame_criterion,
/// reflection, assumptions, yoneda, px_category, px_separated, px_injective,
/// injective, representable, calculus, injective_implies_exponentiable.
const std::vector<std::string>& named_checks();
/// Throws ArgumentError for unknown names.
NamedCheck run_named_check(const TVStructure& s, const std::string& name, std::uint64_t seed, std::uint64_t guard);

struct GalleryStructure {
  std::string file;
  std::vector<std::pair<std::string, std::string>> expected;  // check -> verdict
};

struct GalleryEntry {
  std::string name;
  std::string quantale;
  std::string monad;
  std::string note;
  std::vector<GalleryStructure> structures;
};

std::vector<GalleryEntry> load_manifest(const std::filesystem::path& path);

/// Runs every expected check of every entry; `ok` is set when all verdicts
/// match. Structure files are resolved relative to the manifest.
Json run_gallery(const std::filesystem::path& manifest, std::uint64_t seed, std::uint64_t guard, bool* ok);

}  // namespace tvcat
