// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include "tvcat/category.hpp"
#include "tvcat/report.hpp"

namespace tvcat {

/// Reads a JSON file; FormatError carries the path and parser position.
Json read_json_file(const std::filesystem::path& path);

/// {elements, order: [[lo, hi]...], tensor: {"a,b": c}, unit}. The order is
/// closed reflexively and transitively; tensor entries are symmetrized.
QuantalePtr quantale_from_json(const Json& j, const std::string& name = "file");
/// Canonical form: elements in order, the covering pairs of the order, every
/// tensor entry with a <= b by index.
Json quantale_to_json(const Quantale& q);
/// A builtin name ("two", "luk3", ...) or a path to a quantale file.
QuantalePtr load_quantale(const std::string& name_or_path,
                          const std::filesystem::path& base = std::filesystem::path());

/// A spec string ("word:2") or {kind, max_len?, monoid?}. A word monad
/// without a bound gets `default_len`.
MonadPtr monad_from_json(const Json& j, int default_len = 2);
Json monad_to_json(const Monad& t);

/// T-element encodings: plain string (Identity), array of strings (Word),
/// pair [x, h] (Labelled).
TElem telem_from_json(const Monad& t, const Json& j, const std::vector<std::string>& carrier);
Json telem_to_json(const Monad& t, const TElem& e, const std::vector<std::string>& carrier);

/// {quantale, monad, carrier, structure}. The structure is either an object
/// keyed "T-elem;x", with T-elem written as the label, "(a,b)" or "(x,h)", or
/// an array of [T-elem, x, value] triples. Missing entries are bottom.
/// Validation of (R) and (T) is left to check_category.
TVStructure category_from_json(const Json& j, const std::filesystem::path& base = std::filesystem::path(),
                               int default_len = 2);
/// Canonical form with the quantale inline and the non-bottom entries as
/// triples in index order.
Json category_to_json(const TVStructure& s);
TVStructure load_category(const std::filesystem::path& path, int default_len = 2);

/// {rows: [..], cols: [..], entries: {"x;y": value}} over the given quantale.
VRel relation_from_json(const QuantalePtr& q, const Json& j, std::vector<std::string>* rows = nullptr,
                        std::vector<std::string>* cols = nullptr);

}  // namespace tvcat
