// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "tvcat/error.hpp"
#include "tvcat/io.hpp"

using namespace tvcat;

namespace {

const std::filesystem::path kData = TVCAT_TEST_DATA_DIR;

}  // namespace

TEST(Io, CategoryRoundTrip) {
  for (const auto& entry : std::filesystem::directory_iterator(kData / "gallery" / "structures")) {
    const auto c = load_category(entry.path(), 3);
    const auto back = category_from_json(category_to_json(c));
    ASSERT_EQ(back.size(), c.size()) << entry.path();
    EXPECT_TRUE(back.a() == c.a()) << entry.path();
    EXPECT_EQ(category_to_json(back), category_to_json(c)) << entry.path();
  }
}

TEST(Io, KeyFormMatchesTripleForm) {
  const auto triples = load_category(kData / "gallery" / "structures" / "ord_chain2.json");
  const Json keyed = Json::parse(R"({
    "quantale": "two",
    "monad": "identity",
    "carrier": ["0", "1"],
    "structure": {"0;0": "1", "0;1": "1", "1;1": "1"}
  })");
  const auto c = category_from_json(keyed);
  EXPECT_TRUE(c.a() == triples.a());
}

TEST(Io, LabelledKeysUsePairs) {
  const Json keyed = Json::parse(R"({
    "quantale": "two",
    "monad": "labelled:z2",
    "carrier": ["a"],
    "structure": {"(a,0);a": "1", "(a,1);a": "1"}
  })");
  const auto c = category_from_json(keyed);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(c.a0(0, 0), 1);
}

TEST(Io, QuantaleFilesMatchBuiltins) {
  for (const char* name : {"two", "trunc3", "godel3", "luk3", "powerset2"}) {
    const auto file = load_quantale((kData / "quantales" / (std::string(name) + ".json")).string());
    const auto builtin = load_quantale(name);
    EXPECT_EQ(quantale_to_json(*file), quantale_to_json(*builtin)) << name;
  }
}

TEST(Io, MonadRoundTrip) {
  for (const char* spec : {"identity", "labelled:z2", "word:2"}) {
    const auto t = monad_from_json(Json(spec));
    const auto back = monad_from_json(monad_to_json(*t));
    EXPECT_EQ(back->name(), t->name()) << spec;
    EXPECT_EQ(back->size(3), t->size(3)) << spec;
  }
}

TEST(Io, MalformedInputIsRejected) {
  const auto bad = [](const char* text) { return category_from_json(Json::parse(text)); };
  // An absent structure is the empty relation, not an error.
  EXPECT_EQ(bad(R"({"quantale": "two", "monad": "identity", "carrier": ["0"]})").a0(0, 0), 0);
  EXPECT_THROW(bad(R"({"quantale": "two", "monad": "identity", "carrier": ["0"], "structure": {"0;9": "1"}})"),
               FormatError);
  EXPECT_THROW(bad(R"({"quantale": "two", "monad": "identity", "carrier": ["0"], "structure": {"0;0": "7"}})"),
               FormatError);
  EXPECT_THROW(bad(R"({"quantale": "nope", "monad": "identity", "carrier": [], "structure": {}})"), Error);
  EXPECT_THROW(bad(R"({"quantale": "two", "monad": "bogus", "carrier": [], "structure": {}})"), Error);
  EXPECT_THROW(read_json_file(kData / "missing.json"), Error);
}
