// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "tvcat/error.hpp"
#include "tvcat/monad.hpp"

using namespace tvcat;

TEST(Monad, CarrierSizes) {
  EXPECT_EQ(Monad::identity().size(3), 3u);
  EXPECT_EQ(Monad::finite_ultrafilter().size(3), 3u);
  EXPECT_EQ(Monad::labelled(cyclic_group(3)).size(2), 6u);
  // 1 + n + n^2 + n^3.
  EXPECT_EQ(Monad::word(3).size(2), 15u);
  EXPECT_EQ(Monad::word(2).size(3), 13u);
  EXPECT_EQ(Monad::word(0).size(4), 1u);
}

TEST(Monad, WordIndexingIsByLengthThenLexicographic) {
  auto t = Monad::word(2);
  EXPECT_TRUE(t.decode(2, 0).empty());
  EXPECT_EQ(t.decode(2, 1), (TElem{0}));
  EXPECT_EQ(t.decode(2, 2), (TElem{1}));
  EXPECT_EQ(t.decode(2, 3), (TElem{0, 0}));
  EXPECT_EQ(t.decode(2, 4), (TElem{0, 1}));
  EXPECT_EQ(t.decode(2, 6), (TElem{1, 1}));
  for (std::size_t i = 0; i < t.size(3); ++i) EXPECT_EQ(t.encode(3, t.decode(3, i)), i);
}

TEST(Monad, WordMultiplicationIsConcatenation) {
  auto t = Monad::word(3);
  const std::size_t n = 2, tn = t.size(n);
  const auto m = t.mult(n);
  for (std::size_t X = 0; X < t.size(tn); ++X) {
    TElem flat;
    for (Index w : t.decode(tn, X)) {
      for (Index x : t.decode(n, w)) flat.push_back(x);
    }
    if (flat.size() > 3) {
      EXPECT_EQ(m[X], kOutOfBound);
    } else {
      EXPECT_EQ(m[X], static_cast<std::int64_t>(t.encode(n, flat)));
    }
  }
}

TEST(Monad, LabelledMultiplicationMultipliesLabels) {
  auto h = cyclic_group(3);
  auto t = Monad::labelled(h);
  const std::size_t n = 2, tn = t.size(n);
  const auto m = t.mult(n);
  for (std::size_t X = 0; X < t.size(tn); ++X) {
    const auto outer = t.decode(tn, X);
    const auto inner = t.decode(n, outer[0]);
    const TElem expect{inner[0], h.mul(outer[1], inner[1])};
    EXPECT_EQ(m[X], static_cast<std::int64_t>(t.encode(n, expect)));
  }
}

TEST(Monad, FmapActsLetterwise) {
  auto t = Monad::word(2);
  std::vector<Index> f{1, 1, 0};
  const auto tf = t.fmap(f, 3, 2);
  for (std::size_t i = 0; i < t.size(3); ++i) {
    auto w = t.decode(3, i);
    for (auto& x : w) x = f[x];
    EXPECT_EQ(tf[i], t.encode(2, w));
  }
}

TEST(Monad, LawsHold) {
  for (const char* spec : {"identity", "ultrafilter", "labelled:z2", "labelled:z3", "word:2"}) {
    auto t = monad_from_spec(spec);
    const auto r = check_monad_laws(*t, 2);
    EXPECT_FALSE(r.failed()) << spec;
  }
  const auto w3 = check_monad_laws(Monad::word(3), 2);
  EXPECT_EQ(w3.status(), Status::BoundedPass);
  EXPECT_EQ(w3.bound, 3);
}

TEST(Monad, BeckChevalleySamples) {
  EXPECT_FALSE(check_bc_samples(Monad::identity(), 2).failed());
  EXPECT_FALSE(check_bc_samples(Monad::labelled(cyclic_group(2)), 2).failed());
  EXPECT_FALSE(check_bc_samples(Monad::word(2), 2).failed());
}

TEST(Monad, XiOnWordsFoldsTheTensor) {
  auto q = lukasiewicz(3);
  auto t = Monad::word(3);
  const Elem half = q->index_of("1/2");
  EXPECT_EQ(t.xi(*q, {}), q->unit());
  EXPECT_EQ(t.xi(*q, {half}), half);
  EXPECT_EQ(t.xi(*q, {half, half}), q->index_of("0"));
  auto l = Monad::labelled(cyclic_group(2));
  EXPECT_EQ(l.xi(*q, {half, 1}), half);
}

TEST(Monad, SpecParsing) {
  EXPECT_EQ(monad_from_spec("word:3")->max_len(), 3);
  EXPECT_EQ(monad_from_spec("labelled:z4")->monoid().size(), 4u);
  EXPECT_THROW(monad_from_spec("list"), FormatError);
  EXPECT_THROW(monad_from_spec("labelled:4"), FormatError);
  Monoid bad{{"a", "b"}, {0, 0, 0, 0}, 1};
  EXPECT_THROW(validate_monoid(bad), FormatError);
}
