// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tvcat/exponential.hpp"
#include "tvcat/theory.hpp"

using namespace tvcat;

namespace {

constexpr std::uint64_t kGuard = 2000000;

TheoryPtr ord_theory() { return std::make_shared<Theory>(monad_from_spec("identity"), two()); }

}  // namespace

TEST(Exponential, OrdMapsAreMonotoneWithPointwiseOrder) {
  auto th = ord_theory();
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      for (const auto& lx : oracle::posets(n)) {
        for (const auto& ly : oracle::posets(m)) {
          const auto x = oracle::ord(th, lx), y = oracle::ord(th, ly);
          const auto e = exponential_in_cats(x, y, kGuard);
          auto maps = e.maps;
          std::sort(maps.begin(), maps.end());
          ASSERT_EQ(maps, oracle::monotone_maps(lx, ly));
          for (std::size_t h = 0; h < e.maps.size(); ++h) {
            for (std::size_t g = 0; g < e.maps.size(); ++g) {
              bool le = true;
              for (std::size_t i = 0; i < n; ++i) le = le && ly[e.maps[h][i]][e.maps[g][i]];
              EXPECT_EQ(e.z.a0(h, g), le ? 1 : 0);
            }
          }
        }
      }
    }
  }
}

TEST(Exponential, ChainToChainHasThreeMaps) {
  auto th = ord_theory();
  oracle::Order chain2{{true, true}, {false, true}};
  const auto c = oracle::ord(th, chain2);
  const auto e = exponential_in_cats(c, c, kGuard);
  EXPECT_EQ(e.z.size(), 3u);
  EXPECT_TRUE(check_category(e.z).passed());
  for (std::size_t h = 0; h < e.maps.size(); ++h) {
    for (std::size_t x = 0; x < 2; ++x) EXPECT_EQ(e.eval(h, x), e.maps[h][x]);
  }
}

TEST(Exponential, PreordersAreExponentiable) {
  auto th = ord_theory();
  for (const auto& le : oracle::posets(3)) {
    const auto x = oracle::ord(th, le);
    EXPECT_TRUE(check_exponentiability(x).passed());
    EXPECT_TRUE(check_frame_criterion(x).passed());
  }
}

TEST(Exponential, CurryingRecoversTheMap) {
  auto th = ord_theory();
  oracle::Order chain2{{true, true}, {false, true}};
  const auto c = oracle::ord(th, chain2);
  const auto e = exponential_in_cats(c, c, kGuard);
  // f(z, x) = max(z, x)
  const std::vector<Index> f{0, 1, 1, 1};
  const auto cur = curry(c, c, c, f, e);
  ASSERT_TRUE(cur.report.passed());
  ASSERT_EQ(cur.map.size(), 2u);
  EXPECT_EQ(e.maps[cur.map[0]], (std::vector<Index>{0, 1}));
  EXPECT_EQ(e.maps[cur.map[1]], (std::vector<Index>{1, 1}));
  // f(z, x) = not x is not a functor.
  const std::vector<Index> bad{1, 0, 1, 0};
  EXPECT_TRUE(curry(c, c, c, bad, e).report.failed());
}

TEST(Exponential, UniversalProperty) {
  auto th = ord_theory();
  oracle::Order chain2{{true, true}, {false, true}};
  const auto c = oracle::ord(th, chain2);
  const auto e = exponential_in_cats(c, c, kGuard);
  std::vector<TVStructure> tests;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (const auto& le : oracle::posets(n)) tests.push_back(oracle::ord(th, le));
  }
  EXPECT_TRUE(check_universal_property(e, c, c, tests, kGuard).passed());
}

TEST(Exponential, AllMapsRespectsGuard) {
  EXPECT_EQ(all_maps(2, 3, kGuard).size(), 9u);
  EXPECT_EQ(all_maps(0, 3, kGuard).size(), 1u);
  EXPECT_THROW(all_maps(30, 3, kGuard), GuardError);
}

TEST(Exponential, LabelledChainFailsBothCriteria) {
  // A structure over Z2-labelled arrows that is not exponentiable; the frame
  // criterion must agree since 2 is a frame.
  auto th = std::make_shared<Theory>(monad_from_spec("labelled:z2"), two());
  Rng rng(3);
  int disagreements = 0, non_exp = 0;
  for (int i = 0; i < 200; ++i) {
    const auto x = random_category(th, 1 + rng() % 3, rng);
    const bool a = check_exponentiability(x).passed();
    const bool b = check_frame_criterion(x).passed();
    disagreements += a != b;
    non_exp += !a;
  }
  EXPECT_EQ(disagreements, 0);
  EXPECT_GT(non_exp, 0);
}
