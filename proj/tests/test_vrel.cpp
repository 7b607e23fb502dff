// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "tvcat/theory.hpp"
#include "tvcat/vrel.hpp"

using namespace tvcat;

TEST(VRel, CompositionIsJoinOfTensors) {
  auto q = lukasiewicz(3);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    auto r = random_relation(q, 2, 3, rng);
    auto s = random_relation(q, 3, 2, rng);
    auto sr = compose(s, r);
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t z = 0; z < 2; ++z) {
        Elem v = q->bottom();
        for (std::size_t y = 0; y < 3; ++y) v = q->join(v, q->tensor(r(x, y), s(y, z)));
        EXPECT_EQ(sr(x, z), v);
      }
    }
  }
}

TEST(VRel, CompositionIsAssociativeWithIdentities) {
  auto q = chain_trunc_add(4);
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    auto r = random_relation(q, 2, 2, rng), s = random_relation(q, 2, 3, rng), t = random_relation(q, 3, 2, rng);
    EXPECT_EQ(compose(t, compose(s, r)), compose(compose(t, s), r));
    EXPECT_EQ(compose(r, id_rel(q, 2)), r);
    EXPECT_EQ(compose(id_rel(q, 2), r), r);
  }
}

TEST(VRel, TransposeAndFunctions) {
  auto q = two();
  std::vector<Index> f{1, 0, 1};
  auto g = from_function(q, f, 2);
  EXPECT_EQ(g.rows(), 3u);
  EXPECT_EQ(g(0, 1), 1);
  EXPECT_EQ(g(0, 0), 0);
  EXPECT_EQ(transpose(transpose(g)), g);
  // f . f° >= 1 on the image, f° . f >= 1.
  EXPECT_TRUE(leq(id_rel(q, 3), compose(transpose(g), g)));
}

TEST(VRel, LatticeOperations) {
  auto q = godel_chain(3);
  Rng rng(11);
  auto r = random_relation(q, 2, 2, rng), s = random_relation(q, 2, 2, rng);
  EXPECT_TRUE(leq(meet(r, s), r));
  EXPECT_TRUE(leq(r, join(r, s)));
  EXPECT_EQ(all_relations(q, 1, 2, 100).size(), 9u);
}
