// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tvcat/category.hpp"
#include "tvcat/theory.hpp"

using namespace tvcat;

namespace {

TheoryPtr ord_theory() { return std::make_shared<Theory>(monad_from_spec("identity"), two()); }

oracle::Order chain(std::size_t n) {
  oracle::Order le(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) le[x][y] = true;
  }
  return le;
}

}  // namespace

TEST(Category, PosetsAreCategories) {
  auto th = ord_theory();
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& le : oracle::posets(n)) EXPECT_TRUE(check_category(oracle::ord(th, le)).passed());
  }
}

TEST(Category, MissingTransitivityIsWitnessed) {
  auto th = ord_theory();
  auto le = chain(3);
  le[0][2] = false;
  const auto r = check_category(oracle::ord(th, le));
  ASSERT_TRUE(r.failed());
  EXPECT_EQ(r.law, "(T): Ta(X,x) (x) a(x,x) <= a(m(X),x)");
  ASSERT_EQ(r.witness.size(), 3u);
  EXPECT_EQ(r.witness[2].label, "p2");
}

TEST(Category, MissingReflexivityIsWitnessed) {
  auto th = ord_theory();
  auto le = chain(2);
  le[1][1] = false;
  const auto r = check_category(oracle::ord(th, le));
  ASSERT_TRUE(r.failed());
  EXPECT_EQ(r.witness.at(0).label, "p1");
}

TEST(Category, ClosureAddsComposites) {
  auto th = ord_theory();
  auto le = chain(3);
  le[0][2] = false;
  const auto c = graph_to_category(oracle::ord(th, le));
  EXPECT_TRUE(check_category(c).passed());
  EXPECT_EQ(c.a0(0, 2), 1);
  EXPECT_EQ(c.a0(2, 0), 0);
}

TEST(Category, ProductIsComponentwise) {
  auto th = ord_theory();
  for (const auto& lx : oracle::posets(2)) {
    for (const auto& ly : oracle::posets(2)) {
      const auto x = oracle::ord(th, lx), y = oracle::ord(th, ly);
      const auto p = product(x, y);
      ASSERT_EQ(p.size(), 4u);
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
          const bool le = lx[a / 2][b / 2] && ly[a % 2][b % 2];
          EXPECT_EQ(p.a0(a, b), le ? 1 : 0);
        }
      }
      EXPECT_EQ(p.label(1), "(p0,p1)");
      // Under the identity monad the tensor of preorders is the product.
      EXPECT_TRUE(tensor(x, y).a() == p.a());
    }
  }
}

TEST(Category, CoproductIsDisjoint) {
  auto th = ord_theory();
  const auto x = oracle::ord(th, chain(2));
  const auto c = coproduct(x, x);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c.label(0), "1.p0");
  EXPECT_EQ(c.label(3), "2.p1");
  EXPECT_EQ(c.a0(0, 1), 1);
  EXPECT_EQ(c.a0(0, 2), 0);
  EXPECT_EQ(c.a0(2, 3), 1);
  EXPECT_TRUE(check_category(c).passed());
}

TEST(Category, QuotientByHand) {
  // 0 < 1 < 2 with 1 and 2 identified: a two-chain.
  auto th = ord_theory();
  const auto q = quotient(oracle::ord(th, chain(3)), {0, 1, 1}, {"p0", "p1"});
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(q.a0(0, 1), 1);
  EXPECT_EQ(q.a0(1, 0), 0);
  // Identifying 0 and 2 collapses everything.
  const auto all = quotient(oracle::ord(th, chain(3)), {0, 1, 0}, {"p0", "p1"});
  EXPECT_EQ(all.a0(1, 0), 1);
  EXPECT_EQ(all.a0(0, 1), 1);
}

TEST(Category, ReflectionCollapsesEquivalentPoints) {
  auto th = ord_theory();
  const auto ind = indiscrete(th, {"a", "b", "c"});
  EXPECT_FALSE(separated(ind));
  const auto r = reflect_R(ind);
  EXPECT_EQ(r.rx.size(), 1u);
  EXPECT_EQ(r.eta, (std::vector<Index>{0, 0, 0}));
  EXPECT_EQ(r.rx.label(0), "a");
  EXPECT_TRUE(check_reflection(ind).passed());
  EXPECT_TRUE(separated(oracle::ord(th, chain(3))));
}

TEST(Category, ReflectionPreservesProducts) {
  for (const char* m : {"identity", "labelled:z2", "word:2"}) {
    auto th = std::make_shared<Theory>(monad_from_spec(m), lukasiewicz(3));
    Rng rng(21);
    for (int i = 0; i < 10; ++i) {
      const auto x = random_category(th, 1 + rng() % 2, rng), y = random_category(th, 1 + rng() % 2, rng);
      EXPECT_FALSE(check_R_preserves_products(x, y).failed()) << m;
      EXPECT_FALSE(check_reflection(x).failed()) << m;
    }
  }
}

TEST(Category, DualUnderIdentityIsOpposite) {
  auto th = ord_theory();
  const auto x = oracle::ord(th, chain(3));
  const auto d = dual(x);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(d.a0(a, b), x.a0(b, a));
  }
}

TEST(Category, FunctorsAreMonotoneMaps) {
  auto th = ord_theory();
  const auto x = oracle::ord(th, chain(2));
  const std::vector<Index> id{0, 1}, swap{1, 0}, constant{1, 1};
  EXPECT_TRUE(check_functor(x, x, id).passed());
  EXPECT_TRUE(check_functor(x, x, constant).passed());
  EXPECT_TRUE(check_functor(x, x, swap).failed());
  EXPECT_TRUE(check_fully_faithful(x, x, id).passed());
  EXPECT_TRUE(check_fully_faithful(x, x, constant).failed());
  EXPECT_TRUE(functor_leq(x, id, constant));
  EXPECT_FALSE(functor_leq(x, constant, id));
}

TEST(Category, VHomIsTheQuantaleOrder) {
  for (auto q : {two(), lukasiewicz(3), godel_chain(3)}) {
    auto th = std::make_shared<Theory>(monad_from_spec("identity"), q);
    const auto v = vhom_xi(th);
    ASSERT_EQ(v.size(), q->size());
    EXPECT_TRUE(check_category(v).passed());
    for (Elem u = 0; u < q->size(); ++u) {
      for (Elem w = 0; w < q->size(); ++w) EXPECT_EQ(v.a0(u, w), q->hom(u, w));
    }
  }
}

TEST(Category, RepresentationOfWordsOverTwo) {
  auto th = std::make_shared<Theory>(monad_from_spec("word:2"), two());
  const auto v = vhom_xi(th);
  EXPECT_FALSE(check_category(v).failed());
  const auto r = find_representation(v, 2000000);
  ASSERT_TRUE(r);
  EXPECT_FALSE(r->pseudo_algebra.failed());
  // alpha picks the fold of a word up to equivalence; on letters it is e°.
  const auto e = v.unit();
  for (std::size_t x = 0; x < v.size(); ++x) EXPECT_EQ(r->alpha[e[x]], x);
}

TEST(Category, EilenbergMooreRoundTrip) {
  auto th = std::make_shared<Theory>(monad_from_spec("labelled:z2"), two());
  const auto v = vhom_xi(th);
  const auto m = functor_M(v);
  EXPECT_FALSE(check_em_algebra(m).failed());
  EXPECT_FALSE(check_category(functor_K(m)).failed());
}

TEST(Category, MultiOrdIsBoundedCategory) {
  for (auto q : {two(), lukasiewicz(3)}) {
    const auto mo = multiord_of_quantale(q, 3);
    const auto r = check_category(mo);
    EXPECT_EQ(r.status(), Status::BoundedPass);
    EXPECT_EQ(r.bound, 3);
  }
}
