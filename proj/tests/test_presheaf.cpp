// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tvcat/presheaf.hpp"
#include "tvcat/theory.hpp"

using namespace tvcat;

namespace {

constexpr std::uint64_t kGuard = 2000000;

TheoryPtr ord_theory() { return std::make_shared<Theory>(monad_from_spec("identity"), two()); }

oracle::Order chain(std::size_t n) {
  oracle::Order le(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) le[x][y] = true;
  }
  return le;
}

// Finite complete lattice: a bottom and all binary joins.
bool is_lattice(const oracle::Order& le) {
  const auto n = le.size();
  bool bottom = false;
  for (std::size_t b = 0; b < n && !bottom; ++b) {
    bottom = true;
    for (std::size_t j = 0; j < n; ++j) bottom = bottom && le[b][j];
  }
  if (!bottom) return false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t count = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!le[a][j] || !le[b][j]) continue;
        bool least = true;
        for (std::size_t k = 0; k < n; ++k) least = least && (!le[a][k] || !le[b][k] || le[j][k]);
        count += least;
      }
      if (count != 1) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Presheaf, OrdPresheavesAreDownSets) {
  auto th = ord_theory();
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& le : oracle::posets(n)) {
      const auto x = oracle::ord(th, le);
      const auto p = build_presheaf_category(x, kGuard);
      const auto down = oracle::down_sets(le);
      ASSERT_EQ(p.psi.size(), down.size());
      for (const auto& psi : p.psi) {
        std::vector<bool> s;
        for (auto v : psi) s.push_back(v != 0);
        EXPECT_TRUE(down.count(s));
      }
      // Inclusion order.
      for (std::size_t a = 0; a < p.psi.size(); ++a) {
        for (std::size_t b = 0; b < p.psi.size(); ++b) {
          bool sub = true;
          for (std::size_t i = 0; i < n; ++i) sub = sub && p.psi[a][i] <= p.psi[b][i];
          EXPECT_EQ(p.px.a0(a, b), sub ? 1 : 0);
        }
      }
      EXPECT_TRUE(check_yoneda(x, p).passed());
      EXPECT_TRUE(separated(p.px));
    }
  }
}

TEST(Presheaf, SupOnChainsIsTheMaximum) {
  auto th = ord_theory();
  const auto x = oracle::ord(th, chain(3));
  const auto inj = injective_structure(x, kGuard);
  ASSERT_TRUE(inj);
  for (std::size_t i = 0; i < inj->p.psi.size(); ++i) {
    Index top = 0;
    for (Index j = 0; j < 3; ++j) {
      if (inj->p.psi[i][j]) top = j;
    }
    EXPECT_EQ(inj->sup[i], top);
  }
  EXPECT_EQ(oplus(x, *inj, 2, 0), 0u);
  EXPECT_EQ(oplus(x, *inj, 2, 1), 2u);
}

TEST(Presheaf, InjectiveOrdersAreLattices) {
  auto th = ord_theory();
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& le : oracle::posets(n)) {
      const auto x = oracle::ord(th, le);
      EXPECT_EQ(certify_injective(x, kGuard).passed(), is_lattice(le));
    }
  }
}

TEST(Presheaf, CalculusOnVHom) {
  for (auto q : {two(), lukasiewicz(3), godel_chain(3)}) {
    for (const char* m : {"identity", "labelled:z2"}) {
      auto th = std::make_shared<Theory>(monad_from_spec(m), q);
      const auto v = vhom_xi(th);
      EXPECT_FALSE(check_calculus(v, kGuard).failed()) << q->name() << " " << m;
    }
  }
}

TEST(Presheaf, CalculusRejectsNonInjective) {
  auto th = ord_theory();
  const auto anti = oracle::ord(th, {{true, false}, {false, true}});
  EXPECT_THROW(check_calculus(anti, kGuard), ArgumentError);
}

TEST(Presheaf, InjectiveImpliesExponentiable) {
  auto th = ord_theory();
  const auto r = check_thm_injective_exponentiable(oracle::ord(th, chain(2)), 1, kGuard);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.details.at("implication"), "holds");
}

TEST(Presheaf, WeakExponentialOfChains) {
  auto th = ord_theory();
  const auto c = oracle::ord(th, chain(2));
  const auto w = weak_exponential(c, c, kGuard);
  EXPECT_EQ(w.px.psi.size(), 3u);
  EXPECT_TRUE(check_category(w.w).passed());
  // Every monotone map X -> Y factors through the weak evaluation.
  for (const auto& f : oracle::monotone_maps(chain(2), chain(2))) {
    std::vector<Index> table;
    for (Index z = 0; z < 2; ++z) {
      for (Index x = 0; x < 2; ++x) table.push_back(f[std::max(z, x)]);
    }
    const auto r = weak_factorize(w, c, c, c, table, kGuard);
    EXPECT_TRUE(r.report.passed()) << r.report.law;
    for (Index z = 0; z < 2; ++z) {
      for (Index x = 0; x < 2; ++x) EXPECT_EQ(w.eval(r.f_tilde[z], x), table[z * 2 + x]);
    }
    EXPECT_FALSE(weak_factorize_general(c, c, c, table, kGuard).failed());
  }
}

TEST(Presheaf, PresheafMapOfIdentityIsIdentity) {
  auto th = ord_theory();
  const auto c = oracle::ord(th, chain(3));
  const auto p = build_presheaf_category(c, kGuard);
  const std::vector<Index> id{0, 1, 2};
  const auto pm = presheaf_map(c, p, c, p, id);
  for (std::size_t i = 0; i < pm.size(); ++i) EXPECT_EQ(pm[i], i);
}
