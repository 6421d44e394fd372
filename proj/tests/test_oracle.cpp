#include <gtest/gtest.h>

#include "hydra/oracle.hpp"
#include "hydra/phi.hpp"
#include "support.hpp"

using namespace hydra;
using hydra::test::W;

TEST(OracleConjugate, Examples) {
  HElem g{W("a3 a1"), 2};
  auto a = oracle_conjugate(g, g, 0);
  ASSERT_TRUE(a);
  EXPECT_TRUE(a->empty());
  auto b = oracle_conjugate(HElem{W("a2"), 1}, HElem{W("a2 a1"), 1}, 1);
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, W("s"));
  EXPECT_FALSE(oracle_conjugate(HElem{W("a2"), 0}, HElem{W("a3"), 0}, 6));
}

TEST(OracleTwisted, Examples) {
  auto a = oracle_twisted(W("a2 a1"), W("a2"), 0, 3, 0);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->r, -1);
  EXPECT_TRUE(a->w_tilde.empty());
  auto b = oracle_twisted(W("a3 a2^-1"), W("a3 a2^-1"), 0, 0, 0);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->r, 0);
  EXPECT_TRUE(b->w_tilde.empty());
  EXPECT_FALSE(oracle_twisted(W("a2"), W("a3"), 0, 5, 4));
}

TEST(OracleTwisted, ROrder) {
  EXPECT_EQ(oracle_r_order(0, 2), (std::vector<long>{0, -1, 1, -2, 2}));
  EXPECT_EQ(oracle_r_order(3, 10), (std::vector<long>{0, 1, 2}));
}

TEST(Alphabet, Order) {
  EXPECT_EQ(alphabet(2, false), (std::vector<Letter>{1, -1, 2, -2}));
  EXPECT_EQ(alphabet(1, true), (std::vector<Letter>{1, -1, letter_s(), letter_s(-1)}));
}

TEST(Enumeration, ShortlexCountsAndOrder) {
  std::vector<HWord> seen;
  for_each_reduced_word(alphabet(2, true), 3, [&](const HWord& w) { seen.push_back(w); return false; });
  // 1 + 6 + 6*5 + 6*25
  EXPECT_EQ(seen.size(), 187u);
  for (std::size_t k = 1; k < seen.size(); ++k) EXPECT_LE(seen[k - 1].size(), seen[k].size());
  for (const auto& w : seen) EXPECT_TRUE(is_reduced(w));
}

TEST(OracleProperties, ResultsVerify) {
  std::mt19937_64 rng(61);
  int hits = 0;
  for (int t = 0; t < 60; ++t) {
    HElem u = normal_form(test::random_hword(rng, 2, test::uniform(rng, 0, 4)));
    HWord w = test::random_hword(rng, 2, test::uniform(rng, 0, 3));
    HElem g = normal_form(w);
    HElem v = h_mul(h_mul(h_inv(g), u), g);
    auto got = oracle_conjugate(u, v, 3, 2);
    ASSERT_TRUE(got) << "constructed conjugator of length <= 3 must be found";
    EXPECT_LE(got->size(), w.size());
    EXPECT_TRUE(check_conjugation(u, normal_form(*got), v));
    ++hits;
  }
  EXPECT_EQ(hits, 60);
}

TEST(OracleProperties, TableMatchesDirectSearch) {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 40; ++t) {
    FWord u = test::random_fword(rng, 3, test::uniform(rng, 0, 3));
    long p = static_cast<long>(test::uniform(rng, 0, 2));
    TwistedOracleTable table(u, p, 3, 3);
    for (int k = 0; k < 10; ++k) {
      FWord v = test::random_fword(rng, 3, test::uniform(rng, 0, 3));
      auto direct = oracle_twisted(u, v, p, 4, 3, 3);
      auto tab = table.query(v, 4);
      ASSERT_EQ(direct.has_value(), tab.has_value());
      if (direct) {
        EXPECT_EQ(direct->r, tab->r);
        EXPECT_EQ(direct->w_tilde, tab->w_tilde);
        FWord lhs = mul(u, apply_phi_power(direct->w_tilde, -p));
        FWord rhs = mul(direct->w_tilde, apply_phi_power(v, -direct->r));
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}
