#include <gtest/gtest.h>

#include "hydra/hnn.hpp"
#include "support.hpp"

using namespace hydra;
using hydra::test::W;

namespace {
HnnLevelWord at_level(const char* text, int level) { return to_hnn(normal_form(W(text)), level); }
}  // namespace

TEST(HnnReduce, PinchOnS) {
  auto out = hnn_reduce(at_level("a3^-1 s a3", 2));
  EXPECT_EQ(out.t_length(), 0u);
  EXPECT_EQ(from_hnn(out), normal_form(W("s a2^-1")));
}

TEST(HnnReduce, PinchOnBeta) {
  auto out = hnn_reduce(at_level("a3 s a2^-1 a3^-1", 2));
  EXPECT_EQ(out.t_length(), 0u);
  EXPECT_EQ(from_hnn(out), normal_form(W("s")));
}

TEST(HnnReduce, NoStableLetterUnchanged) {
  auto in = at_level("a2 s a1^-1 a2", 2);
  auto out = hnn_reduce(in);
  EXPECT_EQ(out.t_length(), 0u);
  EXPECT_EQ(from_hnn(out), from_hnn(in));
}

TEST(HnnReduce, Beta) { EXPECT_EQ(hnn_beta(2), normal_form(W("s a2^-1"))); }

TEST(Hnn, RoundTrip) {
  std::mt19937_64 rng(91);
  for (int t = 0; t < 300; ++t) {
    HElem g = normal_form(test::random_hword(rng, 3, test::uniform(rng, 0, 12)));
    auto w = to_hnn(g, 2);
    EXPECT_EQ(from_hnn(w), g);
    EXPECT_EQ(normal_form(hnn_to_word(w)), g);
  }
  EXPECT_THROW(to_hnn(normal_form(W("a4")), 2), DomainError);
}

TEST(HnnProperties, ReductionIsConjugateAndPinchFree) {
  std::mt19937_64 rng(92);
  for (int t = 0; t < 400; ++t) {
    int level = static_cast<int>(test::uniform(rng, 1, 3));
    HElem g = normal_form(test::random_hword(rng, level + 1, test::uniform(rng, 0, 12)));
    auto red = hnn_reduce_with_conjugator(to_hnn(g, level));
    EXPECT_TRUE(check_conjugation(g, red.conjugator, from_hnn(red.word))) << to_string(to_word(g));
    EXPECT_TRUE(pinch_free(red.word));
    EXPECT_TRUE(cyclically_pinch_free(red.word)) << to_string(to_word(g));
  }
}

TEST(Collins, Examples) {
  auto a = collins_decide(W("a2 s"), W("a2 a1 s"));
  EXPECT_TRUE(a.conjugate);
  EXPECT_EQ(a.method, CertMethod::Hnn);
  ASSERT_TRUE(a.witness);
  EXPECT_TRUE(check_conjugation(normal_form(W("a2 s")), normal_form(*a.witness), normal_form(W("a2 a1 s"))));
  auto b = collins_decide(W("s"), W("s^2"));
  EXPECT_FALSE(b.conjugate);
  EXPECT_FALSE(b.inconclusive);
}

TEST(CollinsProperties, AgreesWithEngine) {
  std::mt19937_64 rng(93);
  int decided = 0;
  for (int t = 0; t < 200; ++t) {
    HWord u = test::random_hword(rng, 3, test::uniform(rng, 0, 6));
    HWord v;
    if (t % 2) {
      HWord w = test::random_hword(rng, 3, test::uniform(rng, 0, 4));
      v = test::concat({to_word(h_inv(normal_form(w))), u, w});
    } else {
      v = test::random_hword(rng, 3, test::uniform(rng, 0, 6));
    }
    auto e = decide_conjugacy(u, v, {}, 3);
    auto h = collins_decide(u, v, 0, 3);
    if (h.conjugate)
      EXPECT_TRUE(check_conjugation(normal_form(u), normal_form(*h.witness), normal_form(v)));
    if (e.inconclusive || h.inconclusive) continue;
    ++decided;
    EXPECT_EQ(e.conjugate, h.conjugate) << to_string(u) << " / " << to_string(v);
  }
  EXPECT_GT(decided, 190);
}
