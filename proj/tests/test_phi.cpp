#include <gtest/gtest.h>

#include <thread>

#include "hydra/phi.hpp"
#include "hydra/pieces.hpp"
#include "hydra/oracle.hpp"
#include "support.hpp"

using namespace hydra;
using hydra::test::W;

namespace {

// Reference phi: letterwise substitution, one step at a time.
FWord ref_phi_letter(int i, int dir) {
  if (dir > 0) return i == 1 ? FWord{1} : FWord{i, i - 1};
  FWord out{1};  // phi^-1(a_i) = a_i phi^-1(a_{i-1})^-1
  for (int j = 2; j <= i; ++j) {
    FWord next{j};
    FWord inv = invert(out);
    next.insert(next.end(), inv.begin(), inv.end());
    out = free_reduce(next);
  }
  return out;
}

FWord ref_phi(const FWord& w, long r) {
  FWord cur = w;
  int dir = r > 0 ? 1 : -1;
  for (long n = 0; n < std::labs(r); ++n) {
    RawWord next;
    for (Letter x : cur) {
      FWord img = ref_phi_letter(gen_index(x), dir);
      if (x < 0) img = invert(img);
      next.insert(next.end(), img.begin(), img.end());
    }
    cur = free_reduce(next);
  }
  return cur;
}

std::uint64_t binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (long a = 1; a <= n; ++a)
    for (long b = std::min(a, k); b >= 1; --b) row[b] += row[b - 1];
  return row[k];
}

std::uint64_t ref_length(int i, long r) {
  std::uint64_t total = 0;
  for (int j = 0; j < i; ++j) total += r >= 0 ? binom(r, j) : binom(-r + j - 1, j);
  return total;
}

}  // namespace

TEST(Phi, Examples) {
  EXPECT_EQ(apply_phi_power(W("a3"), 1), W("a3 a2"));
  EXPECT_EQ(apply_phi_power(W("a4"), -1), W("a4 a2 a1^-1 a3^-1"));
  EXPECT_EQ(apply_phi_power(W("a3"), 2), W("a3 a2 a2 a1"));
  EXPECT_EQ(apply_phi_power(W("a2 a3"), 0), W("a2 a3"));
}

TEST(Phi, InverseLetterFormula) {
  for (int i = 1; i <= 8; ++i) EXPECT_EQ(phi_inverse_letter(i), ref_phi_letter(i, -1)) << i;
}

TEST(Phi, ClosedFormExamples) {
  EXPECT_EQ(phi_letter_closed_form(3, 2), W("a3 a2 a2 a1"));
  EXPECT_EQ(phi_letter_closed_form(2, -3), W("a2 a1^-3"));
  EXPECT_EQ(apply_phi_power(W("a2 a1^-3"), 3), W("a2"));
  EXPECT_EQ(phi_letter_closed_form(4, -1), W("a4 a2 a1^-1 a3^-1"));
}

TEST(Phi, ClosedFormErrors) {
  EXPECT_THROW(phi_letter_closed_form(1, 3), DomainError);
  EXPECT_THROW(phi_letter_closed_form(3, 0), DomainError);
}

TEST(Phi, LengthExamples) {
  EXPECT_EQ(letter_image_length(3, 3), 7);
  EXPECT_EQ(letter_image_length(1, 17), 1);
  EXPECT_EQ(letter_image_length(3, -2), 6);
  EXPECT_EQ(static_cast<std::int64_t>(apply_phi_power(W("a3"), -2).size()), 6);
}

TEST(Phi, LengthOverflowIsResourceError) {
  EXPECT_THROW(letter_image_length(60, 1'000'000'000), ResourceError);
}

TEST(Phi, BudgetGuard) {
  EXPECT_THROW(apply_phi_power(W("a6"), 200, 1000), ResourceError);
  EXPECT_NO_THROW(apply_phi_power(W("a6"), 3, 1000));
}

TEST(Phi, IsFixedExamples) {
  EXPECT_TRUE(is_fixed(W("a2 a1 a2^-1")));
  EXPECT_FALSE(is_fixed(W("a3")));
  EXPECT_TRUE(is_fixed(W("a1^5 a2 a1^-1 a2^-1")));
  EXPECT_TRUE(is_fixed(FWord{}));
}

TEST(PhiProperties, MatchesLetterwiseIteration) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    FWord w = test::random_fword(rng, 4, test::uniform(rng, 0, 12));
    long r = static_cast<long>(test::uniform(rng, 0, 10)) - 5;
    EXPECT_EQ(apply_phi_power(w, r), ref_phi(w, r)) << to_string(w) << " r=" << r;
  }
}

TEST(PhiProperties, InverseLaw) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 400; ++t) {
    FWord w = test::random_fword(rng, 4, test::uniform(rng, 0, 40));
    long r = static_cast<long>(test::uniform(rng, 0, 16)) - 8;
    EXPECT_EQ(apply_phi_power(apply_phi_power(w, r), -r), w);
  }
}

TEST(PhiProperties, PowerComposition) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 400; ++t) {
    FWord w = test::random_fword(rng, 4, test::uniform(rng, 0, 20));
    long r = static_cast<long>(test::uniform(rng, 0, 12)) - 6;
    long s = static_cast<long>(test::uniform(rng, 0, 12)) - 6;
    EXPECT_EQ(apply_phi_power(apply_phi_power(w, r), s), apply_phi_power(w, r + s));
  }
}

TEST(PhiProperties, Homomorphism) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 400; ++t) {
    FWord u = test::random_fword(rng, 4, test::uniform(rng, 0, 15));
    FWord v = test::random_fword(rng, 4, test::uniform(rng, 0, 15));
    long r = static_cast<long>(test::uniform(rng, 0, 12)) - 6;
    EXPECT_EQ(apply_phi_power(mul(u, v), r), mul(apply_phi_power(u, r), apply_phi_power(v, r)));
  }
}

TEST(PhiProperties, Positivity) {
  std::mt19937_64 rng(25);
  std::uniform_int_distribution<int> gen(1, 5);
  for (int t = 0; t < 300; ++t) {
    std::size_t len = test::uniform(rng, 1, 15);
    FWord pos, alt;
    for (std::size_t k = 0; k < len; ++k) {
      int i = gen(rng);
      pos.push_back(letter_a(i));
      alt.push_back(letter_a(i, i % 2 ? 1 : -1));  // b_i = a_i^((-1)^(i+1))
    }
    for (Letter x : apply_phi_power(pos, 1)) EXPECT_GT(x, 0);
    for (Letter x : apply_phi_power(alt, -1)) EXPECT_EQ(x > 0, gen_index(x) % 2 == 1);
  }
}

TEST(PhiProperties, LengthFormula) {
  for (int i = 1; i <= 6; ++i)
    for (long r = -25; r <= 25; ++r) {
      auto want = ref_length(i, r);
      EXPECT_EQ(static_cast<std::uint64_t>(letter_image_length(i, r)), want) << i << "," << r;
      EXPECT_EQ(apply_phi_power(FWord{i}, r).size(), want) << i << "," << r;
    }
}

TEST(PhiProperties, ClosedFormNeedsNoReduction) {
  for (int i = 2; i <= 6; ++i)
    for (long r = -12; r <= 12; ++r) {
      if (r == 0) continue;
      FWord cf = phi_letter_closed_form(i, r);
      EXPECT_TRUE(is_reduced(cf));
      EXPECT_EQ(cf, apply_phi_power(FWord{i}, r)) << i << "," << r;
    }
}

TEST(PhiProperties, FixedCharacterizationExhaustive) {
  auto letters = alphabet(3, false);
  long checked = 0;
  for_each_reduced_word(letters, 6, [&](const FWord& w) {
    bool shape = rank(w) <= 2;
    if (shape) {
      for (const auto& pc : decompose(w, 2).pieces) {
        FWord pw = pc.word(w);
        bool ok = true;
        if (pc.type == PieceType::Wrap) {
          for (std::size_t k = 1; k + 1 < pw.size(); ++k) ok &= gen_index(pw[k]) == 1;
          ok &= pw.front() == 2;
        } else {
          ok = rank(pw) <= 1;
        }
        shape &= ok;
      }
    }
    EXPECT_EQ(is_fixed(w), shape) << to_string(w);
    EXPECT_EQ(is_fixed(w), apply_phi_power(w, 1) == w);
    ++checked;
    return false;
  });
  EXPECT_EQ(checked, 1 + 6 + 30 + 150 + 750 + 3750 + 18750);
}

TEST(PhiCache, ConcurrentFillMatchesReference) {
  PhiPowerCache cache;
  std::vector<std::thread> pool;
  std::vector<int> bad(8, 0);
  for (int th = 0; th < 8; ++th)
    pool.emplace_back([&, th] {
      for (int i = 1; i <= 5; ++i)
        for (long r = -7; r <= 7; ++r)
          if (*cache.get(i, (r + th) % 8) != ref_phi(FWord{i}, (r + th) % 8)) ++bad[th];
    });
  for (auto& t : pool) t.join();
  for (int b : bad) EXPECT_EQ(b, 0);
  EXPECT_GT(cache.size(), 0u);
  cache.clear();
  EXPECT_EQ(cache.size(), 0u);
}
