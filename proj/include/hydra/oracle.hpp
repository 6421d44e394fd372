#pragma once

#include <optional>
#include <unordered_map>
#include <utility>

#include "hydra/group.hpp"

namespace hydra {

struct WordHash {
  std::size_t operator()(const std::vector<Letter>& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter x : w) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Alphabet a1 < a1^-1 < a2 < ... < am^-1 (< s < s^-1 when mixed).
std::vector<Letter> alphabet(int m, bool with_stable);

// Calls f(word) for every freely reduced word of length <= max_len in shortlex order;
// stops early when f returns true.
template <class F>
bool for_each_reduced_word(const std::vector<Letter>& letters, int max_len, F&& f) {
  std::vector<Letter> w;
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == 0) return f(static_cast<const std::vector<Letter>&>(w));
    for (Letter x : letters) {
      if (!w.empty() && w.back() == -x) continue;
      w.push_back(x);
      bool stop = self(self, depth - 1);
      w.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (int len = 0; len <= max_len; ++len)
    if (rec(rec, len)) return true;
  return false;
}

// First mixed word w (shortlex, length <= max_len) with u w = w v. m = 0 uses the inputs' rank.
std::optional<HWord> oracle_conjugate(const HElem& u, const HElem& v, int max_len, int m = 0);

struct TwistedHit {
  long r = 0;
  FWord w_tilde;
};

// r order: 0..p-1 when p > 0, else 0, -1, 1, -2, 2, ... up to |r| <= r_range.
std::vector<long> oracle_r_order(long p, long r_range);

// First (r, w~) with u~ phi^-p(w~) = w~ phi^-r(v~), w~ reduced of length <= w_len.
std::optional<TwistedHit> oracle_twisted(std::span<const Letter> u, std::span<const Letter> v, long p, long r_range,
                                         int w_len, int m = 0);

// The same search with the w~ side tabulated once per (u~, p): maps w~^-1 u~ phi^-p(w~) to
// the shortlex-first w~ producing it. Queries give the same answer as oracle_twisted.
class TwistedOracleTable {
 public:
  TwistedOracleTable(std::span<const Letter> u, long p, int w_len, int m);
  std::optional<TwistedHit> query(std::span<const Letter> v, long r_range) const;

 private:
  long p_;
  std::unordered_map<FWord, FWord, WordHash> first_;
};

}  // namespace hydra
