#pragma once

#include <random>
#include <string>
#include <vector>

#include "hydra/word.hpp"

namespace hydra::test {

inline RawWord W(const std::string& text) { return parse_word(text); }

// Hand-rolled generators; every property test seeds its own engine.
inline FWord random_fword(std::mt19937_64& rng, int m, std::size_t len) {
  std::uniform_int_distribution<int> pick(1, m);
  std::bernoulli_distribution sign(0.5);
  FWord w;
  while (w.size() < len) {
    Letter x = letter_a(pick(rng), sign(rng) ? 1 : -1);
    if (!w.empty() && w.back() == -x) continue;
    w.push_back(x);
  }
  return w;
}

inline HWord random_hword(std::mt19937_64& rng, int m, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, 2 * m + 1);
  HWord w;
  while (w.size() < len) {
    int k = pick(rng);
    Letter x = k < 2 * m ? letter_a(k / 2 + 1, k % 2 ? -1 : 1) : letter_s(k == 2 * m ? 1 : -1);
    if (!w.empty() && w.back() == -x) continue;
    w.push_back(x);
  }
  return w;
}

// Unreduced word, for reduction properties.
inline RawWord random_raw(std::mt19937_64& rng, int m, std::size_t len) {
  std::uniform_int_distribution<int> pick(1, m);
  std::bernoulli_distribution sign(0.5);
  RawWord w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(letter_a(pick(rng), sign(rng) ? 1 : -1));
  return w;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline HWord concat(std::initializer_list<HWord> parts) {
  HWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace hydra::test
