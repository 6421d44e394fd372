#pragma once

#include <vector>

#include "hydra/engine.hpp"

namespace hydra {

// g_0 t^e_1 g_1 ... t^e_k g_k with t = a_(level+1) and every g_i in H_level.
struct HnnLevelWord {
  int level = 1;
  std::vector<HElem> syllables;  // k + 1 entries
  std::vector<int> t_exps;       // k entries, each +1 or -1

  std::size_t t_length() const { return t_exps.size(); }
};

// Splits an element of H_(level+1) at its a_(level+1) letters.
HnnLevelWord to_hnn(const HElem& g, int level);
HElem from_hnn(const HnnLevelWord& w);
HWord hnn_to_word(const HnnLevelWord& w);

// s a_level^-1, generator of the second associated subgroup.
HElem hnn_beta(int level);

// No t^-1 c t with c in <s> and no t d t^-1 with d in <beta>.
bool pinch_free(const HnnLevelWord& w);
// U U pinch-free (cyclic pinches included).
bool cyclically_pinch_free(const HnnLevelWord& w);

struct HnnReduction {
  HnnLevelWord word;
  HElem conjugator;  // conjugator^-1 * input * conjugator == word
};

// Removes pinches, then rotates and repeats until the square of the word is pinch-free.
HnnReduction hnn_reduce_with_conjugator(const HnnLevelWord& w);
HnnLevelWord hnn_reduce(const HnnLevelWord& w);

// Conjugacy in H_m through the iterated HNN structure and Collins' lemma.
// search_bound <= 0 uses length(u) + length(v) + 2.
Certificate collins_decide(std::span<const Letter> u, std::span<const Letter> v, long search_bound = 0, int m = 0);

}  // namespace hydra
