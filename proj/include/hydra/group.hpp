#pragma once

#include <vector>

#include "hydra/word.hpp"

namespace hydra {

// u_tilde s^s_exp
struct HElem {
  FWord u_tilde;
  long s_exp = 0;

  bool operator==(const HElem&) const = default;
};

HElem normal_form(std::span<const Letter> w);
HElem h_mul(const HElem& g, const HElem& h);
HElem h_inv(const HElem& g);
bool h_equal(const HElem& g, const HElem& h);
// u w == w v
bool check_conjugation(const HElem& u, const HElem& w, const HElem& v);

HWord to_word(const HElem& g);
HWord s_power(long k);
// Letter count of a mixed word after cancelling adjacent inverse pairs.
std::size_t h_length(std::span<const Letter> w);

// One shuffling stage: the leftmost stable letter whose next stable letter is absent or
// its inverse is pushed right, applying phi^-/+1 to the a-letters it passes.
struct ShuffleStage {
  RawWord word;            // u_{i+1}
  std::size_t mover = 0;   // index of the moving stable letter in u_i
  std::size_t count = 0;   // number of a-letters it passed
  int sign = 1;            // sign of the moving letter
  bool cancelled = false;  // met its inverse (case 1) or reached the end (case 2)
};

struct ShuffleTrace {
  RawWord start;
  std::vector<ShuffleStage> stages;
  long s_exp = 0;

  const RawWord& word(std::size_t i) const { return i == 0 ? start : stages[i - 1].word; }
  const RawWord& last() const { return stages.empty() ? start : stages.back().word; }
};

ShuffleTrace shuffle(std::span<const Letter> w);

// A mixed word equal in H to the subword [start, end) of the normal-form word of w,
// built by tracing the subword back through the shuffling stages.
// Its length is at most (2m+1) * length(w).
HWord short_subword_word(std::span<const Letter> w, std::size_t start, std::size_t end);
// Same, for the first occurrence of sub inside the normal-form word; throws DomainError if absent.
HWord short_subword_word(std::span<const Letter> w, std::span<const Letter> sub);

}  // namespace hydra
