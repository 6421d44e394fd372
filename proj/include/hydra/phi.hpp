#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>

#include "hydra/word.hpp"

namespace hydra {

inline constexpr std::int64_t kDefaultLetterBudget = 10'000'000;

// phi^-1(a_i), from the alternating formula.
FWord phi_inverse_letter(int i);

// Memo of phi^r(a_i). Concurrent readers and writers are fine; inserts are idempotent.
class PhiPowerCache {
 public:
  static PhiPowerCache& global();

  // phi^r(a_i); the returned pointer stays valid for the cache lifetime.
  std::shared_ptr<const FWord> get(int i, long r);
  std::size_t size() const;
  void clear();

 private:
  std::shared_ptr<const FWord> build(int i, long r);

  mutable std::shared_mutex mu_;
  std::map<std::pair<int, long>, std::shared_ptr<const FWord>> table_;
};

// |phi^r(a_i)| from binomial sums; throws ResourceError when it does not fit in int64.
std::int64_t letter_image_length(int i, long r);

// Letter count of the unreduced letterwise image, i.e. sum of |phi^r(a_j)| over letters.
std::int64_t image_material(std::span<const Letter> w, long r);

FWord apply_phi_power(std::span<const Letter> w, long r, std::int64_t budget = kDefaultLetterBudget);

// a_i a_{i-1} phi(a_{i-1}) ... phi^{r-1}(a_{i-1}) for r > 0,
// a_i phi^-1(a_{i-1})^-1 ... phi^r(a_{i-1})^-1 for r < 0.
FWord phi_letter_closed_form(int i, long r);

bool is_fixed(std::span<const Letter> w);

}  // namespace hydra
