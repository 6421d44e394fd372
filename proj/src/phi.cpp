#include "hydra/phi.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <mutex>

namespace hydra {

using boost::multiprecision::cpp_int;

FWord phi_inverse_letter(int i) {
  if (i < 1) throw DomainError("phi_inverse_letter: index must be positive");
  FWord out;
  if (i % 2 == 0) {
    for (int j = i; j >= 2; j -= 2) out.push_back(j);
    for (int j = 1; j < i; j += 2) out.push_back(-j);
  } else {
    for (int j = i; j >= 1; j -= 2) out.push_back(j);
    for (int j = 2; j < i; j += 2) out.push_back(-j);
  }
  return out;
}

FWord phi_letter_closed_form(int i, long r) {
  if (i < 2) throw DomainError("phi_letter_closed_form: needs i >= 2");
  if (r == 0) throw DomainError("phi_letter_closed_form: needs r != 0");
  auto& cache = PhiPowerCache::global();
  FWord out{static_cast<Letter>(i)};
  if (r > 0) {
    for (long k = 0; k < r; ++k) {
      auto img = cache.get(i - 1, k);
      out.insert(out.end(), img->begin(), img->end());
    }
  } else {
    for (long k = -1; k >= r; --k) {
      FWord inv = invert(*cache.get(i - 1, k));
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return out;
}

PhiPowerCache& PhiPowerCache::global() {
  static PhiPowerCache cache;
  return cache;
}

std::size_t PhiPowerCache::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

void PhiPowerCache::clear() {
  std::unique_lock lock(mu_);
  table_.clear();
}

std::shared_ptr<const FWord> PhiPowerCache::get(int i, long r) {
  if (i < 1) throw DomainError("phi power of a non-generator");
  if (i == 1 || r == 0) {
    static thread_local std::map<int, std::shared_ptr<const FWord>> singles;
    auto& p = singles[i];
    if (!p) p = std::make_shared<const FWord>(FWord{static_cast<Letter>(i)});
    return p;
  }
  {
    std::shared_lock lock(mu_);
    auto it = table_.find({i, r});
    if (it != table_.end()) return it->second;
  }
  auto built = build(i, r);
  std::unique_lock lock(mu_);
  auto [it, inserted] = table_.emplace(std::make_pair(i, r), built);
  return it->second;
}

std::shared_ptr<const FWord> PhiPowerCache::build(int i, long r) {
  // The closed form is reduced as concatenated, so no free reduction is needed.
  return std::make_shared<const FWord>(phi_letter_closed_form(i, r));
}

std::int64_t letter_image_length(int i, long r) {
  if (i < 1) throw DomainError("letter_image_length: index must be positive");
  cpp_int total = 0;
  if (r >= 0) {
    // sum_{j<i} C(r, j)
    cpp_int binom = 1;
    for (long j = 0; j < i; ++j) {
      if (j > r) break;
      total += binom;
      binom = binom * (r - j) / (j + 1);
    }
  } else {
    // sum_{j<i} C(|r|+j-1, j)
    long a = -r;
    cpp_int binom = 1;
    for (long j = 0; j < i; ++j) {
      total += binom;
      binom = binom * (a + j) / (j + 1);
    }
  }
  if (total > std::numeric_limits<std::int64_t>::max())
    throw ResourceError("letter_image_length overflows int64");
  return static_cast<std::int64_t>(total);
}

std::int64_t image_material(std::span<const Letter> w, long r) {
  std::int64_t total = 0;
  for (Letter x : w) {
    std::int64_t len = letter_image_length(gen_index(x), r);
    if (total > std::numeric_limits<std::int64_t>::max() - len) throw ResourceError("image length overflows int64");
    total += len;
  }
  return total;
}

FWord apply_phi_power(std::span<const Letter> w, long r, std::int64_t budget) {
  if (has_stable(w)) throw DomainError("apply_phi_power: word contains the stable letter");
  if (r == 0) return free_reduce(w);
  std::int64_t material = image_material(w, r);
  if (material > budget)
    throw ResourceError("apply_phi_power: image needs " + std::to_string(material) + " letters, budget " +
                        std::to_string(budget));
  auto& cache = PhiPowerCache::global();
  FWord out;
  out.reserve(static_cast<std::size_t>(material));
  for (Letter x : w) {
    auto img = cache.get(gen_index(x), r);
    if (x > 0) {
      for (Letter y : *img) {
        if (!out.empty() && out.back() == -y)
          out.pop_back();
        else
          out.push_back(y);
      }
    } else {
      for (auto it = img->rbegin(); it != img->rend(); ++it) {
        Letter y = -*it;
        if (!out.empty() && out.back() == -y)
          out.pop_back();
        else
          out.push_back(y);
      }
    }
  }
  return out;
}

bool is_fixed(std::span<const Letter> w) {
  FWord r = free_reduce(w);
  return apply_phi_power(r, 1) == r;
}

}  // namespace hydra
