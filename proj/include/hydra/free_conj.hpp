#pragma once

#include <optional>

#include "hydra/word.hpp"

namespace hydra {

// w with u w = w v in F, a prefix of u^-1 followed by a suffix of v; absent if not conjugate.
std::optional<FWord> conjugate_in_f(std::span<const Letter> u, std::span<const Letter> v);

struct Root {
  FWord root;
  long k = 1;
};
// u = root^k with k maximal. Throws DomainError on the empty word.
Root max_root(std::span<const Letter> u);

// Smallest rotation offset d with rot(a, d) == b for cyclic words of equal length, or npos.
std::size_t rotation_offset(std::span<const Letter> a, std::span<const Letter> b);

}  // namespace hydra
