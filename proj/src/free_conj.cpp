#include "hydra/free_conj.hpp"

#include <algorithm>
#include <string>

namespace hydra {

std::size_t rotation_offset(std::span<const Letter> a, std::span<const Letter> b) {
  if (a.size() != b.size()) return std::string::npos;
  if (a.empty()) return 0;
  std::vector<Letter> doubled(a.begin(), a.end());
  doubled.insert(doubled.end(), a.begin(), a.end());
  auto it = std::search(doubled.begin(), doubled.end() - 1, b.begin(), b.end());
  if (it == doubled.end() - 1) return std::string::npos;
  return static_cast<std::size_t>(it - doubled.begin());
}

std::optional<FWord> conjugate_in_f(std::span<const Letter> u, std::span<const Letter> v) {
  auto cu = cyclic_reduce(u);
  auto cv = cyclic_reduce(v);
  std::size_t d = rotation_offset(cu.core, cv.core);
  if (d == std::string::npos) return std::nullopt;
  FWord c = subword(cu.core, 0, d);
  return mul(cu.y, c, invert(cv.y));
}

Root max_root(std::span<const Letter> u) {
  auto cr = cyclic_reduce(u);
  if (cr.core.empty()) throw DomainError("max_root: empty word");
  std::size_t n = cr.core.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t a = d; a < n && periodic; ++a) periodic = cr.core[a] == cr.core[a - d];
    if (periodic) {
      Root r;
      r.root = mul(cr.y, subword(cr.core, 0, d), invert(cr.y));
      r.k = static_cast<long>(n / d);
      return r;
    }
  }
  return {};
}

}  // namespace hydra
