#include "hydra/oracle.hpp"

#include <algorithm>

#include "hydra/phi.hpp"

namespace hydra {

std::vector<Letter> alphabet(int m, bool with_stable) {
  std::vector<Letter> out;
  for (int i = 1; i <= m; ++i) {
    out.push_back(i);
    out.push_back(-i);
  }
  if (with_stable) {
    out.push_back(kStable);
    out.push_back(-kStable);
  }
  return out;
}

std::optional<HWord> oracle_conjugate(const HElem& u, const HElem& v, int max_len, int m) {
  if (m <= 0) m = std::max({1, rank(u.u_tilde), rank(v.u_tilde)});
  std::optional<HWord> found;
  for_each_reduced_word(alphabet(m, true), max_len, [&](const std::vector<Letter>& w) {
    HElem g = normal_form(w);
    if (check_conjugation(u, g, v)) {
      found = w;
      return true;
    }
    return false;
  });
  return found;
}

std::vector<long> oracle_r_order(long p, long r_range) {
  std::vector<long> rs;
  if (p > 0) {
    for (long r = 0; r < p; ++r) rs.push_back(r);
  } else {
    rs.push_back(0);
    for (long r = 1; r <= r_range; ++r) {
      rs.push_back(-r);
      rs.push_back(r);
    }
  }
  return rs;
}

std::optional<TwistedHit> oracle_twisted(std::span<const Letter> u, std::span<const Letter> v, long p, long r_range,
                                         int w_len, int m) {
  FWord ur = free_reduce(u), vr = free_reduce(v);
  if (m <= 0) m = std::max({1, rank(ur), rank(vr)});
  auto letters = alphabet(m, false);
  for (long r : oracle_r_order(p, r_range)) {
    FWord vp = apply_phi_power(vr, -r);
    std::optional<TwistedHit> hit;
    for_each_reduced_word(letters, w_len, [&](const std::vector<Letter>& w) {
      if (mul(ur, apply_phi_power(w, -p)) == mul(w, vp)) {
        hit = TwistedHit{r, w};
        return true;
      }
      return false;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

TwistedOracleTable::TwistedOracleTable(std::span<const Letter> u, long p, int w_len, int m) : p_(p) {
  FWord ur = free_reduce(u);
  for_each_reduced_word(alphabet(m, false), w_len, [&](const std::vector<Letter>& w) {
    FWord key = mul(invert(w), ur, apply_phi_power(w, -p));
    first_.try_emplace(std::move(key), w);
    return false;
  });
}

std::optional<TwistedHit> TwistedOracleTable::query(std::span<const Letter> v, long r_range) const {
  FWord vr = free_reduce(v);
  for (long r : oracle_r_order(p_, r_range)) {
    auto it = first_.find(apply_phi_power(vr, -r));
    if (it != first_.end()) return TwistedHit{r, it->second};
  }
  return std::nullopt;
}

}  // namespace hydra
