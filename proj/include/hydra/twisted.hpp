#pragma once

#include <optional>
#include <string>

#include "hydra/group.hpp"

namespace hydra {

// Search bounds. Negative answers hold only relative to these.
struct BoundPolicy {
  double k_multiplier = 1.0;      // phi-orbit scan: |N| <= k_multiplier * (len + p) + r_slack
  long r_slack = 2;               // 0-twisted r range slack; also the closure length slack
  double qp_multiplier = 1.0;     // closure length cap, relative to the longer descended word
  std::optional<long> hard_cap;   // states examined per instance before giving up
  int closure_depth = 2;          // rotation depth explored from each side after descent
};

// key=value lines; '#' starts a comment. Throws ParseError on unknown keys or bad values.
BoundPolicy parse_policy(std::string_view text);
std::string to_string(const BoundPolicy& policy);

enum class TwistedMethod { Zero, IConfig, HConfig };
std::string to_string(TwistedMethod m);

// u~ = u0 u1, phi^-r(v~) = v0 v1 literally, w~ = u0 x v0^-1.
struct HSplit {
  FWord u0, u1, v0, v1, x;
};

enum class ChunkTag { X1, X2, X3, X4 };
std::string to_string(ChunkTag t);

// x = L S M1 M2 P R with M1 = pi phi^p(pi) ... phi^(p(q-1))(pi).
struct ChunkForm {
  ChunkTag tag = ChunkTag::X3;
  FWord L, S, M1, M2, P, R;
  long q = 0;
  FWord pi;
};

struct TwistedSolution {
  long r = 0;
  FWord w_tilde;
  bool has_w_tilde = true;  // false when folding the H-witness into (r, w~) ran out of letter budget
  TwistedMethod method = TwistedMethod::Zero;
  std::optional<HSplit> split;
  std::optional<ChunkForm> chunk;
  bool every_r = false;  // 0-twisted fixed branch: the same w~ works for all r
  HWord conjugator;      // H-word taking u~ s^p to v~ s^p (H solver only)
};

enum class SolveStatus { Found, Absent, Inconclusive };
std::string to_string(SolveStatus s);

struct TwistedResult {
  SolveStatus status = SolveStatus::Absent;
  std::optional<TwistedSolution> solution;

  bool found() const { return status == SolveStatus::Found; }
};

// u~ phi^-p(w~) == w~ phi^-r(v~)
bool check_twisted(std::span<const Letter> u, std::span<const Letter> v, long p, long r, std::span<const Letter> w);

struct OrbitMin {
  FWord word;      // shortest (then least) element of the phi-orbit found
  long shift = 0;  // word == phi^shift(input)
};
// Scans phi^N(w) in both directions, stopping once lengths pass twice the best plus 8 or
// |N| exceeds max_shift.
OrbitMin orbit_min(std::span<const Letter> w, long max_shift);

TwistedResult solve_0_twisted(std::span<const Letter> u, std::span<const Letter> v, const BoundPolicy& policy = {});

// Throws DomainError when p <= 0.
TwistedResult solve_i_twisted(std::span<const Letter> u, std::span<const Letter> v, long p);

// Conjugacy of u~ s^p and v~ s^p in H_m by descent and bounded rotation closure.
// u_word / v_word are optional mixed words with those normal forms; they only make the
// returned conjugator shorter. m = 0 uses the larger input rank. Throws DomainError when p <= 0.
TwistedResult solve_h_twisted(std::span<const Letter> u, std::span<const Letter> v, long p, int m,
                              const BoundPolicy& policy = {}, std::span<const Letter> u_word = {},
                              std::span<const Letter> v_word = {});

// Looks for a block pi phi^p(pi) ... inside sol.split->x whose swap for s^(pq) still conjugates.
std::optional<ChunkForm> find_x3_chunk(const TwistedSolution& sol, const HElem& u, const HElem& v);

// u0 L S s^(pq) M2 P R v0^-1 s^r. Throws DomainError without an X3 chunk and split, and
// std::logic_error if the result fails to conjugate u to v.
HWord linearize_conjugator(const TwistedSolution& sol, const HElem& u, const HElem& v);

// Greedy shortening of a conjugator. u_word / v_word, when given, are mixed words for u and
// v whose normal-form subwords may be re-expressed. Throws DomainError unless w conjugates u to v.
HWord compress_conjugator(std::span<const Letter> w, const HElem& u, const HElem& v,
                          std::span<const Letter> u_word = {}, std::span<const Letter> v_word = {});

}  // namespace hydra
