#pragma once

#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hydra {

// A letter is a generator index with the sign folded in: +i is a_i, -i is a_i^-1.
// The stable letter s uses the reserved index kStable.
using Letter = std::int32_t;
inline constexpr Letter kStable = 1 << 20;

// FWord: freely reduced, a-letters only. RawWord: anything, s allowed.
using FWord = std::vector<Letter>;
using RawWord = std::vector<Letter>;
using HWord = std::vector<Letter>;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline bool is_stable(Letter x) { return x == kStable || x == -kStable; }
inline int gen_index(Letter x) { return std::abs(x); }
inline Letter letter_a(int i, int sign = 1) { return sign > 0 ? i : -i; }
inline Letter letter_s(int sign = 1) { return sign > 0 ? kStable : -kStable; }

bool has_stable(std::span<const Letter> w);
bool is_reduced(std::span<const Letter> w);
bool is_cyclically_reduced(std::span<const Letter> w);

// Free reduction of an a-word; throws DomainError on an s-letter.
FWord free_reduce(std::span<const Letter> w);
// Free reduction that also cancels s s^-1; used for mixed words.
RawWord reduce_mixed(std::span<const Letter> w);

FWord invert(std::span<const Letter> w);

// Reduced product of two reduced words; cancellation happens only at the junction.
FWord mul(std::span<const Letter> a, std::span<const Letter> b);
FWord mul(std::span<const Letter> a, std::span<const Letter> b, std::span<const Letter> c);
// Append b to a in place, cancelling at the junction.
void append_reduce(FWord& a, std::span<const Letter> b);

struct CyclicReduction {
  FWord core;
  FWord y;  // y^-1 w y = core, y a prefix of w
};
CyclicReduction cyclic_reduce(std::span<const Letter> w);

// Largest generator index present (s ignored); 0 for the empty word.
int rank(std::span<const Letter> w);

FWord power(std::span<const Letter> w, long k);
FWord subword(std::span<const Letter> w, std::size_t start, std::size_t end);
bool is_prefix(std::span<const Letter> pre, std::span<const Letter> w);
bool is_suffix(std::span<const Letter> suf, std::span<const Letter> w);
// First occurrence of needle in hay, or npos.
std::size_t find_subword(std::span<const Letter> needle, std::span<const Letter> hay);
bool contains_subword(std::span<const Letter> needle, std::span<const Letter> hay);
std::size_t common_prefix_length(std::span<const Letter> a, std::span<const Letter> b);

// Calls f(start, end) for every nonempty subword [start, end), ordered by start then end.
template <class F>
void for_each_subword(std::size_t n, F&& f) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) f(i, j);
}

// Word grammar: tokens a3, A3 (= a3^-1), s, S, each optionally followed by ^k.
// "ε", "e", "1" and the empty string denote the empty word.
RawWord parse_word(std::string_view text);
// Parses and requires all indices <= max_rank (0 means no check).
RawWord parse_word(std::string_view text, int max_rank);
std::string to_string(std::span<const Letter> w);

}  // namespace hydra
