#pragma once

#include <optional>
#include <vector>

#include "hydra/word.hpp"

namespace hydra {

enum class PieceType { Head, Tail, Wrap, Plain };

const char* to_string(PieceType t);

// Offsets into the parent word.
struct Piece {
  std::size_t start = 0;
  std::size_t end = 0;
  int rank = 0;
  PieceType type = PieceType::Plain;

  std::size_t size() const { return end - start; }
  FWord word(std::span<const Letter> parent) const { return subword(parent, start, end); }
  bool operator==(const Piece&) const = default;
};

struct PieceDecomposition {
  int rank = 0;
  std::vector<Piece> pieces;

  std::size_t count() const { return pieces.size(); }
};

// Greedy rank-i decomposition: a_i opens a piece, a_i^-1 closes one.
PieceDecomposition decompose(std::span<const Letter> w, int i);

PieceType classify_piece(std::span<const Letter> piece, int i);

// P1 is a prefix of phi^k(a_t); parts[j-3] is P_j for j = 3..rank.
struct PrefixShape {
  FWord p1;
  int t = 0;
  long k = 0;
  std::vector<FWord> parts;

  FWord concat() const;
};

struct SharedPrefix {
  FWord w0;
  PrefixShape shape;
};

// Replacement w0 with the same reduced w^-1 phi^r(w), and the longest common prefix of
// w0 and phi^r(w0) written as P1 P3 ... P_i. Absent when no |k| <= k_bound fits.
std::optional<SharedPrefix> shared_prefix_shape(std::span<const Letter> w, long r, long k_bound);

}  // namespace hydra
