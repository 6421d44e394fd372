#include "hydra/pieces.hpp"

#include <cstdlib>

#include "hydra/phi.hpp"

namespace hydra {

const char* to_string(PieceType t) {
  switch (t) {
    case PieceType::Head: return "HEAD";
    case PieceType::Tail: return "TAIL";
    case PieceType::Wrap: return "WRAP";
    case PieceType::Plain: return "PLAIN";
  }
  return "?";
}

PieceType classify_piece(std::span<const Letter> piece, int i) {
  bool head = !piece.empty() && piece.front() == i;
  bool tail = !piece.empty() && piece.back() == -i;
  if (head && tail && piece.size() >= 2) return PieceType::Wrap;
  if (head) return PieceType::Head;
  if (tail) return PieceType::Tail;
  return PieceType::Plain;
}

PieceDecomposition decompose(std::span<const Letter> w, int i) {
  if (rank(w) > i) throw DomainError("decompose: word rank exceeds " + std::to_string(i));
  PieceDecomposition d;
  d.rank = i;
  bool open = false;
  std::size_t start = 0;
  auto close = [&](std::size_t end) {
    if (!open) return;
    Piece p{start, end, i, classify_piece(w.subspan(start, end - start), i)};
    d.pieces.push_back(p);
    open = false;
  };
  for (std::size_t k = 0; k < w.size(); ++k) {
    Letter x = w[k];
    if (x == i) {
      close(k);
      open = true;
      start = k;
    } else if (x == -i) {
      if (!open) {
        open = true;
        start = k;
      }
      close(k + 1);
    } else if (!open) {
      open = true;
      start = k;
    }
  }
  close(w.size());
  return d;
}

FWord PrefixShape::concat() const {
  FWord out = p1;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

namespace {

// Cut the shape down to its first n letters.
PrefixShape truncate(const PrefixShape& s, std::size_t n) {
  PrefixShape out = s;
  if (out.p1.size() >= n) {
    out.p1.resize(n);
    for (auto& part : out.parts) part.clear();
    return out;
  }
  n -= out.p1.size();
  for (auto& part : out.parts) {
    if (part.size() >= n) {
      part.resize(n);
      n = 0;
    } else {
      n -= part.size();
    }
  }
  return out;
}

void pad_parts(PrefixShape& s, int i) {
  std::size_t want = i >= 3 ? static_cast<std::size_t>(i - 2) : 0;
  if (s.parts.size() < want) s.parts.resize(want);
}

// Longest common prefix of a piece starting with a_i and its phi^r image, as
// (prefix of phi^k(a_i)) (subword of phi^r(a_i^-1)).
std::optional<PrefixShape> head_piece_shape(std::span<const Letter> lcp, int i, long r, long k_bound) {
  FWord tail_source = invert(*PhiPowerCache::global().get(i, r));
  for (long mag = 0; mag <= k_bound; ++mag) {
    for (long k : {-mag, mag}) {
      if (mag == 0 && k != 0) continue;
      if (mag != 0 && k == 0) continue;
      auto img = PhiPowerCache::global().get(i, k);
      std::size_t l = common_prefix_length(lcp, *img);
      for (std::size_t s = l + 1; s-- > 0;) {
        auto rest = lcp.subspan(s);
        if (rest.empty() || contains_subword(rest, tail_source)) {
          PrefixShape shape;
          shape.p1 = subword(lcp, 0, s);
          shape.t = i;
          shape.k = k;
          pad_parts(shape, i);
          shape.parts[static_cast<std::size_t>(i - 3)] = FWord(rest.begin(), rest.end());
          return shape;
        }
      }
      if (mag == 0) break;
    }
  }
  return std::nullopt;
}

std::optional<SharedPrefix> shared_prefix_positive(std::span<const Letter> w, long r, long k_bound) {
  int i = rank(w);
  FWord image = apply_phi_power(w, r);
  if (std::equal(w.begin(), w.end(), image.begin(), image.end())) {
    SharedPrefix sp;
    pad_parts(sp.shape, i);
    return sp;
  }
  // i >= 2 here since rank-1 words are fixed.
  auto dec = decompose(w, i);
  std::size_t first = 0;
  for (; first < dec.pieces.size(); ++first) {
    FWord piece = dec.pieces[first].word(w);
    if (apply_phi_power(piece, r) != piece) break;
  }
  const Piece& pc = dec.pieces[first];
  FWord pi = pc.word(w);
  std::span<const Letter> rest = w.subspan(pc.end);

  FWord pi0;
  PrefixShape shape;
  if (i == 2) {
    // Non-fixed rank-2 pieces are a2 a1^q or a1^q a2^-1.
    if (pi.front() == 2) {
      pi0 = {2};
      shape.p1 = {2};
    } else {
      pi0 = {-2};
    }
    shape.t = 2;
    shape.k = 0;
  } else if (rank(pi) < i) {
    auto sub = shared_prefix_positive(pi, r, k_bound);
    if (!sub) return std::nullopt;
    pi0 = sub->w0;
    shape = sub->shape;
  } else if (pi.front() == i) {
    pi0 = pi;
    FWord img = apply_phi_power(pi0, r);
    std::size_t l = common_prefix_length(pi0, img);
    auto s = head_piece_shape(std::span<const Letter>(pi0).subspan(0, l), i, r, k_bound);
    if (!s) return std::nullopt;
    shape = *s;
  } else {
    // pi = u a_i^-1 with rank(u) < i
    FWord u(pi.begin(), pi.end() - 1);
    SharedPrefix sub;
    if (!u.empty()) {
      auto got = shared_prefix_positive(u, r, k_bound);
      if (!got) return std::nullopt;
      sub = *got;
    }
    pi0 = sub.w0;
    pi0.push_back(-i);
    FWord img = apply_phi_power(pi0, r);
    std::size_t l = common_prefix_length(pi0, img);
    FWord p0 = sub.shape.concat();
    if (l <= p0.size()) {
      shape = truncate(sub.shape, l);
    } else {
      shape = sub.shape;
      pad_parts(shape, i);
      shape.parts[static_cast<std::size_t>(i - 3)] = subword(pi0, p0.size(), l);
    }
  }
  pad_parts(shape, i);
  SharedPrefix out;
  out.w0 = pi0;
  out.w0.insert(out.w0.end(), rest.begin(), rest.end());
  out.shape = shape;
  return out;
}

}  // namespace

std::optional<SharedPrefix> shared_prefix_shape(std::span<const Letter> w, long r, long k_bound) {
  if (r == 0) throw DomainError("shared_prefix_shape: r must be nonzero");
  FWord red = free_reduce(w);
  if (r > 0) return shared_prefix_positive(red, r, k_bound);
  // The common prefix of w0 and phi^r(w0) is that of phi^r(w0) and phi^-r of it.
  FWord bar = apply_phi_power(red, r);
  auto sub = shared_prefix_positive(bar, -r, k_bound);
  if (!sub) return std::nullopt;
  sub->w0 = apply_phi_power(sub->w0, -r);
  return sub;
}

}  // namespace hydra
