#include "hydra/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace hydra {

bool has_stable(std::span<const Letter> w) {
  return std::any_of(w.begin(), w.end(), is_stable);
}

bool is_reduced(std::span<const Letter> w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

bool is_cyclically_reduced(std::span<const Letter> w) {
  return is_reduced(w) && (w.size() < 2 || w.front() != -w.back());
}

RawWord reduce_mixed(std::span<const Letter> w) {
  RawWord out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

FWord free_reduce(std::span<const Letter> w) {
  if (has_stable(w)) throw DomainError("free_reduce: word contains the stable letter");
  return reduce_mixed(w);
}

FWord invert(std::span<const Letter> w) {
  FWord out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[w.size() - 1 - i] = -w[i];
  return out;
}

void append_reduce(FWord& a, std::span<const Letter> b) {
  std::size_t k = 0;
  while (k < b.size() && !a.empty() && a.back() == -b[k]) {
    a.pop_back();
    ++k;
  }
  a.insert(a.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
}

FWord mul(std::span<const Letter> a, std::span<const Letter> b) {
  FWord out(a.begin(), a.end());
  append_reduce(out, b);
  return out;
}

FWord mul(std::span<const Letter> a, std::span<const Letter> b, std::span<const Letter> c) {
  FWord out = mul(a, b);
  append_reduce(out, c);
  return out;
}

CyclicReduction cyclic_reduce(std::span<const Letter> w) {
  FWord r = reduce_mixed(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  CyclicReduction cr;
  cr.core.assign(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
  cr.y.assign(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(lo));
  return cr;
}

int rank(std::span<const Letter> w) {
  int m = 0;
  for (Letter x : w)
    if (!is_stable(x)) m = std::max(m, gen_index(x));
  return m;
}

FWord power(std::span<const Letter> w, long k) {
  FWord base = k >= 0 ? FWord(w.begin(), w.end()) : invert(w);
  FWord out;
  for (long i = 0; i < std::labs(k); ++i) append_reduce(out, base);
  return out;
}

FWord subword(std::span<const Letter> w, std::size_t start, std::size_t end) {
  return FWord(w.begin() + static_cast<std::ptrdiff_t>(start), w.begin() + static_cast<std::ptrdiff_t>(end));
}

bool is_prefix(std::span<const Letter> pre, std::span<const Letter> w) {
  return pre.size() <= w.size() && std::equal(pre.begin(), pre.end(), w.begin());
}

bool is_suffix(std::span<const Letter> suf, std::span<const Letter> w) {
  return suf.size() <= w.size() && std::equal(suf.begin(), suf.end(), w.end() - static_cast<std::ptrdiff_t>(suf.size()));
}

std::size_t find_subword(std::span<const Letter> needle, std::span<const Letter> hay) {
  auto it = std::search(hay.begin(), hay.end(), needle.begin(), needle.end());
  return it == hay.end() && !needle.empty() ? std::string::npos : static_cast<std::size_t>(it - hay.begin());
}

bool contains_subword(std::span<const Letter> needle, std::span<const Letter> hay) {
  return find_subword(needle, hay) != std::string::npos;
}

std::size_t common_prefix_length(std::span<const Letter> a, std::span<const Letter> b) {
  std::size_t n = std::min(a.size(), b.size()), k = 0;
  while (k < n && a[k] == b[k]) ++k;
  return k;
}

namespace {

long parse_int(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) throw ParseError("expected integer at offset " + std::to_string(start));
  long v = 0;
  const char* b = text.data() + (text[start] == '+' ? start + 1 : start);
  auto [ptr, ec] = std::from_chars(b, text.data() + pos, v);
  if (ec != std::errc() || ptr != text.data() + pos)
    throw ParseError("integer out of range at offset " + std::to_string(start));
  return v;
}

}  // namespace

RawWord parse_word(std::string_view text) { return parse_word(text, 0); }

RawWord parse_word(std::string_view text, int max_rank) {
  RawWord out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*' || text[pos] == '.'))
      ++pos;
  };
  skip_ws();
  std::string_view rest = text.substr(pos);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
  if (rest.empty() || rest == "e" || rest == "1" || rest == "\xce\xb5" || rest == "eps") return out;

  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    char c = text[pos];
    Letter base;
    if (c == 's' || c == 'S') {
      base = c == 's' ? kStable : -kStable;
      ++pos;
    } else if (c == 'a' || c == 'A') {
      ++pos;
      std::size_t d = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (d == pos) throw ParseError("generator index missing at offset " + std::to_string(d));
      long idx = 0;
      std::from_chars(text.data() + d, text.data() + pos, idx);
      if (idx < 1 || idx >= kStable) throw ParseError("generator index out of range: " + std::to_string(idx));
      if (max_rank > 0 && idx > max_rank)
        throw ParseError("generator a" + std::to_string(idx) + " exceeds rank " + std::to_string(max_rank));
      base = c == 'a' ? static_cast<Letter>(idx) : -static_cast<Letter>(idx);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' at offset " + std::to_string(pos));
    }
    long e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = parse_int(text, pos);
    }
    if (std::labs(e) > 100000000L) throw ParseError("exponent too large");
    Letter x = e >= 0 ? base : -base;
    for (long k = 0; k < std::labs(e); ++k) out.push_back(x);
  }
  return out;
}

std::string to_string(std::span<const Letter> w) {
  if (w.empty()) return "ε";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i);
    Letter x = w[i];
    if (!out.empty()) out += ' ';
    out += is_stable(x) ? std::string("s") : "a" + std::to_string(gen_index(x));
    long e = x > 0 ? run : -run;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace hydra
