#include "hydra/twisted.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "hydra/free_conj.hpp"
#include "hydra/oracle.hpp"
#include "hydra/phi.hpp"

namespace hydra {

// ---------------------------------------------------------------- policy

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_nonneg_double(std::string_view key, std::string_view val) {
  std::string s(val);
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("policy: bad value for " + std::string(key));
  }
  if (used != s.size() || d < 0 || !std::isfinite(d)) throw ParseError("policy: bad value for " + std::string(key));
  return d;
}

long parse_nonneg_long(std::string_view key, std::string_view val) {
  long out = 0;
  auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), out);
  if (ec != std::errc() || ptr != val.data() + val.size() || out < 0)
    throw ParseError("policy: bad value for " + std::string(key));
  return out;
}

}  // namespace

BoundPolicy parse_policy(std::string_view text) {
  BoundPolicy p;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = line;
    if (auto h = l.find('#'); h != std::string_view::npos) l = l.substr(0, h);
    l = trim(l);
    if (l.empty()) continue;
    auto eq = l.find('=');
    if (eq == std::string_view::npos) throw ParseError("policy: expected key=value");
    auto key = trim(l.substr(0, eq));
    auto val = trim(l.substr(eq + 1));
    if (key == "k_multiplier")
      p.k_multiplier = parse_nonneg_double(key, val);
    else if (key == "qp_multiplier")
      p.qp_multiplier = parse_nonneg_double(key, val);
    else if (key == "r_slack")
      p.r_slack = parse_nonneg_long(key, val);
    else if (key == "closure_depth")
      p.closure_depth = static_cast<int>(parse_nonneg_long(key, val));
    else if (key == "hard_cap") {
      if (val == "none" || val.empty())
        p.hard_cap.reset();
      else
        p.hard_cap = parse_nonneg_long(key, val);
    } else
      throw ParseError("policy: unknown key " + std::string(key));
  }
  return p;
}

std::string to_string(const BoundPolicy& p) {
  std::ostringstream out;
  out << "k_multiplier=" << p.k_multiplier << "\nr_slack=" << p.r_slack << "\nqp_multiplier=" << p.qp_multiplier
      << "\nclosure_depth=" << p.closure_depth << "\nhard_cap=";
  if (p.hard_cap)
    out << *p.hard_cap;
  else
    out << "none";
  out << "\n";
  return out.str();
}

std::string to_string(TwistedMethod m) {
  switch (m) {
    case TwistedMethod::Zero: return "ZERO";
    case TwistedMethod::IConfig: return "I_CONFIG";
    case TwistedMethod::HConfig: return "H_CONFIG";
  }
  return "?";
}

std::string to_string(ChunkTag t) {
  switch (t) {
    case ChunkTag::X1: return "X1";
    case ChunkTag::X2: return "X2";
    case ChunkTag::X3: return "X3";
    case ChunkTag::X4: return "X4";
  }
  return "?";
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found: return "found";
    case SolveStatus::Absent: return "absent";
    case SolveStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------- basics

bool check_twisted(std::span<const Letter> u, std::span<const Letter> v, long p, long r, std::span<const Letter> w) {
  FWord ur = free_reduce(u), vr = free_reduce(v), wr = free_reduce(w);
  return mul(ur, apply_phi_power(wr, -p)) == mul(wr, apply_phi_power(vr, -r));
}

OrbitMin orbit_min(std::span<const Letter> w, long max_shift) {
  OrbitMin best{FWord(w.begin(), w.end()), 0};
  if (is_fixed(w)) return best;
  for (int dir : {1, -1}) {
    FWord cur = best.word;
    long base = best.shift;
    for (long n = 1; n <= max_shift; ++n) {
      cur = apply_phi_power(cur, dir);
      if (cur.size() < best.word.size() || (cur.size() == best.word.size() && cur < best.word)) {
        best.word = cur;
        best.shift = base + dir * n;
      }
      if (cur.size() > 2 * best.word.size() + 8) break;
    }
  }
  return best;
}

// ---------------------------------------------------------------- 0-twisted

TwistedResult solve_0_twisted(std::span<const Letter> u, std::span<const Letter> v, const BoundPolicy& policy) {
  FWord ur = free_reduce(u), vr = free_reduce(v);
  auto cu = cyclic_reduce(ur);
  auto cv = cyclic_reduce(vr);

  auto make = [&](long r, const FWord& vimg, bool every) {
    auto cr = cyclic_reduce(vimg);
    std::size_t d = rotation_offset(cu.core, cr.core);
    TwistedSolution s;
    s.r = r;
    s.method = TwistedMethod::Zero;
    s.every_r = every;
    HSplit sp;
    sp.u0 = subword(ur, 0, cu.y.size() + d);
    sp.u1 = subword(ur, sp.u0.size(), ur.size());
    sp.v0 = cr.y;
    sp.v1 = subword(vimg, sp.v0.size(), vimg.size());
    s.w_tilde = mul(sp.u0, invert(sp.v0));
    s.split = std::move(sp);
    return TwistedResult{SolveStatus::Found, std::move(s)};
  };

  if (is_fixed(cv.core)) {
    if (conjugate_in_f(ur, vr)) return make(0, vr, true);
    return {};
  }
  long r_max = static_cast<long>(cu.core.size() + cv.core.size()) + policy.r_slack;
  // phi^-r(v') for r = 0, -1, 1, -2, 2, ...; images computed incrementally in each direction.
  FWord up = cv.core, down = cv.core;
  for (long k = 0; k <= r_max; ++k) {
    for (int sign : {-1, 1}) {
      if (k == 0 && sign == 1) continue;
      long r = sign * k;
      FWord& img = sign < 0 ? up : down;  // r < 0 means phi^{|r|}, r > 0 means phi^{-|r|}
      if (k > 0) img = apply_phi_power(img, sign < 0 ? 1 : -1);
      if (cyclic_reduce(img).core.size() != cu.core.size()) continue;
      if (!conjugate_in_f(cu.core, img)) continue;
      return make(r, apply_phi_power(vr, -r), false);
    }
  }
  return {};
}

// ---------------------------------------------------------------- I-configuration

namespace {

// reduce(P^-1 w phi^-p(P)) for every prefix P of w, shortest first.
std::vector<FWord> prefix_rotations(const FWord& w, long p) {
  std::vector<FWord> out;
  out.reserve(w.size() + 1);
  FWord img;  // phi^-p of the current prefix
  for (std::size_t k = 0; k <= w.size(); ++k) {
    FWord pre = subword(w, 0, k);
    out.push_back(mul(invert(pre), w, img));
    if (k < w.size()) append_reduce(img, apply_phi_power(FWord{w[k]}, -p));
  }
  return out;
}

}  // namespace

TwistedResult solve_i_twisted(std::span<const Letter> u, std::span<const Letter> v, long p) {
  if (p <= 0) throw DomainError("solve_i_twisted: p must be positive");
  FWord ur = free_reduce(u), vr = free_reduce(v);
  auto lhs = prefix_rotations(ur, p);
  for (long r = 0; r < p; ++r) {
    FWord vp = apply_phi_power(vr, -r);
    auto rhs = prefix_rotations(vp, p);
    std::unordered_map<FWord, std::size_t, WordHash> first;
    for (std::size_t j = 0; j < rhs.size(); ++j) first.try_emplace(rhs[j], j);
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      auto it = first.find(lhs[k]);
      if (it == first.end()) continue;
      TwistedSolution s;
      s.r = r;
      s.method = TwistedMethod::IConfig;
      HSplit sp{subword(ur, 0, k), subword(ur, k, ur.size()), subword(vp, 0, it->second),
                subword(vp, it->second, vp.size()), {}};
      s.w_tilde = mul(sp.u0, invert(sp.v0));
      s.split = std::move(sp);
      return {SolveStatus::Found, std::move(s)};
    }
  }
  return {};
}

// ---------------------------------------------------------------- H-configuration

namespace {

// One conjugation of A s^p. Split k: A = c d -> d phi^-p(c), conjugator c.
// Letter: A -> a^-1 A phi^-p(a), conjugator a. Every move is followed by an orbit shift
// A -> phi^N(A), conjugator s^N.
struct Step {
  enum Kind { None, Split, Letter_ } kind = None;
  std::size_t k = 0;
  Letter a = 0;
  long shift = 0;
};

FWord apply_move(const FWord& A, const Step& st, long p) {
  switch (st.kind) {
    case Step::Split:
      return mul(subword(A, st.k, A.size()), apply_phi_power(subword(A, 0, st.k), -p));
    case Step::Letter_:
      return mul(FWord{-st.a}, A, apply_phi_power(FWord{st.a}, -p));
    case Step::None:
      break;
  }
  return A;
}

template <class F>
void for_each_move(const FWord& A, int m, F&& f) {
  for (std::size_t k = 1; k < A.size(); ++k) f(Step{Step::Split, k, 0, 0});
  for (int i = 1; i <= m; ++i)
    for (int sgn : {1, -1}) f(Step{Step::Letter_, 0, letter_a(i, sgn), 0});
}

struct Searcher {
  long p;
  int m;
  const BoundPolicy& policy;
  long examined = 0;

  long shift_bound(const FWord& A) const {
    return static_cast<long>(policy.k_multiplier * static_cast<double>(A.size() + static_cast<std::size_t>(p))) +
           policy.r_slack + 1;
  }
  OrbitMin canon(const FWord& A) const { return orbit_min(A, shift_bound(A)); }

  bool over_cap() const { return policy.hard_cap && examined > *policy.hard_cap; }

  // Greedy length descent; returns the final word and the steps leading to it.
  FWord descend(const FWord& start, std::vector<Step>& path) {
    OrbitMin c0 = canon(start);
    path.push_back(Step{Step::None, 0, 0, c0.shift});
    FWord A = c0.word;
    while (!over_cap()) {
      FWord best = A;
      Step best_step;
      for_each_move(A, m, [&](const Step& st) {
        ++examined;
        OrbitMin c = canon(apply_move(A, st, p));
        if (c.word.size() < best.size() || (c.word.size() == best.size() && best.size() < A.size() && c.word < best)) {
          best = std::move(c.word);
          best_step = st;
          best_step.shift = c.shift;
        }
      });
      if (best.size() >= A.size()) break;
      A = std::move(best);
      path.push_back(best_step);
    }
    return A;
  }

  struct Node {
    FWord key;
    int parent;
    Step step;
  };

  struct Closure {
    std::vector<Node> nodes;
    std::unordered_map<FWord, int, WordHash> index;
  };

  // BFS to the given depth; stop(idx) may end the search early.
  template <class Stop>
  void grow(Closure& cl, const FWord& root, std::size_t cap, Stop&& stop) {
    cl.nodes.push_back(Node{root, -1, {}});
    cl.index.emplace(root, 0);
    if (stop(0)) return;
    std::size_t lo = 0;
    for (int d = 0; d < policy.closure_depth; ++d) {
      std::size_t hi = cl.nodes.size();
      for (std::size_t i = lo; i < hi; ++i) {
        FWord A = cl.nodes[i].key;
        bool done = false;
        for_each_move(A, m, [&](const Step& st) {
          if (done || over_cap()) return;
          FWord B = apply_move(A, st, p);
          if (B.size() > cap) return;
          ++examined;
          OrbitMin c = canon(B);
          if (cl.index.count(c.word)) return;
          Step s = st;
          s.shift = c.shift;
          cl.index.emplace(c.word, static_cast<int>(cl.nodes.size()));
          cl.nodes.push_back(Node{std::move(c.word), static_cast<int>(i), s});
          done = stop(static_cast<int>(cl.nodes.size() - 1));
        });
        if (done) return;
        if (over_cap()) return;
      }
      lo = hi;
    }
  }

  static std::vector<Step> path_to(const Closure& cl, int idx) {
    std::vector<Step> out;
    for (int i = idx; cl.nodes[static_cast<std::size_t>(i)].parent >= 0; i = cl.nodes[static_cast<std::size_t>(i)].parent)
      out.push_back(cl.nodes[static_cast<std::size_t>(i)].step);
    std::reverse(out.begin(), out.end());
    return out;
  }
};

HWord shorter(HWord a, HWord b) { return b.size() < a.size() ? b : a; }

HWord with_s(const FWord& A, long p) {
  HWord w = A;
  HWord t = s_power(p);
  w.insert(w.end(), t.begin(), t.end());
  return w;
}

// Replays steps on (A, W, G), with W a mixed word for A s^p and G^-1 u G = W.
// Returns G.
HWord replay(FWord A, HWord W, const std::vector<Step>& steps, long p) {
  HWord G;
  for (const Step& st : steps) {
    HWord C;
    if (st.kind == Step::Split) {
      C = shorter(subword(A, 0, st.k), short_subword_word(W, 0, st.k));
    } else if (st.kind == Step::Letter_) {
      C = {st.a};
    }
    if (st.kind != Step::None) {
      A = apply_move(A, st, p);
      HWord conj = invert(C);
      conj.insert(conj.end(), W.begin(), W.end());
      conj.insert(conj.end(), C.begin(), C.end());
      W = shorter(with_s(A, p), reduce_mixed(conj));
      G.insert(G.end(), C.begin(), C.end());
      G = reduce_mixed(G);
    }
    if (st.shift != 0) {
      A = apply_phi_power(A, st.shift);
      HWord conj = s_power(-st.shift);
      conj.insert(conj.end(), W.begin(), W.end());
      HWord t = s_power(st.shift);
      conj.insert(conj.end(), t.begin(), t.end());
      W = shorter(with_s(A, p), reduce_mixed(conj));
      G.insert(G.end(), t.begin(), t.end());
      G = reduce_mixed(G);
    }
  }
  return G;
}

HElem h_pow(const HElem& g, long k) {
  HElem base = k >= 0 ? g : h_inv(g);
  HElem out;
  for (long i = 0; i < std::labs(k); ++i) out = h_mul(out, base);
  return out;
}

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

}  // namespace

TwistedResult solve_h_twisted(std::span<const Letter> u, std::span<const Letter> v, long p, int m,
                              const BoundPolicy& policy, std::span<const Letter> u_word,
                              std::span<const Letter> v_word) {
  if (p <= 0) throw DomainError("solve_h_twisted: p must be positive");
  FWord ur = free_reduce(u), vr = free_reduce(v);
  if (m <= 0) m = std::max({1, rank(ur), rank(vr)});
  HElem U{ur, p}, V{vr, p};
  HWord uw = u_word.empty() ? with_s(ur, p) : HWord(u_word.begin(), u_word.end());
  HWord vw = v_word.empty() ? with_s(vr, p) : HWord(v_word.begin(), v_word.end());
  if (normal_form(uw) != U || normal_form(vw) != V) throw DomainError("solve_h_twisted: word hints do not match");

  Searcher S{p, m, policy};
  std::vector<Step> du, dv;
  FWord a = S.descend(ur, du);
  FWord b = S.descend(vr, dv);
  std::size_t cap = static_cast<std::size_t>(policy.qp_multiplier * static_cast<double>(std::max(a.size(), b.size()))) +
                    static_cast<std::size_t>(policy.r_slack) + static_cast<std::size_t>(letter_image_length(m, -p));

  Searcher::Closure ca, cb;
  S.grow(ca, a, cap, [](int) { return false; });
  int hit_a = -1, hit_b = -1;
  S.grow(cb, b, cap, [&](int idx) {
    auto it = ca.index.find(cb.nodes[static_cast<std::size_t>(idx)].key);
    if (it == ca.index.end()) return false;
    hit_a = it->second;
    hit_b = idx;
    return true;
  });
  if (hit_a < 0) return {S.over_cap() ? SolveStatus::Inconclusive : SolveStatus::Absent, std::nullopt};

  auto pu = du;
  auto pa = Searcher::path_to(ca, hit_a);
  pu.insert(pu.end(), pa.begin(), pa.end());
  auto pv = dv;
  auto pb = Searcher::path_to(cb, hit_b);
  pv.insert(pv.end(), pb.begin(), pb.end());
  HWord gu = replay(ur, uw, pu, p);
  HWord gv = replay(vr, vw, pv, p);
  HWord g = gu;
  HWord gvi = invert(gv);
  g.insert(g.end(), gvi.begin(), gvi.end());
  g = reduce_mixed(g);
  HElem G = normal_form(g);
  if (!check_conjugation(U, G, V)) throw std::logic_error("solve_h_twisted: reconstructed conjugator fails");

  TwistedSolution s;
  s.method = TwistedMethod::HConfig;
  s.conjugator = g;
  long k = floor_div(G.s_exp, p);
  s.r = G.s_exp - k * p;
  try {
    HElem w = h_mul(h_pow(U, -k), G);
    s.w_tilde = w.u_tilde;
    FWord vp = apply_phi_power(vr, -s.r);
    std::size_t a0 = common_prefix_length(ur, s.w_tilde);
    FWord rest = subword(s.w_tilde, a0, s.w_tilde.size());
    std::size_t b0 = common_prefix_length(vp, invert(rest));
    HSplit sp{subword(ur, 0, a0), subword(ur, a0, ur.size()), subword(vp, 0, b0), subword(vp, b0, vp.size()),
              subword(rest, 0, rest.size() - b0)};
    if (sp.x.empty()) return {};
    s.split = std::move(sp);
    if (s.split->x.size() <= 256) s.chunk = find_x3_chunk(s, U, V);
  } catch (const ResourceError&) {
    s.has_w_tilde = false;
    s.w_tilde.clear();
  }
  return {SolveStatus::Found, std::move(s)};
}

// ---------------------------------------------------------------- linearization

namespace {

HWord assemble_swapped(const HSplit& sp, const ChunkForm& c, long p, long r) {
  HWord w = sp.u0;
  auto add = [&](std::span<const Letter> x) { w.insert(w.end(), x.begin(), x.end()); };
  add(c.L);
  add(c.S);
  add(s_power(p * c.q));
  add(c.M2);
  add(c.P);
  add(c.R);
  add(invert(sp.v0));
  add(s_power(r));
  return reduce_mixed(w);
}

}  // namespace

std::optional<ChunkForm> find_x3_chunk(const TwistedSolution& sol, const HElem& u, const HElem& v) {
  if (!sol.split || !sol.has_w_tilde) return std::nullopt;
  const FWord& x = sol.split->x;
  long p = u.s_exp;
  if (p <= 0) return std::nullopt;
  HWord orig = mul(sol.split->u0, x, invert(sol.split->v0));
  std::size_t orig_len = orig.size() + static_cast<std::size_t>(std::labs(sol.r));
  std::size_t max_pi = u.u_tilde.size() + v.u_tilde.size() + static_cast<std::size_t>(p) + 2;
  long budget = 20000;
  for (std::size_t st = 0; st < x.size(); ++st) {
    for (std::size_t len = 1; len <= max_pi && st + len <= x.size(); ++len) {
      FWord pi = subword(x, st, st + len);
      // extend q while the next block phi^(pj)(pi) follows literally
      std::vector<std::size_t> ends{st + len};
      FWord blk = pi;
      for (int guard = 0; guard < 64; ++guard) {
        blk = apply_phi_power(blk, p);
        if (blk.empty() || ends.back() + blk.size() > x.size()) break;
        if (!std::equal(blk.begin(), blk.end(), x.begin() + static_cast<std::ptrdiff_t>(ends.back()))) break;
        ends.push_back(ends.back() + blk.size());
      }
      for (std::size_t q = ends.size(); q >= 1; --q) {
        std::size_t m1 = ends[q - 1] - st;
        if (m1 <= static_cast<std::size_t>(p) * q) continue;
        if (--budget < 0) return std::nullopt;
        ChunkForm c;
        c.tag = ChunkTag::X3;
        c.L = subword(x, 0, st);
        c.M1 = subword(x, st, ends[q - 1]);
        c.R = subword(x, ends[q - 1], x.size());
        c.q = static_cast<long>(q);
        c.pi = pi;
        HWord sw = assemble_swapped(*sol.split, c, p, sol.r);
        if (sw.size() >= orig_len) continue;
        if (check_conjugation(u, normal_form(sw), v)) return c;
      }
    }
  }
  return std::nullopt;
}

HWord linearize_conjugator(const TwistedSolution& sol, const HElem& u, const HElem& v) {
  if (!sol.split || !sol.chunk || sol.chunk->tag != ChunkTag::X3)
    throw DomainError("linearize_conjugator: needs an X3 chunk form");
  HWord w;
  if (sol.chunk->q == 0) {
    w = mul(sol.split->u0, sol.split->x, invert(sol.split->v0));
    HWord t = s_power(sol.r);
    w.insert(w.end(), t.begin(), t.end());
  } else {
    w = assemble_swapped(*sol.split, *sol.chunk, u.s_exp, sol.r);
  }
  if (!check_conjugation(u, normal_form(w), v)) throw std::logic_error("linearize_conjugator: swapped word fails");
  return w;
}

// ---------------------------------------------------------------- compression

namespace {

struct Segment {
  std::size_t start, end;
};

std::vector<Segment> a_segments(const HWord& w) {
  std::vector<Segment> out;
  std::size_t i = 0;
  while (i < w.size()) {
    if (is_stable(w[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < w.size() && !is_stable(w[j])) ++j;
    out.push_back({i, j});
    i = j;
  }
  return out;
}

HWord splice(const HWord& w, Segment seg, const HWord& repl) {
  HWord out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(seg.start));
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(seg.end), w.end());
  return reduce_mixed(out);
}

// Shortest s^-k phi^-k(Y) s^k over k != 0, or empty when none beats Y.
std::optional<HWord> orbit_rewrite(const FWord& y) {
  std::optional<HWord> best;
  std::size_t best_len = y.size();
  if (y.size() < 4 || is_fixed(y)) return best;
  for (int dir : {1, -1}) {
    FWord cur = y;
    for (long k = 1; 2 * static_cast<std::size_t>(k) < best_len; ++k) {
      cur = apply_phi_power(cur, -dir);
      if (cur.size() > 4 * y.size() + 16) break;
      std::size_t len = cur.size() + 2 * static_cast<std::size_t>(k);
      if (len < best_len) {
        HWord w = s_power(-dir * k);
        w.insert(w.end(), cur.begin(), cur.end());
        HWord t = s_power(dir * k);
        w.insert(w.end(), t.begin(), t.end());
        best = std::move(w);
        best_len = len;
      }
    }
  }
  return best;
}

}  // namespace

HWord compress_conjugator(std::span<const Letter> w, const HElem& u, const HElem& v, std::span<const Letter> u_word,
                          std::span<const Letter> v_word) {
  HWord cur = reduce_mixed(w);
  HElem target = normal_form(cur);
  if (!check_conjugation(u, target, v)) throw DomainError("compress_conjugator: word does not conjugate u to v");
  std::vector<std::pair<HWord, FWord>> sources;
  if (!u_word.empty()) sources.emplace_back(HWord(u_word.begin(), u_word.end()), normal_form(u_word).u_tilde);
  if (!v_word.empty()) sources.emplace_back(HWord(v_word.begin(), v_word.end()), normal_form(v_word).u_tilde);

  bool changed = true;
  while (changed) {
    changed = false;
    for (Segment seg : a_segments(cur)) {
      FWord y = subword(cur, seg.start, seg.end);
      std::optional<HWord> cand;
      if (auto o = orbit_rewrite(y)) cand = splice(cur, seg, *o);
      for (auto& [word, nf] : sources) {
        if (y.size() < 2) break;
        std::size_t pos = find_subword(y, nf);
        if (pos == std::string::npos) continue;
        HWord alt = splice(cur, seg, short_subword_word(word, pos, pos + y.size()));
        if (alt.size() < cur.size() && (!cand || alt.size() < cand->size())) cand = std::move(alt);
      }
      if (cand && cand->size() < cur.size()) {
        cur = std::move(*cand);
        changed = true;
        break;
      }
    }
  }
  if (normal_form(cur) != target) throw std::logic_error("compress_conjugator: rewrite changed the element");
  return cur;
}

}  // namespace hydra
