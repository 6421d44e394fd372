#include "hydra/hnn.hpp"

#include <algorithm>
#include <stdexcept>

#include "hydra/phi.hpp"

namespace hydra {

namespace {

HElem t_elem(int level, int e) { return HElem{FWord{letter_a(level + 1, e)}, 0}; }

HElem h_pow(const HElem& g, long n) {
  HElem base = n >= 0 ? g : h_inv(g);
  HElem out;
  for (long i = 0; i < std::labs(n); ++i) out = h_mul(out, base);
  return out;
}

bool in_s(const HElem& g) { return g.u_tilde.empty(); }

bool in_beta(const HElem& g, int level) { return g == h_pow(hnn_beta(level), g.s_exp); }

// t^a g t^b is a pinch
bool is_pinch(int a, const HElem& g, int b, int level) {
  if (a == -1 && b == 1) return in_s(g);
  if (a == 1 && b == -1) return in_beta(g, level);
  return false;
}

// t^a g t^-a rewritten inside H_level
HElem pinch_value(int a, const HElem& g, int level) {
  return a == -1 ? h_pow(hnn_beta(level), g.s_exp) : HElem{{}, g.s_exp};
}

HnnLevelWord linear_reduce(const HnnLevelWord& w) {
  HnnLevelWord out;
  out.level = w.level;
  out.syllables.push_back(w.syllables.front());
  for (std::size_t i = 0; i < w.t_exps.size(); ++i) {
    int e = w.t_exps[i];
    const HElem& next = w.syllables[i + 1];
    if (!out.t_exps.empty() && is_pinch(out.t_exps.back(), out.syllables.back(), e, w.level)) {
      HElem mid = pinch_value(out.t_exps.back(), out.syllables.back(), w.level);
      out.syllables.pop_back();
      out.t_exps.pop_back();
      out.syllables.back() = h_mul(h_mul(out.syllables.back(), mid), next);
    } else {
      out.t_exps.push_back(e);
      out.syllables.push_back(next);
    }
  }
  return out;
}

}  // namespace

HElem hnn_beta(int level) { return normal_form(HWord{letter_s(1), letter_a(level, -1)}); }

HnnLevelWord to_hnn(const HElem& g, int level) {
  if (level < 1) throw DomainError("to_hnn: level must be at least 1");
  if (rank(g.u_tilde) > level + 1) throw DomainError("to_hnn: element outside H_(level+1)");
  HnnLevelWord w;
  w.level = level;
  FWord cur;
  for (Letter x : g.u_tilde) {
    if (gen_index(x) == level + 1) {
      w.syllables.push_back(HElem{cur, 0});
      w.t_exps.push_back(x > 0 ? 1 : -1);
      cur.clear();
    } else {
      cur.push_back(x);
    }
  }
  w.syllables.push_back(HElem{cur, g.s_exp});
  return w;
}

HElem from_hnn(const HnnLevelWord& w) {
  HElem out = w.syllables.front();
  for (std::size_t i = 0; i < w.t_exps.size(); ++i)
    out = h_mul(h_mul(out, t_elem(w.level, w.t_exps[i])), w.syllables[i + 1]);
  return out;
}

HWord hnn_to_word(const HnnLevelWord& w) {
  HWord out = to_word(w.syllables.front());
  for (std::size_t i = 0; i < w.t_exps.size(); ++i) {
    out.push_back(letter_a(w.level + 1, w.t_exps[i]));
    HWord s = to_word(w.syllables[i + 1]);
    out.insert(out.end(), s.begin(), s.end());
  }
  return reduce_mixed(out);
}

bool pinch_free(const HnnLevelWord& w) {
  for (std::size_t i = 0; i + 1 < w.t_exps.size(); ++i)
    if (is_pinch(w.t_exps[i], w.syllables[i + 1], w.t_exps[i + 1], w.level)) return false;
  return true;
}

bool cyclically_pinch_free(const HnnLevelWord& w) {
  if (!pinch_free(w)) return false;
  std::size_t k = w.t_exps.size();
  if (k == 0) return true;
  HElem wrap = h_mul(w.syllables.back(), w.syllables.front());
  return !is_pinch(w.t_exps.back(), wrap, w.t_exps.front(), w.level);
}

HnnReduction hnn_reduce_with_conjugator(const HnnLevelWord& input) {
  HnnReduction out{linear_reduce(input), HElem{}};
  HnnLevelWord& w = out.word;
  while (!w.t_exps.empty()) {
    // conjugate by g_0 so the word starts with a stable letter
    HElem g0 = w.syllables.front();
    w.syllables.back() = h_mul(w.syllables.back(), g0);
    w.syllables.front() = HElem{};
    out.conjugator = h_mul(out.conjugator, g0);
    if (!is_pinch(w.t_exps.back(), w.syllables.back(), w.t_exps.front(), w.level)) break;
    // rotate t^e_1 g_1 to the end, exposing the pinch
    HElem x = h_mul(t_elem(w.level, w.t_exps.front()), w.syllables[1]);
    HnnLevelWord rot;
    rot.level = w.level;
    rot.syllables.push_back(HElem{});
    for (std::size_t i = 1; i < w.t_exps.size(); ++i) {
      rot.t_exps.push_back(w.t_exps[i]);
      rot.syllables.push_back(w.syllables[i + 1]);
    }
    rot.t_exps.push_back(w.t_exps.front());
    rot.syllables.push_back(w.syllables[1]);
    out.conjugator = h_mul(out.conjugator, x);
    w = linear_reduce(rot);
  }
  return out;
}

HnnLevelWord hnn_reduce(const HnnLevelWord& w) { return hnn_reduce_with_conjugator(w).word; }

// ---------------------------------------------------------------- Collins

namespace {

enum class Verdict { Yes, No, Unknown };

struct LevelResult {
  Verdict verdict = Verdict::No;
  HElem conj;  // conj^-1 U conj == V when Yes
};

struct OrbitHit {
  bool found = false;
  long q = 0;
  bool complete = true;
};

// q with phi^q(a) == b, |q| <= bound; incomplete if a direction ran into the bound while
// lengths were still small.
OrbitHit orbit_search(const FWord& a, const FWord& b, long bound) {
  if (a == b) return {true, 0, true};
  if (is_fixed(a)) return {false, 0, true};
  OrbitHit out;
  for (int dir : {1, -1}) {
    FWord cur = a;
    std::size_t prev = cur.size();
    int rising = 0;
    bool cut = false;
    for (long n = 1; n <= bound; ++n) {
      cur = apply_phi_power(cur, dir);
      if (cur == b) return {true, dir * n, true};
      rising = cur.size() > prev ? rising + 1 : 0;
      prev = cur.size();
      if (cur.size() > b.size() && rising >= 3) {
        cut = true;
        break;
      }
    }
    if (!cut) out.complete = false;
  }
  return out;
}

struct Collins {
  long bound;

  // c with s^-q U s^q == V: c = s^q
  OrbitHit s_case(const HElem& U, const HElem& V) const {
    if (U.s_exp != V.s_exp) return {false, 0, true};
    return orbit_search(U.u_tilde, V.u_tilde, bound);
  }

  LevelResult decide(const HElem& U, const HElem& V, int j) const {
    if (U.s_exp != V.s_exp) return {};
    if (j <= 1) return U == V ? LevelResult{Verdict::Yes, HElem{}} : LevelResult{};
    int base = j - 1;
    HnnReduction ru = hnn_reduce_with_conjugator(to_hnn(U, base));
    HnnReduction rv = hnn_reduce_with_conjugator(to_hnn(V, base));
    std::size_t k = ru.word.t_length();
    if (k != rv.word.t_length()) return {};

    auto assemble = [&](const HElem& c) {
      return LevelResult{Verdict::Yes, h_mul(h_mul(ru.conjugator, c), h_inv(rv.conjugator))};
    };

    bool unknown = false;
    if (k == 0) {
      const HElem& bu = ru.word.syllables.front();
      const HElem& bv = rv.word.syllables.front();
      LevelResult direct = decide(bu, bv, base);
      if (direct.verdict == Verdict::Yes) return assemble(direct.conj);
      unknown |= direct.verdict == Verdict::Unknown;
      long n = bu.s_exp;
      if (n != 0) {
        HElem S{{}, n};
        HElem B = h_pow(hnn_beta(base), n);
        for (int e : {1, -1}) {
          // bu ~ S, t^-1 S t = B, B ~ bv (e = 1); bu ~ B, t B t^-1 = S, S ~ bv (e = -1)
          const HElem& first = e == 1 ? S : B;
          const HElem& second = e == 1 ? B : S;
          LevelResult a = decide(bu, first, base);
          if (a.verdict == Verdict::No) continue;
          LevelResult b = decide(bv, second, base);
          if (a.verdict == Verdict::Yes && b.verdict == Verdict::Yes)
            return assemble(h_mul(h_mul(a.conj, t_elem(base, e)), h_inv(b.conj)));
          if (b.verdict != Verdict::No) unknown = true;
          if (a.verdict == Verdict::Unknown) unknown = true;
        }
      }
      return LevelResult{unknown ? Verdict::Unknown : Verdict::No, {}};
    }

    HElem Uc = from_hnn(ru.word);
    const HnnLevelWord& vw = rv.word;
    HElem t = t_elem(base, 1), ti = t_elem(base, -1);
    HElem Ut = h_mul(h_mul(t, Uc), ti);
    HElem prefix;  // t^e_1 g_1 ... t^e_i g_i
    for (std::size_t i = 0; i < k; ++i) {
      HnnLevelWord rot;
      rot.level = base;
      rot.syllables.push_back(HElem{});
      for (std::size_t a = 0; a < k; ++a) {
        std::size_t idx = (i + a) % k;
        rot.t_exps.push_back(vw.t_exps[idx]);
        rot.syllables.push_back(vw.syllables[idx + 1]);
      }
      HElem Vi = from_hnn(rot);
      OrbitHit hs = s_case(Uc, Vi);
      if (hs.found) return assemble(h_mul(HElem{{}, hs.q}, h_inv(prefix)));
      unknown |= !hs.complete;
      HElem Vt = h_mul(h_mul(t, Vi), ti);
      OrbitHit hb = s_case(Ut, Vt);
      if (hb.found) return assemble(h_mul(h_mul(h_mul(ti, HElem{{}, hb.q}), t), h_inv(prefix)));
      unknown |= !hb.complete;
      prefix = h_mul(h_mul(prefix, t_elem(base, vw.t_exps[i])), vw.syllables[i + 1]);
    }
    return LevelResult{unknown ? Verdict::Unknown : Verdict::No, {}};
  }
};

}  // namespace

Certificate collins_decide(std::span<const Letter> u, std::span<const Letter> v, long search_bound, int m) {
  HWord uw = reduce_mixed(u), vw = reduce_mixed(v);
  HElem U = normal_form(uw), V = normal_form(vw);
  m = std::max({m, 1, rank(U.u_tilde), rank(V.u_tilde)});
  if (search_bound <= 0) search_bound = static_cast<long>(uw.size() + vw.size()) + 2;
  Certificate cert;
  cert.method = CertMethod::Hnn;
  LevelResult res;
  try {
    res = Collins{search_bound}.decide(U, V, m);
  } catch (const ResourceError& e) {
    cert.inconclusive = true;
    cert.note = e.what();
    return cert;
  }
  if (res.verdict == Verdict::Unknown) {
    cert.inconclusive = true;
    cert.note = "search bound reached";
    return cert;
  }
  if (res.verdict == Verdict::No) return cert;
  if (!check_conjugation(U, res.conj, V)) throw std::logic_error("collins_decide: witness fails verification");
  HWord raw = to_word(res.conj);
  cert.conjugate = true;
  cert.verified = true;
  cert.raw_witness = raw;
  cert.witness = compress_conjugator(raw, U, V, uw, vw);
  return cert;
}

}  // namespace hydra
