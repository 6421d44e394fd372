#include "hydra/group.hpp"

#include <tuple>

#include "hydra/phi.hpp"

namespace hydra {

namespace {

void append_image(FWord& out, Letter x, long r) {
  auto img = PhiPowerCache::global().get(gen_index(x), r);
  if (x > 0) {
    append_reduce(out, *img);
  } else {
    FWord inv = invert(*img);
    append_reduce(out, inv);
  }
}

}  // namespace

HElem normal_form(std::span<const Letter> w) {
  HElem g;
  std::int64_t material = 0;
  for (Letter x : w) {
    if (is_stable(x)) {
      g.s_exp += x > 0 ? 1 : -1;
      continue;
    }
    material += letter_image_length(gen_index(x), -g.s_exp);
    if (material > kDefaultLetterBudget) throw ResourceError("normal_form: letter budget exceeded");
    append_image(g.u_tilde, x, -g.s_exp);
  }
  return g;
}

HElem h_mul(const HElem& g, const HElem& h) {
  HElem out;
  out.u_tilde = mul(g.u_tilde, apply_phi_power(h.u_tilde, -g.s_exp));
  out.s_exp = g.s_exp + h.s_exp;
  return out;
}

HElem h_inv(const HElem& g) {
  return HElem{apply_phi_power(invert(g.u_tilde), g.s_exp), -g.s_exp};
}

bool h_equal(const HElem& g, const HElem& h) { return g == h; }

bool check_conjugation(const HElem& u, const HElem& w, const HElem& v) {
  return h_mul(u, w) == h_mul(w, v);
}

HWord s_power(long k) {
  return HWord(static_cast<std::size_t>(std::labs(k)), letter_s(k >= 0 ? 1 : -1));
}

HWord to_word(const HElem& g) {
  HWord out = g.u_tilde;
  HWord tail = s_power(g.s_exp);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::size_t h_length(std::span<const Letter> w) { return reduce_mixed(w).size(); }

ShuffleTrace shuffle(std::span<const Letter> w) {
  ShuffleTrace tr;
  tr.start.assign(w.begin(), w.end());
  RawWord cur = tr.start;
  while (true) {
    std::size_t j = cur.size();
    std::size_t next = cur.size();
    for (std::size_t a = 0; a < cur.size(); ++a) {
      if (!is_stable(cur[a])) continue;
      std::size_t b = a + 1;
      while (b < cur.size() && !is_stable(cur[b])) ++b;
      if (b == cur.size() || cur[b] == -cur[a]) {
        j = a;
        next = b;
        break;
      }
    }
    if (j == cur.size()) break;
    int eps = cur[j] > 0 ? 1 : -1;
    ShuffleStage st;
    st.mover = j;
    st.count = next - j - 1;
    st.sign = eps;
    st.cancelled = next < cur.size();
    st.word.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(j));
    for (std::size_t a = j + 1; a < next; ++a) {
      auto img = PhiPowerCache::global().get(gen_index(cur[a]), -eps);
      if (cur[a] > 0)
        st.word.insert(st.word.end(), img->begin(), img->end());
      else
        for (auto it = img->rbegin(); it != img->rend(); ++it) st.word.push_back(-*it);
    }
    if (st.cancelled)
      st.word.insert(st.word.end(), cur.begin() + static_cast<std::ptrdiff_t>(next) + 1, cur.end());
    else
      tr.s_exp += eps;
    cur = st.word;
    tr.stages.push_back(std::move(st));
  }
  return tr;
}

HWord short_subword_word(std::span<const Letter> w, std::size_t start, std::size_t end) {
  if (start > end) throw DomainError("short_subword_word: bad range");
  if (start == end) return {};
  ShuffleTrace tr = shuffle(w);
  const RawWord& last = tr.last();
  // Free reduction of the last stage, remembering where each surviving letter sat.
  std::vector<std::size_t> stack;
  for (std::size_t a = 0; a < last.size(); ++a) {
    if (!stack.empty() && last[stack.back()] == -last[a])
      stack.pop_back();
    else
      stack.push_back(a);
  }
  if (end > stack.size()) throw DomainError("short_subword_word: range exceeds normal form");
  std::size_t lo = stack[start], hi = stack[end - 1] + 1;

  HWord left, right;  // accumulated brackets, result = left . (subword of u_i) . right
  bool empty = false;
  for (std::size_t i = tr.stages.size(); i-- > 0 && !empty;) {
    const ShuffleStage& st = tr.stages[i];
    const RawWord& prev = tr.word(i);
    std::vector<FWord> imgs;
    std::vector<std::size_t> cum{0};
    for (std::size_t t = 0; t < st.count; ++t) {
      Letter x = prev[st.mover + 1 + t];
      FWord img = *PhiPowerCache::global().get(gen_index(x), -st.sign);
      if (x < 0) img = invert(img);
      cum.push_back(cum.back() + img.size());
      imgs.push_back(std::move(img));
    }
    std::size_t b0 = st.mover, b1 = st.mover + cum.back();
    long shift = static_cast<long>(st.count) + 2 - static_cast<long>(cum.back());
    if (hi <= b0) continue;
    if (lo >= b1) {
      lo = static_cast<std::size_t>(static_cast<long>(lo) + shift);
      hi = static_cast<std::size_t>(static_cast<long>(hi) + shift);
      continue;
    }
    auto locate = [&](std::size_t pos) {
      std::size_t t = 0;
      while (cum[t + 1] <= pos - b0) ++t;
      return std::make_pair(t, pos - b0 - cum[t]);
    };
    HWord mu, lambda;
    std::size_t nlo, nhi;
    bool left_in = lo >= b0, right_in = hi <= b1;
    std::size_t lt = 0, lofs = 0, rt = 0, rend = 0;
    if (left_in) std::tie(lt, lofs) = locate(lo);
    if (right_in) {
      auto [t, o] = locate(hi - 1);
      rt = t;
      rend = o + 1;
    }
    if (left_in && right_in && lt == rt) {
      mu = subword(imgs[lt], lofs, rend);
      left.insert(left.end(), mu.begin(), mu.end());
      empty = true;
      break;
    }
    if (!left_in) {
      nlo = lo;
    } else if (lofs == 0) {
      nlo = st.mover + 1 + lt;
      mu.push_back(letter_s(st.sign));
    } else {
      nlo = st.mover + 2 + lt;
      mu = subword(imgs[lt], lofs, imgs[lt].size());
      mu.push_back(letter_s(st.sign));
    }
    if (!right_in) {
      nhi = static_cast<std::size_t>(static_cast<long>(hi) + shift);
    } else if (rend == imgs[rt].size()) {
      nhi = st.mover + 2 + rt;
      lambda.push_back(letter_s(-st.sign));
    } else {
      nhi = st.mover + 1 + rt;
      lambda.push_back(letter_s(-st.sign));
      FWord pre = subword(imgs[rt], 0, rend);
      lambda.insert(lambda.end(), pre.begin(), pre.end());
    }
    left.insert(left.end(), mu.begin(), mu.end());
    right.insert(right.begin(), lambda.begin(), lambda.end());
    lo = nlo;
    hi = nhi;
    if (lo >= hi) empty = true;
  }
  HWord out = left;
  if (!empty) out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
  out.insert(out.end(), right.begin(), right.end());
  return reduce_mixed(out);
}

HWord short_subword_word(std::span<const Letter> w, std::span<const Letter> sub) {
  HElem g = normal_form(w);
  std::size_t pos = find_subword(sub, g.u_tilde);
  if (pos == std::string::npos) throw DomainError("short_subword_word: not a subword of the normal form");
  return short_subword_word(w, pos, pos + sub.size());
}

}  // namespace hydra
