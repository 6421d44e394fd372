#include "hydra/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "hydra/phi.hpp"

namespace hydra {

std::string to_string(CertMethod m) {
  switch (m) {
    case CertMethod::UnequalSExp: return "UNEQUAL_S_EXP";
    case CertMethod::Zero: return "ZERO";
    case CertMethod::IConfig: return "I_CONFIG";
    case CertMethod::HConfig: return "H_CONFIG";
    case CertMethod::Hnn: return "HNN";
  }
  return "?";
}

namespace {

// A mixed word for the prefix of length k of the normal-form word of w.
HWord prefix_word(std::span<const Letter> w, const FWord& nf, std::size_t k) {
  HWord lit = subword(nf, 0, k);
  if (k == 0) return lit;
  HWord alt = short_subword_word(w, 0, k);
  return alt.size() < lit.size() ? alt : lit;
}

HWord concat(std::initializer_list<HWord> parts) {
  HWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return reduce_mixed(out);
}

// w~ s^r from a split w~ = u0 v0^-1, with u0, v0 written through the input words.
HWord split_witness(const TwistedSolution& s, std::span<const Letter> uw, const FWord& unf, std::span<const Letter> vw) {
  HWord shifted = concat({s_power(s.r), HWord(vw.begin(), vw.end()), s_power(-s.r)});
  FWord vnf = normal_form(shifted).u_tilde;
  HWord a = prefix_word(uw, unf, s.split->u0.size());
  HWord b = prefix_word(shifted, vnf, s.split->v0.size());
  return concat({a, invert(b), s_power(s.r)});
}

}  // namespace

Certificate decide_conjugacy(std::span<const Letter> u, std::span<const Letter> v, const BoundPolicy& policy, int m) {
  HWord uw = reduce_mixed(u), vw = reduce_mixed(v);
  HElem U = normal_form(uw), V = normal_form(vw);
  m = std::max({m, 1, rank(U.u_tilde), rank(V.u_tilde)});
  Certificate cert;
  if (U.s_exp != V.s_exp) {
    cert.method = CertMethod::UnequalSExp;
    return cert;
  }
  // The same conjugator works for the inverses.
  HWord uw2 = uw, vw2 = vw;
  HElem U2 = U, V2 = V;
  if (U.s_exp < 0) {
    uw2 = invert(uw);
    vw2 = invert(vw);
    U2 = h_inv(U);
    V2 = h_inv(V);
  }
  long p = U2.s_exp;

  HWord raw;
  try {
    if (p == 0) {
      cert.method = CertMethod::Zero;
      auto res = solve_0_twisted(U2.u_tilde, V2.u_tilde, policy);
      if (!res.found()) return cert;
      raw = split_witness(*res.solution, uw2, U2.u_tilde, vw2);
    } else {
      cert.method = CertMethod::IConfig;
      auto res = solve_i_twisted(U2.u_tilde, V2.u_tilde, p);
      if (res.found()) {
        raw = split_witness(*res.solution, uw2, U2.u_tilde, vw2);
      } else {
        cert.method = CertMethod::HConfig;
        auto h = solve_h_twisted(U2.u_tilde, V2.u_tilde, p, m, policy, uw2, vw2);
        if (h.status == SolveStatus::Inconclusive) {
          cert.inconclusive = true;
          cert.note = "hard cap reached";
          return cert;
        }
        if (!h.found()) return cert;
        raw = h.solution->conjugator;
        if (h.solution->chunk) {
          HWord lin = linearize_conjugator(*h.solution, U2, V2);
          if (lin.size() < raw.size()) raw = lin;
        }
      }
    }
  } catch (const ResourceError& e) {
    cert.inconclusive = true;
    cert.note = e.what();
    return cert;
  }

  if (!check_conjugation(U, normal_form(raw), V)) throw std::logic_error("decide_conjugacy: witness fails verification");
  HWord w = compress_conjugator(raw, U, V, uw, vw);
  if (!check_conjugation(U, normal_form(w), V)) throw std::logic_error("decide_conjugacy: compressed witness fails");
  cert.conjugate = true;
  cert.verified = true;
  cert.raw_witness = std::move(raw);
  cert.witness = std::move(w);
  return cert;
}

}  // namespace hydra
