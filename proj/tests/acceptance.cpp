// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "hydra/bench.hpp"
#include "hydra/engine.hpp"
#include "hydra/hnn.hpp"
#include "hydra/oracle.hpp"
#include "hydra/phi.hpp"
#include "hydra/pieces.hpp"
#include "hydra/twisted.hpp"

using namespace hydra;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int id, double budget_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o = body();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = secs < budget_s;
  bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s [%.2f s, budget %.0f s%s]\n", pass ? "PASS" : "FAIL", id, o.detail.c_str(), secs,
              budget_s, in_time ? "" : ", over budget");
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

FWord random_fword(std::mt19937_64& rng, int m, std::size_t len) {
  return random_word(rng, m, len, false);
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

HWord cat(std::initializer_list<HWord> parts) {
  HWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Pascal's rule in 64-bit; the largest value needed here is C(30, 5).
std::uint64_t binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (long j = 1; j <= k; ++j) c = c * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
  return c;
}

Outcome growth_exactness() {
  int checked = 0, bad = 0;
  for (int i = 2; i <= 6; ++i)
    for (long r = -25; r <= 25; ++r) {
      std::uint64_t want = 0;
      for (int j = 0; j < i; ++j) want += r >= 0 ? binom(r, j) : binom(-r + j - 1, j);
      std::uint64_t got = apply_phi_power(FWord{i}, r).size();
      if (got != want) ++bad;
      ++checked;
    }
  return {bad == 0, fmt("m=6, 2<=i<=6, |r|<=25: %d/%d lengths equal the binomial sums", checked - bad, checked)};
}

Outcome fixed_subgroup() {
  std::mt19937_64 rng(2);
  const FWord gens[2] = {FWord{1}, FWord{2, 1, -2}};
  int fixed_ok = 0, moved_ok = 0;
  for (int t = 0; t < 200; ++t) {
    FWord w;
    std::size_t target = uniform(rng, 1, 20);
    while (true) {
      FWord g = gens[uniform(rng, 0, 1)];
      if (uniform(rng, 0, 1)) g = invert(g);
      FWord next = mul(w, g);
      if (next.size() > target) break;
      w = next;
    }
    if (apply_phi_power(w, 1) == w) ++fixed_ok;
  }
  for (int t = 0; t < 200; ++t) {
    FWord w;
    do w = random_fword(rng, 5, uniform(rng, 1, 20));
    while (rank(w) < 3);
    bool strict = false;
    for (const auto& p : decompose(w, rank(w)).pieces) strict |= p.type != PieceType::Plain;
    if (strict && apply_phi_power(w, 1) != w) ++moved_ok;
  }
  return {fixed_ok == 200 && moved_ok == 200,
          fmt("fixed products %d/200, words with a strict rank>=3 piece moved %d/200", fixed_ok, moved_ok)};
}

Outcome piece_equivariance() {
  std::mt19937_64 rng(3);
  int ok = 0;
  for (int t = 0; t < 500; ++t) {
    FWord w = random_fword(rng, 5, uniform(rng, 0, 30));
    long r = static_cast<long>(uniform(rng, 0, 12)) - 6;
    FWord img = apply_phi_power(w, r);
    auto d = decompose(w, 5);
    auto di = decompose(img, 5);
    bool good = d.count() == di.count();
    for (std::size_t k = 0; good && k < d.count(); ++k)
      good = di.pieces[k].word(img) == apply_phi_power(d.pieces[k].word(w), r) &&
             di.pieces[k].type == d.pieces[k].type && di.pieces[k].rank == d.pieces[k].rank;
    ok += good;
  }
  return {ok == 500, fmt("m=5, length<=30, |r|<=6: %d/500 decompositions equivariant", ok)};
}

Outcome normal_form_regression() {
  HWord u = parse_word("s a6 a5^-1 s^-2 a5 s^2 a3");
  auto trace = shuffle(u);
  const char* stages[] = {
      "a6 a4 a2 a1^-1 a3^-1 a5^-1 a4 a2 a1^-1 a3^-1 a5^-1 s^-1 a5 s^2 a3",
      "a6 a4 a2 a1^-1 a3^-1 a5^-1 a4 a2 a1^-1 a3^-1 a5^-1 a5 a4 s a3",
      "a6 a4 a2 a1^-1 a3^-1 a5^-1 a4 a2 a1^-1 a3^-1 a5^-1 a5 a4 a3 a1 a2^-1",
  };
  bool ok = trace.stages.size() == 3;
  for (std::size_t k = 0; ok && k < 3; ++k) ok = trace.word(k + 1) == parse_word(stages[k]);
  HElem g = normal_form(u);
  ok = ok && g.s_exp == 1 && g.u_tilde == free_reduce(trace.last()) && g.u_tilde.size() == 14;
  return {ok, fmt("3 shuffling stages bit-exact, s_exp=%ld, |u~|=%zu", g.s_exp, g.u_tilde.size())};
}

Outcome oracle_grid() {
  struct Tally {
    long pairs = 0, agree = 0, extra = 0, missed = 0, extra_verified = 0;
    std::size_t min_extra_len = 0, max_extra_len = 0;
  };
  std::map<std::pair<int, long>, Tally> cells;
  long total = 0, agree = 0, extra = 0, missed = 0;
  for (int m : {2, 3}) {
    std::vector<FWord> words;
    for_each_reduced_word(alphabet(m, false), 3, [&](const FWord& w) { words.push_back(w); return false; });
    for (long p : {0L, 1L, 2L}) {
      Tally& c = cells[{m, p}];
      for (const FWord& u : words) {
        TwistedOracleTable table(u, p, 6, m);
        for (const FWord& v : words) {
          bool oracle = table.query(v, 10).has_value();
          std::optional<TwistedSolution> sol;
          if (p == 0) {
            auto z = solve_0_twisted(u, v);
            if (z.found()) sol = z.solution;
          } else {
            auto i = solve_i_twisted(u, v, p);
            if (i.found()) sol = i.solution;
            else if (auto h = solve_h_twisted(u, v, p, m); h.found()) sol = h.solution;
          }
          ++c.pairs;
          if (oracle == sol.has_value()) ++c.agree;
          if (oracle && !sol) ++c.missed;
          if (!oracle && sol) {
            ++c.extra;
            std::size_t len = sol->w_tilde.size();
            if (check_twisted(u, v, p, sol->r, sol->w_tilde)) ++c.extra_verified;
            c.min_extra_len = c.extra == 1 ? len : std::min(c.min_extra_len, len);
            c.max_extra_len = std::max(c.max_extra_len, len);
          }
        }
      }
      total += c.pairs;
      agree += c.agree;
      extra += c.extra;
      missed += c.missed;
    }
  }
  std::string detail = fmt("%ld/%ld decisions agree with oracle_twisted(r_range=10, w_len=6); %ld oracle positives missed; "
                           "%ld solver positives the oracle cannot reach",
                           agree, total, missed, extra);
  for (const auto& [key, c] : cells)
    if (c.extra)
      detail += fmt("\n    m=%d p=%ld: %ld beyond cap, %ld verified by substitution, |w~| in [%zu, %zu]", key.first,
                    key.second, c.extra, c.extra_verified, c.min_extra_len, c.max_extra_len);
  return {agree == total, detail};
}

Outcome constructed_pairs() {
  std::mt19937_64 rng(6);
  int verified = 0, inconclusive = 0, negative = 0;
  for (int t = 0; t < 1000; ++t) {
    int m = static_cast<int>(uniform(rng, 1, 4));
    HWord u = random_word(rng, m, uniform(rng, 0, 8), true);
    HWord w = random_word(rng, m, uniform(rng, 0, 6), true);
    HWord v = cat({to_word(h_inv(normal_form(w))), u, w});
    auto c = decide_conjugacy(u, v, {}, m);
    if (c.inconclusive) ++inconclusive;
    else if (!c.conjugate) ++negative;
    else if (c.witness && check_conjugation(normal_form(u), normal_form(*c.witness), normal_form(v))) ++verified;
  }
  return {verified == 1000 && inconclusive == 0,
          fmt("%d/1000 verified witnesses, %d inconclusive, %d negative", verified, inconclusive, negative)};
}

Outcome cross_solver() {
  std::mt19937_64 rng(7);
  int decided = 0, agree = 0, skipped = 0, bad_witness = 0, positives = 0;
  for (int t = 0; t < 500; ++t) {
    HWord u = random_word(rng, 3, uniform(rng, 0, 6), true);
    HWord v;
    if (t % 2) {
      do {
        HWord w = random_word(rng, 3, uniform(rng, 1, 3), true);
        v = reduce_mixed(cat({to_word(h_inv(normal_form(w))), u, w}));
      } while (v.size() > 6);
    } else {
      v = random_word(rng, 3, uniform(rng, 0, 6), true);
    }
    auto e = decide_conjugacy(u, v, {}, 3);
    auto h = collins_decide(u, v, 0, 3);
    HElem U = normal_form(u), V = normal_form(v);
    for (const Certificate* c : {&e, &h})
      if (c->conjugate && !(c->witness && check_conjugation(U, normal_form(*c->witness), V))) ++bad_witness;
    if (e.inconclusive || h.inconclusive) {
      ++skipped;
      continue;
    }
    ++decided;
    positives += e.conjugate;
    agree += e.conjugate == h.conjugate;
  }
  return {agree == decided && bad_witness == 0,
          fmt("%d/%d decided pairs agree (%d conjugate), %d inconclusive skipped, %d bad witnesses", agree, decided,
              positives, skipped, bad_witness)};
}

double ratio_at(const ClData& d, int n) {
  for (const auto& [k, r] : d.max_ratio)
    if (k == n) return r;
  return -1;
}

Outcome linear_trend() {
  const std::uint64_t seed = 20240801;
  ClData d = run_cl_experiment(3, {10, 20, 40, 80}, 50, seed);
  bool all_verified = true;
  for (const auto& row : d.rows) all_verified &= row.conjugate && row.verified;
  double r10 = ratio_at(d, 10), r80 = ratio_at(d, 80);
  std::string detail = fmt("seed=%llu m=3 max witness_len/n:", static_cast<unsigned long long>(seed));
  for (const auto& [n, r] : d.max_ratio) detail += fmt(" n=%d:%.3f", n, r);
  detail += fmt("; n=80 vs 2*n=10: %.3f <= %.3f; witness slope %.2f", r80, 2 * r10, d.witness_slope);
  return {all_verified && r10 > 0 && r80 <= 2 * r10, detail};
}

Outcome runtime_slope() {
  const std::uint64_t seed = 20240802;
  ClData d = run_cl_experiment(3, {8, 16, 32, 64}, 40, seed);
  std::string detail = fmt("seed=%llu m=3 median ms:", static_cast<unsigned long long>(seed));
  for (const auto& [n, ms] : d.median_ms) detail += fmt(" n=%d:%.3f", n, ms);
  detail += fmt("; log-log slope %.2f <= m+2 = 5", d.runtime_loglog_slope);
  return {d.runtime_loglog_slope <= 5.0, detail};
}

}  // namespace

int main() {
  run(1, 5, growth_exactness);
  run(2, 1, fixed_subgroup);
  run(3, 10, piece_equivariance);
  run(4, 1, normal_form_regression);
  run(5, 600, oracle_grid);
  run(6, 600, constructed_pairs);
  run(7, 600, cross_solver);
  run(8, 1800, linear_trend);
  run(9, 1800, runtime_slope);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
