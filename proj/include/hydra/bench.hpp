#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "hydra/engine.hpp"

namespace hydra {

// Uniform reduced word of exactly len letters over a_1..a_m (and s when with_stable).
HWord random_word(std::mt19937_64& rng, int m, std::size_t len, bool with_stable);

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys);

struct GrowthRow {
  int i = 0;
  long r = 0;
  std::int64_t length = 0;     // |phi^r(a_i)| as constructed
  std::int64_t predicted = 0;  // binomial sum
  double ratio = 0;            // length / max(1,|r|)^(i-1)
};

// g = phi^k(a_i^k): a-length against the H-word s^-k a_i^k s^k of length 3k.
struct DistortionRow {
  int i = 0;
  long k = 0;
  std::int64_t a_length = 0;
  std::int64_t h_length = 0;
};

struct GrowthData {
  std::vector<GrowthRow> rows;
  std::vector<DistortionRow> distortion;
};

// r runs over [-r_max, r_max]; the distortion family over 1 <= k <= r_max.
GrowthData run_growth(int m, const std::vector<int>& i_set, long r_max);
// Header: i,r,length,predicted,diff,ratio; then a blank line and i,k,a_length,h_length.
void write_csv(std::ostream& out, const GrowthData& d);

struct ClRow {
  int n = 0;
  int sample = 0;
  std::size_t input_len = 0;  // length(u) + length(v)
  std::size_t witness_len = 0;
  std::string method;
  double runtime_ms = 0;
  bool conjugate = false;
  bool verified = false;
  bool inconclusive = false;
};

struct ClData {
  int m = 3;
  std::uint64_t seed = 0;
  std::vector<ClRow> rows;
  double witness_slope = 0;         // least squares of witness_len against n
  double runtime_loglog_slope = 0;  // of per-n median runtime against n
  std::vector<std::pair<int, double>> max_ratio;  // n -> max witness_len / n
  std::vector<std::pair<int, double>> median_ms;  // n -> median runtime
};

// Pairs (u, w^-1 u w) with length(u) = length(w) = n/4 (w empty when identity is set).
ClData run_cl_experiment(int m, const std::vector<int>& n_set, int samples, std::uint64_t seed,
                         bool identity = false, const BoundPolicy& policy = {});
// Header: n,sample,input_len,witness_len,method,runtime_ms,verified; then a '#' summary line.
void write_csv(std::ostream& out, const ClData& d);
// Header: n,samples,median_ms,max_ms; then a '#' summary line with the log-log slope.
void write_runtime_csv(std::ostream& out, const ClData& d);

}  // namespace hydra
