#include "hydra/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "hydra/phi.hpp"

namespace hydra {

HWord random_word(std::mt19937_64& rng, int m, std::size_t len, bool with_stable) {
  std::uniform_int_distribution<int> pick(0, 2 * m + (with_stable ? 1 : -1));
  HWord w;
  while (w.size() < len) {
    int k = pick(rng);
    Letter x = k < 2 * m ? letter_a(k / 2 + 1, k % 2 ? -1 : 1) : letter_s(k == 2 * m ? 1 : -1);
    if (!w.empty() && w.back() == -x) continue;
    w.push_back(x);
  }
  return w;
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::size_t n = std::min(xs.size(), ys.size());
  if (n < 2) return 0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxx == 0 ? 0 : sxy / sxx;
}

GrowthData run_growth(int m, const std::vector<int>& i_set, long r_max) {
  GrowthData d;
  for (int i : i_set) {
    if (i < 1 || i > m) throw DomainError("run_growth: generator index out of range");
    for (long r = -r_max; r <= r_max; ++r) {
      GrowthRow row;
      row.i = i;
      row.r = r;
      row.length = static_cast<std::int64_t>(apply_phi_power(FWord{letter_a(i)}, r).size());
      row.predicted = letter_image_length(i, r);
      row.ratio = static_cast<double>(row.length) / std::pow(static_cast<double>(std::max(1L, std::labs(r))), i - 1);
      d.rows.push_back(row);
    }
    for (long k = 1; k <= r_max; ++k) {
      FWord base(static_cast<std::size_t>(k), letter_a(i));
      d.distortion.push_back({i, k, static_cast<std::int64_t>(apply_phi_power(base, k).size()), 3 * k});
    }
  }
  return d;
}

void write_csv(std::ostream& out, const GrowthData& d) {
  out << "i,r,length,predicted,diff,ratio\n";
  for (const auto& r : d.rows)
    out << r.i << ',' << r.r << ',' << r.length << ',' << r.predicted << ',' << (r.length - r.predicted) << ','
        << std::setprecision(6) << r.ratio << '\n';
  out << "\ni,k,a_length,h_length\n";
  for (const auto& r : d.distortion) out << r.i << ',' << r.k << ',' << r.a_length << ',' << r.h_length << '\n';
}

ClData run_cl_experiment(int m, const std::vector<int>& n_set, int samples, std::uint64_t seed, bool identity,
                         const BoundPolicy& policy) {
  ClData d;
  d.m = m;
  d.seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<double> xs, ys, logn, logt;
  for (int n : n_set) {
    std::vector<double> times;
    double max_ratio = 0;
    for (int s = 0; s < samples; ++s) {
      std::size_t quarter = static_cast<std::size_t>(std::max(1, n / 4));
      HWord u = random_word(rng, m, quarter, true);
      HWord w = identity ? HWord{} : random_word(rng, m, quarter, true);
      HWord v = invert(w);
      v.insert(v.end(), u.begin(), u.end());
      v.insert(v.end(), w.begin(), w.end());
      v = reduce_mixed(v);
      auto t0 = std::chrono::steady_clock::now();
      Certificate c = decide_conjugacy(u, v, policy, m);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      ClRow row;
      row.n = n;
      row.sample = s;
      row.input_len = u.size() + v.size();
      row.witness_len = c.witness ? c.witness->size() : 0;
      row.method = to_string(c.method);
      row.runtime_ms = ms;
      row.conjugate = c.conjugate;
      row.verified = c.verified;
      row.inconclusive = c.inconclusive;
      d.rows.push_back(row);
      times.push_back(ms);
      if (c.verified) {
        xs.push_back(n);
        ys.push_back(static_cast<double>(row.witness_len));
        max_ratio = std::max(max_ratio, static_cast<double>(row.witness_len) / n);
      }
    }
    std::sort(times.begin(), times.end());
    double med = times.empty() ? 0
                               : (times.size() % 2 ? times[times.size() / 2]
                                                   : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]));
    d.max_ratio.emplace_back(n, max_ratio);
    d.median_ms.emplace_back(n, med);
    if (med > 0) {
      logn.push_back(std::log(static_cast<double>(n)));
      logt.push_back(std::log(med));
    }
  }
  d.witness_slope = least_squares_slope(xs, ys);
  d.runtime_loglog_slope = least_squares_slope(logn, logt);
  return d;
}

void write_csv(std::ostream& out, const ClData& d) {
  out << "n,sample,input_len,witness_len,method,runtime_ms,verified\n";
  for (const auto& r : d.rows)
    out << r.n << ',' << r.sample << ',' << r.input_len << ',' << r.witness_len << ',' << r.method << ','
        << std::fixed << std::setprecision(3) << r.runtime_ms << std::defaultfloat << ',' << (r.verified ? 1 : 0)
        << '\n';
  out << std::fixed << std::setprecision(2) << "# m=" << d.m << " seed=" << d.seed
      << " witness_slope=" << d.witness_slope << " runtime_loglog_slope=" << d.runtime_loglog_slope
      << std::defaultfloat << '\n';
}

void write_runtime_csv(std::ostream& out, const ClData& d) {
  out << "n,samples,median_ms,max_ms\n";
  for (auto [n, med] : d.median_ms) {
    double mx = 0;
    int count = 0;
    for (const auto& r : d.rows)
      if (r.n == n) {
        mx = std::max(mx, r.runtime_ms);
        ++count;
      }
    out << n << ',' << count << ',' << std::fixed << std::setprecision(4) << med << ',' << mx << std::defaultfloat
        << '\n';
  }
  out << std::fixed << std::setprecision(2) << "# m=" << d.m << " seed=" << d.seed
      << " runtime_loglog_slope=" << d.runtime_loglog_slope << std::defaultfloat << '\n';
}

}  // namespace hydra
