#pragma once

// Exact spectra of the distance-j binary Hamming graphs H(n, j): Krawtchouk
// eigenvalues with binomial multiplicities, smallest eigenvalues with their
// closed-form regimes cross-checked on every call, an independent
// character-sum oracle, and floating point envelopes for |lambda_min| in the
// fixed-j and proportional-j regimes.

#include "hamspec/combinatorics.hpp"
#include "hamspec/krawtchouk.hpp"

#include <bit>
#include <cstdint>
#include <numbers>

namespace hamspec {

struct EigenvalueRecord {
  int w;
  ExactInt value;
  ExactInt multiplicity;
};

// The n+1 distinct-index eigenvalues K_j(w) with multiplicities C(n, w).
inline std::vector<EigenvalueRecord> spectrum(int n, int j) {
  if (n < 1 || j < 1 || j > n)
    throw std::invalid_argument("spectrum: need 1 <= j <= n");
  std::vector<EigenvalueRecord> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int w = 0; w <= n; ++w)
    out.push_back({w, krawtchouk_eval(n, j, w), binomial(n, w)});
  return out;
}

struct HammingMinResult {
  ExactInt lambda_min;
  int argmin_w;  // smallest w attaining the minimum
  bool scanned;
};

// Exhaustive scan over w. Every closed-form regime that applies to (n, j) is
// re-derived and compared against the scan; disagreement is a logic error.
inline HammingMinResult lambda_min_exact(int n, int j) {
  if (n < 1 || j < 1 || j > n)
    throw std::invalid_argument("lambda_min_exact: need 1 <= j <= n");
  ExactInt best = binomial(n, j);  // K_j(0)
  int argw = 0;
  for (int w = 1; w <= n; ++w) {
    ExactInt v = krawtchouk_eval(n, j, w);
    if (v < best) {
      best = v;
      argw = w;
    }
  }
  if (j % 2 == 1 && best != -binomial(n, j))
    throw std::logic_error("lambda_min_exact: odd-j closed form mismatch");
  if (j % 2 == 0 && 2 * j > n && best != krawtchouk_eval(n, j, 1))
    throw std::logic_error("lambda_min_exact: K_j(1) regime mismatch");
  if (j % 2 == 0 && 2 * j == n && best != krawtchouk_eval(n, j, 2))
    throw std::logic_error("lambda_min_exact: K_j(2) regime mismatch");
  if (j == 2 && best != -ExactInt(n / 2))
    throw std::logic_error("lambda_min_exact: j = 2 closed form mismatch");
  return {best, argw, true};
}

// j = 4 closed form for n >= 9: the continuous envelope -n^2/4 + 3n/4 - 2/3
// attained near x0 = (n - sqrt(3n-4))/2, and the exact discrete minimum from
// the two integers flanking x0.
inline std::pair<double, HammingMinResult> lambda_min_j4_closed(int n) {
  if (n < 9)
    throw std::invalid_argument("lambda_min_j4_closed: need n >= 9");
  const double envelope = -0.25 * n * n + 0.75 * n - 2.0 / 3.0;
  const double x0 = (n - std::sqrt(3.0 * n - 4.0)) / 2.0;
  const int wlo = static_cast<int>(std::floor(x0));
  const int whi = static_cast<int>(std::ceil(x0));
  ExactInt a = krawtchouk_eval(n, 4, wlo);
  ExactInt b = krawtchouk_eval(n, 4, whi);
  HammingMinResult r{a <= b ? a : b, a <= b ? wlo : whi, false};
  return {envelope, r};
}

inline constexpr int kDefaultZ2OracleCap = 16;

// sum over all weight-j vectors b of (-1)^{<b, v>} for a fixed v given as a
// bit mask; direct enumeration, sharing nothing with the Krawtchouk routines.
inline ExactInt char_sum_oracle_mask(int n, int j, std::uint64_t vmask,
                                     int cap = kDefaultZ2OracleCap) {
  if (n < 0 || n > 62 || j < 0 || j > n)
    throw std::invalid_argument("char_sum_oracle: need 0 <= j <= n <= 62");
  if (vmask >> n)
    throw std::invalid_argument("char_sum_oracle: mask has bits beyond n");
  if (n > cap)
    throw std::invalid_argument("char_sum_oracle: n exceeds the oracle cap");
  std::int64_t acc = 0;
  std::uint64_t b = (j == 0) ? 0 : ((std::uint64_t{1} << j) - 1);
  while (true) {
    acc += (std::popcount(b & vmask) % 2) ? -1 : 1;
    if (b == 0) break;
    const std::uint64_t low = b & (~b + 1);
    const std::uint64_t ripple = b + low;
    const std::uint64_t next = (((ripple ^ b) >> 2) / low) | ripple;
    if (next >> n) break;
    b = next;
  }
  return ExactInt(static_cast<long>(acc));
}

// Same sum for the canonical weight-w vector (low w bits set).
inline ExactInt char_sum_oracle(int n, int j, int w,
                                int cap = kDefaultZ2OracleCap) {
  if (w < 0 || w > n)
    throw std::invalid_argument("char_sum_oracle: need 0 <= w <= n");
  const std::uint64_t mask = (w == 0) ? 0 : ((std::uint64_t{1} << w) - 1);
  return char_sum_oracle_mask(n, j, mask, cap);
}

// sum_k |L_{2k}(j)| r1^{j-2k} with L the closed-form q_j coefficients and r1
// the root interval radius: an upper envelope for |lambda_min(H(n, j))| in
// the fixed-j regime (even j, 4 <= j < n/2). Exact coefficient sums combine
// in plain doubles up to j = 40 and in log2 space beyond.
inline double lb_bound_fixed_j(int n, int j) {
  const double r1 = root_interval(n, j).second;
  const ExactInt jfact = factorial(static_cast<unsigned>(j));
  auto log2_mpz = [](const ExactInt& z) {
    long e = 0;
    const double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log2(d) + static_cast<double>(e);
  };
  if (j <= 40) {
    double acc = 0;
    for (int k = 0; 2 * k <= j; ++k) {
      ExactRat mag = make_rat(two_separated_product_sum(n, j, k), jfact);
      acc += mag.get_d() * std::pow(r1, j - 2 * k);
    }
    return acc;
  }
  const double lf = log2_mpz(jfact);
  const double lr = std::log2(r1);
  std::vector<double> terms;
  terms.reserve(static_cast<size_t>(j) / 2 + 1);
  for (int k = 0; 2 * k <= j; ++k)
    terms.push_back(log2_mpz(two_separated_product_sum(n, j, k)) - lf +
                    (j - 2 * k) * lr);
  double top = terms[0];
  for (double t : terms) top = std::max(top, t);
  double sum = 0;
  for (double t : terms) sum += std::exp2(t - top);
  return std::exp2(top + std::log2(sum));
}

// Proportional-regime envelope (2 C n)^j / j! * f_j(1/4) evaluated through
// the closed Fibonacci form, with C = sqrt(alpha (1-alpha)) and j the even
// integer nearest alpha n; log2-space throughout, so very large n is fine.
inline double lb_bound_theta(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("lb_bound_theta: need n >= 1");
  if (!(alpha > 0.0 && alpha < 1.0 / 3.0))
    throw std::domain_error("lb_bound_theta: need 0 < alpha < 1/3");
  const int j = 2 * static_cast<int>(std::lround(alpha * n / 2.0));
  if (j < 2)
    throw std::domain_error("lb_bound_theta: alpha n rounds below 2");
  const double c = std::sqrt(alpha * (1.0 - alpha));
  const double s2 = std::numbers::sqrt2;
  const double ratio = (s2 - 1.0) / (s2 + 1.0);
  const double sign = (j + 1) % 2 ? -1.0 : 1.0;
  // f_j(1/4) = ((1+s2)^{j+1} - (1-s2)^{j+1}) / (2^{j+1} s2)
  const double log2_f = (j + 1) * std::log2(1.0 + s2) - (j + 1) - 0.5 +
                        std::log2(1.0 - sign * std::pow(ratio, j + 1));
  const double log2_total = j * std::log2(2.0 * c * n) -
                            std::lgamma(j + 1.0) / std::numbers::ln2 + log2_f;
  return std::exp2(log2_total);
}

}  // namespace hamspec
