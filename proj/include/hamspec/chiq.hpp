#pragma once

// Quantum chromatic number bounds: the exact spectral lower bound
// 1 + ceil(lambda_max / |lambda_min|), the upper-bound menu for both graph
// families, exponential rate tables, and the parameter region where the
// spectral route exceeds the trivial bound.

#include "hamspec/combinatorics.hpp"
#include "hamspec/hamming.hpp"
#include "hamspec/z4.hpp"

#include <numbers>

namespace hamspec {

// 1 + ceil(lambda_max / -lambda_min), exact.
inline ExactInt spectral_lower_bound(const ExactInt& lambda_max,
                                     const ExactInt& lambda_min) {
  if (!(lambda_min < 0) || !(lambda_max > 0))
    throw std::invalid_argument(
        "spectral_lower_bound: need lambda_min < 0 < lambda_max");
  const ExactInt d = -lambda_min;
  ExactInt q;
  mpz_cdiv_q(q.get_mpz_t(), lambda_max.get_mpz_t(), d.get_mpz_t());
  return 1 + q;
}

inline constexpr double e_times_one_plus_sqrt2 =
    std::numbers::e * (1.0 + std::numbers::sqrt2);

// 2^{h(alpha)} / (e (1+sqrt2) sqrt((1-alpha)/alpha))^alpha: the per-coordinate
// base of the spectral bound along j = alpha n.
inline double lb_rate_base(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::domain_error("lb_rate_base: need 0 < alpha < 1/2");
  return std::exp2(binary_entropy(alpha)) /
         std::pow(e_times_one_plus_sqrt2 * std::sqrt((1.0 - alpha) / alpha), alpha);
}

// alpha log2(e (1+sqrt2) sqrt((1-alpha)/alpha)) < h(alpha): exactly where
// lb_rate_base exceeds 1.
inline bool region_alpha_holds(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::domain_error("region_alpha_holds: need 0 < alpha < 1/2");
  return alpha * std::log2(e_times_one_plus_sqrt2 *
                           std::sqrt((1.0 - alpha) / alpha)) <
         binary_entropy(alpha);
}

struct LuRow {
  double alpha;
  double l;  // lower-bound rate base
  double u;  // upper-bound rate base
};

// Rate-base comparison rows. The lower column uses the sqrt(alpha (1-alpha))
// normalization; the upper column is 2^{h(1/2 - sqrt(alpha (1-alpha)))}.
inline std::vector<LuRow> lu_table(const std::vector<double>& alphas) {
  std::vector<LuRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    if (!(alpha > 0.0 && alpha < 0.5))
      throw std::domain_error("lu_table: need 0 < alpha < 1/2");
    const double c = std::sqrt(alpha * (1.0 - alpha));
    rows.push_back({alpha,
                    std::exp2(binary_entropy(alpha)) /
                        std::pow(e_times_one_plus_sqrt2 * c, alpha),
                    std::exp2(binary_entropy(0.5 - c))});
  }
  return rows;
}

// Round-half-even to 3 decimals, the table rendering convention.
inline double round3(double x) { return std::nearbyint(x * 1000.0) / 1000.0; }

namespace detail {

inline bool is_prime_power(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  return true;
}

}  // namespace detail

// Applicable chi_q upper bounds for H(n, j) with even j, labelled by the
// construction. The exponential branch reports a per-coordinate log2 rate
// rather than a count.
inline std::vector<std::pair<std::string, double>> hamming_chiq_ub(int n, int j) {
  if (n < 1 || j < 1 || j > n || j % 2)
    throw std::invalid_argument("hamming_chiq_ub: need even j with 1 <= j <= n");
  std::vector<std::pair<std::string, double>> out;
  if (2 * j >= n) out.emplace_back("two_j", 2.0 * j);
  const double half = n / 2.0;
  if (j < half && j > half - std::sqrt(static_cast<double>(n)) / 2.0)
    out.emplace_back("two_binomial_n_2", 2.0 * binomial(n, 2).get_d());
  if (2 * j < n) {
    const double alpha = static_cast<double>(j) / n;
    out.emplace_back("exp_log2_rate",
                     binary_entropy(0.5 - std::sqrt(alpha * (1.0 - alpha))));
  }
  if (j == 2) {
    const bool two_power = n >= 8 && (n & (n - 1)) == 0;
    const bool pp_3mod4 = n % 4 == 3 && detail::is_prime_power(n);
    if (two_power || pp_3mod4) out.emplace_back("n_plus_one", n + 1.0);
  }
  return out;
}

struct BoundReport {
  std::string graph_id;
  ExactInt lambda_max;
  ExactInt lambda_min;
  ExactInt spectral_lb;
  std::vector<std::pair<std::string, double>> upper_bounds;
  std::vector<std::pair<std::string, double>> lower_rates;
  std::vector<std::string> notes;
};

// Full spectral report for H(n, j); the envelopes join in on the regimes
// where they are defined.
inline BoundReport hamming_chiq_lb(int n, int j) {
  auto mn = lambda_min_exact(n, j);
  BoundReport rep;
  rep.graph_id = "H(" + std::to_string(n) + "," + std::to_string(j) + ")";
  rep.lambda_max = binomial(n, j);
  rep.lambda_min = mn.lambda_min;
  rep.spectral_lb = spectral_lower_bound(rep.lambda_max, rep.lambda_min);
  if (j % 2 == 0) {
    if (j >= 4 && 2 * j < n) {
      rep.lower_rates.emplace_back(
          "fixed_j_envelope", rep.lambda_max.get_d() / lb_bound_fixed_j(n, j));
      const double alpha = static_cast<double>(j) / n;
      if (alpha < 1.0 / 3.0)
        rep.lower_rates.emplace_back(
            "theta_envelope", rep.lambda_max.get_d() / lb_bound_theta(n, alpha));
    }
    rep.upper_bounds = hamming_chiq_ub(n, j);
  } else {
    rep.notes.push_back("odd distance: bipartite double cover regime");
  }
  rep.notes.push_back("lambda_min by exhaustive-scan with closed-form cross-check");
  return rep;
}

// Full spectral report for the quaternary family.
inline BoundReport z4_chiq(int r, int s, unsigned threads = 1) {
  auto mn = lambda_min_scan(r, s, threads);
  const int n = 2 * (r + s);
  BoundReport rep;
  rep.graph_id = "G(" + std::to_string(r) + "," + std::to_string(s) + ")";
  rep.lambda_max = multinomial(TypeVector{r, s, r, s});
  rep.lambda_min = mn.lambda_min;
  rep.spectral_lb = spectral_lower_bound(rep.lambda_max, rep.lambda_min);
  rep.upper_bounds.emplace_back("coordinate_colouring", static_cast<double>(n));
  rep.notes.push_back("lambda_min by canonical-orbit exhaustive-scan");
  if (mn.matches_formula)
    rep.notes.push_back("lambda_min attains -degree/(n-1)");
  if (rep.spectral_lb == n)
    rep.notes.push_back("lower and upper bounds meet");
  return rep;
}

}  // namespace hamspec
