#include "hamspec/chiq.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hamspec;

namespace {

// the 17 published rate-base rows, 3 decimals each
const std::vector<double> kAlphas = {0.01, 0.02, 0.03, 0.04, 0.05, 0.06,
                                     0.07, 0.08, 0.09, 0.10, 0.11, 0.12,
                                     0.13, 0.14, 0.15, 0.16, 0.17};
const std::vector<double> kL = {1.062, 1.105, 1.140, 1.171, 1.198, 1.222,
                                1.243, 1.262, 1.279, 1.293, 1.307, 1.318,
                                1.328, 1.336, 1.343, 1.349, 1.353};
const std::vector<double> kU = {1.961, 1.922, 1.885, 1.848, 1.813, 1.778,
                                1.745, 1.712, 1.680, 1.649, 1.619, 1.590,
                                1.562, 1.534, 1.507, 1.481, 1.456};

}  // namespace

TEST_CASE("exact ceiling bound") {
  CHECK(spectral_lower_bound(ExactInt(924), ExactInt(-84)) == 12);
  CHECK(spectral_lower_bound(ExactInt(70), ExactInt(-10)) == 8);
  CHECK(spectral_lower_bound(ExactInt(10), ExactInt(-3)) == 5);
  CHECK(spectral_lower_bound(ExactInt(5), ExactInt(-5)) == 2);
  CHECK_THROWS_AS(spectral_lower_bound(ExactInt(5), ExactInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(spectral_lower_bound(ExactInt(0), ExactInt(-1)), std::invalid_argument);
  CHECK_THROWS_AS(spectral_lower_bound(ExactInt(-3), ExactInt(-1)), std::invalid_argument);
}

TEST_CASE("half-distance family is tight at 4t") {
  for (int t = 2; t <= 6; ++t) {
    auto rep = hamming_chiq_lb(4 * t, 2 * t);
    CHECK(rep.spectral_lb == 4 * t);
    bool has_two_j = false;
    for (const auto& [label, value] : rep.upper_bounds)
      if (label == "two_j") {
        has_two_j = true;
        CHECK(value == 4.0 * t);
      }
    CHECK(has_two_j);
  }
}

TEST_CASE("odd distance reports") {
  auto rep = hamming_chiq_lb(9, 3);
  CHECK(rep.spectral_lb == 2);
  CHECK(rep.lambda_min == -84);
  CHECK(rep.upper_bounds.empty());
}

TEST_CASE("envelope rates attach on the fixed-j regime") {
  auto rep = hamming_chiq_lb(24, 4);
  REQUIRE(rep.lower_rates.size() == 2);
  CHECK(rep.lower_rates[0].first == "fixed_j_envelope");
  CHECK(rep.lower_rates[0].second > 1.0);
  CHECK(rep.lower_rates[1].first == "theta_envelope");
  for (const auto& [label, value] : rep.lower_rates)
    CHECK(std::isfinite(value));
  // spectral_lb itself stays exact and dominated by the rate bound
  CHECK(rep.spectral_lb >= 2);
}

TEST_CASE("upper bound menu branches") {
  auto u = hamming_chiq_ub(16, 2);
  REQUIRE(u.size() == 2);
  CHECK(u[0].first == "exp_log2_rate");
  CHECK(u[1].first == "n_plus_one");
  CHECK(u[1].second == 17.0);

  u = hamming_chiq_ub(7, 2);  // 7 = 3 mod 4 and prime
  bool found = false;
  for (const auto& [label, value] : u)
    if (label == "n_plus_one") {
      found = true;
      CHECK(value == 8.0);
    }
  CHECK(found);

  u = hamming_chiq_ub(12, 2);  // neither 2-power nor 3 mod 4
  for (const auto& [label, value] : u) CHECK(label != "n_plus_one");

  u = hamming_chiq_ub(6, 4);
  REQUIRE(u.size() == 1);
  CHECK(u[0].first == "two_j");
  CHECK(u[0].second == 8.0);

  u = hamming_chiq_ub(20, 8);  // middle window: 10 - sqrt(20)/2 < 8 < 10
  bool mid = false;
  for (const auto& [label, value] : u)
    if (label == "two_binomial_n_2") {
      mid = true;
      CHECK(value == 380.0);
    }
  CHECK(mid);

  CHECK_THROWS_AS(hamming_chiq_ub(9, 3), std::invalid_argument);
  CHECK_THROWS_AS(hamming_chiq_ub(4, 6), std::invalid_argument);
}

TEST_CASE("prime power classifier") {
  CHECK(detail::is_prime_power(2));
  CHECK(detail::is_prime_power(27));
  CHECK(detail::is_prime_power(121));
  CHECK_FALSE(detail::is_prime_power(1));
  CHECK_FALSE(detail::is_prime_power(12));
  CHECK_FALSE(detail::is_prime_power(1000001));  // 101 * 9901
}

TEST_CASE("quaternary reports") {
  auto rep = z4_chiq(4, 2);
  CHECK(rep.lambda_max == 207900);
  CHECK(rep.lambda_min == -18900);
  CHECK(rep.spectral_lb == 12);
  REQUIRE(rep.upper_bounds.size() == 1);
  CHECK(rep.upper_bounds[0].second == 12.0);
  bool meet = false, formula = false;
  for (const auto& note : rep.notes) {
    if (note == "lower and upper bounds meet") meet = true;
    if (note == "lambda_min attains -degree/(n-1)") formula = true;
  }
  CHECK(meet);
  CHECK(formula);

  rep = z4_chiq(1, 1);
  CHECK(rep.lambda_max == 24);
  CHECK(rep.lambda_min == -24);
  CHECK(rep.spectral_lb == 2);
  for (const auto& note : rep.notes) CHECK(note != "lower and upper bounds meet");
}

TEST_CASE("published rate table") {
  auto rows = lu_table(kAlphas);
  REQUIRE(rows.size() == kAlphas.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK_THAT(rows[i].l, Catch::Matchers::WithinAbs(kL[i], 1e-3));
    CHECK_THAT(rows[i].u, Catch::Matchers::WithinAbs(kU[i], 1e-3));
    CHECK(round3(rows[i].l) == kL[i]);
    CHECK(round3(rows[i].u) == kU[i]);
  }
  CHECK_THROWS_AS(lu_table({0.5}), std::domain_error);
  CHECK_THROWS_AS(lu_table({0.0}), std::domain_error);
}

TEST_CASE("rate base against the region predicate") {
  CHECK(region_alpha_holds(0.17));
  CHECK_FALSE(region_alpha_holds(0.175));
  CHECK_FALSE(region_alpha_holds(0.18));
  CHECK_FALSE(region_alpha_holds(0.185));
  for (int i = 1; i <= 299; ++i) {
    const double alpha = i / 1000.0;
    CHECK((lb_rate_base(alpha) > 1.0) == region_alpha_holds(alpha));
  }
  CHECK_THROWS_AS(region_alpha_holds(0.0), std::domain_error);
  CHECK_THROWS_AS(lb_rate_base(0.5), std::domain_error);
}

TEST_CASE("banker's rounding at the half") {
  CHECK(round3(1.0625) == 1.062);   // 17/16, exactly representable
  CHECK(round3(1.1875) == 1.188);   // 19/16
  CHECK(round3(-1.0625) == -1.062);
  CHECK(round3(2.0) == 2.0);
}
