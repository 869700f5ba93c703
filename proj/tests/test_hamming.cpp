#include "hamspec/hamming.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace hamspec;

TEST_CASE("spectrum of H(8,4)") {
  auto sp = spectrum(8, 4);
  REQUIRE(sp.size() == 9);
  std::vector<long> vals, mults;
  for (const auto& r : sp) {
    vals.push_back(r.value.get_si());
    mults.push_back(r.multiplicity.get_si());
  }
  CHECK(vals == std::vector<long>{70, 0, -10, 0, 6, 0, -10, 0, 70});
  CHECK(mults == std::vector<long>{1, 8, 28, 56, 70, 56, 28, 8, 1});
}

TEST_CASE("spectrum invariants") {
  for (int n : {3, 7, 12})
    for (int j = 1; j <= n; ++j) {
      auto sp = spectrum(n, j);
      ExactInt total = 0, trace = 0;
      for (const auto& r : sp) {
        total += r.multiplicity;
        trace += r.multiplicity * r.value;
      }
      ExactInt expect;
      mpz_ui_pow_ui(expect.get_mpz_t(), 2, static_cast<unsigned>(n));
      CHECK(total == expect);
      CHECK(trace == 0);  // the graph has no loops
    }
  CHECK_THROWS_AS(spectrum(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(spectrum(4, 5), std::invalid_argument);
}

TEST_CASE("lambda_min point values") {
  auto r = lambda_min_exact(6, 2);
  CHECK(r.lambda_min == -3);
  CHECK(r.argmin_w == 3);
  CHECK(r.scanned);

  r = lambda_min_exact(8, 4);
  CHECK(r.lambda_min == -10);
  CHECK(r.argmin_w == 2);

  r = lambda_min_exact(9, 3);
  CHECK(r.lambda_min == -84);
  CHECK(r.argmin_w == 9);

  r = lambda_min_exact(7, 2);  // tie between w = 3 and w = 4
  CHECK(r.lambda_min == -3);
  CHECK(r.argmin_w == 3);
}

TEST_CASE("odd j minima") {
  for (int n = 1; n <= 20; ++n)
    for (int j = 1; j <= n; j += 2) {
      auto r = lambda_min_exact(n, j);
      CHECK(r.lambda_min == -binomial(n, j));
      if (j < n)
        CHECK(r.argmin_w == n);
      else
        CHECK(r.argmin_w == 1);  // K_n alternates, first dip at w = 1
    }
}

TEST_CASE("half and beyond-half regimes") {
  for (int n = 8; n <= 24; n += 2) {
    int j0 = n / 2 + (n / 2) % 2;  // first even j >= n/2
    for (int j = j0; j <= n; j += 2) {
      auto r = lambda_min_exact(n, j);
      if (2 * j == n)
        CHECK(r.lambda_min == krawtchouk_eval(n, j, 2));
      else
        CHECK(r.lambda_min == krawtchouk_eval(n, j, 1));
    }
  }
}

TEST_CASE("j = 2 closed form") {
  for (int n = 4; n <= 25; ++n) {
    auto r = lambda_min_exact(n, 2);
    CHECK(r.lambda_min == -ExactInt(n / 2));
  }
}

TEST_CASE("j = 4 closed form against the scan") {
  for (int n = 9; n <= 40; ++n) {
    auto [env, closed] = lambda_min_j4_closed(n);
    auto scan = lambda_min_exact(n, 4);
    CHECK(closed.lambda_min == scan.lambda_min);
    CHECK(closed.argmin_w == scan.argmin_w);
    CHECK_FALSE(closed.scanned);
    CHECK(env <= scan.lambda_min.get_d());
  }
  auto [env, closed] = lambda_min_j4_closed(20);
  CHECK_THAT(env, Catch::Matchers::WithinAbs(-85.0 - 2.0 / 3.0, 1e-9));
  CHECK(closed.lambda_min == -83);
  CHECK(closed.argmin_w == 6);
  CHECK_THROWS_AS(lambda_min_j4_closed(8), std::invalid_argument);
}

TEST_CASE("character sum oracle") {
  CHECK(char_sum_oracle(4, 2, 1) == 0);
  CHECK(char_sum_oracle(8, 4, 2) == -10);
  for (int j = 0; j <= 9; ++j) CHECK(char_sum_oracle(9, j, 0) == binomial(9, j));

  for (int n = 0; n <= 10; ++n)
    for (int j = 0; j <= n; ++j)
      for (int w = 0; w <= n; ++w)
        CHECK(char_sum_oracle(n, j, w) == krawtchouk_eval(n, j, w));
}

TEST_CASE("oracle is representative independent") {
  std::mt19937 rng(20260822);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);  // 4..12
    const int j = static_cast<int>(rng() % (n + 1));
    const int w = static_cast<int>(rng() % (n + 1));
    // random mask of weight w
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(i)] = i;
    std::shuffle(pos.begin(), pos.end(), rng);
    std::uint64_t mask = 0;
    for (int i = 0; i < w; ++i) mask |= std::uint64_t{1} << pos[static_cast<size_t>(i)];
    CHECK(char_sum_oracle_mask(n, j, mask) == char_sum_oracle(n, j, w));
  }
}

TEST_CASE("oracle cap") {
  CHECK_THROWS_AS(char_sum_oracle(17, 1, 0), std::invalid_argument);
  CHECK(char_sum_oracle(17, 1, 0, 18) == 17);
  CHECK_THROWS_AS(char_sum_oracle(63, 1, 0, 64), std::invalid_argument);
  CHECK_THROWS_AS(char_sum_oracle_mask(4, 2, 0x30, 16), std::invalid_argument);
}

TEST_CASE("fixed-j envelope") {
  CHECK_THAT(lb_bound_fixed_j(100, 4),
             Catch::Matchers::WithinRel(64836.00755830377, 1e-9));
  CHECK(lb_bound_fixed_j(100, 4) < binomial(100, 4).get_d());

  // dominates |lambda_min| wherever it applies (full sweep in acceptance)
  for (int n = 10; n <= 20; ++n)
    for (int j = 4; 2 * j < n; j += 2)
      CHECK(lb_bound_fixed_j(n, j) >=
            -lambda_min_exact(n, j).lambda_min.get_d());

  // the two evaluation paths agree around the j = 40 switch
  for (int j : {38, 40, 42, 44}) {
    const int n = 5 * j;
    const double r1 = root_interval(n, j).second;
    const ExactInt jf = factorial(static_cast<unsigned>(j));
    double direct = 0;
    for (int k = 0; 2 * k <= j; ++k)
      direct += make_rat(two_separated_product_sum(n, j, k), jf).get_d() *
                std::pow(r1, j - 2 * k);
    CHECK_THAT(lb_bound_fixed_j(n, j), Catch::Matchers::WithinRel(direct, 1e-9));
  }

  CHECK_THROWS_AS(lb_bound_fixed_j(100, 5), std::invalid_argument);
  CHECK_THROWS_AS(lb_bound_fixed_j(8, 4), std::invalid_argument);
}

TEST_CASE("n^2/4 scaling of the j = 4 envelope") {
  const double a = lb_bound_fixed_j(10000, 4) / (10000.0 * 10000.0);
  const double b = lb_bound_fixed_j(100000, 4) / (100000.0 * 100000.0);
  CHECK_THAT(a, Catch::Matchers::WithinAbs(6.680648, 1e-4));
  CHECK_THAT(b, Catch::Matchers::WithinAbs(6.682453, 1e-4));
  CHECK(std::abs(a - b) / b < 0.10);
}

TEST_CASE("theta envelope") {
  const double v = lb_bound_theta(1000, 0.1);
  CHECK_THAT(std::log2(v) / 1000.0,
             Catch::Matchers::WithinAbs(0.425044, 1e-5));
  // within 0.02 per-coordinate of the limiting rate
  const double limit_rate =
      0.1 * std::log2(std::numbers::e * (1.0 + std::numbers::sqrt2) * 3.0);
  CHECK(std::abs(std::log2(v) / 1000.0 - limit_rate) < 0.02);

  // shrinks as alpha shrinks at fixed n
  double prev = std::numeric_limits<double>::infinity();
  for (double alpha : {0.1, 0.08, 0.06, 0.04}) {
    const double cur = lb_bound_theta(1000, alpha);
    CHECK(cur < prev);
    prev = cur;
  }

  CHECK(lb_bound_theta(24, 4.0 / 24.0) >=
        -lambda_min_exact(24, 4).lambda_min.get_d());

  CHECK_THROWS_AS(lb_bound_theta(1000, 0.34), std::domain_error);
  CHECK_THROWS_AS(lb_bound_theta(1000, 0.0), std::domain_error);
  CHECK_THROWS_AS(lb_bound_theta(10, 0.01), std::domain_error);
  CHECK_THROWS_AS(lb_bound_theta(0, 0.1), std::invalid_argument);
}
