#pragma once

// Krawtchouk machinery for the binary Hamming scheme H(n, 1): pointwise
// evaluation, the q_j family from the three-term recursion, the closed form
// for q_j coefficients as signed sums over 2-separated index sets, root
// location estimates, and the Fibonacci polynomials the bound evaluators use.

#include "hamspec/combinatorics.hpp"
#include "hamspec/poly.hpp"

#include <cmath>
#include <utility>

namespace hamspec {

// Intersection numbers of H(n, 1): c_i = i, a_i = 0, b_i = n - i.
struct IntersectionNumbers {
  int n;
  long c(int i) const { return i; }
  long a(int) const { return 0; }
  long b(int i) const { return n - i; }
};

// K_j(x) = sum_i (-1)^i C(x, i) C(n-x, j-i), exact.
inline ExactInt krawtchouk_eval(int n, int j, int x) {
  if (n < 0 || j < 0 || j > n || x < 0 || x > n)
    throw std::invalid_argument("krawtchouk_eval: need 0 <= j, x <= n");
  ExactInt acc = 0;
  for (int i = 0; i <= j; ++i) {
    ExactInt term = binomial(x, i) * binomial(n - x, j - i);
    if (i % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

// q_0 .. q_{j_max} generated by x q_j = c_{j+1} q_{j+1} + b_{j-1} q_{j-1}.
// q_j has degree j, leading coefficient 1/j!, the parity of j, and satisfies
// q_j(n - 2w) = K_j(w).
inline std::vector<ExactPoly> q_polys_by_recursion(int n, int j_max) {
  if (n < 0 || j_max < 0 || j_max > n)
    throw std::invalid_argument("q_polys_by_recursion: need 0 <= j_max <= n");
  const IntersectionNumbers num{n};
  std::vector<ExactPoly> q;
  q.reserve(static_cast<size_t>(j_max) + 1);
  q.push_back(ExactPoly::constant(ExactRat(1)));
  if (j_max >= 1) q.push_back(ExactPoly::x());
  for (int j = 1; j < j_max; ++j) {
    ExactPoly top = q[static_cast<size_t>(j)].times_x() -
                    q[static_cast<size_t>(j) - 1].scaled(ExactRat(num.b(j - 1)));
    q.push_back(top.scaled(make_rat(1, num.c(j + 1))));
  }
  return q;
}

// Visits every k-subset of {0, ..., j-2} whose elements are pairwise at least
// 2 apart, ascending lexicographic; there are C(j-k, k) of them.
template <class Visit>
void two_separated_sets(int k, int j, Visit&& visit) {
  if (k < 0 || j < 0)
    throw std::invalid_argument("two_separated_sets: need k, j >= 0");
  std::vector<int> set;
  set.reserve(static_cast<size_t>(k));
  auto rec = [&](auto&& self, int start) -> void {
    const int need = k - static_cast<int>(set.size());
    if (need == 0) {
      visit(static_cast<const std::vector<int>&>(set));
      return;
    }
    for (int u = start; u + 2 * (need - 1) <= j - 2; ++u) {
      set.push_back(u);
      self(self, u + 2);
      set.pop_back();
    }
  };
  rec(rec, 0);
}

// sum over 2-separated k-subsets I of {0..j-2} of prod_{u in I} (n-u)(u+1),
// by a two-term recurrence; the wide-range alternative to literal enumeration.
inline ExactInt two_separated_product_sum(int n, int j, int k) {
  if (n < 0 || j < 0 || k < 0)
    throw std::invalid_argument("two_separated_product_sum: negative input");
  if (k == 0) return 1;
  if (j < 2) return 0;
  // g[u][m]: sum over m-subsets of {u..j-2}; g[u][m] = g[u+1][m] +
  // (n-u)(u+1) g[u+2][m-1]
  std::vector<std::vector<ExactInt>> g(static_cast<size_t>(j) + 1,
                                       std::vector<ExactInt>(static_cast<size_t>(k) + 1));
  for (int u = j; u >= 0; --u) {
    g[static_cast<size_t>(u)][0] = 1;
    for (int m = 1; m <= k; ++m) {
      ExactInt v = u + 1 <= j ? g[static_cast<size_t>(u) + 1][static_cast<size_t>(m)]
                              : ExactInt(0);
      if (u <= j - 2) {
        const ExactInt& tail =
            g[static_cast<size_t>(u) + 2][static_cast<size_t>(m) - 1];
        v += static_cast<long>(n - u) * ExactInt(u + 1) * tail;
      }
      g[static_cast<size_t>(u)][static_cast<size_t>(m)] = v;
    }
  }
  return g[0][static_cast<size_t>(k)];
}

// Coefficient of x^{j-i} in q_j: zero for odd i, and for i = 2k equal to
// (-1)^k / j! times the sum over 2-separated k-subsets computed by literal
// enumeration with a running product.
inline ExactRat q_coeff_closed_form(int n, int j, int i) {
  if (n < 0 || j < 0 || j > n || i < 0 || i > j)
    throw std::invalid_argument("q_coeff_closed_form: need 0 <= i <= j <= n");
  if (i % 2) return ExactRat(0);
  const int k = i / 2;
  ExactInt sum = 0;
  auto rec = [&](auto&& self, int start, int need, const ExactInt& acc) -> void {
    if (need == 0) {
      sum += acc;
      return;
    }
    for (int u = start; u + 2 * (need - 1) <= j - 2; ++u)
      self(self, u + 2, need - 1,
           ExactInt(acc * (static_cast<long>(n - u) * (u + 1))));
  };
  rec(rec, 0, k, ExactInt(1));
  if (k % 2) sum = -sum;
  return make_rat(sum, factorial(static_cast<unsigned>(j)));
}

// [r0, r1] containing every root of q_j for even 4 <= j < n/2:
// r1 = sqrt((j-1)(n-j+2)) + sqrt((j-2)(n-j+3)), r0 = -r1.
inline std::pair<double, double> root_interval(int n, int j) {
  if (j < 4 || j % 2 || 2 * j >= n)
    throw std::invalid_argument("root_interval: need even j, 4 <= j < n/2");
  const double r1 = std::sqrt(static_cast<double>(j - 1) * (n - j + 2)) +
                    std::sqrt(static_cast<double>(j - 2) * (n - j + 3));
  return {-r1, r1};
}

// Exact-sign refinement: the two consecutive evaluation points x = n - 2w
// flanking the largest root of q_j (q > 0 at .second, q <= 0 at .first).
inline std::pair<int, int> largest_root_bracket(int n, int j) {
  if (j < 4 || j % 2 || 2 * j >= n)
    throw std::invalid_argument("largest_root_bracket: need even j, 4 <= j < n/2");
  for (int w = 1; w <= n; ++w)
    if (krawtchouk_eval(n, j, w) <= 0) return {n - 2 * w, n - 2 * (w - 1)};
  throw std::logic_error("largest_root_bracket: no sign change");
}

// f_n(x) = sum_k C(n-k, k) x^k; f_n(1) = F_{n+1}.
inline ExactRat fibonacci_f(int n, const ExactRat& x) {
  if (n < 0) throw std::invalid_argument("fibonacci_f: need n >= 0");
  ExactRat acc(0), xp(1);
  for (int k = 0; 2 * k <= n; ++k) {
    acc += ExactRat(binomial(n - k, k)) * xp;
    xp *= x;
  }
  return acc;
}

// ((1+d)^{n+1} - (1-d)^{n+1}) / (2^{n+1} d) with d = sqrt(1+4x); the d -> 0
// limit (x = -1/4) is (n+1)/2^n.
inline double fibonacci_f_closed(int n, double x) {
  if (n < 0) throw std::invalid_argument("fibonacci_f_closed: need n >= 0");
  const double rad = 1.0 + 4.0 * x;
  if (rad < 0.0)
    throw std::domain_error("fibonacci_f_closed: need x >= -1/4");
  const double d = std::sqrt(rad);
  if (d == 0.0) return (n + 1) / std::pow(2.0, n);
  return (std::pow(1.0 + d, n + 1) - std::pow(1.0 - d, n + 1)) /
         (std::pow(2.0, n + 1) * d);
}

}  // namespace hamspec
