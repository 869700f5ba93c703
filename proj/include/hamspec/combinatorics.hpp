#pragma once

// Exact combinatorial primitives shared by every module: GMP-backed integers
// and rationals, factorial/binomial/multinomial coefficients, symbol-type
// vectors with lexicographic enumeration, and the binary entropy function.

#include <gmpxx.h>

#include <cmath>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamspec {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

inline constexpr unsigned kFactorialCacheCap = 256;

// n!; values up to kFactorialCacheCap come from a table built once on first
// use, safe for concurrent readers afterwards.
inline ExactInt factorial(unsigned n) {
  static const std::vector<ExactInt> table = [] {
    std::vector<ExactInt> t(kFactorialCacheCap + 1);
    t[0] = 1;
    for (unsigned i = 1; i <= kFactorialCacheCap; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  if (n <= kFactorialCacheCap) return table[n];
  ExactInt r = table[kFactorialCacheCap];
  for (unsigned i = kFactorialCacheCap + 1; i <= n; ++i) r *= i;
  return r;
}

// C(n, k); k outside [0, n] gives 0, negative n is a caller error.
inline ExactInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// a / b where b must divide a.
inline ExactInt exact_div(const ExactInt& a, const ExactInt& b) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::logic_error("exact_div: inexact division");
  ExactInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// num / den as a canonical rational.
inline ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  ExactRat r(num, den);
  r.canonicalize();
  return r;
}

// Symbol counts of a vector over Z_p: parts[m] = multiplicity of symbol m.
struct TypeVector {
  std::vector<int> parts;

  TypeVector() = default;
  TypeVector(std::initializer_list<int> l) : parts(l) { check(); }
  explicit TypeVector(std::vector<int> v) : parts(std::move(v)) { check(); }

  int p() const { return static_cast<int>(parts.size()); }
  int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int operator[](int m) const { return parts[static_cast<size_t>(m)]; }

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
  friend auto operator<=>(const TypeVector& a, const TypeVector& b) {
    return a.parts <=> b.parts;
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < p(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }

 private:
  void check() const {
    for (int c : parts)
      if (c < 0) throw std::invalid_argument("TypeVector: negative count");
  }
};

// n! / prod_m parts[m]!
inline ExactInt multinomial(const TypeVector& t) {
  ExactInt r = factorial(static_cast<unsigned>(t.n()));
  for (int c : t.parts) r = exact_div(r, factorial(static_cast<unsigned>(c)));
  return r;
}

// All types with p parts summing to n, ascending lexicographic, generated
// lazily; restartable (begin() can be taken any number of times).
class TypeRange {
 public:
  TypeRange(int p, int n) : p_(p), n_(n) {
    if (p < 1 || n < 0)
      throw std::invalid_argument("enumerate_types: need p >= 1, n >= 0");
  }

  class iterator {
   public:
    using value_type = TypeVector;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int p, int n) : done_(false) {
      cur_.parts.assign(static_cast<size_t>(p), 0);
      cur_.parts[static_cast<size_t>(p) - 1] = n;
    }

    const TypeVector& operator*() const { return cur_; }
    const TypeVector* operator->() const { return &cur_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& a, const iterator& b) {
      if (a.done_ != b.done_) return false;
      return a.done_ || a.cur_ == b.cur_;
    }

   private:
    // successor: bump the rightmost slot that has mass strictly after it,
    // moving that mass minus one to the last slot
    void advance() {
      auto& c = cur_.parts;
      const int p = static_cast<int>(c.size());
      int suffix = 0;
      for (int i = p - 2; i >= 0; --i) {
        suffix += c[static_cast<size_t>(i) + 1];
        if (suffix > 0) {
          c[static_cast<size_t>(i)] += 1;
          for (int k = i + 1; k < p; ++k) c[static_cast<size_t>(k)] = 0;
          c[static_cast<size_t>(p) - 1] = suffix - 1;
          return;
        }
      }
      done_ = true;
    }

    TypeVector cur_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(p_, n_); }
  iterator end() const { return iterator(); }

 private:
  int p_, n_;
};

inline TypeRange enumerate_types(int p, int n) { return TypeRange(p, n); }

// -x log2 x - (1-x) log2 (1-x) on [0, 1].
inline double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("binary_entropy: argument outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

}  // namespace hamspec
