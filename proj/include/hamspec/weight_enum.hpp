#pragma once

// Complete weight enumerators over Z_p, the MacWilliams transform for p = 2
// and p = 4 (Gaussian-integer kernel), a transform-free dual-type
// distribution, and the beta / zero-dot counts that decompose the quaternary
// eigenvalues.

#include "hamspec/combinatorics.hpp"

#include <map>
#include <set>

namespace hamspec {

struct GaussianInt {
  ExactInt re, im;

  GaussianInt() : re(0), im(0) {}
  GaussianInt(long r) : re(r), im(0) {}
  GaussianInt(ExactInt r) : re(std::move(r)), im(0) {}
  GaussianInt(ExactInt r, ExactInt i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianInt& operator+=(const GaussianInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) {
    a += b;
    return a;
  }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {ExactInt(a.re * b.re - a.im * b.im),
            ExactInt(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;

  // i^k
  static GaussianInt unit_power(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1};
      case 1: return {ExactInt(0), ExactInt(1)};
      case 2: return {-1};
      default: return {ExactInt(0), ExactInt(-1)};
    }
  }
};

// Multivariate polynomial in x_0 .. x_{p-1}, homogeneous of degree n, indexed
// by exponent type; the zero coefficients are not stored.
class WeightEnumerator {
 public:
  WeightEnumerator(int p, int n) : p_(p), n_(n) {
    if (p < 2 || n < 0)
      throw std::invalid_argument("WeightEnumerator: need p >= 2, n >= 0");
  }

  int p() const { return p_; }
  int n() const { return n_; }

  void add(const TypeVector& t, const GaussianInt& c) {
    if (t.p() != p_ || t.n() != n_)
      throw std::invalid_argument("WeightEnumerator::add: type shape mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(t.parts, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GaussianInt coeff(const TypeVector& t) const {
    auto it = terms_.find(t.parts);
    return it == terms_.end() ? GaussianInt() : it->second;
  }

  // evaluation at x_m = 1 for all m: the codeword count for an enumerator
  GaussianInt total() const {
    GaussianInt s;
    for (const auto& [t, c] : terms_) s += c;
    return s;
  }

  const std::map<std::vector<int>, GaussianInt>& terms() const { return terms_; }

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;

 private:
  int p_, n_;
  std::map<std::vector<int>, GaussianInt> terms_;
};

// |<v>| for one generator of the given type: 1 for v = 0, p when some
// coordinate is a unit, and for p = 4 order 2 when all entries lie in {0, 2}.
inline int single_generator_code_size(int p, const TypeVector& t) {
  if (t.p() != p)
    throw std::invalid_argument("single_generator_code_size: type shape mismatch");
  if (t[0] == t.n()) return 1;
  if (p == 4 && t[1] + t[3] == 0) return 2;
  return p;
}

// Enumerator of the cyclic code generated by one vector of the given type.
// Multiples a v that coincide as vectors are counted once: the dedupe key is
// the symbol remap a*m over the support of the type.
inline WeightEnumerator cwe_single_generator(int p, const TypeVector& t) {
  if (t.p() != p)
    throw std::invalid_argument("cwe_single_generator: type shape mismatch");
  WeightEnumerator a(p, t.n());
  std::set<std::vector<int>> seen;
  for (int mult = 0; mult < p; ++mult) {
    std::vector<int> key;
    for (int m = 0; m < p; ++m)
      if (t[m] > 0) key.push_back(mult * m % p);
    if (!seen.insert(key).second) continue;
    std::vector<int> parts(static_cast<size_t>(p), 0);
    for (int m = 0; m < p; ++m) parts[static_cast<size_t>(mult * m % p)] += t[m];
    a.add(TypeVector(parts), GaussianInt(1));
  }
  return a;
}

namespace detail {

// expansion of (sum_k zeta^{m k u} x_k)^e into exponent-type terms, where
// zeta^u is tracked as a power of i (u = 2 for p = 2, u = 1 for p = 4)
inline std::map<std::vector<int>, GaussianInt> kernel_row_power(int p, int unit_step,
                                                                int m, int e) {
  std::map<std::vector<int>, GaussianInt> out;
  std::vector<int> expo(static_cast<size_t>(p), 0);
  auto rec = [&](auto&& self, int k, int left, const ExactInt& ways,
                 int phase) -> void {
    if (k == p - 1) {
      expo[static_cast<size_t>(k)] = left;
      const int ph = phase + unit_step * m * k * left;
      out[expo] += ways * GaussianInt::unit_power(ph);
      expo[static_cast<size_t>(k)] = 0;
      return;
    }
    for (int take = 0; take <= left; ++take) {
      expo[static_cast<size_t>(k)] = take;
      self(self, k + 1, left - take, ExactInt(ways * binomial(left, take)),
           phase + unit_step * m * k * take);
      expo[static_cast<size_t>(k)] = 0;
    }
  };
  rec(rec, 0, e, ExactInt(1), 0);
  return out;
}

}  // namespace detail

// MacWilliams transform: substitute x_m -> sum_k zeta^{mk} x_k (zeta the
// primitive p-th root of unity), divide by the code size. Inexact division, a
// residual imaginary part, or a negative count all mean the input was not the
// enumerator of a code of the claimed size.
inline WeightEnumerator macwilliams(const WeightEnumerator& a,
                                    const ExactInt& code_size) {
  const int p = a.p();
  if (p != 2 && p != 4)
    throw std::invalid_argument("macwilliams: transform implemented for p = 2 and 4");
  if (code_size <= 0)
    throw std::invalid_argument("macwilliams: code size must be positive");
  const int unit_step = p == 2 ? 2 : 1;
  const int n = a.n();

  std::map<std::vector<int>, GaussianInt> acc;
  for (const auto& [expo, coeff] : a.terms()) {
    std::map<std::vector<int>, GaussianInt> prod;
    prod[std::vector<int>(static_cast<size_t>(p), 0)] = coeff;
    for (int m = 0; m < p; ++m) {
      const int e = expo[static_cast<size_t>(m)];
      if (e == 0) continue;
      auto factor = detail::kernel_row_power(p, unit_step, m, e);
      std::map<std::vector<int>, GaussianInt> next;
      for (const auto& [e1, c1] : prod)
        for (const auto& [e2, c2] : factor) {
          std::vector<int> key(static_cast<size_t>(p));
          for (int k = 0; k < p; ++k)
            key[static_cast<size_t>(k)] =
                e1[static_cast<size_t>(k)] + e2[static_cast<size_t>(k)];
          auto [it, fresh] = next.try_emplace(key, GaussianInt());
          it->second += c1 * c2;
          (void)fresh;
        }
      prod = std::move(next);
    }
    for (const auto& [key, c] : prod) {
      auto [it, fresh] = acc.try_emplace(key, GaussianInt());
      it->second += c;
      (void)fresh;
    }
  }

  WeightEnumerator out(p, n);
  for (const auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    if (!c.is_real())
      throw std::invalid_argument("macwilliams: non-code input (imaginary residue)");
    if (!mpz_divisible_p(c.re.get_mpz_t(), code_size.get_mpz_t()))
      throw std::invalid_argument("macwilliams: non-code input (inexact division)");
    ExactInt re;
    mpz_divexact(re.get_mpz_t(), c.re.get_mpz_t(), code_size.get_mpz_t());
    if (re < 0)
      throw std::invalid_argument("macwilliams: non-code input (negative count)");
    out.add(TypeVector(key), GaussianInt(re));
  }
  return out;
}

// Counts, for one fixed v of type s, the vectors w of each type with
// <w, v> = 0 mod p: a layered dynamic program over the symbol blocks of v,
// sharing nothing with the transform.
inline std::map<std::vector<int>, ExactInt> dual_type_distribution(int p,
                                                                   const TypeVector& s) {
  if (p < 2 || s.p() != p)
    throw std::invalid_argument("dual_type_distribution: need p >= 2 matching the type");
  using Key = std::pair<std::vector<int>, int>;  // (type so far, dot mod p)
  std::map<Key, ExactInt> layer;
  layer[{std::vector<int>(static_cast<size_t>(p), 0), 0}] = 1;
  for (int m = 0; m < p; ++m) {
    if (s[m] == 0) continue;
    std::map<Key, ExactInt> next;
    for (const TypeVector& comp : enumerate_types(p, s[m])) {
      const ExactInt ways = multinomial(comp);
      int d = 0;
      for (int k = 0; k < p; ++k) d = (d + m * k % p * comp[k]) % p;
      for (const auto& [key, cnt] : layer) {
        Key nk = key;
        for (int k = 0; k < p; ++k) nk.first[static_cast<size_t>(k)] += comp[k];
        nk.second = (nk.second + d) % p;
        next[nk] += cnt * ways;
      }
    }
    layer = std::move(next);
  }
  std::map<std::vector<int>, ExactInt> out;
  for (const auto& [key, cnt] : layer)
    if (key.second == 0) out[key.first] = cnt;
  return out;
}

// Single entry of the distribution above.
inline ExactInt dual_coeff(int p, const TypeVector& s, const TypeVector& t) {
  if (s.n() != t.n() || t.p() != p)
    throw std::invalid_argument("dual_coeff: type shape mismatch");
  auto d = dual_type_distribution(p, s);
  auto it = d.find(t.parts);
  return it == d.end() ? ExactInt(0) : it->second;
}

namespace detail {

inline void check_rs_type(int r, int s, const TypeVector& t, const char* who) {
  if (r < 0 || s < 0 || r + s == 0)
    throw std::invalid_argument(std::string(who) + ": need r, s >= 0, r + s >= 1");
  if (t.p() != 4 || t.n() != 2 * (r + s))
    throw std::invalid_argument(std::string(who) + ": type must have 4 parts summing to 2(r+s)");
}

}  // namespace detail

// beta(v) = #{b of type (r,s,r,s) : <b, v> in {0, 2}} for v of type t,
// through the binary image: the dual enumerator of the Z_2 code generated by
// a (2r, 2s)-type vector, scaled by mult(r,s,r,s)/C(n, t0+t2).
inline ExactInt beta(int r, int s, const TypeVector& t) {
  detail::check_rs_type(r, s, t, "beta");
  const int n = 2 * (r + s);
  const TypeVector image{2 * r, 2 * s};
  auto dual = macwilliams(cwe_single_generator(2, image),
                          ExactInt(single_generator_code_size(2, image)));
  const GaussianInt c = dual.coeff(TypeVector{t[0] + t[2], t[1] + t[3]});
  return exact_div(multinomial(TypeVector{r, s, r, s}) * c.re,
                   binomial(n, t[0] + t[2]));
}

// |S(v, 0)| = #{b of type (r,s,r,s) : <b, v> = 0} for v of type t, through
// the quaternary transform: mult(r,s,r,s) * dual[t] / mult(t).
inline ExactInt s0_count(int r, int s, const TypeVector& t) {
  detail::check_rs_type(r, s, t, "s0_count");
  const TypeVector gen{r, s, r, s};
  auto dual = macwilliams(cwe_single_generator(4, gen),
                          ExactInt(single_generator_code_size(4, gen)));
  const GaussianInt c = dual.coeff(t);
  if (!c.is_real())
    throw std::logic_error("s0_count: dual enumerator has imaginary residue");
  return exact_div(multinomial(gen) * c.re, multinomial(t));
}

}  // namespace hamspec
