#pragma once

// Spectra of the Cayley graphs on Z_4^n whose connection set is every vector
// of symbol type (r, s, r, s): exact eigenvalues per character type from an
// aggregate generating-function expansion, a full-enumeration character
// oracle, canonical-orbit minimum scans with optional thread sharding, and
// the boundary / smallest-eigenvalue closed forms with the interior bound.

#include "hamspec/combinatorics.hpp"
#include "hamspec/krawtchouk.hpp"

#include <algorithm>
#include <optional>
#include <thread>

namespace hamspec {

namespace detail {

// (u + v)^A (u - v)^B [v^m] (the complementary u-exponent is implied)
inline ExactInt pm_coeff(int A, int B, int m) {
  ExactInt acc = 0;
  for (int k = std::max(0, m - A); k <= std::min(B, m); ++k) {
    ExactInt term = binomial(B, k) * binomial(A, m - k);
    if (k % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

inline void check_rs(int r, int s, const char* who) {
  if (r < 0 || s < 0 || r + s == 0)
    throw std::invalid_argument(std::string(who) + ": need r, s >= 0, r + s >= 1");
}

inline void check_rs_and_type(int r, int s, const TypeVector& t, const char* who) {
  check_rs(r, s, who);
  if (t.p() != 4 || t.n() != 2 * (r + s))
    throw std::invalid_argument(std::string(who) +
                                ": type must have 4 parts summing to 2(r+s)");
}

}  // namespace detail

// Aggregate core: the t-typed coefficient of
// ((x0 + x2)^2 - (x1 + x3)^2)^r * ((x0 - x2)^2 + (x1 - x3)^2)^s,
// zero whenever t0 + t2 is odd.
inline ExactInt rs_core_coeff(int r, int s, const TypeVector& t) {
  detail::check_rs_and_type(r, s, t, "rs_core_coeff");
  if ((t[0] + t[2]) % 2) return 0;
  const int half = (t[0] + t[2]) / 2;
  ExactInt acc = 0;
  for (int a = std::max(0, half - s); a <= std::min(r, half); ++a) {
    const int b = half - a;
    ExactInt term = binomial(r, a) * binomial(s, b) *
                    detail::pm_coeff(2 * a, 2 * b, t[2]) *
                    detail::pm_coeff(2 * (r - a), 2 * (s - b), t[3]);
    if ((r - a) % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

// lambda(v) for any character vector v of the given type:
// mult(n; r,s,r,s) * core(t) / mult(n; t), always an exact division.
inline ExactInt eigenvalue_by_type(int r, int s, const TypeVector& t) {
  detail::check_rs_and_type(r, s, t, "eigenvalue_by_type");
  return exact_div(multinomial(TypeVector{r, s, r, s}) * rs_core_coeff(r, s, t),
                   multinomial(t));
}

struct Z4EigenvalueRecord {
  TypeVector t;
  ExactInt value;
  ExactInt multiplicity;
};

// One record per type, ascending lexicographic.
inline std::vector<Z4EigenvalueRecord> z4_spectrum(int r, int s) {
  detail::check_rs(r, s, "z4_spectrum");
  const int n = 2 * (r + s);
  std::vector<Z4EigenvalueRecord> out;
  for (const TypeVector& t : enumerate_types(4, n))
    out.push_back({t, eigenvalue_by_type(r, s, t), multinomial(t)});
  return out;
}

inline constexpr int kDefaultZ4OracleCap = 14;

// Direct character sum over the whole connection set: even-symbol positions,
// then the 0-placements among them, then the 1-placements among the rest,
// streamed recursively with an incrementally maintained inner product.
// The counts of each residue are tallied; i and -i must cancel.
inline ExactInt eigenvalue_bruteforce(int r, int s, const std::vector<int>& v,
                                      int cap = kDefaultZ4OracleCap) {
  detail::check_rs(r, s, "eigenvalue_bruteforce");
  const int n = 2 * (r + s);
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("eigenvalue_bruteforce: vector length must be 2(r+s)");
  for (int x : v)
    if (x < 0 || x > 3)
      throw std::invalid_argument("eigenvalue_bruteforce: entries must lie in 0..3");
  if (n > cap)
    throw std::invalid_argument("eigenvalue_bruteforce: n exceeds the oracle cap");

  int vsum = 0;
  for (int x : v) vsum += x;

  long long cnt[4] = {0, 0, 0, 0};
  std::vector<int> epos;
  epos.reserve(static_cast<size_t>(2 * r));
  std::vector<int> rest;
  rest.reserve(static_cast<size_t>(2 * s));

  // residue contribution: dot = 3 vsum + 3 S(E) + 2 S(P0) + 2 S(P1)  (mod 4)

  auto ones = [&](auto&& self, int start, int need, int base) -> void {
    if (need == 0) {
      ++cnt[base & 3];
      return;
    }
    for (int i = start; static_cast<int>(rest.size()) - i >= need; ++i)
      self(self, i + 1, need - 1, base + 2 * v[static_cast<size_t>(rest[static_cast<size_t>(i)])]);
  };
  auto zeros = [&](auto&& self, int start, int need, int base) -> void {
    if (need == 0) {
      ones(ones, 0, s, base);
      return;
    }
    for (int i = start; static_cast<int>(epos.size()) - i >= need; ++i)
      self(self, i + 1, need - 1, base + 2 * v[static_cast<size_t>(epos[static_cast<size_t>(i)])]);
  };
  auto evens = [&](auto&& self, int start, int need, int esum) -> void {
    if (need == 0) {
      rest.clear();
      size_t at = 0;
      for (int i = 0; i < n; ++i) {
        if (at < epos.size() && epos[at] == i) {
          ++at;
          continue;
        }
        rest.push_back(i);
      }
      zeros(zeros, 0, r, 3 * (vsum + esum));
      return;
    }
    for (int i = start; n - i >= need; ++i) {
      epos.push_back(i);
      self(self, i + 1, need - 1, esum + v[static_cast<size_t>(i)]);
      epos.pop_back();
    }
  };
  evens(evens, 0, 2 * r, 0);

  if (cnt[1] != cnt[3])
    throw std::logic_error("eigenvalue_bruteforce: imaginary parts fail to cancel");
  return ExactInt(static_cast<long>(cnt[0] - cnt[2]));
}

// Lexicographically smallest type in the symmetry orbit: the swaps t0<->t2
// and t1<->t3 always preserve the spectrum-by-type map; the cyclic shift
// (t0,t1,t2,t3) -> (t3,t0,t1,t2) joins in only for even r.
inline TypeVector canonical_type(int r, const TypeVector& t) {
  if (t.p() != 4)
    throw std::invalid_argument("canonical_type: type must have 4 parts");
  std::vector<std::vector<int>> orbit{t.parts};
  auto push = [&](std::vector<int> c) {
    if (std::find(orbit.begin(), orbit.end(), c) == orbit.end())
      orbit.push_back(std::move(c));
  };
  for (size_t i = 0; i < orbit.size(); ++i) {
    const auto c = orbit[i];
    push({c[2], c[1], c[0], c[3]});
    push({c[0], c[3], c[2], c[1]});
    if (r % 2 == 0) push({c[3], c[0], c[1], c[2]});
  }
  return TypeVector(*std::min_element(orbit.begin(), orbit.end()));
}

struct Z4MinResult {
  ExactInt lambda_min;
  std::vector<TypeVector> argmin_types;  // canonical representatives, ascending
  bool matches_formula;
};

// -mult(n; r, s, r, s) / (n - 1): the eigenvalue the (0, 1, n-2, 1) type
// carries; division is exact for every split.
inline ExactInt smallest_ev_formula(int r, int s) {
  detail::check_rs(r, s, "smallest_ev_formula");
  const int n = 2 * (r + s);
  return -exact_div(multinomial(TypeVector{r, s, r, s}), ExactInt(n - 1));
}

// Exact minimum over all types; only canonical orbit representatives are
// evaluated. threads = 0 means the hardware count; the sharding never
// changes the result.
inline Z4MinResult lambda_min_scan(int r, int s, unsigned threads = 1) {
  detail::check_rs(r, s, "lambda_min_scan");
  const int n = 2 * (r + s);

  std::vector<TypeVector> reps;
  for (const TypeVector& t : enumerate_types(4, n))
    if (canonical_type(r, t) == t) reps.push_back(t);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(reps.size()));
  if (threads == 0) threads = 1;

  struct Shard {
    std::optional<ExactInt> best;
    std::vector<TypeVector> arg;
  };
  std::vector<Shard> shards(threads);
  auto work = [&](unsigned id) {
    Shard& sh = shards[id];
    for (size_t i = id; i < reps.size(); i += threads) {
      ExactInt val = eigenvalue_by_type(r, s, reps[i]);
      if (!sh.best || val < *sh.best) {
        sh.best = val;
        sh.arg.assign(1, reps[i]);
      } else if (val == *sh.best) {
        sh.arg.push_back(reps[i]);
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }

  Z4MinResult out{ExactInt(0), {}, false};
  bool have = false;
  for (const Shard& sh : shards) {
    if (!sh.best) continue;
    if (!have || *sh.best < out.lambda_min) {
      out.lambda_min = *sh.best;
      out.argmin_types = sh.arg;
      have = true;
    } else if (*sh.best == out.lambda_min) {
      out.argmin_types.insert(out.argmin_types.end(), sh.arg.begin(), sh.arg.end());
    }
  }
  std::sort(out.argmin_types.begin(), out.argmin_types.end());
  out.matches_formula = out.lambda_min == smallest_ev_formula(r, s);
  return out;
}

// lambda on the all-odd boundary types:
// lambda(0, t1, 0, t3) = (-1)^r C(2r, r) C(2s, s) K_{2s}(t3) over ambient n.
inline ExactInt boundary_eigenvalue(int r, int s, int t1, int t3) {
  detail::check_rs(r, s, "boundary_eigenvalue");
  const int n = 2 * (r + s);
  if (t1 < 0 || t3 < 0 || t1 + t3 != n)
    throw std::invalid_argument("boundary_eigenvalue: need t1 + t3 = 2(r+s)");
  ExactInt val = binomial(2 * r, r) * binomial(2 * s, s) * krawtchouk_eval(n, 2 * s, t3);
  return r % 2 ? ExactInt(-val) : val;
}

// Minimum over both boundary families: the all-even types fold onto the
// all-odd ones through the shift relation lambda(t0,0,t2,0) =
// (-1)^r lambda(0,t0,0,t2), which flips signs exactly when r is odd.
inline ExactInt boundary_min(int r, int s) {
  detail::check_rs(r, s, "boundary_min");
  const int n = 2 * (r + s);
  std::optional<ExactInt> best;
  auto take = [&](const ExactInt& v) {
    if (!best || v < *best) best = v;
  };
  for (int t1 = 0; t1 <= n; ++t1) {
    ExactInt v = boundary_eigenvalue(r, s, t1, n - t1);
    take(v);
    if (r % 2) take(ExactInt(-v));
  }
  return *best;
}

// |lambda(t)| (n-1) <= mult(n; r,s,r,s) over every interior type
// (t0 + t2 and t1 + t3 both positive); stated for n >= 10.
inline bool interior_bound_check(int r, int s) {
  detail::check_rs(r, s, "interior_bound_check");
  const int n = 2 * (r + s);
  if (n < 10)
    throw std::invalid_argument("interior_bound_check: stated for n >= 10");
  const ExactInt cap = multinomial(TypeVector{r, s, r, s});
  for (const TypeVector& t : enumerate_types(4, n)) {
    if (t[0] + t[2] == 0 || t[1] + t[3] == 0) continue;
    if (abs(eigenvalue_by_type(r, s, t)) * (n - 1) > cap) return false;
  }
  return true;
}

}  // namespace hamspec
