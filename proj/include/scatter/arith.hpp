#pragma once

/**
 * @file arith.hpp
 * @brief Exact arithmetic over Z and Z[i].
 *
 * Factorization of 64-bit integers, the representation count
 * r(n) = #{(a,b) : a^2 + b^2 = n}, the sums-of-two-squares indicator,
 * explicit representation lists, Ramanujan sums and the congruence count
 *
 *   eta_a(q) = #{(x, y) mod q : x^2 + y^2 = a (mod q)}
 *
 * in a brute-force and a closed (multiplicative) form.
 *
 * Everything here is a pure function of its arguments.  The only shared
 * state is the table of primes below 10^6, built once on first use
 * (function-local static, so initialization is thread-safe).
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "scatter/errors.hpp"

namespace scatter::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing

  u64 recompose() const {
    u64 v = 1;
    for (const auto& f : factors)
      for (unsigned e = 0; e < f.exponent; ++e) v *= f.prime;
    return v;
  }
};

struct LatticePoint {
  i64 a;
  i64 b;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct GaussRep {
  u64 n = 0;
  std::vector<LatticePoint> reps;  // all signed solutions, lexicographic
};

struct MultiplicativeStats {
  u64 tau;
  u64 phi;
  unsigned omega1;  // number of distinct primes = 1 (mod 4)
  int mu;
  int chi4;
  friend bool operator==(const MultiplicativeStats&, const MultiplicativeStats&) = default;
};

inline constexpr u64 kTrialDivisionBound = 1'000'000;
inline constexpr u64 kEtaBruteforceMaxModulus = 10'000;

// ---------------------------------------------------------------------------
// small helpers

constexpr u64 isqrt(u64 n) {
  if (n < 2) return n;
  // Newton iteration from an upper estimate; exact for all 64-bit inputs.
  u64 x = n;
  u64 y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

constexpr bool is_square(u64 n) {
  const u64 s = isqrt(n);
  return s * s == n;
}

constexpr int chi4(u64 n) {
  if (n % 2 == 0) return 0;
  return n % 4 == 1 ? 1 : -1;
}

constexpr u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

constexpr u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline u64 ipow(u64 base, unsigned exp) {
  u64 r = 1;
  while (exp--) r *= base;
  return r;
}

// Reduces an arbitrary integer into [0, q).
inline u64 residue(i64 a, u64 q) {
  const i64 qq = static_cast<i64>(q);
  i64 r = a % qq;
  return static_cast<u64>(r < 0 ? r + qq : r);
}

inline u64 abs_u64(i64 a) { return a < 0 ? static_cast<u64>(-(a + 1)) + 1 : static_cast<u64>(a); }

// ---------------------------------------------------------------------------
// primality and factorization

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    const std::uint32_t limit = static_cast<std::uint32_t>(kTrialDivisionBound);
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = u64(i) * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

inline bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  a %= n;
  if (a == 0) return false;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; n must be odd and composite.
inline u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace detail

// Deterministic for every 64-bit input.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    if (detail::miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

/// Prime-power decomposition. Trial division below 10^6, Pollard-Brent above.
inline Factorization factorize(u64 n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  Factorization out;
  out.n = n;
  u64 m = n;
  for (std::uint32_t p : detail::small_primes()) {
    if (u64(p) * p > m) break;
    if (m % p) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (m == 1) return out;
  // m has no prime factor below min(sqrt(m), 10^6).
  if (m < kTrialDivisionBound * kTrialDivisionBound || is_prime(m)) {
    out.factors.push_back({m, 1});
    return out;
  }
  std::vector<u64> stack{m}, primes;
  while (!stack.empty()) {
    u64 v = stack.back();
    stack.pop_back();
    if (v == 1) continue;
    if (is_prime(v)) {
      primes.push_back(v);
      continue;
    }
    if (is_square(v)) {
      const u64 s = isqrt(v);
      stack.push_back(s);
      stack.push_back(s);
      continue;
    }
    const u64 d = detail::pollard_brent(v);
    stack.push_back(d);
    stack.push_back(v / d);
  }
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!out.factors.empty() && out.factors.back().prime == p)
      ++out.factors.back().exponent;
    else
      out.factors.push_back({p, 1});
  }
  return out;
}

// ---------------------------------------------------------------------------
// sums of two squares

inline u64 rep_count(const Factorization& f) {
  u64 r = 4;
  for (const auto& [p, e] : f.factors) {
    if (p == 2) continue;
    if (p % 4 == 3) {
      if (e % 2) return 0;
    } else {
      r *= (e + 1);
    }
  }
  return r;
}

/// r(n) through r(n) = 4 * sum_{d | n} chi4(d); r(0) = 1.
inline u64 rep_count(u64 n) {
  if (n == 0) return 1;
  return rep_count(factorize(n));
}

inline bool is_sum_two_squares(u64 n) {
  if (n == 0) return true;
  // Strip small factors cheaply before falling back to a full factorization.
  while (n % 2 == 0) n /= 2;
  for (std::uint32_t p : detail::small_primes()) {
    if (u64(p) * p > n) break;
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (p % 4 == 3 && e % 2) return false;
  }
  if (n == 1) return true;
  if (n < kTrialDivisionBound * kTrialDivisionBound) return n % 4 == 1;
  return rep_count(factorize(n)) > 0;
}

/// All (a, b) with a^2 + b^2 = n, by a direct loop over 0 <= a <= sqrt(n).
inline GaussRep enumerate_reps(u64 n) {
  GaussRep g;
  g.n = n;
  if (n == 0) {
    g.reps.push_back({0, 0});
    return g;
  }
  const u64 s = isqrt(n);
  for (u64 a = 0; a <= s; ++a) {
    const u64 rest = n - a * a;
    const u64 b = isqrt(rest);
    if (b * b != rest) continue;
    const i64 A = static_cast<i64>(a), B = static_cast<i64>(b);
    for (i64 sa : {-1, 1}) {
      if (A == 0 && sa < 0) continue;
      for (i64 sb : {-1, 1}) {
        if (B == 0 && sb < 0) continue;
        g.reps.push_back({sa * A, sb * B});
      }
    }
  }
  std::sort(g.reps.begin(), g.reps.end());
  return g;
}

// ---------------------------------------------------------------------------
// multiplicative functions

inline MultiplicativeStats multiplicative_stats(const Factorization& f) {
  MultiplicativeStats s{1, 1, 0, 1, chi4(f.n)};
  for (const auto& [p, e] : f.factors) {
    s.tau *= (e + 1);
    s.phi *= ipow(p, e - 1) * (p - 1);
    if (p % 4 == 1) ++s.omega1;
    s.mu = (e > 1) ? 0 : -s.mu;
  }
  return s;
}

inline MultiplicativeStats multiplicative_stats(u64 n) {
  if (n == 0) throw DomainError("multiplicative_stats: n must be positive");
  return multiplicative_stats(factorize(n));
}

inline u64 euler_phi(u64 n) { return multiplicative_stats(n).phi; }

inline int moebius(u64 n) { return multiplicative_stats(n).mu; }

/// c_q(a) = phi(q) mu(q/g) / phi(q/g), g = (q, a).
inline i64 ramanujan_sum(u64 q, i64 a) {
  if (q == 0) throw DomainError("ramanujan_sum: q must be positive");
  const u64 g = std::gcd(q, abs_u64(a));  // gcd(q, 0) = q
  const u64 quotient = q / g;
  const auto sq = multiplicative_stats(quotient);
  if (sq.mu == 0) return 0;
  const i64 ratio = static_cast<i64>(euler_phi(q) / sq.phi);
  return sq.mu * ratio;
}

// ---------------------------------------------------------------------------
// eta_a(q)

/// Counts for every residue a mod q at once; entry a is eta_a(q).
inline std::vector<u64> eta_bruteforce_table(u64 q) {
  if (q == 0) throw DomainError("eta: q must be positive");
  if (q > kEtaBruteforceMaxModulus)
    throw BudgetError("eta_bruteforce: q=" + std::to_string(q) + " exceeds quadratic budget");
  std::vector<u64> counts(q, 0);
  for (u64 x = 0; x < q; ++x) {
    const u64 xx = x * x % q;
    for (u64 y = 0; y < q; ++y) ++counts[(xx + y * y) % q];
  }
  return counts;
}

/// Exact double loop over residue pairs.
inline u64 eta_bruteforce(u64 q, i64 a) {
  if (q == 0) throw DomainError("eta: q must be positive");
  if (q > kEtaBruteforceMaxModulus)
    throw BudgetError("eta_bruteforce: q=" + std::to_string(q) + " exceeds quadratic budget");
  const u64 target = residue(a, q);
  u64 count = 0;
  for (u64 x = 0; x < q; ++x) {
    const u64 xx = x * x % q;
    for (u64 y = 0; y < q; ++y) count += ((xx + y * y) % q == target);
  }
  return count;
}

/// Multiplicative closed form, odd q only:
///   eta_a(p^l) = sum_{0<=j<=l} chi4(p)^j p^(l-j) c_{p^j}(a).
inline u64 eta_formula(u64 q, i64 a) {
  if (q == 0) throw DomainError("eta: q must be positive");
  if (q % 2 == 0) throw DomainError("eta_formula: q must be odd (use eta_bruteforce)");
  u64 result = 1;
  for (const auto& [p, l] : factorize(q).factors) {
    const int chi = chi4(p);
    i64 local = 0;
    i64 sign = 1;
    for (unsigned j = 0; j <= l; ++j) {
      local += sign * static_cast<i64>(ipow(p, l - j)) * ramanujan_sum(ipow(p, j), a);
      sign *= chi;
    }
    result *= static_cast<u64>(local);
  }
  return result;
}

}  // namespace scatter::arith
