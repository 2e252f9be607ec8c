#pragma once

// Gaussian primes in narrow sectors and the constructions built from them:
// the sector sets P_eps / P'_eps, the Kubilius set S, the moduli Q0 / Q1, the
// searched sets N1 / N2 / N3 of scar candidates, and lattice counts in
// sectors restricted to a residue class of a^2 + b^2.
//
// A split prime p is represented by its canonical pair 0 < b < a with
// a^2 + b^2 = p; its angle is arctan(b/a) in (0, pi/4).  p = 2 never enters
// a sector set.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "scatter/arith.hpp"
#include "scatter/errors.hpp"
#include "scatter/lattice.hpp"

namespace scatter::sieve {

using arith::i64;
using arith::u64;

inline constexpr u64 kMaxSectorX = 1'000'000'000;
inline constexpr u64 kSieveLimit = 200'000'000;

// ---------------------------------------------------------------------------
// primality over a range

/// Odd-only Eratosthenes bitmap up to `limit`; Miller-Rabin above it.
class PrimeTest {
 public:
  explicit PrimeTest(u64 limit) : limit_(std::min(limit, kSieveLimit)) {
    bits_.assign(limit_ / 2 + 1, true);
    if (!bits_.empty()) bits_[0] = false;  // 1
    for (u64 i = 3; i * i <= limit_; i += 2)
      if (bits_[i / 2])
        for (u64 j = i * i; j <= limit_; j += 2 * i) bits_[j / 2] = false;
  }

  bool operator()(u64 n) const {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n <= limit_) return bits_[n / 2];
    return arith::is_prime(n);
  }

 private:
  u64 limit_;
  std::vector<bool> bits_;
};

// ---------------------------------------------------------------------------

struct SectorSpec {
  double epsilon;
  double floor = 2;
  std::optional<double> ceiling;

  void validate() const {
    if (!(epsilon > 0 && epsilon <= std::numbers::pi / 4))
      throw DomainError("SectorSpec: epsilon must lie in (0, pi/4]");
    if (!(floor > 0)) throw DomainError("SectorSpec: floor must be positive");
  }
};

struct SectorPrime {
  u64 p;
  u64 a;
  u64 b;
  double angle;  // arctan(b/a)
  auto operator<=>(const SectorPrime& o) const { return p <=> o.p; }
  bool operator==(const SectorPrime& o) const { return p == o.p; }
};

inline long double canonical_angle(u64 a, u64 b) { return std::atan2((long double)b, (long double)a); }

/// Canonical 0 < b < a with a^2 + b^2 = p for a prime p = 1 mod 4
/// (Hermite-Serret: Euclid on (p, sqrt(-1) mod p)).
inline std::pair<u64, u64> canonical_rep(u64 p) {
  if (p % 4 != 1 || !arith::is_prime(p)) throw DomainError("canonical_rep: p must be a prime = 1 mod 4");
  u64 t = 0;
  for (u64 c = 2;; ++c) {
    t = arith::powmod(c, (p - 1) / 4, p);
    if (arith::mulmod(t, t, p) == p - 1) break;
  }
  u64 r0 = p, r1 = t;
  const u64 s = arith::isqrt(p);
  while (r1 > s) {
    const u64 r2 = r0 % r1;
    r0 = r1;
    r1 = r2;
  }
  const u64 a = r1, b = arith::isqrt(p - r1 * r1);
  return a > b ? std::make_pair(a, b) : std::make_pair(b, a);
}

namespace detail {

// Visits coprime-candidate points 0 < b < a, a^2 + b^2 in [lo, hi] with
// arctan(b/a) <= bound(p) and p prime.  bound(p) >= arctan(b/a) is checked
// exactly in long double; candidates along each row b are scanned from the
// first a that passes.
template <class Bound, class Emit>
void sector_scan(u64 lo, u64 hi, const PrimeTest& prime, Bound&& bound, long double max_angle, Emit&& emit) {
  const long double tmax = std::tan(std::min<long double>(max_angle, std::numbers::pi_v<long double> / 4));
  for (u64 b = 1; 2 * b * b < hi; ++b) {
    const u64 amax = arith::isqrt(hi - b * b);
    // a >= b / tan(max_angle) is necessary for every bound <= max_angle
    u64 a = std::max<u64>(b + 1, static_cast<u64>(std::floor((long double)b / tmax)));
    if (a > b + 1) --a;
    if (a <= b) a = b + 1;
    for (; a <= amax; ++a) {
      const u64 p = a * a + b * b;
      if (p < lo || ((a ^ b) & 1) == 0) continue;
      const long double ang = canonical_angle(a, b);
      if (!(ang <= bound(p))) continue;
      if (!prime(p)) continue;
      emit(SectorPrime{p, a, b, double(ang)});
    }
  }
}

}  // namespace detail

/// Primes p <= x (floor <= p <= ceiling) whose canonical angle lies in (0, eps].
inline std::vector<SectorPrime> sector_primes(u64 x, const SectorSpec& spec, const PrimeTest* prime = nullptr) {
  spec.validate();
  if (x > kMaxSectorX) throw BudgetError("sector_primes: x exceeds 10^9");
  u64 hi = x;
  if (spec.ceiling) hi = std::min<u64>(hi, static_cast<u64>(std::floor(*spec.ceiling)));
  const u64 lo = std::max<u64>(3, static_cast<u64>(std::ceil(spec.floor)));
  std::optional<PrimeTest> own;
  if (!prime) prime = &own.emplace(hi);
  std::vector<SectorPrime> out;
  if (hi < lo) return out;
  const long double eps = spec.epsilon;
  detail::sector_scan(
      lo, hi, *prime, [eps](u64) { return eps; }, eps, [&](const SectorPrime& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

/// The Kubilius set restricted to p <= x: canonical angle <= p^(-1/10).
inline std::vector<SectorPrime> kubilius_primes(u64 x, const PrimeTest* prime = nullptr) {
  if (x > kMaxSectorX) throw BudgetError("kubilius_primes: x exceeds 10^9");
  std::optional<PrimeTest> own;
  if (!prime) prime = &own.emplace(x);
  std::vector<SectorPrime> out;
  detail::sector_scan(
      3, x, *prime, [](u64 p) { return std::pow((long double)p, -0.1L); }, std::numbers::pi_v<long double> / 4,
      [&](const SectorPrime& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// moduli

struct ModuliParams {
  unsigned T = 1;  // 1-based index of the first Kubilius prime in Q0'
  unsigned H = 1;  // primes per block; Q1' uses the next H
  unsigned a0 = 0;
  unsigned a1 = 0;
  std::optional<u64> r0, r1;                 // explicit; otherwise first Kubilius primes in the band
  std::pair<u64, u64> r_band{5, 1000};
  std::pair<u64, u64> g_band{20, 100000};    // search range for angle-matched replacements
  double g_angle_tol = 0.05;
  u64 kubilius_limit = 1'000'000;
  u64 bound = u64(1) << 62;                  // Q0, Q1 <= bound
};

struct Moduli {
  u64 Q0, Q1;
  u64 Q0_prime, Q1_prime;
  u64 r0, r1;  // 1 when the exponent is 0
  u64 g_prime;
  std::vector<u64> kubilius_used;
};

namespace detail {

inline u64 checked_mul(u64 a, u64 b, u64 bound) {
  if (a != 0 && b > bound / a) throw BudgetError("build_moduli: modulus exceeds the configured bound");
  return a * b;
}

inline void check_split(u64 m, const char* what) {
  if (m == 0) throw DomainError(std::string(what) + " must be positive");
  for (const auto& f : arith::factorize(m).factors)
    if (f.prime % 4 != 1) throw DomainError(std::string(what) + " must have all prime factors = 1 mod 4");
}

}  // namespace detail

/// Q0 = Q0' m0 r0^a0 and Q1 = Q1' (m1/(m0,m1)) r1^a1 g'.  Q0', Q1' are
/// products of consecutive Kubilius primes (indices T..T+H-1 and
/// T+H..T+2H-1); g' replaces each p^e || (m0, m1) by p~^e with p~ in the
/// g band whose canonical angle matches that of p.
inline Moduli build_moduli(u64 m0, u64 m1, const ModuliParams& prm) {
  detail::check_split(m0, "m0");
  detail::check_split(m1, "m1");
  if (prm.T < 1) throw DomainError("build_moduli: T is 1-based");
  const PrimeTest prime(std::max(prm.kubilius_limit, prm.g_band.second));
  const auto S = kubilius_primes(prm.kubilius_limit, &prime);
  const std::size_t need = prm.T - 1 + 2 * std::size_t(prm.H);
  if (S.size() < need) throw DomainError("build_moduli: not enough Kubilius primes below the search limit");
  Moduli out{1, 1, 1, 1, 1, 1, 1, {}};
  for (unsigned j = 0; j < prm.H; ++j) {
    out.Q0_prime = detail::checked_mul(out.Q0_prime, S[prm.T - 1 + j].p, prm.bound);
    out.Q1_prime = detail::checked_mul(out.Q1_prime, S[prm.T - 1 + prm.H + j].p, prm.bound);
    out.kubilius_used.push_back(S[prm.T - 1 + j].p);
    out.kubilius_used.push_back(S[prm.T - 1 + prm.H + j].p);
  }
  auto used = [&](u64 p) {
    return std::find(out.kubilius_used.begin(), out.kubilius_used.end(), p) != out.kubilius_used.end() ||
           m0 % p == 0 || m1 % p == 0;
  };
  auto pick_r = [&](std::optional<u64> given, unsigned a) -> u64 {
    if (a == 0) return 1;
    if (given) {
      if (!std::binary_search(S.begin(), S.end(), SectorPrime{*given, 0, 0, 0}))
        throw DomainError("build_moduli: r0/r1 must be Kubilius primes");
      out.kubilius_used.push_back(*given);
      return *given;
    }
    for (const auto& s : S)
      if (s.p >= prm.r_band.first && s.p <= prm.r_band.second && !used(s.p)) {
        out.kubilius_used.push_back(s.p);
        return s.p;
      }
    throw DomainError("build_moduli: no Kubilius prime available in the r band");
  };
  out.r0 = pick_r(prm.r0, prm.a0);
  out.r1 = pick_r(prm.r1, prm.a1);
  const u64 g = std::gcd(m0, m1);
  if (g > 1) {
    for (const auto& f : arith::factorize(g).factors) {
      const auto [a, b] = canonical_rep(f.prime);
      const long double target = canonical_angle(a, b);
      u64 found = 0;
      for (u64 p = prm.g_band.first | 1; p <= prm.g_band.second; p += 2) {
        if (p % 4 != 1 || !prime(p) || used(p) || out.g_prime % p == 0) continue;
        const auto [c, d] = canonical_rep(p);
        if (std::fabs(double(canonical_angle(c, d) - target)) <= prm.g_angle_tol) {
          found = p;
          break;
        }
      }
      if (!found)
        throw DomainError("build_moduli: no angle-matched replacement for " + std::to_string(f.prime) +
                          " in the g band");
      out.kubilius_used.push_back(found);
      for (unsigned e = 0; e < f.exponent; ++e) out.g_prime = detail::checked_mul(out.g_prime, found, prm.bound);
    }
  }
  out.Q0 = detail::checked_mul(out.Q0_prime, m0, prm.bound);
  out.Q1 = detail::checked_mul(out.Q1_prime, m1 / g, prm.bound);
  for (unsigned e = 0; e < prm.a0; ++e) out.Q0 = detail::checked_mul(out.Q0, out.r0, prm.bound);
  for (unsigned e = 0; e < prm.a1; ++e) out.Q1 = detail::checked_mul(out.Q1, out.r1, prm.bound);
  out.Q1 = detail::checked_mul(out.Q1, out.g_prime, prm.bound);
  if (std::gcd(out.Q0, out.Q1) != 1) throw DomainError("build_moduli: Q0 and Q1 are not coprime");
  return out;
}

// ---------------------------------------------------------------------------
// scar candidate search

struct SearchSpec {
  SectorSpec sector;                  // P_eps (ceiling ignored)
  std::optional<double> p2_ceiling;   // P'_eps ceiling; default x^(1/3)
  std::optional<double> y;            // rough-part threshold; default x^(1/20)

  double ceiling_for(u64 x) const { return p2_ceiling.value_or(std::cbrt(double(x))); }
  double y_for(u64 x) const { return y.value_or(std::pow(double(x), 0.05)); }
};

struct ScarCandidate {
  u64 Q0, Q1;
  u64 n;
  u64 p1, p2;  // n = p1 p2, p1 in P_eps, p2 in P'_eps
  u64 m;       // Q0 n
  u64 m_plus_gap;  // successor(m) - m
  u64 ell;         // (m + 4) / Q1
  u64 r_m, r_mplus;  // r(m), r(m + 4)
  int level;         // deepest level satisfied (1..3)

  bool accepted() const { return m_plus_gap == 4; }
};

namespace detail {

inline bool has_factor_below(u64 v, double y) {
  if (v == 1) return false;
  for (u64 p = 2; double(p) < y; ++p) {
    if (p * p > v) return double(v) < y;  // v is prime here
    if (v % p == 0) return true;
  }
  return false;
}

}  // namespace detail

/// Candidates n <= x at the given level:
///   1: n = p1 p2 (p1 in P_eps, p2 in P'_eps), b(Q0 n + 4) = 1, Q1 | Q0 n + 4;
///   2: additionally (Q0 n + 4)/Q1 has no prime factor < y;
///   3: additionally (Q0 n + 4)/Q1 is a prime with angle <= eps.
inline std::vector<ScarCandidate> search_scar_candidates(u64 x, u64 Q0, u64 Q1, const SearchSpec& spec, int level) {
  spec.sector.validate();
  if (level < 1 || level > 3) throw DomainError("search_scar_candidates: level must be 1, 2 or 3");
  if (Q0 == 0 || Q1 == 0) throw DomainError("search_scar_candidates: moduli must be positive");
  if (x > kMaxSectorX) throw BudgetError("search_scar_candidates: x exceeds 10^9");
  if ((~u64(0) - 4) / Q0 < x) throw DomainError("search_scar_candidates: Q0 x + 4 overflows 64 bits");
  const double y = spec.y_for(x);
  const double ceil2 = spec.ceiling_for(x);
  const u64 pmin = std::max<u64>(3, static_cast<u64>(std::ceil(spec.sector.floor)));
  SectorSpec s2 = spec.sector;
  s2.ceiling = ceil2;
  const PrimeTest prime(x / pmin + 1);
  const auto P2 = sector_primes(x, s2, &prime);
  std::vector<ScarCandidate> out;
  if (P2.empty()) return out;
  SectorSpec s1 = spec.sector;
  s1.ceiling.reset();
  const auto P1 = sector_primes(x / P2.front().p, s1, &prime);
  // n -> first (p1, p2) decomposition, p2 smallest
  std::vector<std::pair<u64, std::pair<u64, u64>>> ns;
  for (const auto& q2 : P2)
    for (const auto& q1 : P1) {
      if (q1.p > x / q2.p) break;
      ns.push_back({q1.p * q2.p, {q1.p, q2.p}});
    }
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end(), [](const auto& u, const auto& v) { return u.first == v.first; }),
           ns.end());
  for (const auto& [n, pq] : ns) {
    const u64 m = Q0 * n;
    const u64 top = m + 4;
    if (top % Q1 || !arith::is_sum_two_squares(top)) continue;
    ScarCandidate c{Q0, Q1, n, pq.first, pq.second, m, 0, top / Q1, 0, 0, 1};
    if (!detail::has_factor_below(c.ell, y)) {
      c.level = 2;
      if (c.ell % 4 == 1 && arith::is_prime(c.ell)) {
        const auto [a, b] = canonical_rep(c.ell);
        if (canonical_angle(a, b) <= spec.sector.epsilon) c.level = 3;
      }
    }
    if (c.level < level) continue;
    c.m_plus_gap = lattice::successor(m) - m;
    c.r_m = arith::rep_count(m);
    c.r_mplus = arith::rep_count(top);
    out.push_back(c);
  }
  return out;
}

struct HypothesisCount {
  u64 count;
  double density_proxy;
};

/// Level-3 solutions with u = (Q0 n + 4)/Q1 > y; density proxy
/// count (log x)^2 / (eps^3 x log log x).
inline HypothesisCount hypothesis_count(u64 x, u64 Q0, u64 Q1, const SearchSpec& spec) {
  const double y = spec.y_for(x);
  u64 count = 0;
  for (const auto& c : search_scar_candidates(x, Q0, Q1, spec, 3))
    if (double(c.ell) > y) ++count;
  const double lx = std::log(double(x));
  const double eps = spec.sector.epsilon;
  const double proxy = double(count) * lx * lx / (eps * eps * eps * double(x) * std::log(lx));
  return {count, proxy};
}

// ---------------------------------------------------------------------------
// sector / progression lattice counts

inline constexpr u64 kMaxProgressionX = 100'000'000;
inline constexpr u64 kMaxProgressionQ = 1000;

struct SectorCount {
  u64 count;
  double main_term_A;  // eps x eta_a(q) / q^2
  double main_term_B;  // (eps/2) x eta_a(q) / q^2, the sector area
};

namespace detail {

inline u64 eta_value(u64 q, i64 a) {
  if (q == 1) return 1;
  return q % 2 ? arith::eta_formula(q, a) : arith::eta_bruteforce(q, a);
}

// Exact membership |arg(X, Y) - theta| < eps/2 for eps < pi, via the two
// bounding rays.
struct Sector {
  long double c1, s1, c2, s2;  // directions theta -+ eps/2
  Sector(double theta, double eps) {
    const long double t1 = (long double)theta - (long double)eps / 2, t2 = (long double)theta + (long double)eps / 2;
    c1 = std::cos(t1);
    s1 = std::sin(t1);
    c2 = std::cos(t2);
    s2 = std::sin(t2);
  }
  bool contains(i64 X, i64 Y) const {
    const long double x = X, y = Y;
    return c1 * y - s1 * x > 0 && x * s2 - y * c2 > 0;
  }
  // Row X: Y-interval (closed, possibly empty) of points in the sector, before
  // intersecting with the disk.  Each ray constraint is linear in Y.
  std::pair<long double, long double> row(i64 X) const {
    long double lo = -INFINITY, hi = INFINITY;
    auto constrain = [&](long double coef, long double rhs) {  // coef * Y > rhs
      if (coef > 0)
        lo = std::max(lo, rhs / coef);
      else if (coef < 0)
        hi = std::min(hi, rhs / coef);
      else if (!(0 > rhs))
        lo = INFINITY;
    };
    constrain(c1, s1 * (long double)X);
    constrain(-c2, -(long double)X * s2);
    return {lo, hi};
  }
};

// Visits (X, Y) with X^2 + Y^2 <= x inside the open sector (eps < pi), or the
// whole closed disk when eps >= 2 pi.  Rows are handed out as [X, ylo, yhi].
template <class Row>
void for_each_sector_row(u64 x, double theta, double eps, Row&& row) {
  const i64 R = static_cast<i64>(arith::isqrt(x));
  if (eps >= 2 * std::numbers::pi) {
    for (i64 X = -R; X <= R; ++X) {
      const i64 s = static_cast<i64>(arith::isqrt(x - u64(X * X)));
      row(X, -s, s);
    }
    return;
  }
  const Sector sec(theta, eps);
  for (i64 X = -R; X <= R; ++X) {
    const i64 s = static_cast<i64>(arith::isqrt(x - u64(X * X)));
    auto [flo, fhi] = sec.row(X);
    if (!(flo <= fhi + 1)) continue;
    i64 lo = flo < -s ? -s : static_cast<i64>(std::floor(flo)) - 1;
    i64 hi = fhi > s ? s : static_cast<i64>(std::ceil(fhi)) + 1;
    lo = std::max(lo, -s);
    hi = std::min(hi, s);
    while (lo <= hi && !sec.contains(X, lo)) ++lo;
    while (hi >= lo && !sec.contains(X, hi)) --hi;
    if (lo <= hi) row(X, lo, hi);
  }
}

}  // namespace detail

/// Lattice points alpha with |alpha|^2 <= x, |arg alpha - theta| < eps/2 and
/// alpha1^2 + alpha2^2 = a (mod q), counted exactly.  eps = 2 pi means the
/// whole disk (origin included).
inline SectorCount sector_progression_count(u64 x, u64 q, i64 a, double theta, double eps) {
  if (q == 0 || q > kMaxProgressionQ || (q > 1 && q % 2 == 0))
    throw DomainError("sector_progression_count: q must be odd and <= 1000");
  if (x > kMaxProgressionX) throw BudgetError("sector_progression_count: x exceeds 10^8");
  if (!(eps > 0 && (eps < std::numbers::pi || eps >= 2 * std::numbers::pi)))
    throw DomainError("sector_progression_count: eps must lie in (0, pi) or equal 2 pi");
  const u64 ar = arith::residue(a, q);
  // per residue t of Y mod q: does Y^2 hit a - X^2
  std::vector<u64> sq(q);
  for (u64 r = 0; r < q; ++r) sq[r] = r * r % q;
  u64 count = 0;
  detail::for_each_sector_row(x, theta, eps, [&](i64 X, i64 lo, i64 hi) {
    const u64 want = (ar + q - arith::residue(X, q) * arith::residue(X, q) % q) % q;
    const u64 len = u64(hi - lo + 1);
    const u64 full = len / q;
    u64 per = 0;
    for (u64 r = 0; r < q; ++r) per += sq[r] == want;
    count += full * per;
    for (i64 Y = lo + i64(full * q); Y <= hi; ++Y) count += sq[arith::residue(Y, q)] == want;
  });
  const double eta = double(detail::eta_value(q, a));
  const double base = double(x) * eta / double(q * q);
  return {count, eps * base, eps / 2 * base};
}

/// Counts for every residue a mod q in one pass (entry a).
inline std::vector<u64> sector_progression_counts_all(u64 x, u64 q, double theta, double eps) {
  if (q == 0 || q > kMaxProgressionQ) throw DomainError("sector_progression_counts_all: q must be in [1, 1000]");
  if (x > kMaxProgressionX) throw BudgetError("sector_progression_counts_all: x exceeds 10^8");
  if (!(eps > 0 && (eps < std::numbers::pi || eps >= 2 * std::numbers::pi)))
    throw DomainError("sector_progression_counts_all: eps must lie in (0, pi) or equal 2 pi");
  std::vector<u64> out(q, 0);
  detail::for_each_sector_row(x, theta, eps, [&](i64 X, i64 lo, i64 hi) {
    const u64 xx = arith::residue(X, q) * arith::residue(X, q) % q;
    for (i64 Y = lo; Y <= hi; ++Y) {
      const u64 y = arith::residue(Y, q);
      ++out[(xx + y * y) % q];
    }
  });
  return out;
}

/// Points of [x0, x0+T) x [y0, y0+T) with alpha1^2 + alpha2^2 = a (mod q).
inline u64 box_congruence_count(u64 q, i64 a, i64 x0, i64 y0, u64 T) {
  if (q == 0 || q > kMaxProgressionQ) throw DomainError("box_congruence_count: q must be in [1, 1000]");
  if (T > 100'000) throw BudgetError("box_congruence_count: T exceeds 10^5");
  // histogram of squares along each side
  auto side = [&](i64 s0) {
    std::vector<u64> h(q, 0);
    const u64 start = arith::residue(s0, q);
    const u64 full = T / q, rest = T % q;
    for (u64 r = 0; r < q; ++r) h[r * r % q] += full;
    for (u64 j = 0; j < rest; ++j) {
      const u64 r = (start + j) % q;
      ++h[r * r % q];
    }
    return h;
  };
  const auto hx = side(x0), hy = side(y0);
  const u64 ar = arith::residue(a, q);
  u64 count = 0;
  for (u64 t = 0; t < q; ++t) count += hx[t] * hy[(ar + q - t) % q];
  return count;
}

/// Deviation scale for box counts: the one-period bound
/// q^(1/2) tau(q)^3 log(q)^2 (a, q)^(1/2), times the number of period strips
/// a side of length T crosses.
inline double box_deviation_scale(u64 q, i64 a, u64 T) {
  const auto st = arith::multiplicative_stats(q);
  const double lg = std::max(1.0, std::log(double(q)));
  const double g = double(std::gcd(q, arith::residue(a, q) == 0 ? q : arith::residue(a, q)));
  const double strips = 2.0 * double(T / q) + 1.0;
  return strips * std::sqrt(double(q)) * std::pow(double(st.tau), 3) * lg * lg * std::sqrt(g);
}

}  // namespace scatter::sieve
