#pragma once

// Momentum distribution of the Green's function g_lambda: the mode xi in Z^2
// carries mass (|xi|^2 - lambda)^(-2), so a pure momentum observable f has
//
//   <Op(f) g, g> = sum_xi f(xi/|xi|) / (|xi|^2 - lambda)^2  /  sum_n r(n) / (n - lambda)^2,
//
// with f(0/0) read as the mean of f.  Near a localizing eigenvalue almost all
// of the mass sits on the two circles adjacent to lambda.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scatter/arith.hpp"
#include "scatter/errors.hpp"
#include "scatter/lattice.hpp"
#include "scatter/measures.hpp"

namespace scatter::momentum {

using arith::i64;
using arith::u64;
using real = long double;

inline constexpr real kPi = 3.141592653589793238462643383279502884L;

/// lambda = base + offset, with the offset kept separately so distances to
/// nearby poles do not lose digits when lambda is large.
struct Energy {
  u64 base = 0;
  real offset = 0;

  static Energy from(double lambda) {
    if (!(lambda >= 0) || !std::isfinite(lambda)) throw DomainError("Energy: lambda must be finite and >= 0");
    const double f = std::floor(lambda);
    return {static_cast<u64>(f), real(lambda) - real(f)};
  }
  static Energy from_gap(u64 n, double delta) { return {n, real(delta)}; }

  real value() const { return real(base) + offset; }
  // k - lambda
  real distance_from(u64 k) const { return real(i64(k) - i64(base)) - offset; }
};

struct TrigTerm {
  int k;       // >= 1
  double a;    // cos coefficient
  double b;    // sin coefficient
};

/// f : S^1 -> R given as an evaluator on angles, with its mean and a bound on
/// |f|.  An optional exact expansion a0 + sum a_k cos k t + b_k sin k t lets
/// circle averages go through measure Fourier coefficients.
struct MomentumObservable {
  std::function<double(double)> evaluator;
  double mean = 0;
  double sup_abs = 0;
  std::string descriptor;
  std::optional<std::pair<double, std::vector<TrigTerm>>> expansion;

  double operator()(double angle) const { return evaluator(angle); }

  static MomentumObservable constant(double c) {
    return {[c](double) { return c; }, c, std::fabs(c), "const:" + std::to_string(c),
            std::make_pair(c, std::vector<TrigTerm>{})};
  }

  static MomentumObservable trig_poly(double a0, std::vector<TrigTerm> terms, std::string descriptor = {}) {
    double sup = std::fabs(a0);
    for (const auto& t : terms) {
      if (t.k < 1) throw DomainError("trig_poly: harmonics must be >= 1");
      sup += std::hypot(t.a, t.b);
    }
    if (descriptor.empty()) descriptor = "trig:" + std::to_string(terms.size());
    auto eval = [a0, terms](double th) {
      double s = a0;
      for (const auto& t : terms) s += t.a * std::cos(t.k * th) + t.b * std::sin(t.k * th);
      return s;
    };
    return {eval, a0, sup, descriptor, std::make_pair(a0, std::move(terms))};
  }

  static MomentumObservable cos_k(int k) {
    return trig_poly(0, {{k, 1, 0}}, "cos" + std::to_string(k));
  }

  /// Arbitrary bounded f; mean and sup are estimated on a 4096-point grid
  /// unless given.
  static MomentumObservable custom(std::function<double(double)> f, std::string descriptor,
                                   std::optional<double> mean = std::nullopt,
                                   std::optional<double> sup_abs = std::nullopt) {
    constexpr int N = 4096;
    long double s = 0;
    double sup = 0;
    for (int j = 0; j < N; ++j) {
      const double v = f(2 * std::numbers::pi * j / N);
      if (!std::isfinite(v)) throw DomainError("MomentumObservable: non-finite value");
      s += v;
      sup = std::max(sup, std::fabs(v));
    }
    return {std::move(f), mean.value_or(double(s / N)), sup_abs.value_or(sup), std::move(descriptor), std::nullopt};
  }
};

/// int f dmu_n; exact through Fourier coefficients when f has an expansion.
inline double circle_average(const MomentumObservable& f, const measures::CircleMeasure& mu) {
  if (f.expansion) {
    double s = f.expansion->first;
    for (const auto& t : f.expansion->second) {
      const auto c = mu.fourier(t.k);
      s += t.a * c.real() + t.b * c.imag();
    }
    return s;
  }
  return mu.integrate(f.evaluator);
}

inline double circle_average(const MomentumObservable& f, u64 n) {
  return circle_average(f, measures::mu_from_integer(n));
}

// ---------------------------------------------------------------------------

struct ExpectationOptions {
  double t_min = 1e3;
  double t_max = 1e6;  // lattice points enumerated ~ 2 pi T
  bool tail_correction = true;
};

struct ExpectationResult {
  double value;
  double normalization;  // sum_n r(n)/(n - lambda)^2 incl. tail estimate
  double cutoff_T;
};

namespace detail {

inline bool representable(u64 k) { return k == 0 || arith::is_sum_two_squares(k); }

// r(n)/(n - lambda)^2 for the nearest representable n at or below lambda and
// the next one above.
inline real two_nearest_mass(const Energy& e) {
  u64 lo = e.base;
  while (lo > 0 && !representable(lo)) --lo;
  const u64 hi = lattice::successor(e.base);
  const real dl = e.distance_from(lo), dh = e.distance_from(hi);
  return real(arith::rep_count(lo)) / (dl * dl) + real(arith::rep_count(hi)) / (dh * dh);
}

inline void check_pole(const Energy& e) {
  if (e.offset == 0 && representable(e.base)) throw DomainError("expectation: lambda is a pole");
  if (!(e.value() > 0)) throw DomainError("expectation: lambda must be positive");
}

// Integration window [lo, hi] for |n - lambda| <= T, and the density-pi mass
// of the excluded shells.
struct Window {
  u64 lo, hi;
  real tail;
};

inline Window window_for(const Energy& e, real T) {
  const real lam = e.value();
  const u64 lo = lam - T <= 0 ? 0 : static_cast<u64>(std::ceil(lam - T));
  const u64 hi = static_cast<u64>(std::floor(lam + T));
  real tail = kPi / (real(hi) + 0.5L - lam);
  if (lo > 0) tail += kPi * (1 / (lam - real(lo) + 0.5L) - 1 / lam);
  return {lo, hi, tail};
}

inline real choose_T(const Energy& e, double sup_abs, double tol, const ExpectationOptions& opt) {
  const real z = two_nearest_mass(e);
  real T = 2 * kPi * (real(sup_abs) + 1) / (real(tol) * z);
  return std::clamp<real>(T, opt.t_min, opt.t_max);
}

}  // namespace detail

/// Momentum expectation of f at energy lambda, truncated to |n - lambda| <= T.
/// T follows 2 pi (sup|f| + 1) / (tol Z) with Z seeded from the two nearest
/// circles, clamped to [t_min, t_max]; the excluded shells are added back at
/// density pi with f replaced by its mean.
inline ExpectationResult expectation(const Energy& e, const MomentumObservable& f, double tol,
                                     const ExpectationOptions& opt = {}) {
  if (!(tol > 0)) throw DomainError("expectation: tol must be positive");
  detail::check_pole(e);
  const real T = detail::choose_T(e, f.sup_abs, tol, opt);
  const auto w = detail::window_for(e, T);
  real num = 0, den = 0;
  bool bad = false;
  lattice::for_each_quadrant_point(w.lo, w.hi, [&](u64 a, u64 b, unsigned mult) {
    const u64 n = a * a + b * b;
    const real d = e.distance_from(n);
    const real inv = 1 / (d * d);
    den += real(mult) * inv;
    if (n == 0) {
      num += real(f.mean) * inv;
      return;
    }
    const double x = double(a), y = double(b);
    // sign images of (a, b): (a, b), (-a, b), (-a, -b), (a, -b), deduplicated on axes
    real s = f(std::atan2(y, x));
    if (a != 0) s += f(std::atan2(y, -x));
    if (b != 0) s += f(std::atan2(-y, x));
    if (a != 0 && b != 0) s += f(std::atan2(-y, -x));
    if (!std::isfinite(double(s))) bad = true;
    num += s * inv;
  });
  if (bad) throw DomainError("expectation: observable returned a non-finite value");
  if (opt.tail_correction) {
    num += real(f.mean) * w.tail;
    den += w.tail;
  }
  return {double(num / den), double(den), double(T)};
}

inline ExpectationResult expectation(double lambda, const MomentumObservable& f, double tol,
                                     const ExpectationOptions& opt = {}) {
  return expectation(Energy::from(lambda), f, tol, opt);
}

struct AtomMass {
  u64 n;
  double mass;
};

struct MassDecomposition {
  double lambda;
  std::vector<AtomMass> atom_masses;  // ascending n
  double remainder;
  double normalization;

  // Masses of the two heaviest atoms combined.
  double top_two() const {
    std::vector<double> m;
    for (const auto& a : atom_masses) m.push_back(a.mass);
    std::sort(m.rbegin(), m.rend());
    double s = 0;
    for (std::size_t i = 0; i < std::min<std::size_t>(2, m.size()); ++i) s += m[i];
    return s;
  }
};

/// Share of the momentum mass on each circle |xi|^2 = n with |n - lambda| <= window.
inline MassDecomposition mass_decomposition(const Energy& e, u64 window, double tol,
                                            const ExpectationOptions& opt = {}) {
  if (!(tol > 0)) throw DomainError("mass_decomposition: tol must be positive");
  detail::check_pole(e);
  const real T = detail::choose_T(e, 0, tol, opt);
  const auto w = detail::window_for(e, T);
  const auto counts = lattice::rep_counts_in_range(w.lo, w.hi);
  real den = opt.tail_correction ? w.tail : 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i]) {
      const real d = e.distance_from(w.lo + i);
      den += real(counts[i]) / (d * d);
    }
  MassDecomposition out{double(e.value()), {}, 1, double(den)};
  const real lam = e.value();
  const u64 lo = lam <= real(window) ? 0 : static_cast<u64>(std::ceil(lam - real(window)));
  const u64 hi = static_cast<u64>(std::floor(lam + real(window)));
  real total = 0;
  for (const auto& t : lattice::rep_terms_in_range(lo, hi)) {
    const real d = e.distance_from(t.m);
    const real m = real(t.r) / (d * d) / den;
    out.atom_masses.push_back({t.m, double(m)});
    total += m;
  }
  out.remainder = double(1 - total);
  return out;
}

inline MassDecomposition mass_decomposition(double lambda, u64 window, double tol,
                                            const ExpectationOptions& opt = {}) {
  return mass_decomposition(Energy::from(lambda), window, tol, opt);
}

/// Weight of mu_m in the two-circle limit: 1 / (1 + r(m)/r(m+)).
inline double c_lambda(u64 r_m, u64 r_mplus) {
  if (r_m == 0 || r_mplus == 0) throw DomainError("c_lambda: counts must be positive");
  return 1.0 / (1.0 + double(r_m) / double(r_mplus));
}

/// c <f, mu_{m0}> + (1 - c) <f, mu_{m1ell}> with c = c_lambda(r(m0), r(m1ell)).
inline double predicted_limit(u64 m0, u64 m1ell, const MomentumObservable& f) {
  const u64 r0 = arith::rep_count(m0), r1 = arith::rep_count(m1ell);
  if (m0 == 0 || m1ell == 0 || r0 == 0 || r1 == 0) throw DomainError("predicted_limit: need r(m0), r(m1ell) > 0");
  const double c = c_lambda(r0, r1);
  return c * circle_average(f, m0) + (1 - c) * circle_average(f, m1ell);
}

}  // namespace scatter::momentum
