#pragma once

/**
 * @file spectral.hpp
 * @brief Spectral equation of the point scatterer on the square torus.
 *
 * New eigenvalues interlace with the integers that are sums of two squares:
 * one root of the spectral equation lies in every gap (n, n+) between
 * consecutive representable integers (plus the gap (0, 1) above the
 * constant mode).  Two couplings are supported:
 *
 *   weak    sum_m r(m) (1/(m - l) - m/(m^2 + 1)) = tan(phi/2) sum_{m>=1} r(m)/(m^2 + 1)
 *   strong  sum_{|m - l| <= W} r(m) (1/(m - l) - m/(m^2 + 1)) = 1/alpha,  W = l^(1/2)
 *
 * Inside a gap the unknown is the offset delta = lambda - n, so every pole
 * distance (k - n) - delta has an exact integer part.  Evaluation is done in
 * long double.
 *
 * Weak coupling sums every representable m up to a cutoff M (default
 * max(10^6, 100 lambda)) and closes the series with the density-pi integral
 * pi * (log sqrt(M^2 + 1) - log(M - lambda)).  Terms far from the gap are
 * folded into a Taylor expansion around the gap midpoint once per gap, so a
 * root solve costs one pass over the terms.
 *
 * The strong window is frozen at the gap midpoint during root finding, so the
 * objective is continuous on the bracket.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <variant>
#include <vector>

#include "scatter/arith.hpp"
#include "scatter/errors.hpp"
#include "scatter/lattice.hpp"

namespace scatter::spectral {

using arith::i64;
using arith::u64;
using lattice::RepTable;
using lattice::RepTerm;
using real = long double;

inline constexpr real kPi = 3.141592653589793238462643383279502884L;

// sum_{m >= 1} r(m) / (m^2 + 1), verified in the test suite by two independent
// tail treatments.
inline constexpr real kWeakRhsGolden = 3.796825751057404L;

// ---------------------------------------------------------------------------
// coupling and policy

struct Weak {
  double phi;
};
struct Strong {
  double alpha;
};

class CouplingMode {
 public:
  static CouplingMode weak(double phi) {
    if (!(phi > -M_PI && phi < M_PI)) throw DomainError("weak coupling: phi must lie in (-pi, pi)");
    return CouplingMode(Weak{phi});
  }
  static CouplingMode strong(double alpha) {
    if (alpha == 0.0 || !std::isfinite(alpha)) throw DomainError("strong coupling: alpha must be nonzero");
    return CouplingMode(Strong{alpha});
  }

  bool is_weak() const { return std::holds_alternative<Weak>(v_); }
  bool is_strong() const { return !is_weak(); }
  double phi() const { return std::get<Weak>(v_).phi; }
  double alpha() const { return std::get<Strong>(v_).alpha; }

  std::string describe() const {
    char buf[64];
    if (is_weak())
      std::snprintf(buf, sizeof buf, "weak:%.17g", phi());
    else
      std::snprintf(buf, sizeof buf, "strong:%.17g", alpha());
    return buf;
  }

 private:
  explicit CouplingMode(std::variant<Weak, Strong> v) : v_(v) {}
  std::variant<Weak, Strong> v_;
};

enum class TailMode { None, IntegralDensityPi };

struct SpectralSumPolicy {
  u64 cutoff = 0;                     // 0: max(10^6, 100 lambda)
  TailMode tail = TailMode::IntegralDensityPi;
  std::optional<double> window;       // strong half-width; default sqrt(lambda)
  bool include_origin = true;         // the xi = 0 mode, r(0) = 1

  u64 cutoff_for(double lambda) const {
    if (cutoff) return cutoff;
    return std::max<u64>(1'000'000, static_cast<u64>(std::ceil(100.0 * std::max(lambda, 1.0))));
  }
};

struct NewEigenvalue {
  u64 n;       // left gap endpoint (0 for the lowest gap)
  u64 n_plus;  // next representable integer
  double lambda;
  double delta;  // authoritative: lambda - n, solved directly
  double residual;
  CouplingMode mode;
};

// ---------------------------------------------------------------------------
// weak right-hand side constant

struct SeriesEstimate {
  real value;
  real error_bound;
  u64 cutoff;
};

// Deviation bound for lattice counts in a disk of radius sqrt(t):
// |N(t) - pi t| <= sqrt(2) pi sqrt(t) + pi/2 (unit squares around each point
// sit between the disks of radius sqrt(t) -+ 1/sqrt(2)).
inline real lattice_deviation_bound(real t) { return std::sqrt(2.0L) * kPi * std::sqrt(t) + kPi / 2; }

namespace detail {

// Sum over (a, b) != 0 with a^2 + b^2 <= M of 1/((a^2+b^2)^2 + 1), plus the
// count N(M) of lattice points in the closed disk.
inline void weak_constant_partial(u64 cutoff, real& sum, u64& disk_count) {
  real s = 0, c = 0;  // Neumaier
  u64 count = 0;
  lattice::for_each_quadrant_point(0, cutoff, [&](u64 a, u64 b, unsigned mult) {
    const u64 m = a * a + b * b;
    count += mult;
    if (m == 0) return;
    const real term = real(mult) / (real(m) * real(m) + 1);
    const real t = s + term;
    c += (std::fabs(s) >= std::fabs(term)) ? (s - t) + term : (term - t) + s;
    s = t;
  });
  sum = s + c;
  disk_count = count;
}

}  // namespace detail

/// Partial sum to M closed by pi * int_M^inf dt/(t^2+1) and the boundary
/// correction -E(M)/(M^2+1), with E(M) the known lattice excess at M.
/// The bound integrates |E| |h'| against the disk deviation bound.
inline SeriesEstimate weak_rhs_series(u64 cutoff) {
  real partial;
  u64 disk;
  detail::weak_constant_partial(cutoff, partial, disk);
  const real M = real(cutoff);
  const real excess = real(disk - 1) - kPi * M;  // A(M) - pi M, A counts m >= 1
  const real tail = kPi * (kPi / 2 - std::atan(M)) - excess / (M * M + 1);
  const real bound = 5.9240L * std::pow(M, -1.5L) + 2.5709L / (M * M);
  return {partial + tail, bound, cutoff};
}

inline u64 weak_rhs_cutoff_for(double precision) {
  // 5.924 M^(-3/2) + 2.571 M^(-2) <= precision / 2 (the rest is rounding slack)
  u64 M = static_cast<u64>(std::ceil(std::pow(2 * 5.9240 / precision, 2.0 / 3.0)));
  M = std::max<u64>(M, 1000);
  while (5.9240 * std::pow(double(M), -1.5) + 2.5709 / (double(M) * M) > precision / 2) M += M / 16;
  return M;
}

/// sum_{m >= 1} r(m)/(m^2 + 1) to absolute accuracy `precision`.
inline real weak_rhs_constant(double precision) {
  if (!(precision >= 1e-12)) throw DomainError("weak_rhs_constant: precision must be >= 1e-12");
  const u64 M = weak_rhs_cutoff_for(precision);
  if (M > 4'000'000'000ull) throw BudgetError("weak_rhs_constant: cutoff too large");
  return weak_rhs_series(M).value;
}

inline real rhs(const CouplingMode& mode) {
  if (mode.is_weak()) return std::tan(real(mode.phi()) / 2) * kWeakRhsGolden;
  return 1.0L / real(mode.alpha());
}

// ---------------------------------------------------------------------------
// gap objective

namespace detail {

inline std::vector<RepTerm> window_terms(const RepTable* table, u64 lo, u64 hi) {
  if (table && hi <= table->limit()) {
    auto span = table->terms(lo, hi);
    return {span.begin(), span.end()};
  }
  return lattice::rep_terms_in_range(lo, hi);
}

// sum_{first <= m <= cutoff} r(m) m / (m^2 + 1); depends only on the table
// contents (a function of its limit), so it is cached per (limit, first, cutoff).
inline real smooth_constant(const RepTable& table, u64 first, u64 cutoff) {
  static std::mutex mu;
  static std::map<std::tuple<u64, u64, u64>, real> cache;
  const auto key = std::make_tuple(table.limit(), first, cutoff);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  real s = 0;
  for (const auto& t : table.terms(first, cutoff)) s += real(t.r) * real(t.m) / (real(t.m) * real(t.m) + 1);
  std::lock_guard lock(mu);
  cache.emplace(key, s);
  return s;
}

inline real weak_tail(real cutoff, real lambda) {
  return kPi * (0.5L * std::log(cutoff * cutoff + 1) - std::log(cutoff - lambda));
}

}  // namespace detail

/// Spectral sum minus right-hand side, as a function of delta = lambda - n on
/// one gap (n, n_plus).  Strictly increasing; -inf at delta -> 0+, +inf at
/// delta -> gap-.
class GapObjective {
 public:
  static constexpr int kTaylorOrder = 10;

  GapObjective(const RepTable* table, u64 n, u64 n_plus, const CouplingMode& mode,
               const SpectralSumPolicy& policy)
      : n_(n), gap_(n_plus - n), rhs_(rhs(mode)) {
    if (n_plus <= n) throw DomainError("GapObjective: n_plus must exceed n");
    const u64 first = policy.include_origin ? 0 : 1;
    const real half = real(gap_) / 2;
    if (mode.is_strong()) {
      const real mid = real(n) + half;
      const real w = std::max<real>(policy.window ? real(*policy.window) : std::sqrt(mid), half);
      w_ = w;
      const real lo_r = std::ceil(mid - w);
      const u64 lo = std::max<u64>(first, lo_r < 0 ? 0 : static_cast<u64>(lo_r));
      const u64 hi = static_cast<u64>(std::floor(mid + w));
      for (const auto& t : detail::window_terms(table, lo, hi)) add_near(t);
      return;
    }
    const u64 cutoff = policy.cutoff_for(double(n_plus));
    if (cutoff <= n_plus) throw DomainError("GapObjective: cutoff must exceed the gap");
    if (!table || table->limit() < cutoff)
      throw BudgetError("weak coupling needs r(m) up to the cutoff " + std::to_string(cutoff));
    cutoff_ = real(cutoff);
    tail_ = policy.tail == TailMode::IntegralDensityPi;
    const real reach = std::max<real>(64, 32 * real(gap_));
    std::array<double, kTaylorOrder + 1> mom{};
    const double center = double(n) + double(half);
    for (const auto& t : table->terms(first, cutoff)) {
      const real dist = real(t.m) - (real(n) + half);
      if (std::fabs(dist) <= reach) {
        near_.push_back({static_cast<i64>(t.m) - static_cast<i64>(n), real(t.r)});
        continue;
      }
      const double inv = 1.0 / (double(t.m) - center);
      double p = t.r * inv;
      for (int j = 0; j <= kTaylorOrder; ++j) {
        mom[j] += p;
        p *= inv;
      }
    }
    for (int j = 0; j <= kTaylorOrder; ++j) moments_[j] = mom[j];
    constant_ = detail::smooth_constant(*table, first, cutoff);
  }

  u64 n() const { return n_; }
  u64 gap() const { return gap_; }
  real rhs_value() const { return rhs_; }
  real window() const { return w_; }

  // Spectral sum at lambda = n + delta.
  real sum(real delta) const {
    real s = 0;
    for (const auto& [offset, r] : near_) s += r / (real(offset) - delta);
    const real u = delta - real(gap_) / 2;
    real far = 0;
    for (int j = kTaylorOrder; j >= 0; --j) far = far * u + moments_[j];
    s += far - constant_;
    if (tail_) s += detail::weak_tail(cutoff_, real(n_) + delta);
    return s;
  }

  real operator()(real delta) const { return sum(delta) - rhs_; }

 private:
  void add_near(const RepTerm& t) {
    near_.push_back({static_cast<i64>(t.m) - static_cast<i64>(n_), real(t.r)});
    constant_ += real(t.r) * real(t.m) / (real(t.m) * real(t.m) + 1);
  }

  u64 n_;
  u64 gap_;
  real rhs_;
  std::vector<std::pair<i64, real>> near_;
  std::array<real, kTaylorOrder + 1> moments_{};
  real constant_ = 0;
  bool tail_ = false;
  real cutoff_ = 0;
  real w_ = 0;
};

// ---------------------------------------------------------------------------
// root finding

struct Bracket {
  double lo;  // in delta units, 0 < lo < hi < gap
  double hi;
};

inline Bracket default_bracket(u64 gap) {
  const double eps0 = std::ldexp(double(gap), -30);
  return {eps0, double(gap) - eps0};
}

namespace detail {

// Bisection seeding followed by Illinois-modified regula falsi.
inline real find_root(const GapObjective& f, real a, real b, real target) {
  real fa = f(a), fb = f(b);
  if (!(fa < 0 && fb > 0))
    throw SolverFailure("solve_gap: no sign change on bracket for gap starting at " + std::to_string(f.n()));
  for (int i = 0; i < 8; ++i) {
    const real m = (a + b) / 2;
    const real fm = f(m);
    if (std::fabs(fm) <= target) return m;
    (fm < 0 ? a : b) = m;
    (fm < 0 ? fa : fb) = fm;
  }
  int side = 0;
  real width = b - a;
  for (int it = 0; it < 600; ++it) {
    real x = b - fb * (b - a) / (fb - fa);
    if (!(x > a && x < b)) x = (a + b) / 2;
    if (it % 4 == 3) {
      if (b - a > width / 4) x = (a + b) / 2;
      width = b - a;
    }
    const real fx = f(x);
    if (std::fabs(fx) <= target) return x;
    if (fx < 0) {
      a = x;
      fa = fx;
      if (side == -1) fb /= 2;
      side = -1;
    } else {
      b = x;
      fb = fx;
      if (side == 1) fa /= 2;
      side = 1;
    }
    if (b - a <= 4 * std::numeric_limits<real>::epsilon() * std::max(std::fabs(a), std::fabs(b))) break;
  }
  return std::fabs(f(a)) < std::fabs(f(b)) ? a : b;
}

}  // namespace detail

/// Unique root of the spectral equation on (n, n_plus), with the objective
/// already built.
inline NewEigenvalue solve_gap(const GapObjective& f, const CouplingMode& mode, double tol,
                               std::optional<Bracket> bracket = std::nullopt) {
  const u64 n = f.n();
  // Tolerances below 1e-13 n are accepted: the residual is in the offset
  // parametrization, which keeps full precision near both poles.  Every root
  // is still certified against tol below.
  if (!(tol > 0 && std::isfinite(tol))) throw DomainError("solve_gap: tol must be positive");
  const Bracket br = bracket.value_or(default_bracket(f.gap()));
  if (!(br.lo > 0 && br.lo < br.hi && br.hi < double(f.gap())))
    throw DomainError("solve_gap: bracket must lie strictly inside the gap");
  const real root = detail::find_root(f, br.lo, br.hi, real(tol) / 8);
  // Round to double, keeping whichever neighbour has the smallest residual.
  double best = static_cast<double>(root);
  real best_res = f(best);
  double probe = best;
  for (int dir : {-1, 1}) {
    probe = best;
    for (int k = 0; k < 2; ++k) {
      probe = std::nextafter(probe, dir < 0 ? 0.0 : double(f.gap()));
      const real res = f(probe);
      if (std::fabs(res) < std::fabs(best_res)) {
        best_res = res;
        best = probe;
      }
    }
  }
  if (!(std::fabs(best_res) <= tol))
    throw SolverFailure("solve_gap: residual " + std::to_string(double(best_res)) + " above tol for gap starting at " +
                        std::to_string(n));
  return {n, n + f.gap(), static_cast<double>(real(n) + best), best, static_cast<double>(best_res), mode};
}

/// Builds the gap (n, successor(n)) and solves it.  n must be representable
/// or 0 (the lowest gap).
inline NewEigenvalue solve_gap(const RepTable* table, u64 n, const CouplingMode& mode,
                               const SpectralSumPolicy& policy, double tol,
                               std::optional<Bracket> bracket = std::nullopt) {
  if (n != 0 && !(table && n <= table->limit() ? table->representable(n) : arith::is_sum_two_squares(n)))
    throw DomainError("solve_gap: n = " + std::to_string(n) + " is not a sum of two squares");
  const u64 n_plus = lattice::successor(n, table);
  const GapObjective f(table, n, n_plus, mode, policy);
  return solve_gap(f, mode, tol, bracket);
}

inline constexpr u64 kSpectrumMaxRange = 10'000'000;

/// Left endpoints of every gap up to range_end: 0 and each representable n.
inline std::vector<u64> gap_starts(const RepTable& table, u64 range_end) {
  std::vector<u64> starts{0};
  for (const auto& t : table.terms(1, range_end)) starts.push_back(t.m);
  return starts;
}

struct GapResult {
  u64 n;
  std::optional<NewEigenvalue> eigenvalue;
  std::string error;
};

/// Solves every gap; failures are recorded per gap.  Results are in gap order
/// regardless of the worker count.
inline std::vector<GapResult> spectrum_tolerant(const RepTable& table, u64 range_end, const CouplingMode& mode,
                                                const SpectralSumPolicy& policy, double tol,
                                                unsigned workers = 1) {
  if (range_end > kSpectrumMaxRange) throw BudgetError("spectrum: range_end exceeds 10^7");
  if (range_end + 1 > table.limit()) throw BudgetError("spectrum: table does not cover range_end");
  const auto starts = gap_starts(table, range_end);
  std::vector<GapResult> out(starts.size());
  auto run = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < starts.size(); i += stride) {
      out[i].n = starts[i];
      try {
        out[i].eigenvalue = solve_gap(&table, starts[i], mode, policy, tol);
      } catch (const std::exception& e) {
        out[i].error = e.what();
      }
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
    for (auto& t : pool) t.join();
  }
  return out;
}

inline std::vector<NewEigenvalue> spectrum(const RepTable& table, u64 range_end, const CouplingMode& mode,
                                           const SpectralSumPolicy& policy, double tol, unsigned workers = 1) {
  std::vector<NewEigenvalue> out;
  for (auto& g : spectrum_tolerant(table, range_end, mode, policy, tol, workers)) {
    if (!g.eigenvalue) throw SolverFailure("gap " + std::to_string(g.n) + ": " + g.error);
    out.push_back(*g.eigenvalue);
  }
  return out;
}

// ---------------------------------------------------------------------------
// direct evaluation at a given lambda

inline real term(u64 m, std::uint32_t r, real lambda) {
  const real mm = real(m);
  return real(r) * (1 / (mm - lambda) - mm / (mm * mm + 1));
}

/// Spectral sum at an arbitrary non-pole lambda; strong mode uses the window
/// |m - lambda| <= W around lambda itself.
inline real spectral_sum(const RepTable& table, double lambda, const CouplingMode& mode,
                         const SpectralSumPolicy& policy) {
  if (!(lambda > 0)) throw DomainError("spectral_sum: lambda must be positive");
  if (lambda == std::floor(lambda)) {
    const u64 k = static_cast<u64>(lambda);
    if (k <= table.limit() ? table.representable(k) : arith::is_sum_two_squares(k))
      throw DomainError("spectral_sum: lambda is a pole");
  }
  const u64 first = policy.include_origin ? 0 : 1;
  real s = 0;
  if (mode.is_strong()) {
    const real w = policy.window ? real(*policy.window) : std::sqrt(real(lambda));
    const real lo_r = std::ceil(real(lambda) - w);
    const u64 lo = std::max<u64>(first, lo_r < 0 ? 0 : static_cast<u64>(lo_r));
    const u64 hi = static_cast<u64>(std::floor(real(lambda) + w));
    for (const auto& t : detail::window_terms(&table, lo, hi)) s += term(t.m, t.r, lambda);
    return s;
  }
  const u64 cutoff = policy.cutoff_for(lambda);
  if (real(cutoff) <= real(lambda)) throw DomainError("spectral_sum: cutoff must exceed lambda");
  if (cutoff > table.limit()) throw BudgetError("spectral_sum: table does not cover the cutoff");
  for (const auto& t : table.terms(first, cutoff)) s += term(t.m, t.r, lambda);
  if (policy.tail == TailMode::IntegralDensityPi) s += detail::weak_tail(real(cutoff), real(lambda));
  return s;
}

// ---------------------------------------------------------------------------
// truncation and tail diagnostics

/// Signed sum of the weak-mode terms dropped by the short window
/// |m - n| <= (n/x)(log x)^B, i.e. full minus short.  The closing tail belongs
/// to the dropped part unless the window reaches the cutoff.
inline real truncation_complement(const RepTable& table, u64 n, double lambda, double B, double x,
                                  const SpectralSumPolicy& policy = {}) {
  if (!(x > 1) || double(n) > x) throw DomainError("truncation_defect: need n <= x");
  const real w = real(n) / real(x) * std::pow(std::log(real(x)), real(B));
  const u64 cutoff = policy.cutoff_for(lambda);
  if (cutoff > table.limit()) throw BudgetError("truncation_defect: table does not cover the cutoff");
  const u64 first = policy.include_origin ? 0 : 1;
  real s = 0;
  for (const auto& t : table.terms(first, cutoff))
    if (std::fabs(real(t.m) - real(n)) > w) s += term(t.m, t.r, lambda);
  if (policy.tail == TailMode::IntegralDensityPi && real(n) + w < real(cutoff))
    s += detail::weak_tail(real(cutoff), real(lambda));
  return s;
}

/// |S_full(lambda) - S_short(lambda)|.
inline double truncation_defect(const RepTable& table, u64 n, double lambda, double B, double x,
                                const SpectralSumPolicy& policy = {}) {
  return static_cast<double>(std::fabs(truncation_complement(table, n, lambda, B, x, policy)));
}

struct TailIdentity {
  double lhs;
  double rhs;
  double diff;
};

/// Far part of the spectral sum against -pi log t.  m runs from 1, up to the
/// cutoff max(10^6, 4 (u + sqrt v)) unless policy.cutoff is set.
inline TailIdentity tail_identity_check(const RepTable& table, double u, double v, double t,
                                        const SpectralSumPolicy& policy = {}) {
  if (!(v > 1 && std::pow(v, 0.9) <= u && u <= 2 * v)) throw DomainError("tail_identity: need v^(9/10) <= u <= 2v");
  if (!(std::fabs(u - t) <= std::cbrt(v))) throw DomainError("tail_identity: need |u - t| <= v^(1/3)");
  if (!(t > 1)) throw DomainError("tail_identity: need t > 1");
  if (t == std::floor(t) && arith::is_sum_two_squares(static_cast<u64>(t)))
    throw DomainError("tail_identity: t is a representable integer");
  const real sv = std::sqrt(real(v));
  const u64 cutoff =
      policy.cutoff ? policy.cutoff : std::max<u64>(1'000'000, static_cast<u64>(std::ceil(4 * (u + double(sv)))));
  if (cutoff > table.limit()) throw BudgetError("tail_identity: table does not cover the cutoff");
  real s = 0;
  for (const auto& tm : table.terms(1, cutoff))
    if (std::fabs(real(tm.m) - real(u)) > sv) s += term(tm.m, tm.r, t);
  if (policy.tail == TailMode::IntegralDensityPi) s += detail::weak_tail(real(cutoff), real(t));
  const real r = -kPi * std::log(real(t));
  return {double(s), double(r), double(s - r)};
}

struct ShortIntervalVariance {
  double value;
  double bound_ratio;
};

/// (1/x) sum_{l <= x} |sum_{l <= n <= l + h(l)} r(n) - pi h(l)|^2 with
/// h(l) = l / L, and its ratio to h(x) (log x)^2.
inline ShortIntervalVariance short_interval_variance(const RepTable& table, u64 x, double L) {
  if (!(L >= 3 && L <= double(x))) throw DomainError("short_interval_variance: need 3 <= L <= x");
  const u64 top = x + static_cast<u64>(std::floor(double(x) / L)) + 1;
  if (top > table.limit()) throw BudgetError("short_interval_variance: table does not cover x + x/L");
  std::vector<u64> prefix(top + 1, 0);  // prefix[k] = sum_{1 <= n <= k} r(n)
  for (u64 k = 1; k <= top; ++k) prefix[k] = prefix[k - 1] + table.r(k);
  real acc = 0;
  for (u64 l = 1; l <= x; ++l) {
    const real h = real(l) / real(L);
    const u64 end = static_cast<u64>(std::floor(real(l) + h));
    const real dev = real(prefix[end] - prefix[l - 1]) - kPi * h;
    acc += dev * dev;
  }
  const real value = acc / real(x);
  const real hx = real(x) / real(L);
  const real lg = std::log(real(x));
  return {double(value), double(value / (hx * lg * lg))};
}

}  // namespace scatter::spectral
