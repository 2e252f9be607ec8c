#pragma once

// Atomic probability measures on the unit circle.  mu_n puts equal mass on the
// directions of the lattice points of norm n; everything downstream only looks
// at Fourier coefficients mu^(k) = int z^k dmu.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "scatter/arith.hpp"
#include "scatter/errors.hpp"

namespace scatter::measures {

using arith::i64;
using arith::u64;
using complex = std::complex<double>;

inline constexpr double kTwoPi = 2 * std::numbers::pi;
inline constexpr double kAngleMerge = 1e-12;
inline constexpr double kWeightSlack = 1e-12;
inline constexpr i64 kMaxHarmonic = 1'000'000;

struct Atom {
  double angle;  // [0, 2 pi)
  double weight;
};

inline double canonical_angle(double t) {
  double a = std::fmod(t, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a = 0;
  return a;
}

class CircleMeasure {
 public:
  CircleMeasure() = default;

  explicit CircleMeasure(std::vector<Atom> atoms) {
    for (auto& a : atoms) {
      if (!(a.weight > 0) || !std::isfinite(a.angle)) throw DomainError("CircleMeasure: bad atom");
      a.angle = canonical_angle(a.angle);
    }
    std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) { return x.angle < y.angle; });
    for (const auto& a : atoms) {
      if (!atoms_.empty() && a.angle - atoms_.back().angle < kAngleMerge)
        atoms_.back().weight += a.weight;
      else
        atoms_.push_back(a);
    }
    // wrap-around duplicate (angle near 2 pi merging with 0)
    if (atoms_.size() > 1 && kTwoPi - atoms_.back().angle < kAngleMerge) {
      atoms_.front().weight += atoms_.back().weight;
      atoms_.pop_back();
    }
    long double total = 0;
    for (const auto& a : atoms_) total += a.weight;
    if (std::fabs(double(total) - 1.0) > kWeightSlack)
      throw DomainError("CircleMeasure: weights must sum to 1 (got " + std::to_string(double(total)) + ")");
  }

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  complex fourier(i64 k) const {
    if (k > kMaxHarmonic || k < -kMaxHarmonic) throw DomainError("fourier: |k| exceeds 10^6");
    long double re = 0, im = 0;
    for (const auto& a : atoms_) {
      const long double t = static_cast<long double>(k) * a.angle;
      re += a.weight * std::cos(t);
      im += a.weight * std::sin(t);
    }
    return {double(re), double(im)};
  }

  // int f dmu
  template <class F>
  double integrate(F&& f) const {
    long double s = 0;
    for (const auto& a : atoms_) s += a.weight * f(a.angle);
    return double(s);
  }

  nlohmann::json to_json() const {
    nlohmann::json angles = nlohmann::json::array(), weights = nlohmann::json::array();
    for (const auto& a : atoms_) {
      angles.push_back(a.angle);
      weights.push_back(a.weight);
    }
    return {{"angles", angles}, {"weights", weights}};
  }

  static CircleMeasure from_json(const nlohmann::json& j) {
    const auto& an = j.at("angles");
    const auto& w = j.at("weights");
    if (an.size() != w.size()) throw DomainError("CircleMeasure: angles/weights length mismatch");
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < an.size(); ++i) atoms.push_back({an[i].get<double>(), w[i].get<double>()});
    return CircleMeasure(std::move(atoms));
  }

 private:
  std::vector<Atom> atoms_;
};

/// mu_n: equal weights on the directions of all (a, b) with a^2 + b^2 = n.
inline CircleMeasure mu_from_integer(u64 n) {
  if (n == 0) throw DomainError("mu_from_integer: n must be positive");
  const auto rep = arith::enumerate_reps(n);
  if (rep.reps.empty()) throw DomainError("mu_from_integer: r(" + std::to_string(n) + ") = 0");
  const double w = 1.0 / double(rep.reps.size());
  std::vector<Atom> atoms;
  atoms.reserve(rep.reps.size());
  for (const auto& p : rep.reps) atoms.push_back({std::atan2(double(p.b), double(p.a)), w});
  return CircleMeasure(std::move(atoms));
}

/// N equally spaced atoms; its Fourier coefficients vanish unless N | k.
inline CircleMeasure uniform_grid(std::size_t N) {
  if (N == 0) throw DomainError("uniform_grid: N must be positive");
  std::vector<Atom> atoms;
  for (std::size_t j = 0; j < N; ++j) atoms.push_back({kTwoPi * double(j) / double(N), 1.0 / double(N)});
  return CircleMeasure(std::move(atoms));
}

namespace detail {

inline double angle_gap(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, kTwoPi - d);
}

// Weight of the atom at angle t, or 0 if none (angular match to 1e-9).
inline double weight_at(const CircleMeasure& mu, double t) {
  const auto& at = mu.atoms();
  if (at.empty()) return 0;
  const double c = canonical_angle(t);
  auto it = std::lower_bound(at.begin(), at.end(), c, [](const Atom& a, double v) { return a.angle < v; });
  double best = 0, gap = 1;
  for (auto j : {it, it == at.begin() ? at.end() - 1 : it - 1}) {
    if (j == at.end()) j = at.begin();
    const double g = angle_gap(j->angle, c);
    if (g < gap) {
      gap = g;
      best = j->weight;
    }
  }
  return gap < 1e-9 ? best : 0;
}

}  // namespace detail

/// Invariance under rotation by pi/2 and reflection angle -> -angle, compared
/// as atom multisets with weights within tol.
inline bool sym8_check(const CircleMeasure& mu, double tol) {
  for (const auto& a : mu.atoms()) {
    for (double image : {a.angle + std::numbers::pi / 2, -a.angle}) {
      const double w = detail::weight_at(mu, image);
      if (w == 0 || std::fabs(w - a.weight) > tol) return false;
    }
  }
  return true;
}

inline CircleMeasure convex_combine(const std::vector<CircleMeasure>& measures, const std::vector<double>& weights) {
  if (measures.size() != weights.size() || measures.empty())
    throw DomainError("convex_combine: measures and weights must have the same nonzero length");
  long double total = 0;
  for (double w : weights) {
    if (!(w > 0)) throw DomainError("convex_combine: weights must be positive");
    total += w;
  }
  if (std::fabs(double(total) - 1) > kWeightSlack) throw DomainError("convex_combine: weights must sum to 1");
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < measures.size(); ++i)
    for (const auto& a : measures[i].atoms()) atoms.push_back({a.angle, a.weight * weights[i]});
  return CircleMeasure(std::move(atoms));
}

/// c_u * (normalized arc length) + sum c_i mu_i, held as a Fourier signature.
/// The uniform part contributes only to the zeroth coefficient.
class MeasureMixture {
 public:
  MeasureMixture(double uniform_weight, std::vector<std::pair<double, CircleMeasure>> parts)
      : uniform_(uniform_weight), parts_(std::move(parts)) {
    long double total = uniform_;
    if (uniform_ < 0) throw DomainError("MeasureMixture: negative weight");
    for (const auto& [c, mu] : parts_) {
      if (!(c > 0)) throw DomainError("MeasureMixture: weights must be positive");
      total += c;
    }
    if (std::fabs(double(total) - 1) > kWeightSlack) throw DomainError("MeasureMixture: weights must sum to 1");
  }

  static MeasureMixture uniform() { return {1.0, {}}; }

  complex fourier(i64 k) const {
    complex s = k == 0 ? complex(uniform_) : complex(0);
    for (const auto& [c, mu] : parts_) s += c * mu.fourier(k);
    return s;
  }

 private:
  double uniform_;
  std::vector<std::pair<double, CircleMeasure>> parts_;
};

struct AttainabilityReport {
  double mu4;
  double mu8;
  double lower;
  double upper;
  bool satisfied;
};

/// Necessary conditions on (mu^(4), mu^(8)) for a weak-* limit of the mu_n:
/// 2 mu4^2 - 1 <= mu8 <= max(mu4^4, (2|mu4| - 1)^2).
inline AttainabilityReport attainable_bounds(double mu4, double mu8) {
  constexpr double slack = 1e-12;
  if (!(std::fabs(mu4) <= 1 + slack && std::fabs(mu8) <= 1 + slack))
    throw DomainError("attainable_bounds: coefficients must lie in [-1, 1]");
  const double lower = 2 * mu4 * mu4 - 1;
  const double t = 2 * std::fabs(mu4) - 1;
  const double upper = std::max(mu4 * mu4 * mu4 * mu4, t * t);
  // slack absorbs rounding in the coefficients themselves
  const bool ok = lower <= mu8 + 1e-10 && mu8 <= upper + 1e-10;
  return {mu4, mu8, lower, upper, ok};
}

/// max_{|k| <= K} |a^(k) - b^(k)| / (1 + |k|).
template <class A, class B>
double weak_distance(const A& a, const B& b, i64 K) {
  if (K < 4) throw DomainError("weak_distance: K must be >= 4");
  double d = 0;
  for (i64 k = -K; k <= K; ++k) d = std::max(d, std::abs(a.fourier(k) - b.fourier(k)) / double(1 + std::llabs(k)));
  return d;
}

}  // namespace scatter::measures
