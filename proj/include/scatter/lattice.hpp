#pragma once

// Bulk representation counts by lattice-point enumeration.  This is the
// geometric route to r(n); arith::rep_count is the divisor-sum route, and the
// two are checked against each other in the tests.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scatter/arith.hpp"
#include "scatter/errors.hpp"

namespace scatter::lattice {

using arith::i64;
using arith::u64;

inline constexpr u64 kMaxDenseLimit = 200'000'000;

// Calls visit(a, b, multiplicity) once per first-quadrant point (a, b >= 0)
// with lo <= a^2 + b^2 <= hi.  multiplicity counts the sign images.
template <class Visit>
void for_each_quadrant_point(u64 lo, u64 hi, Visit&& visit) {
  const u64 amax = arith::isqrt(hi);
  for (u64 a = 0; a <= amax; ++a) {
    const u64 aa = a * a;
    const u64 bmax = arith::isqrt(hi - aa);
    u64 bmin = 0;
    if (lo > aa) {
      bmin = arith::isqrt(lo - aa);
      if (bmin * bmin < lo - aa) ++bmin;
    }
    for (u64 b = bmin; b <= bmax; ++b) {
      const unsigned mult = (a == 0 ? 1u : 2u) * (b == 0 ? 1u : 2u);
      visit(a, b, mult);
    }
  }
}

/// r(k) for k in [lo, hi]; entry i holds r(lo + i).
inline std::vector<std::uint32_t> rep_counts_in_range(u64 lo, u64 hi) {
  if (hi < lo) return {};
  std::vector<std::uint32_t> out(hi - lo + 1, 0);
  for_each_quadrant_point(lo, hi, [&](u64 a, u64 b, unsigned mult) { out[a * a + b * b - lo] += mult; });
  return out;
}

/// A representable integer together with its representation count.
struct RepTerm {
  u64 m;
  std::uint32_t r;
};

/// Representable k in [lo, hi] (r(k) > 0) in increasing order.
inline std::vector<RepTerm> rep_terms_in_range(u64 lo, u64 hi) {
  std::vector<RepTerm> terms;
  const auto counts = rep_counts_in_range(lo, hi);
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i]) terms.push_back({lo + i, counts[i]});
  return terms;
}

/// Dense table of r(n) for 0 <= n <= limit, shared read-only once built.
class RepTable {
 public:
  explicit RepTable(u64 limit) : limit_(limit) {
    if (limit > kMaxDenseLimit)
      throw BudgetError("RepTable: limit " + std::to_string(limit) + " exceeds dense budget " +
                        std::to_string(kMaxDenseLimit));
    counts_.assign(limit + 1, 0);
    for_each_quadrant_point(0, limit, [&](u64 a, u64 b, unsigned mult) {
      counts_[a * a + b * b] = static_cast<std::uint16_t>(counts_[a * a + b * b] + mult);
    });
    for (u64 n = 0; n <= limit; ++n)
      if (counts_[n]) terms_.push_back({n, counts_[n]});
  }

  u64 limit() const { return limit_; }

  std::uint32_t r(u64 n) const {
    if (n > limit_) throw BudgetError("RepTable: n beyond table limit");
    return counts_[n];
  }

  bool representable(u64 n) const { return r(n) != 0; }

  // Representable integers 0 <= n <= limit (including n = 0).
  std::span<const RepTerm> terms() const { return terms_; }

  // Terms with lo <= m <= hi.
  std::span<const RepTerm> terms(u64 lo, u64 hi) const {
    auto first = std::lower_bound(terms_.begin(), terms_.end(), lo,
                                  [](const RepTerm& t, u64 v) { return t.m < v; });
    auto last = std::upper_bound(terms_.begin(), terms_.end(), hi,
                                 [](u64 v, const RepTerm& t) { return v < t.m; });
    if (last < first) last = first;
    return {first, last};
  }

  // Smallest representable integer > n, if it lies inside the table.
  bool successor(u64 n, u64& out) const {
    auto it = std::upper_bound(terms_.begin(), terms_.end(), n,
                               [](u64 v, const RepTerm& t) { return v < t.m; });
    if (it == terms_.end()) return false;
    out = it->m;
    return true;
  }

 private:
  u64 limit_;
  std::vector<std::uint16_t> counts_;
  std::vector<RepTerm> terms_;
};

/// Smallest representable integer > n, by table when possible and by
/// factorization otherwise.
inline u64 successor(u64 n, const RepTable* table = nullptr) {
  u64 out = 0;
  if (table && table->successor(n, out)) return out;
  for (u64 k = n + 1;; ++k)
    if (arith::is_sum_two_squares(k)) return k;
}

/// Positive representable integers <= limit.
inline std::vector<u64> representable_sequence(u64 limit) {
  if (limit < 2) throw DomainError("representable_sequence: limit must be >= 2");
  std::vector<u64> out;
  for (const auto& t : rep_terms_in_range(1, limit)) out.push_back(t.m);
  return out;
}

}  // namespace scatter::lattice
