#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "qcp/arrangement.hpp"
#include "qcp/characteristic.hpp"
#include "qcp/errors.hpp"
#include "qcp/integer.hpp"

namespace qcp {

struct OracleOptions {
  // Maximum number of point-hyperplane tests (q^m * n, worst case).
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
};

namespace detail {

inline std::uint64_t point_test_bound(const ArrangementInput& a, std::uint64_t q, std::uint64_t budget) {
  std::uint64_t work = a.size();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (work > budget / q + 1) return std::numeric_limits<std::uint64_t>::max();
    work *= q;
  }
  return work;
}

// Counts points of the slab z_0 in [lo, hi) avoiding every hyperplane mod q.
inline std::uint64_t count_slab(const std::vector<std::vector<std::uint64_t>>& coef,
                                const std::vector<std::uint64_t>& rhs, std::size_t m, std::uint64_t q,
                                std::uint64_t lo, std::uint64_t hi) {
  const std::size_t n = rhs.size();
  // partial[i][j]: contribution of coordinates 0..i-1 to hyperplane j, mod q
  std::vector<std::vector<std::uint64_t>> partial(m + 1, std::vector<std::uint64_t>(n, 0));
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t from, std::uint64_t to) -> void {
    std::vector<std::uint64_t>& cur = partial[i + 1];
    cur = partial[i];
    for (std::size_t j = 0; j < n; ++j) cur[j] = (cur[j] + from % q * coef[i][j]) % q;
    for (std::uint64_t z = from; z < to; ++z) {
      if (i + 1 == m) {
        bool free = true;
        for (std::size_t j = 0; j < n; ++j)
          if (cur[j] == rhs[j]) {
            free = false;
            break;
          }
        count += free;
      } else {
        self(self, i + 1, 0, q);
      }
      for (std::size_t j = 0; j < n; ++j) {
        cur[j] += coef[i][j];
        if (cur[j] >= q) cur[j] -= q;
      }
    }
  };
  rec(rec, 0, lo, hi);
  return count;
}

}  // namespace detail

// #{ z in Z_q^m : z . c_j != b_j (mod q) for all j }, by enumeration.
inline std::uint64_t brute_force_count(const ArrangementInput& a, std::uint64_t q, const OracleOptions& opts = {}) {
  if (q < 1) throw ValidationError("brute_force_count: q must be positive");
  const std::uint64_t work = detail::point_test_bound(a, q, opts.budget);
  if (work > opts.budget)
    throw BudgetError("brute force at q=" + std::to_string(q) + " needs more than the budget of " +
                      std::to_string(opts.budget) + " point tests");
  const std::size_t m = a.dimension(), n = a.size();
  std::vector<std::vector<std::uint64_t>> coef(m, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) coef[i][j] = mod_u64(a.coefficients()(i, j), q);
  std::vector<std::uint64_t> rhs(n);
  for (std::size_t j = 0; j < n; ++j) rhs[j] = mod_u64(a.offsets()[j], q);

  const unsigned shards = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(opts.threads, q)));
  if (shards == 1) return detail::count_slab(coef, rhs, m, q, 0, q);
  std::vector<std::uint64_t> partial(shards, 0);
  std::vector<std::thread> pool;
  for (unsigned s = 0; s < shards; ++s) {
    const std::uint64_t lo = q * s / shards, hi = q * (s + 1) / shards;
    pool.emplace_back([&, s, lo, hi] { partial[s] = detail::count_slab(coef, rhs, m, q, lo, hi); });
  }
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

struct ScanViolation {
  ArrangementInput input;
  std::uint64_t lcm_period;
  std::uint64_t minimum_period;
};

struct ScanReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::int64_t entry_bound = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string generator = "mt19937_64/seed_seq(seed,trial)";
  std::vector<ScanViolation> violations;
};

namespace detail {

// Uniform integer in [lo, hi] by rejection; independent of the standard
// library's distribution implementation.
inline std::int64_t draw_uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace detail

// Random m x n central arrangement, entries uniform in [-bound, bound], zero
// columns redrawn.
inline ArrangementInput random_central(std::size_t m, std::size_t n, std::int64_t bound, std::mt19937_64& rng) {
  IntMatrix c(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    do {
      for (std::size_t i = 0; i < m; ++i) c(i, j) = detail::draw_uniform(rng, -bound, bound);
    } while (c.column_is_zero(j));
  }
  return ArrangementInput::central(std::move(c));
}

// Checks that minimum period = lcm period on random central arrangements.
inline ScanReport central_scan(std::size_t m, std::size_t n, std::int64_t entry_bound, std::uint64_t trials,
                               std::uint64_t seed, const OracleOptions& budget = {},
                               const AnalysisOptions& analysis = {}) {
  if (m < 1 || n < 1) throw ValidationError("central_scan needs m, n >= 1");
  if (entry_bound < 1) throw ValidationError("central_scan needs entry_bound >= 1");
  if (n >= 63 || (std::uint64_t{1} << n) > budget.budget)
    throw BudgetError("central_scan: 2^n subsets exceeds the budget of " + std::to_string(budget.budget));
  ScanReport rep;
  rep.m = m;
  rep.n = n;
  rep.entry_bound = entry_bound;
  rep.trials = trials;
  rep.seed = seed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = detail::trial_rng(seed, t);
    ArrangementInput a = random_central(m, n, entry_bound, rng);
    const CollapseReport r = collapse_report(a, analysis);
    if (r.minimum_period != r.lcm_period) rep.violations.push_back({std::move(a), r.lcm_period, r.minimum_period});
  }
  return rep;
}

}  // namespace qcp
