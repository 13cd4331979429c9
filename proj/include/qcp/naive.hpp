#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcp/arrangement.hpp"
#include "qcp/ktt.hpp"
#include "qcp/smith.hpp"

// Direct 2^n transcriptions of the definitions, kept as reference oracles
// for the enumerators in ktt.hpp. Only usable for small n.
namespace qcp::naive {

inline constexpr std::size_t max_columns = 20;

inline void check_size(std::size_t n) {
  if (n > max_columns)
    throw BudgetError("naive subset enumeration limited to n <= " + std::to_string(max_columns) + ", got " +
                      std::to_string(n));
}

inline std::vector<std::size_t> subset_columns(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < n; ++j)
    if (mask >> j & 1) cols.push_back(j);
  return cols;
}

inline KttExpansion expand(const ArrangementInput& a) {
  const std::size_t n = a.size();
  check_size(n);
  const IntMatrix& c = a.coefficients();
  const IntMatrix ext = a.extended();
  KttExpansion out(a.dimension());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto cols = subset_columns(mask, n);
    auto sc = smith_normal_form(c.select_columns(cols));
    auto sx = smith_normal_form(ext.select_columns(cols));
    if (sc.rank != sx.rank) continue;
    out.add({sc.rank, std::move(sc.divisors), std::move(sx.divisors)}, cols.size() % 2 == 0 ? 1 : -1);
  }
  out.prune_zeros();
  return out;
}

inline std::uint64_t lcm_period(const IntMatrix& c) {
  detail::require_nonzero_columns(c);
  check_size(c.cols());
  std::uint64_t rho = 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c.cols()); ++mask)
    rho = lcm_u64(rho, magnitude(smith_normal_form(c.select_columns(subset_columns(mask, c.cols()))).largest()));
  return rho;
}

inline std::uint64_t q_zero(const ArrangementInput& a) {
  const std::size_t n = a.size();
  check_size(n);
  const IntMatrix ext = a.extended();
  std::uint64_t q0 = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto cols = subset_columns(mask, n);
    const auto sc = smith_normal_form(a.coefficients().select_columns(cols));
    const auto sx = smith_normal_form(ext.select_columns(cols));
    if (sx.rank == sc.rank + 1) q0 = std::max(q0, magnitude(sx.largest()));
  }
  return q0;
}

}  // namespace qcp::naive
