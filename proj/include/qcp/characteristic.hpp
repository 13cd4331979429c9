#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcp/arrangement.hpp"
#include "qcp/errors.hpp"
#include "qcp/ktt.hpp"
#include "qcp/number_theory.hpp"
#include "qcp/polynomial.hpp"
#include "qcp/quasipoly.hpp"

namespace qcp {

struct AnalysisOptions {
  // Periods up to this size are sampled class by class; above it, one
  // constituent per divisor of the period is computed (gcd-indexed storage).
  std::uint64_t dense_period_limit = 2048;
  EnumerationOptions enumeration{};
};

struct CollapseReport {
  std::uint64_t lcm_period = 0;
  std::uint64_t minimum_period = 0;
  bool collapse = false;
  std::uint64_t q0 = 0;
  bool gcd_property = false;
  QuasiPolynomial quasi_polynomial;
};

namespace detail {

// The `count` smallest q = k (mod rho) with q > q0, with their counts.
inline std::vector<Sample> class_samples(const KttExpansion& e, std::uint64_t k, std::uint64_t rho,
                                         std::uint64_t q0, std::size_t count) {
  BigInt q = k;
  if (q <= q0) q += BigInt(rho) * ((BigInt(q0) - k) / rho + 1);
  std::vector<Sample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i, q += rho) out.push_back({q, e.evaluate(q)});
  return out;
}

inline Polynomial constituent_for_class(const KttExpansion& e, std::uint64_t k, std::uint64_t rho,
                                        std::uint64_t q0) {
  const std::size_t m = e.dimension();
  // m+1 points determine f^k, one more is a holdout
  Polynomial f = interpolate_polynomial(class_samples(e, k, rho, q0, m + 2), m);
  if (f.degree() != static_cast<long>(m) || !f.is_monic())
    throw ConsistencyError("constituent f^" + std::to_string(k) + " = " + f.to_string() +
                           " is not monic of degree " + std::to_string(m));
  return f;
}

}  // namespace detail

// Constituents by sampling the expansion above q0 and interpolating exactly.
inline QuasiPolynomial quasi_polynomial_from_expansion(const KttExpansion& e, std::uint64_t rho, std::uint64_t q0,
                                                       const AnalysisOptions& opts = {}) {
  if (rho <= opts.dense_period_limit) {
    std::vector<Polynomial> cs;
    cs.reserve(rho);
    for (std::uint64_t k = 1; k <= rho; ++k) cs.push_back(detail::constituent_for_class(e, k, rho, q0));
    return QuasiPolynomial::from_constituents(std::move(cs));
  }
  std::map<std::uint64_t, Polynomial> by_divisor;
  for (std::uint64_t d : divisors(rho)) {
    Polynomial f = detail::constituent_for_class(e, d, rho, q0);
    // gcd-property spot check on a second class with the same gcd
    if (rho / d >= 3) {
      const auto probe = detail::class_samples(e, rho - d, rho, q0, 1).front();
      if (f(probe.q) != probe.value)
        throw ConsistencyError("classes " + std::to_string(d) + " and " + std::to_string(rho - d) +
                               " share gcd with the period but disagree at q=" + probe.q.str());
    }
    by_divisor.emplace(d, std::move(f));
  }
  return QuasiPolynomial::from_gcd_classes(rho, std::move(by_divisor));
}

inline CollapseReport collapse_report(const ArrangementInput& a, const AnalysisOptions& opts = {}) {
  CollapseReport r;
  r.lcm_period = lcm_period(a.coefficients());
  r.q0 = q_zero(a);
  const KttExpansion e = expand(a, opts.enumeration);
  r.quasi_polynomial = quasi_polynomial_from_expansion(e, r.lcm_period, r.q0, opts);
  r.minimum_period = minimum_period(r.quasi_polynomial);
  r.collapse = r.minimum_period < r.lcm_period;
  r.gcd_property = has_gcd_property(r.quasi_polynomial);
  return r;
}

inline QuasiPolynomial characteristic_quasi_polynomial(const ArrangementInput& a, const AnalysisOptions& opts = {}) {
  return quasi_polynomial_from_expansion(expand(a, opts.enumeration), lcm_period(a.coefficients()), q_zero(a), opts);
}

// The 1-constituent, which is the characteristic polynomial of the real
// arrangement.
inline Polynomial characteristic_polynomial(const ArrangementInput& a, const AnalysisOptions& opts = {}) {
  const auto e = expand(a, opts.enumeration);
  return detail::constituent_for_class(e, 1, lcm_period(a.coefficients()), q_zero(a));
}

}  // namespace qcp
