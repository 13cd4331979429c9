#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcp/errors.hpp"
#include "qcp/integer.hpp"
#include "qcp/number_theory.hpp"
#include "qcp/polynomial.hpp"

namespace qcp {

// A quasi-polynomial with period rho: for q = k (mod rho), k in [1, rho],
// the value is f^k(q). Class rho stands for q = 0 (mod rho).
//
// Two storages:
//  - residue: one constituent per class k = 1..rho (any quasi-polynomial);
//  - gcd:     one constituent per divisor d of rho, used for classes k with
//             gcd(k, rho) = d. Only meaningful for quasi-polynomials with the
//             gcd property, and the only feasible storage when rho is huge.
class QuasiPolynomial {
 public:
  enum class Indexing { residue, gcd };

  QuasiPolynomial() = default;

  // constituents[k-1] is f^k.
  static QuasiPolynomial from_constituents(std::vector<Polynomial> constituents) {
    if (constituents.empty()) throw ValidationError("quasi-polynomial needs at least one constituent");
    QuasiPolynomial qp;
    qp.period_ = constituents.size();
    qp.indexing_ = Indexing::residue;
    qp.keys_.resize(constituents.size());
    for (std::size_t i = 0; i < constituents.size(); ++i) qp.keys_[i] = i + 1;
    qp.constituents_ = std::move(constituents);
    qp.check_degrees();
    return qp;
  }

  // by_divisor must have exactly the divisors of `period` as keys.
  static QuasiPolynomial from_gcd_classes(std::uint64_t period, std::map<std::uint64_t, Polynomial> by_divisor) {
    if (period == 0) throw ValidationError("period must be positive");
    const auto ds = divisors(period);
    if (by_divisor.size() != ds.size())
      throw ValidationError("gcd-indexed quasi-polynomial needs one constituent per divisor of " +
                            std::to_string(period));
    QuasiPolynomial qp;
    qp.period_ = period;
    qp.indexing_ = Indexing::gcd;
    for (std::uint64_t d : ds) {
      auto it = by_divisor.find(d);
      if (it == by_divisor.end())
        throw ValidationError("missing constituent for divisor " + std::to_string(d));
      qp.keys_.push_back(d);
      qp.constituents_.push_back(std::move(it->second));
    }
    qp.check_degrees();
    return qp;
  }

  std::uint64_t period() const { return period_; }
  Indexing indexing() const { return indexing_; }
  long degree() const { return constituents_.front().degree(); }

  // Stored keys (classes or divisors) and their constituents, ascending.
  const std::vector<std::uint64_t>& keys() const { return keys_; }
  const std::vector<Polynomial>& stored() const { return constituents_; }

  // f^k for k in [1, period].
  const Polynomial& constituent(std::uint64_t k) const {
    if (k < 1 || k > period_)
      throw ValidationError("class " + std::to_string(k) + " outside [1, " + std::to_string(period_) + "]");
    if (indexing_ == Indexing::residue) return constituents_[k - 1];
    const auto it = std::lower_bound(keys_.begin(), keys_.end(), gcd_u64(k, period_));
    return constituents_[static_cast<std::size_t>(it - keys_.begin())];
  }

  // Class in [1, period] of a positive integer q.
  std::uint64_t class_of(const BigInt& q) const {
    const BigInt r = q % period_;
    return r == 0 ? period_ : r.convert_to<std::uint64_t>();
  }

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

 private:
  void check_degrees() const {
    const long d = constituents_.front().degree();
    for (const auto& c : constituents_)
      if (c.degree() != d) throw ValidationError("constituents must share one degree");
  }

  std::uint64_t period_ = 0;
  Indexing indexing_ = Indexing::residue;
  std::vector<std::uint64_t> keys_;
  std::vector<Polynomial> constituents_;
};

inline BigInt evaluate(const QuasiPolynomial& qp, const BigInt& q) {
  if (q < 1) throw ValidationError("evaluate: q must be positive, got " + q.str());
  return qp.constituent(qp.class_of(q))(q);
}

// True iff f^k = f^{k'} whenever k = k' (mod s); s must divide the period.
inline bool is_period(const QuasiPolynomial& qp, std::uint64_t s) {
  if (s == 0 || qp.period() % s != 0) return false;
  if (qp.indexing() == QuasiPolynomial::Indexing::residue) {
    for (std::uint64_t k = s + 1; k <= qp.period(); ++k)
      if (!(qp.constituent(k) == qp.constituent((k - 1) % s + 1))) return false;
    return true;
  }
  // With the gcd property f^k = F(gcd(k, rho)), and s | rho is a period iff
  // F(d) = F(gcd(d, s)) for every divisor d of rho.
  for (std::size_t i = 0; i < qp.keys().size(); ++i) {
    const std::uint64_t d = qp.keys()[i];
    if (!(qp.stored()[i] == qp.constituent(gcd_u64(d, s)))) return false;
  }
  return true;
}

// Smallest period. Periods dividing rho are exactly the multiples of the
// minimum period, so stripping prime factors greedily finds it.
inline std::uint64_t minimum_period(const QuasiPolynomial& qp) {
  std::uint64_t s = qp.period();
  for (auto [p, e] : factorize(s)) {
    for (int i = 0; i < e; ++i) {
      if (!is_period(qp, s / p)) break;
      s /= p;
    }
  }
  return s;
}

inline bool has_gcd_property(const QuasiPolynomial& qp) {
  if (qp.indexing() == QuasiPolynomial::Indexing::gcd) return true;
  std::map<std::uint64_t, const Polynomial*> seen;
  for (std::uint64_t k = 1; k <= qp.period(); ++k) {
    const Polynomial& f = qp.constituent(k);
    auto [it, fresh] = seen.try_emplace(gcd_u64(k, qp.period()), &f);
    if (!fresh && !(*it->second == f)) return false;
  }
  return true;
}

// Expand to a residue-indexed table (period must be small enough to list).
inline QuasiPolynomial to_residue_indexed(const QuasiPolynomial& qp) {
  if (qp.indexing() == QuasiPolynomial::Indexing::residue) return qp;
  std::vector<Polynomial> cs;
  cs.reserve(qp.period());
  for (std::uint64_t k = 1; k <= qp.period(); ++k) cs.push_back(qp.constituent(k));
  return QuasiPolynomial::from_constituents(std::move(cs));
}

struct Sample {
  BigInt q;
  BigInt value;
};

// Polynomial of degree <= `degree` through the first degree+1 samples, by
// Newton divided differences over Q. Remaining samples are holdouts and must
// lie on it. Throws ConsistencyError if a coefficient is not an integer.
inline Polynomial interpolate_polynomial(const std::vector<Sample>& samples, std::size_t degree) {
  const std::size_t n = degree + 1;
  if (samples.size() < n)
    throw ValidationError("interpolation needs " + std::to_string(n) + " samples, got " +
                          std::to_string(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].q == samples[j].q)
        throw ValidationError("duplicate sample point q=" + samples[i].q.str());

  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = Rational(samples[i].value);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(samples[i].q - samples[i - level].q);

  // Horner on the Newton form: p = dd[n-1]; p = p*(t - q_i) + dd[i].
  std::vector<Rational> poly{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    std::vector<Rational> next(poly.size() + 1);
    const Rational shift(samples[i].q);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * shift;
    }
    next[0] += dd[i];
    poly = std::move(next);
  }

  std::vector<BigInt> coeffs;
  coeffs.reserve(poly.size());
  for (const auto& c : poly) {
    if (denominator(c) != 1) throw ConsistencyError("constituent not integral (coefficient " + c.str() + ")");
    coeffs.push_back(numerator(c));
  }
  Polynomial out(std::move(coeffs));
  for (std::size_t i = n; i < samples.size(); ++i)
    if (out(samples[i].q) != samples[i].value)
      throw ConsistencyError("holdout sample at q=" + samples[i].q.str() + " does not fit interpolant " +
                             out.to_string());
  return out;
}

// samples maps each class k in [1, rho] (rho = number of classes) to points
// with q = k (mod rho).
inline QuasiPolynomial interpolate_constituents(const std::map<std::uint64_t, std::vector<Sample>>& samples,
                                                std::size_t expected_degree) {
  const std::uint64_t period = samples.size();
  if (period == 0) throw ValidationError("no residue classes given");
  std::vector<Polynomial> cs;
  cs.reserve(period);
  std::uint64_t expect = 1;
  for (const auto& [k, pts] : samples) {
    if (k != expect) throw ValidationError("residue classes must be exactly 1.." + std::to_string(period));
    ++expect;
    for (const auto& s : pts) {
      BigInt r = s.q % period;
      if (r < 0) r += period;
      if (r != k % period)
        throw ValidationError("sample q=" + s.q.str() + " is not in class " + std::to_string(k) + " mod " +
                              std::to_string(period));
    }
    cs.push_back(interpolate_polynomial(pts, expected_degree));
  }
  return QuasiPolynomial::from_constituents(std::move(cs));
}

}  // namespace qcp
