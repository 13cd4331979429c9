#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcp/integer.hpp"

namespace qcp {

// Univariate polynomial with exact integer coefficients, constant term first.
// Trailing zeros are always stripped, so equality is coefficient-list equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  // x^degree + ...; from the highest coefficient down, e.g. {1, -8, 16}.
  static Polynomial from_descending(std::vector<BigInt> coeffs) {
    return Polynomial(std::vector<BigInt>(coeffs.rbegin(), coeffs.rend()));
  }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  // Coefficient of t^i (zero beyond the degree).
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  BigInt operator()(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  std::string to_string(const std::string& var = "t") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      const BigInt mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (i == 0 || mag != 1) out += mag.str();
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

}  // namespace qcp
