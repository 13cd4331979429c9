#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcp/errors.hpp"
#include "qcp/matrix.hpp"

namespace qcp {

// Integral arrangement of n hyperplanes x . c_j = b_j in R^m, given by the
// coefficient matrix C (m x n, columns c_j) and the offsets b.
class ArrangementInput {
 public:
  // Validates: m, n >= 1, b has n entries, no zero column.
  ArrangementInput(IntMatrix coefficients, std::vector<std::int64_t> offsets)
      : c_(std::move(coefficients)), b_(std::move(offsets)) {
    if (c_.rows() < 1) throw ValidationError("arrangement needs dimension m >= 1");
    if (c_.cols() < 1) throw ValidationError("arrangement needs at least one hyperplane");
    if (b_.size() != c_.cols())
      throw ValidationError("offset vector has " + std::to_string(b_.size()) + " entries, expected " +
                            std::to_string(c_.cols()));
    for (std::size_t j = 0; j < c_.cols(); ++j)
      if (c_.column_is_zero(j)) throw ValidationError("column " + std::to_string(j + 1) + " of C is zero");
  }

  // Central arrangement (b = 0).
  static ArrangementInput central(IntMatrix coefficients) {
    const std::size_t n = coefficients.cols();
    return ArrangementInput(std::move(coefficients), std::vector<std::int64_t>(n, 0));
  }

  std::size_t dimension() const { return c_.rows(); }
  std::size_t size() const { return c_.cols(); }
  const IntMatrix& coefficients() const { return c_; }
  const std::vector<std::int64_t>& offsets() const { return b_; }

  bool is_central() const {
    for (auto v : b_)
      if (v != 0) return false;
    return true;
  }

  // A = (C over b), (m+1) x n.
  IntMatrix extended() const { return c_.with_row(b_); }

  friend bool operator==(const ArrangementInput&, const ArrangementInput&) = default;

 private:
  IntMatrix c_;
  std::vector<std::int64_t> b_;
};

}  // namespace qcp
