#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcp/errors.hpp"
#include "qcp/integer.hpp"

namespace qcp {

// Dense row-major matrix of exact integers.
template <class Int>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw ValidationError("matrix entry count " + std::to_string(data_.size()) + " != " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }

  Matrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ValidationError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Int> entries() const { return data_; }

  std::vector<Int> column(std::size_t c) const {
    std::vector<Int> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  bool column_is_zero(std::size_t c) const {
    for (std::size_t r = 0; r < rows_; ++r)
      if ((*this)(r, c) != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix select_columns(std::span<const std::size_t> cols) const {
    Matrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
    return out;
  }

  // Copy with `row` appended at the bottom.
  Matrix with_row(std::span<const Int> row) const {
    if (row.size() != cols_) throw ValidationError("appended row has wrong length");
    Matrix out(rows_ + 1, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(row.begin(), row.end(), out.data_.begin() + rows_ * cols_);
    return out;
  }

  template <class To>
  Matrix<To> cast() const {
    std::vector<To> e;
    e.reserve(data_.size());
    for (const auto& v : data_) e.emplace_back(v);
    return Matrix<To>(rows_, cols_, std::move(e));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

using IntMatrix = Matrix<std::int64_t>;

template <class Int>
Matrix<Int> operator*(const Matrix<Int>& a, const Matrix<Int>& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix product shape mismatch");
  Matrix<Int> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Int acc(0);
      for (std::size_t k = 0; k < a.cols(); ++k) acc = exact_add(acc, exact_mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  return out;
}

}  // namespace qcp
