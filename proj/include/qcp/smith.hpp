#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qcp/integer.hpp"
#include "qcp/matrix.hpp"

namespace qcp {

// Elementary divisors e_1 | e_2 | ... | e_rank of an integer matrix.
template <class Int>
struct SmithForm {
  std::size_t rank = 0;
  std::vector<Int> divisors;

  const Int& largest() const { return divisors.back(); }
  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

namespace detail {

template <class Int>
std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const Matrix<Int>& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs(0);
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = exact_abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
        if (v == 1) return best;
      }
    }
  return best;
}

// row[dst] -= factor * row[src], columns from `from` on.
template <class Int>
void row_axpy(Matrix<Int>& a, std::size_t dst, std::size_t src, const Int& factor, std::size_t from) {
  for (std::size_t c = from; c < a.cols(); ++c)
    if (a(src, c) != 0) a(dst, c) = exact_sub(a(dst, c), exact_mul(factor, a(src, c)));
}

template <class Int>
void col_axpy(Matrix<Int>& a, std::size_t dst, std::size_t src, const Int& factor, std::size_t from) {
  for (std::size_t r = from; r < a.rows(); ++r)
    if (a(r, src) != 0) a(r, dst) = exact_sub(a(r, dst), exact_mul(factor, a(r, src)));
}

}  // namespace detail

// Smith normal form by pivoting on the smallest nonzero entry and reducing
// its row and column with division; repeats until the pivot divides the rest
// of the trailing block. Transform matrices are not tracked.
template <class Int>
SmithForm<Int> smith_normal_form(Matrix<Int> a) {
  if (a.empty()) throw ValidationError("smith_normal_form: matrix must be nonempty");
  SmithForm<Int> out;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      auto pivot = detail::smallest_pivot(a, t);
      if (!pivot) {
        out.rank = t;
        return out;
      }
      a.swap_rows(t, pivot->first);
      a.swap_cols(t, pivot->second);
      const Int p = a(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        detail::row_axpy(a, i, t, exact_div(a(i, t), p), t);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        detail::col_axpy(a, j, t, exact_div(a(t, j), p), t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder now exists

      std::optional<std::size_t> bad_row;
      const bool unit = exact_abs(p) == 1;
      for (std::size_t i = t + 1; !unit && i < a.rows() && !bad_row; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % p != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      // pull the offending row into row t; the next pass produces a remainder
      for (std::size_t c = t + 1; c < a.cols(); ++c) a(t, c) = exact_add(a(t, c), a(*bad_row, c));
    }
    out.divisors.push_back(exact_abs(a(t, t)));
  }
  out.rank = n;
  return out;
}

// Rank over Q via fraction-free (Bareiss) elimination; independent of the
// Smith form path.
template <class Int>
std::size_t integer_rank(Matrix<Int> a) {
  if (a.empty()) throw ValidationError("integer_rank: matrix must be nonempty");
  std::size_t rank = 0;
  Int prev(1);
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(rank, piv);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        Int num = exact_sub(exact_mul(a(rank, c), a(i, j)), exact_mul(a(i, c), a(rank, j)));
        a(i, j) = exact_div(num, prev);
      }
      a(i, c) = 0;
    }
    prev = a(rank, c);
    ++rank;
  }
  return rank;
}

}  // namespace qcp
