#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qcp/arrangement.hpp"
#include "qcp/characteristic.hpp"
#include "qcp/errors.hpp"
#include "qcp/matrix.hpp"

namespace qcp {

enum class RootType { A, B, C, D, G2 };
enum class RootLength { uniform, short_root, long_root };

inline std::string to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::G2: return "G";
  }
  return "?";
}

using RootVector = std::vector<std::int64_t>;

// Positive roots written in the simple-root basis. For B and C the simple
// roots are numbered so that alpha_1 is at the end of the Bourbaki diagram
// (alpha_1 short in B_n); for G2, alpha_1 is the short simple root.
struct RootSystem {
  RootType type = RootType::A;
  std::size_t rank = 0;
  std::vector<RootVector> positive_roots;
  std::vector<RootLength> lengths;
  RootVector highest_root;
  std::int64_t coxeter_number = 0;

  std::string name() const { return to_string(type) + std::to_string(type == RootType::G2 ? 2 : rank); }

  // C_Phi: column j is positive_roots[j].
  IntMatrix coefficient_matrix() const {
    IntMatrix c(rank, positive_roots.size());
    for (std::size_t j = 0; j < positive_roots.size(); ++j)
      for (std::size_t i = 0; i < rank; ++i) c(i, j) = positive_roots[j][i];
    return c;
  }

  std::optional<std::size_t> find(const RootVector& v) const {
    auto it = std::find(positive_roots.begin(), positive_roots.end(), v);
    if (it == positive_roots.end()) return std::nullopt;
    return static_cast<std::size_t>(it - positive_roots.begin());
  }
};

namespace detail {

inline std::int64_t height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

inline RootVector ones(std::size_t n, std::size_t from, std::size_t to) {
  RootVector v(n, 0);
  for (std::size_t i = from; i < to; ++i) v[i] = 1;
  return v;
}

// Bourbaki-numbered positive roots and Gram matrix of the simple roots.
inline void classical_data(RootType type, std::size_t n, std::vector<RootVector>& roots,
                           std::vector<std::vector<std::int64_t>>& gram) {
  gram.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    gram[i][i] = 2;
    if (i + 1 < n) gram[i][i + 1] = gram[i + 1][i] = -1;
  }
  // e_i - e_j = alpha_i + ... + alpha_{j-1}
  auto add_type_a = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      for (std::size_t j = i + 1; j <= upto; ++j) roots.push_back(ones(n, i, j));
  };
  switch (type) {
    case RootType::A:
      add_type_a(n);
      break;
    case RootType::B:
      gram[n - 1][n - 1] = 1;
      add_type_a(n - 1);
      for (std::size_t i = 0; i < n; ++i) roots.push_back(ones(n, i, n));  // e_i
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {  // e_i + e_j
          RootVector v = ones(n, i, n);
          for (std::size_t t = j; t < n; ++t) v[t] = 2;
          roots.push_back(v);
        }
      break;
    case RootType::C:
      gram[n - 1][n - 1] = 4;
      if (n >= 2) gram[n - 2][n - 1] = gram[n - 1][n - 2] = -2;
      add_type_a(n - 1);
      for (std::size_t i = 0; i < n; ++i) {  // 2 e_i
        RootVector v(n, 0);
        for (std::size_t t = i; t + 1 < n; ++t) v[t] = 2;
        v[n - 1] = 1;
        roots.push_back(v);
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {  // e_i + e_j
          RootVector v = ones(n, i, n);
          for (std::size_t t = j; t + 1 < n; ++t) v[t] = 2;
          roots.push_back(v);
        }
      break;
    case RootType::D:
      if (n >= 3) {
        gram[n - 2][n - 1] = gram[n - 1][n - 2] = 0;
        gram[n - 3][n - 1] = gram[n - 1][n - 3] = -1;
      } else {
        gram[0][1] = gram[1][0] = 0;
      }
      add_type_a(n - 1);  // e_i - e_j
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {  // e_i + e_j
          RootVector v(n, 0);
          if (j == n - 1) {
            for (std::size_t t = i; t + 2 < n; ++t) v[t] = 1;
            v[n - 1] = 1;
          } else if (j == n - 2) {
            for (std::size_t t = i; t < n; ++t) v[t] = 1;
          } else {
            for (std::size_t t = i; t < j; ++t) v[t] = 1;
            for (std::size_t t = j; t + 2 < n; ++t) v[t] = 2;
            v[n - 2] = v[n - 1] = 1;
          }
          roots.push_back(v);
        }
      break;
    case RootType::G2:
      break;
  }
}

}  // namespace detail

inline RootSystem positive_roots(RootType type, std::size_t rank) {
  if (type == RootType::G2 && rank != 2) throw ValidationError("G2 has rank 2, got " + std::to_string(rank));
  // D2 = A1 x A1 is reducible and has no highest root
  if (type == RootType::D && rank < 3) throw ValidationError("type D needs rank >= 3");
  if (rank < 1) throw ValidationError("rank must be >= 1");

  std::vector<RootVector> roots;
  std::vector<std::vector<std::int64_t>> gram;
  if (type == RootType::G2) {
    roots = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    gram = {{2, -3}, {-3, 6}};
  } else {
    detail::classical_data(type, rank, roots, gram);
    if (type == RootType::B || type == RootType::C) {
      for (auto& r : roots) std::reverse(r.begin(), r.end());
      std::reverse(gram.begin(), gram.end());
      for (auto& row : gram) std::reverse(row.begin(), row.end());
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RootVector& x, const RootVector& y) {
    const auto hx = detail::height(x), hy = detail::height(y);
    return hx != hy ? hx < hy : x > y;
  });

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.positive_roots = std::move(roots);

  std::vector<std::int64_t> norms;
  for (const auto& r : rs.positive_roots) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) v += r[i] * gram[i][j] * r[j];
    norms.push_back(v);
  }
  const auto [lo, hi] = std::minmax_element(norms.begin(), norms.end());
  for (auto v : norms)
    rs.lengths.push_back(*lo == *hi ? RootLength::uniform
                                    : (v == *lo ? RootLength::short_root : RootLength::long_root));

  rs.highest_root = rs.positive_roots.back();
  rs.coxeter_number = 1 + detail::height(rs.highest_root);
  return rs;
}

inline std::int64_t coxeter_number(const RootSystem& r) { return 1 + detail::height(r.highest_root); }

// A subset Psi of the positive roots, by index.
struct RootSubset {
  RootSystem parent;
  std::vector<std::size_t> included;

  static RootSubset full(const RootSystem& r) {
    RootSubset s{r, {}};
    for (std::size_t i = 0; i < r.positive_roots.size(); ++i) s.included.push_back(i);
    return s;
  }

  // Phi^+ minus one root.
  static RootSubset without(const RootSystem& r, const RootVector& delta) {
    const auto idx = r.find(delta);
    if (!idx) throw ValidationError("root to exclude is not a positive root of " + r.name());
    RootSubset s{r, {}};
    for (std::size_t i = 0; i < r.positive_roots.size(); ++i)
      if (i != *idx) s.included.push_back(i);
    return s;
  }

  RootSubset complement() const {
    RootSubset s{parent, {}};
    for (std::size_t i = 0; i < parent.positive_roots.size(); ++i)
      if (std::find(included.begin(), included.end(), i) == included.end()) s.included.push_back(i);
    return s;
  }
};

namespace detail {

inline ArrangementInput offset_arrangement(const RootSubset& psi, std::int64_t lo, std::int64_t hi) {
  if (psi.included.empty()) throw ValidationError("root subset is empty");
  const std::size_t m = psi.parent.rank;
  const std::size_t per = static_cast<std::size_t>(hi - lo + 1);
  IntMatrix c(m, psi.included.size() * per);
  std::vector<std::int64_t> b;
  std::size_t col = 0;
  for (std::size_t idx : psi.included) {
    if (idx >= psi.parent.positive_roots.size()) throw ValidationError("root index out of range");
    for (std::int64_t l = lo; l <= hi; ++l, ++col) {
      for (std::size_t i = 0; i < m; ++i) c(i, col) = psi.parent.positive_roots[idx][i];
      b.push_back(l);
    }
  }
  return ArrangementInput(std::move(c), std::move(b));
}

}  // namespace detail

// Extended Shi arrangement: (alpha, x) = l for alpha in Psi, l in [1-k, k].
inline ArrangementInput shi_matrix(const RootSubset& psi, std::int64_t k) {
  if (k < 1) throw ValidationError("Shi arrangement needs k >= 1 (k = 0 has no hyperplanes)");
  return detail::offset_arrangement(psi, 1 - k, k);
}

// Extended Linial arrangement: (alpha, x) = l for alpha in Psi, l in [1, n].
inline ArrangementInput linial_matrix(const RootSubset& psi, std::int64_t n) {
  if (n < 1) throw ValidationError("Linial arrangement needs n >= 1");
  return detail::offset_arrangement(psi, 1, n);
}

struct ConjectureEntry {
  RootVector removed;
  RootLength length = RootLength::uniform;
  std::int64_t k = 0;
  CollapseReport report;
  // minimum period 1, or period collapse
  bool holds = false;
};

// Shi arrangement of Phi^+ minus delta for every delta and k in [k_from, k_to].
inline std::vector<ConjectureEntry> conjecture_scan(const RootSystem& r, std::int64_t k_from, std::int64_t k_to,
                                                    const AnalysisOptions& opts = {}) {
  if (k_from < 1 || k_to < k_from) throw ValidationError("conjecture scan needs 1 <= k_from <= k_to");
  if (r.positive_roots.size() < 2) throw ValidationError(r.name() + " has a single positive root");
  std::vector<ConjectureEntry> out;
  for (std::size_t i = 0; i < r.positive_roots.size(); ++i)
    for (std::int64_t k = k_from; k <= k_to; ++k) {
      ConjectureEntry e;
      e.removed = r.positive_roots[i];
      e.length = r.lengths[i];
      e.k = k;
      e.report = collapse_report(shi_matrix(RootSubset::without(r, e.removed), k), opts);
      e.holds = e.report.minimum_period == 1 || e.report.collapse;
      out.push_back(std::move(e));
    }
  return out;
}

}  // namespace qcp
