#pragma once

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "qcp/arrangement.hpp"
#include "qcp/integer.hpp"
#include "qcp/smith.hpp"

namespace qcp {

// What a nonempty subset J with rank C_J = rank A_J contributes to the
// counting formula: its rank l(J) and the elementary divisors of C_J and A_J.
struct SubsetProfile {
  std::size_t rank = 0;
  std::vector<std::int64_t> divisors;           // e_{J,1..l}
  std::vector<std::int64_t> extended_divisors;  // e'_{J,1..l}

  // d~_J(q): product of gcd(e_j, q) when gcd(e_j, q) = gcd(e'_j, q) for all j.
  std::uint64_t weight(const BigInt& q) const {
    std::uint64_t w = 1;
    for (std::size_t j = 0; j < rank; ++j) {
      const std::uint64_t e = magnitude(divisors[j]);
      const std::uint64_t ex = magnitude(extended_divisors[j]);
      const std::uint64_t g = gcd_u64(e, (q % e).convert_to<std::uint64_t>());
      const std::uint64_t gx = gcd_u64(ex, (q % ex).convert_to<std::uint64_t>());
      if (g != gx) return 0;
      w = checked_mul_u64(w, g);
    }
    return w;
  }

  friend auto operator<=>(const SubsetProfile&, const SubsetProfile&) = default;
  friend bool operator==(const SubsetProfile&, const SubsetProfile&) = default;
};

// The counting formula with subsets aggregated by profile:
//   chi(q) = q^m + sum over profiles of count * d~(q) * q^(m - rank),
// where count is the signed number (-1)^#J of subsets with that profile.
class KttExpansion {
 public:
  KttExpansion() = default;
  explicit KttExpansion(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  const std::map<SubsetProfile, std::int64_t>& terms() const { return terms_; }

  void add(SubsetProfile profile, std::int64_t sign) {
    auto& slot = terms_[std::move(profile)];
    slot = exact_add(slot, sign);
  }

  void merge(const KttExpansion& other) {
    for (const auto& [p, c] : other.terms_) {
      auto& slot = terms_[p];
      slot = exact_add(slot, c);
    }
  }

  // Drop profiles whose signed counts cancelled out.
  void prune_zeros() { std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; }); }

  BigInt evaluate(const BigInt& q) const {
    if (q < 1) throw ValidationError("q must be positive, got " + q.str());
    std::vector<BigInt> pow(dimension_ + 1);
    pow[0] = 1;
    for (std::size_t i = 1; i <= dimension_; ++i) pow[i] = pow[i - 1] * q;
    BigInt total = pow[dimension_];
    for (const auto& [profile, count] : terms_) {
      if (count == 0) continue;
      const std::uint64_t w = profile.weight(q);
      if (w == 0) continue;
      total += BigInt(count) * w * pow[dimension_ - profile.rank];
    }
    return total;
  }

 private:
  std::size_t dimension_ = 0;
  std::map<SubsetProfile, std::int64_t> terms_;
};

struct EnumerationOptions {
  unsigned threads = 1;
};

namespace detail {

inline std::vector<std::int64_t> column_of(const IntMatrix& m, std::size_t j) { return m.column(j); }

inline IntMatrix from_columns(const std::vector<std::vector<std::int64_t>>& cols, std::size_t rows) {
  IntMatrix out(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t r = 0; r < rows; ++r) out(r, j) = cols[j][r];
  return out;
}

// Distinct columns of a matrix, first-occurrence order.
inline std::vector<std::vector<std::int64_t>> distinct_columns(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto col = m.column(j);
    if (std::find(out.begin(), out.end(), col) == out.end()) out.push_back(std::move(col));
  }
  return out;
}

inline void require_nonzero_columns(const IntMatrix& c) {
  if (c.empty()) throw ValidationError("coefficient matrix must be nonempty");
  for (std::size_t j = 0; j < c.cols(); ++j)
    if (c.column_is_zero(j)) throw ValidationError("column " + std::to_string(j + 1) + " of C is zero");
}

// Visit every linearly independent subset (as column lists) of `cols`.
template <class Visit>
void for_each_independent_subset(const std::vector<std::vector<std::int64_t>>& cols, std::size_t rows,
                                 Visit&& visit) {
  std::vector<std::vector<std::int64_t>> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t j = start; j < cols.size(); ++j) {
      chosen.push_back(cols[j]);
      const IntMatrix m = from_columns(chosen, rows);
      if (integer_rank(m) == chosen.size()) {
        visit(m);
        if (chosen.size() < rows) self(self, j + 1);
      }
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

struct OffsetClass {
  std::vector<std::int64_t> normal;
  std::vector<std::int64_t> offsets;  // distinct
};

inline std::vector<OffsetClass> group_by_normal(const ArrangementInput& a) {
  std::vector<OffsetClass> classes;
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto c = a.coefficients().column(j);
    const std::int64_t b = a.offsets()[j];
    auto it = std::find_if(classes.begin(), classes.end(), [&](const OffsetClass& k) { return k.normal == c; });
    if (it == classes.end()) {
      classes.push_back({std::move(c), {b}});
    } else if (std::find(it->offsets.begin(), it->offsets.end(), b) == it->offsets.end()) {
      it->offsets.push_back(b);
    }
  }
  return classes;
}

// Profile of the chosen (normal, offset) columns, or nothing if the subset
// has a rank jump (empty intersection).
inline bool profile_of(const std::vector<std::vector<std::int64_t>>& normals,
                       const std::vector<std::int64_t>& offs, std::size_t m, SubsetProfile& out) {
  IntMatrix c = from_columns(normals, m);
  IntMatrix ext = c.with_row(offs);
  auto sx = smith_normal_form(std::move(ext));
  auto sc = smith_normal_form(std::move(c));
  if (sx.rank != sc.rank) return false;
  out.rank = sc.rank;
  out.divisors = std::move(sc.divisors);
  out.extended_divisors = std::move(sx.divisors);
  return true;
}

}  // namespace detail

// Grouped enumeration: identical hyperplanes are merged, columns are grouped
// by normal vector, and a subset takes at most one offset per group (two
// offsets on one normal are parallel hyperplanes, a rank jump). Any subset
// with a rank jump has empty intersection, so its supersets are skipped too.
inline KttExpansion expand(const ArrangementInput& a, const EnumerationOptions& opts = {}) {
  const std::size_t m = a.dimension();
  const auto classes = detail::group_by_normal(a);

  // Work items: the first (lowest-index) class in J and its offset.
  std::vector<std::pair<std::size_t, std::size_t>> items;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t o = 0; o < classes[i].offsets.size(); ++o) items.emplace_back(i, o);

  auto run_item = [&](std::size_t item) {
    KttExpansion local(m);
    std::vector<std::vector<std::int64_t>> normals;
    std::vector<std::int64_t> offs;
    SubsetProfile prof;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      const std::int64_t sign = normals.size() % 2 == 0 ? 1 : -1;
      if (!detail::profile_of(normals, offs, m, prof)) return;
      local.add(prof, sign);
      for (std::size_t i = start; i < classes.size(); ++i) {
        normals.push_back(classes[i].normal);
        for (std::int64_t b : classes[i].offsets) {
          offs.push_back(b);
          self(self, i + 1);
          offs.pop_back();
        }
        normals.pop_back();
      }
    };
    const auto [ci, oi] = items[item];
    normals.push_back(classes[ci].normal);
    offs.push_back(classes[ci].offsets[oi]);
    rec(rec, ci + 1);
    return local;
  };

  std::vector<KttExpansion> partial(items.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(items.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) partial[i] = run_item(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < items.size(); i = next++) partial[i] = run_item(i);
      });
    for (auto& th : pool) th.join();
  }

  KttExpansion total(m);
  for (const auto& p : partial) total.merge(p);  // fixed item order
  total.prune_zeros();
  return total;
}

inline BigInt ktt_count(const ArrangementInput& a, const BigInt& q) { return expand(a).evaluate(q); }

// lcm of the largest elementary divisor of C_J over nonempty J. The torsion
// of Z^m / <C_J> is a quotient of that of any independent J' in J with the
// same span, so independent subsets suffice.
inline std::uint64_t lcm_period(const IntMatrix& c) {
  detail::require_nonzero_columns(c);
  std::uint64_t rho = 1;
  detail::for_each_independent_subset(detail::distinct_columns(c), c.rows(), [&](const IntMatrix& sub) {
    rho = lcm_u64(rho, magnitude(smith_normal_form(sub).largest()));
  });
  return rho;
}

// max of the largest elementary divisor of A_J over J with
// rank A_J = rank C_J + 1, or 0 if there is none. Same reduction as above:
// an independent spanning subset of a rank-jump J is itself rank-jump and
// its largest divisor is a multiple of J's.
inline std::uint64_t q_zero(const ArrangementInput& a) {
  const IntMatrix ext = a.extended();
  const std::size_t m = a.dimension();
  std::uint64_t q0 = 0;
  detail::for_each_independent_subset(detail::distinct_columns(ext), ext.rows(), [&](const IntMatrix& sub) {
    IntMatrix c(m, sub.cols());
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t j = 0; j < sub.cols(); ++j) c(r, j) = sub(r, j);
    if (integer_rank(c) + 1 == sub.cols()) q0 = std::max(q0, magnitude(smith_normal_form(sub).largest()));
  });
  return q0;
}

}  // namespace qcp
