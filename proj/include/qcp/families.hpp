#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcp/arrangement.hpp"
#include "qcp/errors.hpp"
#include "qcp/integer.hpp"
#include "qcp/polynomial.hpp"
#include "qcp/quasipoly.hpp"

namespace qcp {

enum class FamilyKind { A, B, Aprime, D };

inline std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::A: return "A";
    case FamilyKind::B: return "B";
    case FamilyKind::Aprime: return "Aprime";
    case FamilyKind::D: return "D";
  }
  return "?";
}

// Parameters of the explicit (m+1) x (p+m) matrix families. `s` is unused by
// D (fixed to 1) and `a` is unused by A and B.
struct FamilyParams {
  FamilyKind kind = FamilyKind::A;
  std::int64_t m = 1;
  std::int64_t p = 1;
  std::int64_t s = 1;
  std::int64_t a = 1;
};

inline void validate(const FamilyParams& f) {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
  };
  switch (f.kind) {
    case FamilyKind::A:
      need(f.m >= 1 && f.p >= 1 && f.s >= 1, "family A needs m, p, s >= 1");
      need(f.p % f.s == 0, "family A needs s | p");
      break;
    case FamilyKind::B:
      // m = 1 is the degenerate case whose quasi-polynomial collapses to q - p
      need(f.m >= 2 && f.p >= 2 && f.s >= 1, "family B needs m >= 2, p >= 2, s >= 1");
      need(f.p % f.s == 0, "family B needs s | p");
      break;
    case FamilyKind::Aprime:
      need(f.m >= 1 && f.p >= 1 && f.s >= 1 && f.a >= 1, "family Aprime needs m, p, s, a >= 1");
      break;
    case FamilyKind::D:
      need(f.m >= 1 && f.p >= 1 && f.a >= 1, "family D needs m, p, a >= 1");
      break;
  }
}

// Columns: m-1 unit vectors, then (0,..,0,s | 0), then p columns
// (1,..,1,mid | r). mid = p for A and B, a for A' and D; r runs over 1..p,
// or 0..p-1 for B. D is A' with s = 1.
inline ArrangementInput family_matrix(const FamilyParams& f) {
  validate(f);
  const auto m = static_cast<std::size_t>(f.m);
  const auto p = static_cast<std::size_t>(f.p);
  const std::int64_t s = f.kind == FamilyKind::D ? 1 : f.s;
  const std::int64_t mid = (f.kind == FamilyKind::A || f.kind == FamilyKind::B) ? f.p : f.a;
  const std::int64_t first_offset = f.kind == FamilyKind::B ? 0 : 1;

  IntMatrix c(m, p + m);
  std::vector<std::int64_t> b(p + m, 0);
  for (std::size_t i = 0; i + 1 < m; ++i) c(i, i) = 1;
  c(m - 1, m - 1) = s;
  for (std::size_t r = 0; r < p; ++r) {
    const std::size_t col = m + r;
    for (std::size_t i = 0; i + 1 < m; ++i) c(i, col) = 1;
    c(m - 1, col) = mid;
    b[col] = first_offset + static_cast<std::int64_t>(r);
  }
  return ArrangementInput(std::move(c), std::move(b));
}

// C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace detail {

inline void check_family_a(std::int64_t m, std::int64_t p, std::int64_t s) {
  validate(FamilyParams{FamilyKind::A, m, p, s, 1});
}

// (q - 1)^d: lattice points of the open unit cube (0,1)^d dilated by q.
inline BigInt open_cube_count(const BigInt& q, std::int64_t d) { return d <= 0 ? BigInt(1) : pow(q - 1, d); }

// (q + 1)^d: the closed cube [0,1]^d.
inline BigInt closed_cube_count(const BigInt& q, std::int64_t d) { return d <= 0 ? BigInt(1) : pow(q + 1, d); }

inline std::uint64_t gcd_with(const BigInt& q, std::int64_t s) {
  const BigInt r = abs(q) % s;
  return gcd_u64(r.convert_to<std::uint64_t>(), static_cast<std::uint64_t>(s));
}

}  // namespace detail

// Closed-form characteristic quasi-polynomial of family A, period s:
// coefficient of t^(m-j) in f^k is
//   (-1)^j [ (p C(m-1,j-2) + C(m-1,j-1)) gcd(k,s) + p C(m-1,j-1) + C(m-1,j) ].
inline QuasiPolynomial closed_form_A(std::int64_t m, std::int64_t p, std::int64_t s) {
  detail::check_family_a(m, p, s);
  std::vector<Polynomial> cs;
  for (std::int64_t k = 1; k <= s; ++k) {
    const BigInt g = gcd_u64(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(s));
    std::vector<BigInt> coeffs(static_cast<std::size_t>(m) + 1);
    for (std::int64_t j = 0; j <= m; ++j) {
      BigInt v = (p * binomial(m - 1, j - 2) + binomial(m - 1, j - 1)) * g + p * binomial(m - 1, j - 1) +
                 binomial(m - 1, j);
      coeffs[static_cast<std::size_t>(m - j)] = j % 2 == 0 ? v : BigInt(-v);
    }
    cs.emplace_back(std::move(coeffs));
  }
  return QuasiPolynomial::from_constituents(std::move(cs));
}

// Family A count written through open-cube Ehrhart polynomials:
//   (q - g)(L_{m-1} + p sum_{k=1}^{m-1} (-1)^k L_{m-1-k}) + (-1)^m p,
// g = gcd(q, s), L_d = (q-1)^d.
inline BigInt ehrhart_form_A(std::int64_t m, std::int64_t p, std::int64_t s, const BigInt& q) {
  detail::check_family_a(m, p, s);
  const BigInt g = detail::gcd_with(q, s);
  BigInt inner = detail::open_cube_count(q, m - 1);
  for (std::int64_t k = 1; k <= m - 1; ++k)
    inner += (k % 2 == 0 ? 1 : -1) * p * detail::open_cube_count(q, m - 1 - k);
  return (q - g) * inner + (m % 2 == 0 ? p : -p);
}

// Right-hand side of the reciprocity identity, expected to equal
// (-1)^m chi_A(-q) with gcd(-q, s) = gcd(q, s):
//   (q + g)(L'_{m-1} + p sum_{k=1}^{m-1} L'_{m-1-k}) + p, L'_d = (q+1)^d.
inline BigInt reciprocity_A(std::int64_t m, std::int64_t p, std::int64_t s, const BigInt& q) {
  detail::check_family_a(m, p, s);
  const BigInt g = detail::gcd_with(q, s);
  BigInt inner = detail::closed_cube_count(q, m - 1);
  for (std::int64_t k = 1; k <= m - 1; ++k) inner += p * detail::closed_cube_count(q, m - 1 - k);
  return (q + g) * inner + p;
}

// (-1)^m chi_A(-q) from the closed form, for comparison with reciprocity_A.
inline BigInt closed_form_A_at_negative(std::int64_t m, std::int64_t p, std::int64_t s, const BigInt& q) {
  const QuasiPolynomial qp = closed_form_A(m, p, s);
  const BigInt v = qp.constituent(detail::gcd_with(q, s))(-q);
  return m % 2 == 0 ? v : BigInt(-v);
}

// #{(l, r) in [a] x [p] : a | (l q - r) and q - (l q - r)/a in [1, q-1]}:
// lattice points on the boundary segments left over by the family D
// dissection.
inline std::uint64_t correction_term(std::int64_t a, std::int64_t p, std::int64_t q) {
  if (a < 1 || p < 1) throw ValidationError("correction_term needs a, p >= 1");
  if (q <= p) throw ValidationError("correction_term needs q > p");
  std::uint64_t count = 0;
  for (std::int64_t l = 1; l <= a; ++l)
    for (std::int64_t r = 1; r <= p; ++r) {
      const std::int64_t num = exact_sub(exact_mul(l, q), r);
      if (num % a != 0) continue;
      const std::int64_t x = q - num / a;
      if (x >= 1 && x <= q - 1) ++count;
    }
  return count;
}

// Family D count for q > p:
//   L_m + p sum_{k=1}^{m-1} (-1)^k L_{m-k} + (-1)^m correction_term(a, p, q).
inline BigInt dissection_form_D(std::int64_t m, std::int64_t a, std::int64_t p, std::int64_t q) {
  validate(FamilyParams{FamilyKind::D, m, p, 1, a});
  const BigInt bq = q;
  BigInt v = detail::open_cube_count(bq, m);
  for (std::int64_t k = 1; k <= m - 1; ++k) v += (k % 2 == 0 ? 1 : -1) * p * detail::open_cube_count(bq, m - k);
  const BigInt c = correction_term(a, p, q);
  return m % 2 == 0 ? BigInt(v + c) : BigInt(v - c);
}

// The polynomial L_m + p sum_{k=1}^{m} (-1)^k L_{m-k} evaluated at q; equals
// the family D count when a = 1, or a = p and q >= 2p.
inline BigInt polynomial_form_D(std::int64_t m, std::int64_t p, const BigInt& q) {
  BigInt v = detail::open_cube_count(q, m);
  for (std::int64_t k = 1; k <= m; ++k) v += (k % 2 == 0 ? 1 : -1) * p * detail::open_cube_count(q, m - k);
  return v;
}

// chi_A(q) - chi_B(q) = (-1)^m gcd(q, s).
inline BigInt difference_A_B(std::int64_t m, std::int64_t s, const BigInt& q) {
  const BigInt g = detail::gcd_with(q, s);
  return m % 2 == 0 ? g : BigInt(-g);
}

// chi_A(q) - chi_A'(q) = (-1)^m (p - g #{r in [p] : g | r}), g = gcd(q, a).
inline BigInt difference_A_Aprime(std::int64_t m, std::int64_t p, std::int64_t a, const BigInt& q) {
  const std::int64_t g = static_cast<std::int64_t>(detail::gcd_with(q, a));
  std::int64_t multiples = 0;
  for (std::int64_t r = 1; r <= p; ++r) multiples += r % g == 0;
  const BigInt v = BigInt(p) - BigInt(g) * multiples;
  return m % 2 == 0 ? v : BigInt(-v);
}

}  // namespace qcp
