#include <gtest/gtest.h>

#include <cmath>

#include "qcp/qcp.hpp"

using qcp::BigInt;
using qcp::FamilyKind;
using qcp::IntMatrix;

namespace {

qcp::ArrangementInput fam(FamilyKind k, std::int64_t m, std::int64_t p, std::int64_t s, std::int64_t a = 1) {
  return qcp::family_matrix({k, m, p, s, a});
}

bool fits(std::uint64_t q, std::int64_t m, double limit = 3e5) { return std::pow(double(q), double(m)) <= limit; }

}  // namespace

TEST(FamilyMatrix, A122) {
  const auto a = fam(FamilyKind::A, 1, 2, 2);
  EXPECT_EQ(a.coefficients(), (IntMatrix{{2, 2, 2}}));
  EXPECT_EQ(a.offsets(), (std::vector<std::int64_t>{0, 1, 2}));
}

TEST(FamilyMatrix, D222) {
  const auto a = fam(FamilyKind::D, 2, 2, 1, 2);
  EXPECT_EQ(a.coefficients(), (IntMatrix{{1, 0, 1, 1}, {0, 1, 2, 2}}));
  EXPECT_EQ(a.offsets(), (std::vector<std::int64_t>{0, 0, 1, 2}));
}

TEST(FamilyMatrix, BOffsets) {
  const auto a = fam(FamilyKind::B, 2, 2, 1);
  EXPECT_EQ(a.offsets(), (std::vector<std::int64_t>{0, 0, 0, 1}));
}

TEST(FamilyMatrix, Validation) {
  EXPECT_THROW(fam(FamilyKind::A, 2, 4, 3), qcp::ValidationError);
  EXPECT_THROW(fam(FamilyKind::A, 0, 4, 2), qcp::ValidationError);
  EXPECT_THROW(fam(FamilyKind::B, 1, 2, 1), qcp::ValidationError);
  EXPECT_THROW(fam(FamilyKind::B, 2, 1, 1), qcp::ValidationError);
  EXPECT_THROW(fam(FamilyKind::D, 2, 2, 1, 0), qcp::ValidationError);
}

TEST(ClosedFormA, Examples) {
  const auto a = qcp::closed_form_A(1, 2, 2);
  EXPECT_EQ(a.constituent(1).to_string(), "t - 3");
  EXPECT_EQ(a.constituent(2).to_string(), "t - 4");
  EXPECT_EQ(qcp::closed_form_A(1, 1, 1).constituent(1).to_string(), "t - 2");
  // s = 1: one constituent, constant 2p + 1 = 5 for m = p = 2
  EXPECT_EQ(qcp::closed_form_A(2, 2, 1).constituent(1).to_string(), "t^2 - 4t + 5");
}

TEST(ClosedFormA, MatchesComputedConstituents) {
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t p = 1; p <= 6; ++p)
      for (std::int64_t s = 1; s <= p; ++s) {
        if (p % s) continue;
        const auto r = qcp::collapse_report(fam(FamilyKind::A, m, p, s));
        const auto closed = qcp::closed_form_A(m, p, s);
        for (std::uint64_t k = 1; k <= r.lcm_period; ++k)
          EXPECT_EQ(r.quasi_polynomial.constituent(k), closed.constituent((k - 1) % s + 1))
              << "m=" << m << " p=" << p << " s=" << s << " k=" << k;
      }
}

TEST(EhrhartFormA, Examples) {
  EXPECT_EQ(qcp::ehrhart_form_A(1, 2, 2, 5), 2);
  EXPECT_EQ(qcp::ehrhart_form_A(1, 2, 2, 6), 2);
  EXPECT_EQ(qcp::ehrhart_form_A(2, 2, 1, 4), qcp::ktt_count(fam(FamilyKind::A, 2, 2, 1), 4));
}

TEST(EhrhartFormA, AgreesWithFormulaAboveQ0) {
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t p = 1; p <= 5; ++p)
      for (std::int64_t s = 1; s <= p; ++s) {
        if (p % s) continue;
        const auto a = fam(FamilyKind::A, m, p, s);
        const auto q0 = qcp::q_zero(a);
        for (std::uint64_t q = q0 + 1; q <= q0 + 12; ++q)
          EXPECT_EQ(qcp::ehrhart_form_A(m, p, s, q), qcp::ktt_count(a, q));
      }
}

TEST(Reciprocity, Examples) {
  EXPECT_EQ(qcp::reciprocity_A(1, 2, 2, 5), 8);
  EXPECT_EQ(qcp::closed_form_A_at_negative(1, 2, 2, 5), 8);
  EXPECT_EQ(qcp::reciprocity_A(1, 1, 1, 3), 5);
  EXPECT_EQ(qcp::closed_form_A_at_negative(1, 1, 1, 3), 5);
  for (std::int64_t q = 1; q <= 10; ++q)
    EXPECT_EQ(qcp::reciprocity_A(2, 2, 1, q), qcp::closed_form_A_at_negative(2, 2, 1, q));
}

TEST(Binomial, OutOfRangeIsZero) {
  EXPECT_EQ(qcp::binomial(3, -1), 0);
  EXPECT_EQ(qcp::binomial(3, 4), 0);
  EXPECT_EQ(qcp::binomial(5, 2), 10);
  EXPECT_EQ(qcp::binomial(0, 0), 1);
}

TEST(CorrectionTerm, Examples) {
  for (std::int64_t p = 1; p <= 4; ++p)
    for (std::int64_t q = p + 1; q <= 12; ++q) EXPECT_EQ(qcp::correction_term(1, p, q), std::uint64_t(p));
  for (std::int64_t p = 1; p <= 4; ++p)
    for (std::int64_t q = 2 * p; q <= 14; ++q) EXPECT_EQ(qcp::correction_term(p, p, q), std::uint64_t(p));
  EXPECT_EQ(qcp::correction_term(2, 2, 4), 2u);
  EXPECT_THROW(qcp::correction_term(2, 2, 2), qcp::ValidationError);
}

TEST(DissectionFormD, MatchesOracle) {
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t p = 1; p <= 3; ++p)
      for (std::int64_t a = 1; a <= 4; ++a) {
        const auto arr = fam(FamilyKind::D, m, p, 1, a);
        for (std::int64_t q = p + 1; q <= p + 7; ++q) {
          if (!fits(q, m)) break;
          EXPECT_EQ(qcp::dissection_form_D(m, a, p, q), qcp::brute_force_count(arr, q))
              << "m=" << m << " p=" << p << " a=" << a << " q=" << q;
        }
      }
}

TEST(FamilyD, PolynomialWhenADividesP) {
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t p = 1; p <= 4; ++p)
      for (std::int64_t a = 1; a <= p; ++a) {
        if (p % a) continue;
        const auto r = qcp::collapse_report(fam(FamilyKind::D, m, p, 1, a));
        EXPECT_EQ(r.minimum_period, 1u) << "m=" << m << " p=" << p << " a=" << a;
      }
}

TEST(FamilyD, NotPolynomialForA2P3) {
  const auto r = qcp::collapse_report(fam(FamilyKind::D, 2, 3, 1, 2));
  EXPECT_EQ(r.minimum_period, 2u);
}

TEST(FamilyD, PolynomialFormForAOneOrP) {
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t p = 1; p <= 3; ++p)
      for (std::int64_t a : {std::int64_t{1}, p}) {
        const auto arr = fam(FamilyKind::D, m, p, 1, a);
        const auto q0 = qcp::q_zero(arr);
        for (std::int64_t q = std::max<std::int64_t>(2 * p, q0 + 1); q <= 2 * p + 8; ++q)
          EXPECT_EQ(qcp::polynomial_form_D(m, p, q), qcp::ktt_count(arr, q));
      }
}

TEST(Identities, BDifference) {
  for (std::int64_t m : {2, 3})
    for (std::int64_t p : {2, 4})
      for (std::int64_t s = 1; s <= p; ++s) {
        if (p % s) continue;
        const auto a = fam(FamilyKind::A, m, p, s), b = fam(FamilyKind::B, m, p, s);
        const auto q0 = std::max(qcp::q_zero(a), qcp::q_zero(b));
        for (std::uint64_t q = q0 + 1; q <= q0 + 2 * p + 5; ++q)
          EXPECT_EQ(qcp::ktt_count(a, q) - qcp::ktt_count(b, q), qcp::difference_A_B(m, s, q))
              << "m=" << m << " p=" << p << " s=" << s << " q=" << q;
      }
}

TEST(Identities, AprimeDifference) {
  for (std::int64_t m : {1, 2, 3})
    for (std::int64_t p : {2, 3, 4})
      for (std::int64_t s = 1; s <= p; ++s) {
        if (p % s) continue;
        for (std::int64_t a = 1; a <= p + 1; ++a) {
          const auto x = fam(FamilyKind::A, m, p, s), y = fam(FamilyKind::Aprime, m, p, s, a);
          const auto q0 = std::max(qcp::q_zero(x), qcp::q_zero(y));
          for (std::uint64_t q = q0 + 1; q <= q0 + 2 * p + 5; ++q) {
            const BigInt diff = qcp::ktt_count(x, q) - qcp::ktt_count(y, q);
            EXPECT_EQ(diff, qcp::difference_A_Aprime(m, p, a, q));
            if (a == 1 || a == p) EXPECT_EQ(diff, 0);
          }
        }
      }
}
