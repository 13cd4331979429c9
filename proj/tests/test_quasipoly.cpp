#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "qcp/number_theory.hpp"
#include "qcp/quasipoly.hpp"

using qcp::BigInt;
using qcp::Polynomial;
using qcp::QuasiPolynomial;
using qcp::Sample;

namespace {

Polynomial poly(std::initializer_list<std::int64_t> descending) {
  std::vector<BigInt> cs;
  for (auto c : descending) cs.emplace_back(c);
  return Polynomial::from_descending(cs);
}

QuasiPolynomial a122() { return QuasiPolynomial::from_constituents({poly({1, -3}), poly({1, -4})}); }

}  // namespace

TEST(Polynomial, Printing) {
  EXPECT_EQ(poly({1, -8, 16}).to_string(), "t^2 - 8t + 16");
  EXPECT_EQ(poly({1, 0, -1}).to_string("q"), "q^2 - 1");
  EXPECT_EQ(poly({-2, 1}).to_string(), "-2t + 1");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(QuasiPolynomial, Evaluate) {
  EXPECT_EQ(qcp::evaluate(QuasiPolynomial::from_constituents({poly({1, -2})}), 7), 5);
  EXPECT_EQ(qcp::evaluate(a122(), 5), 2);
  EXPECT_EQ(qcp::evaluate(a122(), 6), 2);
}

TEST(QuasiPolynomial, EvaluateRejectsNonPositive) {
  EXPECT_THROW(qcp::evaluate(a122(), 0), qcp::ValidationError);
}

TEST(QuasiPolynomial, MixedDegreesRejected) {
  EXPECT_THROW(QuasiPolynomial::from_constituents({poly({1, -3}), poly({1, 0, -4})}), qcp::ValidationError);
}

TEST(Interpolate, Line) {
  const auto p = qcp::interpolate_polynomial({{1, -1}, {3, 1}, {5, 3}}, 1);
  EXPECT_EQ(p, poly({1, -2}));
}

TEST(Interpolate, FamilyA122) {
  std::map<std::uint64_t, std::vector<Sample>> s = {{1, {{5, 2}, {7, 4}}}, {2, {{6, 2}, {8, 4}}}};
  const auto qp = qcp::interpolate_constituents(s, 1);
  EXPECT_EQ(qp.period(), 2u);
  EXPECT_EQ(qp.constituent(1), poly({1, -3}));
  EXPECT_EQ(qp.constituent(2), poly({1, -4}));
}

TEST(Interpolate, NonIntegral) {
  try {
    qcp::interpolate_polynomial({{1, 0}, {3, 1}, {5, 2}}, 1);
    FAIL() << "expected a consistency error";
  } catch (const qcp::ConsistencyError& e) {
    EXPECT_NE(std::string(e.what()).find("constituent not integral"), std::string::npos);
  }
}

TEST(Interpolate, HoldoutMismatch) {
  EXPECT_THROW(qcp::interpolate_polynomial({{1, 1}, {2, 2}, {3, 4}}, 1), qcp::ConsistencyError);
}

TEST(Interpolate, TooFewOrRepeatedSamples) {
  EXPECT_THROW(qcp::interpolate_polynomial({{1, 1}}, 1), qcp::ValidationError);
  EXPECT_THROW(qcp::interpolate_polynomial({{1, 1}, {1, 1}}, 1), qcp::ValidationError);
}

TEST(Interpolate, WrongClass) {
  std::map<std::uint64_t, std::vector<Sample>> s = {{1, {{5, 2}, {6, 4}}}, {2, {{6, 2}, {8, 4}}}};
  EXPECT_THROW(qcp::interpolate_constituents(s, 1), qcp::ValidationError);
}

TEST(Interpolate, RecoversRandomPolynomials) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto deg = static_cast<std::size_t>(gen::uniform(rng, 0, 5));
    std::vector<BigInt> cs(deg + 1);
    for (auto& c : cs) c = gen::uniform(rng, -1000, 1000);
    cs.back() = 1;
    const Polynomial p(cs);
    std::vector<Sample> samples;
    const std::int64_t start = gen::uniform(rng, -20, 20);
    const std::int64_t step = gen::uniform(rng, 1, 7);
    for (std::size_t i = 0; i < deg + 3; ++i) {
      const BigInt q = start + static_cast<std::int64_t>(i) * step;
      samples.push_back({q, p(q)});
    }
    EXPECT_EQ(qcp::interpolate_polynomial(samples, deg), p);
  }
}

TEST(MinimumPeriod, Examples) {
  const Polynomial sq = poly({1, -8, 16});
  EXPECT_EQ(qcp::minimum_period(QuasiPolynomial::from_constituents({sq, sq})), 1u);
  EXPECT_EQ(qcp::minimum_period(a122()), 2u);
  const Polynomial f1 = poly({1, -10, 26}), f3 = poly({1, -10, 25});
  const auto g2 = QuasiPolynomial::from_constituents({f1, f1, f3, f1, f1, f3});
  EXPECT_EQ(qcp::minimum_period(g2), 3u);
}

TEST(GcdProperty, Examples) {
  EXPECT_TRUE(qcp::has_gcd_property(QuasiPolynomial::from_constituents({poly({1, -2})})));
  EXPECT_TRUE(qcp::has_gcd_property(a122()));
  const auto bad = QuasiPolynomial::from_constituents({poly({1, 1}), poly({1, 2}), poly({1, 3}), poly({1, 2})});
  EXPECT_FALSE(qcp::has_gcd_property(bad));
}

namespace {

// Smallest s | rho such that the constituents repeat with period s, by brute force.
std::uint64_t smallest_period_by_scan(const std::vector<Polynomial>& cs) {
  const std::uint64_t rho = cs.size();
  for (std::uint64_t s = 1; s <= rho; ++s) {
    if (rho % s) continue;
    bool ok = true;
    for (std::uint64_t k = 0; k < rho && ok; ++k) ok = cs[k] == cs[k % s];
    if (ok) return s;
  }
  return rho;
}

}  // namespace

TEST(MinimumPeriod, MatchesScanOnRandomInputs) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = static_cast<std::uint64_t>(gen::uniform(rng, 1, 12));
    const auto reps = static_cast<std::uint64_t>(gen::uniform(rng, 1, 4));
    std::vector<Polynomial> base;
    for (std::uint64_t i = 0; i < s; ++i) base.push_back(poly({1, gen::uniform(rng, -2, 2)}));
    std::vector<Polynomial> cs;
    for (std::uint64_t r = 0; r < reps; ++r) cs.insert(cs.end(), base.begin(), base.end());
    const auto qp = QuasiPolynomial::from_constituents(cs);
    EXPECT_EQ(qcp::minimum_period(qp), smallest_period_by_scan(cs));
  }
}

TEST(QuasiPolynomial, PeriodMultipleLeavesValuesUnchanged) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = static_cast<std::uint64_t>(gen::uniform(rng, 1, 6));
    std::vector<Polynomial> cs;
    for (std::uint64_t i = 0; i < rho; ++i) cs.push_back(poly({1, gen::uniform(rng, -9, 9), gen::uniform(rng, -9, 9)}));
    const auto c = static_cast<std::uint64_t>(gen::uniform(rng, 2, 4));
    std::vector<Polynomial> expanded;
    for (std::uint64_t r = 0; r < c; ++r) expanded.insert(expanded.end(), cs.begin(), cs.end());
    const auto a = QuasiPolynomial::from_constituents(cs), b = QuasiPolynomial::from_constituents(expanded);
    for (std::int64_t q = 1; q <= 60; ++q) EXPECT_EQ(qcp::evaluate(a, q), qcp::evaluate(b, q));
    EXPECT_EQ(qcp::minimum_period(a), qcp::minimum_period(b));
  }
}

TEST(QuasiPolynomial, GcdIndexingMatchesResidueIndexing) {
  const std::uint64_t rho = 12;
  std::map<std::uint64_t, Polynomial> by_gcd;
  for (auto d : qcp::divisors(rho)) by_gcd.emplace(d, poly({1, -static_cast<std::int64_t>(d)}));
  const auto g = QuasiPolynomial::from_gcd_classes(rho, by_gcd);
  const auto r = qcp::to_residue_indexed(g);
  EXPECT_EQ(r.period(), rho);
  for (std::int64_t q = 1; q <= 50; ++q) EXPECT_EQ(qcp::evaluate(g, q), qcp::evaluate(r, q));
  EXPECT_TRUE(qcp::has_gcd_property(g));
  EXPECT_EQ(qcp::minimum_period(g), qcp::minimum_period(r));
  EXPECT_EQ(qcp::minimum_period(g), 12u);
}

TEST(NumberTheory, Divisors) {
  EXPECT_EQ(qcp::divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(qcp::divisors(1), (std::vector<std::uint64_t>{1}));
  const std::uint64_t big = 1000000007ULL * 998244353ULL;
  EXPECT_EQ(qcp::divisors(big), (std::vector<std::uint64_t>{1, 998244353ULL, 1000000007ULL, big}));
  EXPECT_TRUE(qcp::is_prime_u64(1000000007ULL));
  EXPECT_FALSE(qcp::is_prime_u64(1));
}
