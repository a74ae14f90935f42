#include <moyrt/qalg.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace moyrt;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-8, 8), c(-5, 5), n(0, 5);
  LaurentPoly p;
  for (int i = n(rng); i > 0; --i) p += LaurentPoly::monomial_half(c(rng), e(rng));
  return p;
}

}  // namespace

TEST(LaurentPoly, PrintsAscending) {
  EXPECT_EQ((LaurentPoly::q(1) + LaurentPoly::q(-1)).to_string(), "q^-1 + q");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ(LaurentPoly::monomial(-2, 3).to_string(), "-2*q^3");
  EXPECT_EQ(LaurentPoly::monomial_half(1, 1).to_string(), "q^(1/2)");
  EXPECT_EQ(LaurentPoly::monomial_half(-1, -3).to_string(), "-q^(-3/2)");
  EXPECT_EQ(LaurentPoly::constant(-7).to_string(), "-7");
}

TEST(LaurentPoly, ParseRoundTrip) {
  for (const char* s : {"0", "1", "q", "-q^-1", "q^-4 + q^-2 + 2 + q^2 + q^4", "-2*q^(-3/2) + 5*q^(1/2)", "q^-1 + q"})
    EXPECT_EQ(P(s).to_string(), s);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(rng);
    EXPECT_EQ(P(p.to_string()), p);
  }
}

TEST(LaurentPoly, ParseRejectsGarbage) {
  EXPECT_THROW(P("q^"), std::invalid_argument);
  EXPECT_THROW(P("2*"), std::invalid_argument);
  EXPECT_THROW(P("x"), std::invalid_argument);
}

TEST(LaurentPoly, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
  }
}

TEST(LaurentPoly, NoZeroTermsStored) {
  const auto p = LaurentPoly::q(2) + LaurentPoly::monomial(-1, 2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.term_count(), 0u);
}

TEST(LaurentPoly, ExactDivision) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    EXPECT_EQ((a * b).divide_exact(b), a);
  }
  EXPECT_THROW(LaurentPoly::constant(1).divide_exact(quantum_int(2)), std::domain_error);
}

TEST(LaurentPoly, EvaluateAtOne) {
  for (int m = 0; m <= 8; ++m) EXPECT_EQ(quantum_int(m).evaluate_at(1), m);
  EXPECT_THROW(LaurentPoly::monomial_half(1, 1).evaluate_at(1), std::domain_error);
  EXPECT_EQ(P("q^-1 + q").evaluate_at(Rational(2)), Rational(5, 2));
}

TEST(Quantum, IntegerClosedForm) {
  // (q - q^-1)[n] = q^n - q^-n
  const auto d = LaurentPoly::q(1) - LaurentPoly::q(-1);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(d * quantum_int(n), LaurentPoly::q(n) - LaurentPoly::q(-n));
}

TEST(Quantum, BinomialSmallValues) {
  EXPECT_EQ(quantum_binomial(4, 2).to_string(), "q^-4 + q^-2 + 2 + q^2 + q^4");
  EXPECT_EQ(quantum_binomial(2, 1).to_string(), "q^-1 + q");
  EXPECT_TRUE(quantum_binomial(3, 4).is_zero());
  EXPECT_TRUE(quantum_binomial(3, -1).is_zero());
  EXPECT_THROW(quantum_binomial(-1, 0), std::invalid_argument);
}

TEST(Quantum, BinomialRoutesAgree) {
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(quantum_binomial(m + n, n), quantum_binomial_partition_sum(m, n)) << m << " " << n;
}

TEST(Quantum, BinomialPascalAndSymmetry) {
  for (int m = 1; m <= 9; ++m)
    for (int k = 0; k <= m; ++k) {
      const auto lhs = quantum_binomial(m, k);
      EXPECT_EQ(lhs, quantum_binomial(m, m - k));
      EXPECT_EQ(lhs, lhs.bar());
      // [m choose k] = q^{-k} [m-1 choose k] + q^{m-k} [m-1 choose k-1]
      EXPECT_EQ(lhs, LaurentPoly::q(-k) * quantum_binomial(m - 1, k) + LaurentPoly::q(m - k) * quantum_binomial(m - 1, k - 1));
      // at q = 1 the ordinary binomial
      Rational ord = 1;
      for (int i = 0; i < k; ++i) ord = ord * (m - i) / (i + 1);
      EXPECT_EQ(lhs.evaluate_at(1), ord);
    }
}

TEST(TauPoly, TauSquaresToOne) {
  const auto t = TauPoly::tau();
  EXPECT_EQ(t * t, TauPoly::scalar(LaurentPoly::constant(1)));
  const auto x = TauPoly(P("q"), P("2 + q^-1"));
  EXPECT_EQ(x.to_string(), "(q) + tau*(q^-1 + 2)");
  EXPECT_EQ((x * t).even(), x.odd());
  EXPECT_EQ(x.substitute_tau_one(), P("q^-1 + 2 + q"));
}
