#include <moyrt/gdim.hpp>
#include <moyrt/samples.hpp>
#include <moyrt/state_sum.hpp>
#include <moyrt/verify.hpp>

#include <gtest/gtest.h>

using namespace moyrt;

TEST(Gdim, CircleAtTauOneIsBracket) {
  for (int N = 1; N <= 5; ++N)
    for (int m = 1; m <= N; ++m) {
      const auto g = gdim_circle(m, N);
      EXPECT_EQ(g.value.substitute_tau_one(), bracket(samples::circle(m), N));
      // tau-degree is m mod 2, and cr of the circle is m
      EXPECT_EQ(g.value.odd().is_zero(), m % 2 == 0);
      EXPECT_EQ(colored_rotation_number(samples::circle(m)) % 2, m % 2);
    }
  EXPECT_THROW(gdim_circle(3, 2), std::invalid_argument);
}

TEST(Gdim, Decomp3Identity) {
  for (int N = 2; N <= 6; ++N)
    for (int m = 1; m <= N - 1; ++m) EXPECT_TRUE(check_decomp3_identity(m, N)) << m << " " << N;
  EXPECT_THROW(gdim_decomp3(0, 3), std::invalid_argument);
  EXPECT_THROW(gdim_decomp3(3, 3), std::invalid_argument);
}

TEST(Gdim, Decomp3SmallestCase) {
  // m = 1, N = 2: [N-m-1] = 0, so Gamma and Gamma0 agree
  const auto t = gdim_decomp3(1, 2);
  EXPECT_EQ(t.gamma.value, t.gamma0.value);
}

TEST(Gdim, Decomp4Identity) {
  int checked = 0;
  for (int N = 1; N <= 6; ++N)
    for (int m = 0; m <= N; ++m)
      for (int n = 0; n <= m; ++n)
        for (int l = 0; m + l - 1 <= N; ++l) {
          ASSERT_TRUE(decomp4_admissible(l, m, n, N));
          EXPECT_TRUE(check_decomp4_identity(l, m, n, N)) << l << " " << m << " " << n << " " << N;
          ++checked;
        }
  EXPECT_GT(checked, 250);
  EXPECT_FALSE(decomp4_admissible(1, 2, 3, 4));
  EXPECT_THROW(gdim_decomp4(0, 5, 0, 4), std::invalid_argument);
}

TEST(Gdim, IdentityCheckCanFail) {
  // perturbing one piece breaks the decomp3 identity
  auto t = gdim_decomp3(2, 5);
  t.gamma1.value = t.gamma1.value * LaurentPoly::q(2);
  EXPECT_NE(t.gamma.value, t.gamma0.value + TauPoly::tau() * quantum_int(2) * t.gamma1.value);
}

TEST(Gdim, SuitePasses) {
  const auto r = verify_gdim({});
  EXPECT_TRUE(r.ok());
}
