#include "mhsc/bernoulli.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mhsc/congruence.hpp"
#include "mhsc/sums.hpp"

namespace mhsc {
namespace {

// Akiyama-Tanigawa: an oracle for B_n that shares nothing with the
// defining recurrence. It yields B_1 = +1/2, so only compare n != 1.
Rational akiyama_tanigawa(unsigned n) {
  std::vector<Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
  }
  return a[0];
}

TEST(BernoulliNumbers, Examples) {
  const auto table = bernoulli_numbers(12);
  EXPECT_EQ(table[0], 1);
  EXPECT_EQ(table[1], make_rational(-1, 2));
  EXPECT_EQ(table[2], make_rational(1, 6));
  EXPECT_EQ(table[12], make_rational(-691, 2730));
  EXPECT_EQ(bernoulli_number(12), make_rational(-691, 2730));
}

TEST(BernoulliNumbers, TableInvariants) {
  const auto table = bernoulli_numbers(60);
  ASSERT_EQ(table.max_index(), 60u);
  EXPECT_EQ(table[0], 1);
  EXPECT_EQ(table[1], make_rational(-1, 2));
  for (unsigned m = 1; 2 * m + 1 <= 60; ++m) EXPECT_EQ(table[2 * m + 1], 0) << 2 * m + 1;
  for (unsigned k = 1; k <= 60; ++k) {
    Rational sum = 0;
    for (unsigned j = 0; j <= k; ++j) sum += Rational(binomial(k + 1, j)) * table[j];
    EXPECT_EQ(sum, 0) << "k=" << k;
  }
}

TEST(BernoulliNumbers, MatchesAkiyamaTanigawa) {
  for (unsigned n = 0; n <= 40; ++n) {
    if (n == 1) continue;
    ASSERT_EQ(bernoulli_number(n), akiyama_tanigawa(n)) << n;
  }
}

TEST(BernoulliPoly, HalfArgument) {
  for (unsigned n = 1; n <= 20; ++n) {
    const Rational factor = Rational(1, power(Integer(2), 2 * n - 1)) - 1;
    EXPECT_EQ(bernoulli_poly(2 * n, make_rational(1, 2)), factor * bernoulli_number(2 * n));
    EXPECT_EQ(bernoulli_poly(2 * n + 1, make_rational(1, 2)), 0);
  }
}

TEST(BernoulliPolyMod, Examples) {
  EXPECT_EQ(bernoulli_poly_mod(2, make_rational(0), 7).value(), 6);
  EXPECT_EQ(bernoulli_poly_mod(2, make_rational(1, 2), 7), mod_reduce(make_rational(-1, 12), 7, 1));
  EXPECT_EQ(bernoulli_poly_mod(2, make_rational(1, 2), 7).value(), 4);
  EXPECT_EQ(bernoulli_poly_mod(3, make_rational(1, 2), 7).value(), 0);
  EXPECT_THROW(bernoulli_poly_mod(6, make_rational(0), 7), IndexTooLarge);
  EXPECT_THROW(bernoulli_poly_mod(2, make_rational(1, 7), 7), NotPAdicInteger);
}

TEST(BernoulliPolyMod, HigherPrecisionMatchesExact) {
  const Rational x = make_rational(-7, 5);
  for (unsigned n = 0; n <= 11; ++n) {
    ASSERT_EQ(bernoulli_poly_mod(n, x, 13, 3), mod_reduce(bernoulli_poly(n, x), 13, 3));
  }
}

TEST(BernoulliPolyMod, DifferenceEquation) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 30);
  for (unsigned long p : {5UL, 7UL, 11UL, 13UL, 23UL, 47UL}) {
    for (int i = 0; i < 50; ++i) {
      long d = den(rng);
      while (d % static_cast<long>(p) == 0) d = den(rng);
      const Rational x = make_rational(num(rng), d);
      const Residue xr = mod_reduce(x, p, 1);
      for (unsigned n = 1; n + 2 <= p; ++n) {
        const Residue lhs = bernoulli_poly_mod(n, x + 1, p) - bernoulli_poly_mod(n, x, p);
        const Residue rhs = Residue(static_cast<long>(n), p, 1) * xr.pow(n - 1);
        ASSERT_EQ(lhs, rhs) << "p=" << p << " n=" << n << " x=" << to_string(x);
      }
    }
  }
}

TEST(PowerSumH, Examples) {
  EXPECT_EQ(power_sum_H_mod(make_rational(0), 2, 7).value(), 0);
  EXPECT_EQ(power_sum_H_mod(make_rational(0), 4, 11).value(), 0);
  EXPECT_EQ(power_sum_H_mod(make_rational(1, 2), 2, 7), mod_reduce(make_rational(49, 36), 7, 1));
  EXPECT_EQ(power_sum_H_mod(make_rational(1, 2), 2, 7).value(), 0);
  EXPECT_EQ(power_sum_H_mod(make_rational(1, 3), 2, 7), mod_reduce(harmonic(2, 2), 7, 1));
  EXPECT_EQ(power_sum_H_mod(make_rational(1, 3), 2, 7).value(), 3);
  EXPECT_THROW(power_sum_H_mod(make_rational(1, 3), 1, 7), PreconditionViolated);
  EXPECT_THROW(power_sum_H_mod(make_rational(1, 3), 6, 7), PreconditionViolated);
}

TEST(PowerSumH, MatchesDirectPowerSum) {
  // H^(t)_m == sum_{j=1}^m j^{p-1-t} (mod p), m = <-x>_p.
  for (unsigned long p : primes_between(5, 50)) {
    for (const auto& x : default_x_set()) {
      if (!p_integral(x, p)) continue;
      const auto [m, s] = residue_and_s(x, p, 1);
      for (unsigned t = 2; t + 1 < p; ++t) {
        Residue direct = Residue::zero(p, 1);
        for (unsigned long j = 1; j <= m; ++j) direct += Residue(static_cast<long>(j), p, 1).pow(p - 1 - t);
        ASSERT_EQ(power_sum_H_mod(x, t, p), direct) << "p=" << p << " t=" << t << " x=" << to_string(x);
        ASSERT_EQ(direct, mod_reduce(harmonic(static_cast<unsigned>(m), t), p, 1));
      }
    }
  }
}

TEST(HalfHarmonic, Examples) {
  EXPECT_EQ(half_harmonic_mod(2, 11), mod_reduce(make_rational(5269, 3600), 11, 2));
  EXPECT_EQ(half_harmonic_mod(2, 11).value(), 22);
  EXPECT_EQ(half_harmonic_mod(3, 11), mod_reduce(harmonic(5, 3), 11, 1));
  EXPECT_EQ(half_harmonic_mod(3, 11).value(), 3);
  EXPECT_EQ(half_harmonic_mod(2, 11).exponent(), 2u);
  EXPECT_EQ(half_harmonic_mod(3, 11).exponent(), 1u);
  EXPECT_THROW(half_harmonic_mod(3, 7), PreconditionViolated);
  EXPECT_THROW(half_harmonic_mod(1, 97), PreconditionViolated);
}

TEST(HalfHarmonic, MatchesDirectSums) {
  for (unsigned long p : primes_between(7, 97)) {
    for (unsigned t = 2; t + 4 < p; ++t) {
      const unsigned k = t % 2 == 0 ? 2 : 1;
      ASSERT_EQ(half_harmonic_mod(t, p), mod_reduce(harmonic(static_cast<unsigned>((p - 1) / 2), t), p, k))
          << "p=" << p << " t=" << t;
    }
  }
}

}  // namespace
}  // namespace mhsc
