#include "mhsc/exact.hpp"

#include <gtest/gtest.h>

#include <random>

namespace mhsc {
namespace {

// Extended Euclid on machine integers, as an oracle for mod_inv.
long long euclid_inverse(long long a, long long m) {
  long long old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const long long q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return ((old_s % m) + m) % m;
}

Rational random_rational(std::mt19937& rng, unsigned long avoid_p) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 60);
  long d = den(rng);
  while (d % static_cast<long>(avoid_p) == 0) d = den(rng);
  return make_rational(num(rng), d);
}

TEST(ModInv, Examples) {
  EXPECT_EQ(mod_inv(Residue(1L, 5, 2)).value(), 1);
  EXPECT_EQ(mod_inv(Residue(11L, 5, 2)).value(), 16);
  EXPECT_THROW(mod_inv(Residue(5L, 5, 2)), NotInvertible);
  EXPECT_THROW(mod_inv(Residue(0L, 7, 1)), NotInvertible);
}

TEST(ModInv, MatchesExtendedEuclid) {
  for (auto [p, k] : {std::pair{5UL, 3U}, {7UL, 3U}, {11UL, 2U}}) {
    const long long m = static_cast<long long>(power(Integer(p), k).get_si());
    for (long long a = 1; a < m; ++a) {
      if (a % static_cast<long long>(p) == 0) continue;
      ASSERT_EQ(mod_inv(Residue(static_cast<long>(a), p, k)).value(), static_cast<long>(euclid_inverse(a, m))) << a << " mod " << m;
    }
  }
}

TEST(ModInv, RandomInvertibleResidues) {
  std::mt19937 rng(7);
  for (auto [p, k] : {std::pair{5UL, 1U}, {5UL, 3U}, {13UL, 2U}, {97UL, 3U}, {101UL, 4U}}) {
    const Residue one = Residue::one(p, k);
    std::uniform_int_distribution<long> dist(1, 1'000'000'000L);
    int tested = 0;
    while (tested < 1000) {
      const Residue a(dist(rng), p, k);
      if (a.value() % p == 0) continue;
      ASSERT_EQ(mod_inv(a) * a, one);
      ++tested;
    }
  }
}

TEST(ModReduce, Examples) {
  EXPECT_EQ(mod_reduce(make_rational(3), 7, 1).value(), 3);
  EXPECT_EQ(mod_reduce(make_rational(1, 2), 5, 2).value(), 13);
  EXPECT_THROW(mod_reduce(make_rational(1, 5), 5, 2), NotPAdicInteger);
  EXPECT_EQ(mod_reduce(make_rational(-1), 7, 2).value(), 48);
  // p in the numerator is fine.
  EXPECT_EQ(mod_reduce(make_rational(5, 3), 5, 1).value(), 0);
}

TEST(ModReduce, RingHomomorphism) {
  std::mt19937 rng(11);
  for (auto [p, k] : {std::pair{5UL, 2U}, {7UL, 3U}, {31UL, 2U}}) {
    for (int i = 0; i < 200; ++i) {
      const Rational x = random_rational(rng, p);
      const Rational y = random_rational(rng, p);
      ASSERT_EQ(mod_reduce(x * y, p, k), mod_reduce(x, p, k) * mod_reduce(y, p, k));
      ASSERT_EQ(mod_reduce(x + y, p, k), mod_reduce(x, p, k) + mod_reduce(y, p, k));
      ASSERT_EQ(mod_reduce(x - y, p, k), mod_reduce(x, p, k) - mod_reduce(y, p, k));
    }
  }
}

TEST(ResidueAndS, Examples) {
  auto half = residue_and_s(make_rational(1, 2), 5, 1);
  EXPECT_EQ(half.m, 2u);
  EXPECT_EQ(half.s.value(), 3);

  auto zero = residue_and_s(make_rational(0), 7, 1);
  EXPECT_EQ(zero.m, 0u);
  EXPECT_EQ(zero.s.value(), 0);

  auto third = residue_and_s(make_rational(1, 3), 7, 1);
  EXPECT_EQ(third.m, 2u);
  EXPECT_EQ(third.s.value(), 5);

  EXPECT_THROW(residue_and_s(make_rational(1, 7), 7, 1), NotPAdicInteger);
}

TEST(ResidueAndS, FullPrecision) {
  // s = (x + m)/p as an exact rational, reduced at every precision.
  std::mt19937 rng(3);
  for (unsigned long p : {5UL, 7UL, 13UL}) {
    for (unsigned k = 1; k <= 3; ++k) {
      for (int i = 0; i < 100; ++i) {
        const Rational x = random_rational(rng, p);
        const auto [m, s] = residue_and_s(x, p, k);
        ASSERT_LT(m, p);
        // x + m == 0 mod p before dividing.
        ASSERT_TRUE((mod_reduce(x, p, 1) + Residue(static_cast<long>(m), p, 1)).is_zero());
        const Rational exact_s = (x + m) / Rational(p);
        ASSERT_EQ(s, mod_reduce(exact_s, p, k)) << to_string(x) << " p=" << p;
      }
    }
  }
}

TEST(Residue, Arithmetic) {
  const Residue a(7L, 5, 2), b(20L, 5, 2);
  EXPECT_EQ((a + b).value(), 2);
  EXPECT_EQ((a - b).value(), 12);
  EXPECT_EQ((a * b).value(), 15);
  EXPECT_EQ((-a).value(), 18);
  EXPECT_EQ(a.pow(3).value(), 343 % 25);
  EXPECT_EQ(Residue(-1L, 5, 3).value(), 124);
  EXPECT_EQ(a.modulus_string(), "5^2");
  EXPECT_THROW((void)(a + Residue(1L, 5, 3)), ModulusMismatch);
  EXPECT_THROW((void)(a == Residue(1L, 7, 2)), ModulusMismatch);
}

TEST(Residue, LiftAndTruncate) {
  const Residue a(3L, 7, 1);
  const Residue lifted = lift_times_p(a);
  EXPECT_EQ(lifted.exponent(), 2u);
  EXPECT_EQ(lifted.value(), 21);
  EXPECT_EQ(truncate(Residue(30L, 7, 2), 1).value(), 2);
  EXPECT_THROW(truncate(a, 2), PreconditionViolated);
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-7/5"), make_rational(-7, 5));
  EXPECT_EQ(parse_rational("+5"), make_rational(5));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(parse_rational("-6")), "-6");
}

TEST(Rational, ParseErrors) {
  EXPECT_THROW(parse_rational(""), ConfigError);
  EXPECT_THROW(parse_rational("abc"), ConfigError);
  EXPECT_THROW(parse_rational("1/0"), ConfigError);
  EXPECT_THROW(parse_rational("1/"), ConfigError);
  EXPECT_THROW(parse_rational("1.5"), ConfigError);
  EXPECT_THROW(parse_rational("4/-2"), ConfigError);
}

TEST(Integers, BinomialFactorialPrimes) {
  EXPECT_EQ(binomial(9, 4), 126);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(power(make_rational(-2, 3), 3), make_rational(-8, 27));
  EXPECT_EQ(primes_between(5, 31), (std::vector<unsigned long>{5, 7, 11, 13, 17, 19, 23, 29, 31}));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
}

}  // namespace
}  // namespace mhsc
