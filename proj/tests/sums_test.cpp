#include "mhsc/sums.hpp"

#include <gtest/gtest.h>

#include <random>

namespace mhsc {
namespace {

// Oracle: direct enumeration of 1 <= j_1 <= ... <= j_r <= n.
Rational naive_mhs(unsigned n, const std::vector<unsigned>& t) {
  Rational total = 0;
  std::vector<unsigned> idx;
  auto recurse = [&](auto&& self, unsigned lo) -> void {
    if (idx.size() == t.size()) {
      Rational term = 1;
      for (std::size_t i = 0; i < t.size(); ++i) term /= Rational(power(Integer(idx[i]), t[i]));
      total += term;
      return;
    }
    for (unsigned j = lo; j <= n; ++j) {
      idx.push_back(j);
      self(self, j);
      idx.pop_back();
    }
  };
  recurse(recurse, 1);
  return total;
}

Sequence constant(const Rational& c) {
  return [c](unsigned) { return c; };
}

Sequence inverse_power(unsigned r) {
  return [r](unsigned k) { return k == 0 ? Rational(0) : Rational(1, power(Integer(k), r)); };
}

TEST(ExponentVector, RejectsZeroParts) {
  EXPECT_THROW(ExponentVector({1, 0}), PreconditionViolated);
  EXPECT_EQ(ExponentVector::uniform(2, 3).size(), 3u);
  EXPECT_EQ(ExponentVector({1, 1}).appended(2)[2], 2u);
}

TEST(MhsExact, Examples) {
  EXPECT_EQ(mhs_exact(3, {1}), make_rational(11, 6));
  EXPECT_EQ(mhs_exact(5, {}), 1);
  EXPECT_EQ(mhs_exact(2, {1, 2}), make_rational(11, 8));
  EXPECT_EQ(mhs_exact(0, {3}), 0);
  EXPECT_EQ(mhs_exact(0, {}), 1);
}

TEST(MhsExact, MatchesNaiveEnumeration) {
  std::vector<std::vector<unsigned>> vectors = {{}};
  for (unsigned r = 1; r <= 3; ++r) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& v : vectors) {
      if (v.size() != r - 1) continue;
      for (unsigned t = 1; t <= 3; ++t) {
        auto w = v;
        w.push_back(t);
        next.push_back(w);
      }
    }
    vectors.insert(vectors.end(), next.begin(), next.end());
  }
  ASSERT_EQ(vectors.size(), 1u + 3 + 9 + 27);
  for (unsigned n = 0; n <= 8; ++n) {
    for (const auto& t : vectors) {
      ASSERT_EQ(mhs_exact(n, ExponentVector(t)), naive_mhs(n, t)) << "n=" << n;
    }
  }
}

TEST(MhsExact, SinglePartIsHarmonic) {
  for (unsigned n = 0; n <= 30; ++n) {
    for (unsigned t = 1; t <= 5; ++t) ASSERT_EQ(mhs_exact(n, {t}), harmonic(n, t));
  }
}

TEST(MhsExact, TableAgreesWithPointValues) {
  const ExponentVector t{2, 1, 3};
  const auto table = mhs_exact_table(7, t);
  ASSERT_EQ(table.size(), 8u);
  for (unsigned n = 0; n <= 7; ++n) EXPECT_EQ(table[n], mhs_exact(n, t));
}

TEST(MhsMod, Examples) {
  EXPECT_EQ(mhs_mod(2, {1}, 5, 1).value(), 4);
  EXPECT_EQ(mhs_mod(0, {2}, 7, 2).value(), 0);
  EXPECT_EQ(mhs_mod(4, {1}, 5, 1).value(), 0);
  EXPECT_THROW(mhs_mod(5, {1}, 5, 1), PreconditionViolated);
}

TEST(MhsMod, MatchesReducedExact) {
  for (unsigned long p : {5UL, 7UL, 13UL, 31UL}) {
    for (unsigned k = 1; k <= 3; ++k) {
      for (const auto& t : {ExponentVector{1, 1}, ExponentVector{2, 2, 2}, ExponentVector{1, 3}, ExponentVector{}}) {
        const auto table = mhs_mod_table(static_cast<unsigned>(p - 1), t, p, k);
        const auto exact = mhs_exact_table(static_cast<unsigned>(p - 1), t);
        for (unsigned n = 0; n < p; ++n) ASSERT_EQ(table[n], mod_reduce(exact[n], p, k));
      }
    }
  }
}

TEST(Harmonic, Examples) {
  EXPECT_EQ(harmonic(1, 7), 1);
  EXPECT_EQ(harmonic(2, 2), make_rational(5, 4));
  EXPECT_EQ(harmonic(3, 1), make_rational(11, 6));
  EXPECT_EQ(harmonic(0, 3), 0);
  EXPECT_EQ(harmonic(5, 2), make_rational(5269, 3600));
}

TEST(PochhammerRatio, Examples) {
  EXPECT_EQ(pochhammer_ratio_mod(make_rational(1), 4, 7, 2).value(), 1);
  EXPECT_EQ(pochhammer_ratio_mod(make_rational(1, 2), 2, 5, 2), mod_reduce(make_rational(3, 8), 5, 2));
  EXPECT_EQ(pochhammer_ratio_mod(make_rational(1, 2), 2, 5, 2).value(), 16);
  EXPECT_EQ(pochhammer_ratio_mod(make_rational(0), 1, 5, 1).value(), 0);
  EXPECT_THROW(pochhammer_ratio_mod(make_rational(1), 7, 7, 1), PreconditionViolated);
  EXPECT_THROW(pochhammer_ratio_mod(make_rational(1, 7), 2, 7, 1), NotPAdicInteger);
}

TEST(PochhammerRatio, HalfIsCentralBinomial) {
  for (unsigned long p : {5UL, 7UL, 11UL, 29UL}) {
    for (unsigned k = 0; k < p; ++k) {
      const Rational expected(binomial(2 * k, k), power(Integer(4), k));
      ASSERT_EQ(pochhammer_ratio_mod(make_rational(1, 2), k, p, 2), mod_reduce(expected, p, 2));
    }
  }
}

TEST(PochhammerRatio, MatchesExactRisingFactorial) {
  const Rational x = make_rational(-7, 5);
  for (unsigned n = 0; n < 13; ++n) {
    ASSERT_EQ(pochhammer_ratio_mod(x, n, 13, 3), mod_reduce(pochhammer(x, n) / Rational(factorial(n)), 13, 3));
  }
}

TEST(TransformT, Examples) {
  EXPECT_EQ(transform_T(0, constant(make_rational(3, 7))), make_rational(3, 7));
  const auto mhs = mhs_exact_table(2, {1});
  const Sequence a = [&](unsigned k) { return k == 0 ? Rational(0) : mhs[k] / Rational(k); };
  EXPECT_EQ(transform_T(2, a), make_rational(-5, 4));
  EXPECT_EQ(transform_T(2, a), -harmonic(2, 2));
  EXPECT_EQ(transform_T(3, constant(1)), 0);
}

TEST(TransformA, Examples) {
  EXPECT_EQ(transform_A(1, constant(1)), -1);
  EXPECT_EQ(transform_A(0, constant(make_rational(5, 2))), make_rational(5, 2));
  EXPECT_EQ(transform_A(1, inverse_power(1)), -2);
  EXPECT_EQ(transform_A(2, inverse_power(2)), make_rational(-9, 2));
  for (unsigned j = 0; j <= 10; ++j) EXPECT_EQ(transform_A(j, constant(1)), j % 2 == 0 ? 1 : -1);
}

TEST(ProdingerA, Examples) {
  EXPECT_EQ(prodinger_A(1, 1), -2);
  for (unsigned r = 1; r <= 6; ++r) EXPECT_EQ(prodinger_A(0, r), 0);
  EXPECT_EQ(prodinger_A(2, 2), make_rational(-9, 2));
  EXPECT_THROW(prodinger_A(3, 0), PreconditionViolated);
}

TEST(ProdingerA, MatchesTransformOfInversePowers) {
  for (unsigned r = 1; r <= 6; ++r) {
    const Sequence a = inverse_power(r);
    for (unsigned j = 0; j <= 12; ++j) {
      ASSERT_EQ(prodinger_A(j, r), transform_A(j, a)) << "j=" << j << " r=" << r;
    }
  }
}

TEST(TransformA, MirrorSymmetryModP) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (unsigned long p : {5UL, 7UL, 11UL, 13UL}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> values(p);
      for (auto& v : values) v = dist(rng);
      const Sequence a = [&values](unsigned k) { return values[k]; };
      for (unsigned j = 0; j < p; ++j) {
        ASSERT_EQ(mod_reduce(transform_A(static_cast<unsigned>(p - 1 - j), a), p, 1),
                  mod_reduce(transform_A(j, a), p, 1))
            << "p=" << p << " j=" << j;
      }
    }
  }
}

TEST(CentralBinomTerm, Examples) {
  EXPECT_EQ(central_binom_term(1, 7, 2, false).value(), 25);
  EXPECT_EQ(central_binom_term(0, 7, 2, false).value(), 1);
  EXPECT_EQ(central_binom_term(0, 7, 3, true).value(), 1);
  EXPECT_EQ(central_binom_term(2, 5, 2, true), mod_reduce(make_rational(9, 64), 5, 2));
  EXPECT_EQ(central_binom_term(2, 5, 2, true).value(), 6);
}

}  // namespace
}  // namespace mhsc
