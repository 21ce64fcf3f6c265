#pragma once

// Exact integers and rationals (GMP-backed) and residues modulo prime powers.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "mhsc/errors.hpp"

namespace mhsc {

using Integer = mpz_class;
// GMP keeps mpq values canonical (reduced, positive denominator) after every
// arithmetic operation; only direct construction from a numerator/denominator
// pair needs an explicit canonicalize(), which make_rational() performs.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "a", "-a", "a/b" with b != 0. Throws ConfigError otherwise.
Rational parse_rational(std::string_view text);

// Canonical decimal form: "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& x);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer power(const Integer& base, unsigned long exponent);
Rational power(const Rational& base, unsigned long exponent);

bool is_prime(unsigned long n);
// All primes in [lo, hi] by a sieve of Eratosthenes.
std::vector<unsigned long> primes_between(unsigned long lo, unsigned long hi);

bool p_integral(const Rational& x, unsigned long p);

// An element of Z / p^k Z. The value is kept in [0, p^k).
class Residue {
 public:
  Residue(const Integer& value, unsigned long prime, unsigned exponent);
  Residue(long value, unsigned long prime, unsigned exponent)
      : Residue(Integer(value), prime, exponent) {}

  static Residue zero(unsigned long prime, unsigned exponent) { return {0L, prime, exponent}; }
  static Residue one(unsigned long prime, unsigned exponent) { return {1L, prime, exponent}; }

  const Integer& value() const { return value_; }
  unsigned long prime() const { return prime_; }
  unsigned exponent() const { return exponent_; }
  const Integer& modulus() const { return modulus_; }
  // "p^k", the serialized form of the modulus.
  std::string modulus_string() const;

  bool is_zero() const { return value_ == 0; }
  bool same_ring(const Residue& other) const {
    return prime_ == other.prime_ && exponent_ == other.exponent_;
  }

  Residue& operator+=(const Residue& rhs);
  Residue& operator-=(const Residue& rhs);
  Residue& operator*=(const Residue& rhs);
  Residue& operator/=(const Residue& rhs);
  Residue operator-() const;

  Residue pow(unsigned long e) const;

  friend Residue operator+(Residue lhs, const Residue& rhs) { return lhs += rhs; }
  friend Residue operator-(Residue lhs, const Residue& rhs) { return lhs -= rhs; }
  friend Residue operator*(Residue lhs, const Residue& rhs) { return lhs *= rhs; }
  friend Residue operator/(Residue lhs, const Residue& rhs) { return lhs /= rhs; }
  friend bool operator==(const Residue& lhs, const Residue& rhs);

 private:
  void require_same_ring(const Residue& other) const;
  void normalize();

  Integer value_;
  unsigned long prime_;
  unsigned exponent_;
  Integer modulus_;
};

std::string to_string(const Residue& r);

// Inverse modulo p^k. Throws NotInvertible when p divides a.
Residue mod_inv(const Residue& a);

// The residue of a p-integral rational. Throws NotPAdicInteger when p
// divides the denominator.
Residue mod_reduce(const Rational& x, unsigned long p, unsigned k);

// Same element at a lower precision k' <= k.
Residue truncate(const Residue& a, unsigned k);

// Given a mod p^k, returns p*a as an element of Z / p^(k+1) Z.
Residue lift_times_p(const Residue& a);

struct ResidueAndS {
  unsigned long m;  // least non-negative residue of -x mod p
  Residue s;        // (x + m) / p mod p^k
};

// Splits a p-adic integer x as x = s*p - m. Works modulo p^(k+1) so that the
// exact division by p still leaves k digits of s.
ResidueAndS residue_and_s(const Rational& x, unsigned long p, unsigned k);

}  // namespace mhsc
