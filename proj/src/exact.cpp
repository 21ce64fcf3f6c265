#include "mhsc/exact.hpp"

#include <charconv>
#include <sstream>

namespace mhsc {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw ConfigError("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part, bool allow_sign) {
    std::string_view digits = part;
    if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      digits.remove_prefix(1);
    }
    if (digits.empty()) throw ConfigError("malformed rational: '" + std::string(text) + "'");
    for (char c : digits) {
      if (c < '0' || c > '9') throw ConfigError("malformed rational: '" + std::string(text) + "'");
    }
    std::string s(part);
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
  };

  const auto slash = text.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_int(text, true));
  } else {
    Integer num = parse_int(text.substr(0, slash), true);
    Integer den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw ConfigError("zero denominator: '" + std::string(text) + "'");
    q = Rational(num, den);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& x) { return x.get_str(10); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer power(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational power(const Rational& base, unsigned long exponent) {
  Rational r(power(base.get_num(), exponent), power(base.get_den(), exponent));
  // num/den stay coprime under powering; sign lives in the numerator.
  return r;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<unsigned long> primes_between(unsigned long lo, unsigned long hi) {
  std::vector<unsigned long> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (unsigned long i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(i);
    for (unsigned long j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

bool p_integral(const Rational& x, unsigned long p) {
  return mpz_divisible_ui_p(x.get_den_mpz_t(), p) == 0;
}

// ---------------------------------------------------------------------------
// Residue

Residue::Residue(const Integer& value, unsigned long prime, unsigned exponent)
    : value_(value), prime_(prime), exponent_(exponent) {
  if (prime < 2) throw PreconditionViolated("residue prime must be >= 2");
  if (exponent < 1) throw PreconditionViolated("residue exponent must be >= 1");
  modulus_ = power(Integer(prime), exponent);
  normalize();
}

void Residue::normalize() { mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t()); }

void Residue::require_same_ring(const Residue& other) const {
  if (!same_ring(other)) {
    throw ModulusMismatch("residues modulo " + modulus_string() + " and " + other.modulus_string());
  }
}

std::string Residue::modulus_string() const {
  return std::to_string(prime_) + "^" + std::to_string(exponent_);
}

Residue& Residue::operator+=(const Residue& rhs) {
  require_same_ring(rhs);
  value_ += rhs.value_;
  if (value_ >= modulus_) value_ -= modulus_;
  return *this;
}

Residue& Residue::operator-=(const Residue& rhs) {
  require_same_ring(rhs);
  value_ -= rhs.value_;
  if (value_ < 0) value_ += modulus_;
  return *this;
}

Residue& Residue::operator*=(const Residue& rhs) {
  require_same_ring(rhs);
  value_ *= rhs.value_;
  normalize();
  return *this;
}

Residue& Residue::operator/=(const Residue& rhs) {
  require_same_ring(rhs);
  return *this *= mod_inv(rhs);
}

Residue Residue::operator-() const {
  Residue r = *this;
  if (r.value_ != 0) r.value_ = modulus_ - r.value_;
  return r;
}

Residue Residue::pow(unsigned long e) const {
  Residue r = *this;
  mpz_powm_ui(r.value_.get_mpz_t(), value_.get_mpz_t(), e, modulus_.get_mpz_t());
  return r;
}

bool operator==(const Residue& lhs, const Residue& rhs) {
  lhs.require_same_ring(rhs);
  return lhs.value_ == rhs.value_;
}

std::string to_string(const Residue& r) { return r.value().get_str(10); }

Residue mod_inv(const Residue& a) {
  if (mpz_divisible_ui_p(a.value().get_mpz_t(), a.prime()) != 0) {
    throw NotInvertible(a.value().get_str() + " is not invertible modulo " + a.modulus_string());
  }
  Integer inv;
  mpz_invert(inv.get_mpz_t(), a.value().get_mpz_t(), a.modulus().get_mpz_t());
  return Residue(inv, a.prime(), a.exponent());
}

Residue mod_reduce(const Rational& x, unsigned long p, unsigned k) {
  if (!p_integral(x, p)) {
    throw NotPAdicInteger(to_string(x) + " is not a " + std::to_string(p) + "-adic integer");
  }
  Residue num(x.get_num(), p, k);
  Residue den(x.get_den(), p, k);
  return num * mod_inv(den);
}

Residue truncate(const Residue& a, unsigned k) {
  if (k > a.exponent()) throw PreconditionViolated("cannot raise precision by truncation");
  return Residue(a.value(), a.prime(), k);
}

Residue lift_times_p(const Residue& a) {
  return Residue(a.value() * a.prime(), a.prime(), a.exponent() + 1);
}

ResidueAndS residue_and_s(const Rational& x, unsigned long p, unsigned k) {
  const Residue wide = mod_reduce(x, p, k + 1);
  const unsigned long low = mpz_fdiv_ui(wide.value().get_mpz_t(), p);
  const unsigned long m = (p - low) % p;
  Integer shifted = wide.value() + m;
  // x + m is divisible by p by the choice of m.
  if (mpz_divisible_ui_p(shifted.get_mpz_t(), p) == 0) {
    throw std::logic_error("residue_and_s: x + <-x>_p not divisible by p");
  }
  mpz_divexact_ui(shifted.get_mpz_t(), shifted.get_mpz_t(), p);
  return {m, Residue(shifted, p, k)};
}

}  // namespace mhsc
