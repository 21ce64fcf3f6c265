#pragma once

// Dense univariate polynomials in q over the rationals, and rational
// functions whose denominators are products of cyclotomic-style factors
// (1 - q^j).

#include <map>
#include <string>
#include <vector>

#include "mhsc/exact.hpp"

namespace mhsc {

class QPoly {
 public:
  QPoly() = default;
  QPoly(const Rational& c);  // NOLINT: constants convert implicitly
  explicit QPoly(std::vector<Rational> coefficients);

  static QPoly monomial(const Rational& c, std::size_t degree);
  // 1 - q^j
  static QPoly one_minus_q_power(std::size_t j);

  // Lowest degree first, no trailing zeros; the zero polynomial is empty.
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational evaluate(const Rational& q) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const Rational& c);
  QPoly operator-() const;

  // Multiplication by q^e.
  QPoly shifted(std::size_t e) const;
  // In-place multiplication by (1 - q^j).
  QPoly& multiply_one_minus_q_power(std::size_t j);

  // Divides by (1 - q) with synthetic division. Returns false and leaves the
  // polynomial unchanged when the remainder is non-zero.
  bool divide_one_minus_q();

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::string to_string(const QPoly& p);

// Multiplicities of the factors (1 - q^j), keyed by j >= 1.
using CyclotomicFactors = std::map<std::size_t, unsigned>;

QPoly expand(const CyclotomicFactors& factors);

// numerator / prod_j (1 - q^j)^{m_j}. Equality is decided by
// cross-multiplication, never by evaluation.
class QRatFunc {
 public:
  QRatFunc() = default;
  QRatFunc(QPoly numerator);  // NOLINT: polynomials convert implicitly
  QRatFunc(QPoly numerator, CyclotomicFactors denominator);

  const QPoly& numerator() const { return num_; }
  const CyclotomicFactors& denominator_factors() const { return den_; }
  QPoly denominator() const { return expand(den_); }

  // Divides by (1 - q^j)^mult.
  QRatFunc& divide_one_minus_q_power(std::size_t j, unsigned mult = 1);

  QRatFunc& operator+=(const QRatFunc& rhs);
  QRatFunc& operator-=(const QRatFunc& rhs);
  QRatFunc& operator*=(const QRatFunc& rhs);
  QRatFunc& operator*=(const QPoly& rhs);
  QRatFunc operator-() const;

  friend QRatFunc operator+(QRatFunc a, const QRatFunc& b) { return a += b; }
  friend QRatFunc operator-(QRatFunc a, const QRatFunc& b) { return a -= b; }
  friend QRatFunc operator*(QRatFunc a, const QRatFunc& b) { return a *= b; }
  friend QRatFunc operator*(QRatFunc a, const QPoly& b) { return a *= b; }
  friend bool operator==(const QRatFunc& a, const QRatFunc& b);

 private:
  // Rewrites this over the given (larger) denominator.
  void raise_to(const CyclotomicFactors& target);

  QPoly num_;
  CyclotomicFactors den_;
};

}  // namespace mhsc
