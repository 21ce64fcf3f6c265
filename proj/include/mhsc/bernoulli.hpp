#pragma once

// Bernoulli numbers and polynomials, exact and modulo p.

#include <vector>

#include "mhsc/exact.hpp"

namespace mhsc {

// B_0 .. B_N with B_1 = -1/2.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {}

  const Rational& operator[](std::size_t n) const { return values_.at(n); }
  std::size_t size() const { return values_.size(); }
  std::size_t max_index() const { return values_.size() - 1; }

 private:
  std::vector<Rational> values_;
};

// From sum_{j=0}^{m} C(m+1, j) B_j = 0.
BernoulliTable bernoulli_numbers(unsigned N);

// B_n from a process-wide table that grows on demand (mutex guarded).
Rational bernoulli_number(unsigned n);

// B_n(x) = sum_m C(n,m) B_m x^{n-m}.
Rational bernoulli_poly(unsigned n, const Rational& x);

// B_n(x) mod p^k. Requires n <= p - 2 so that every B_m involved is
// p-integral; the denominators are checked anyway.
Residue bernoulli_poly_mod(unsigned n, const Rational& x, unsigned long p, unsigned k = 1);

// (-1)^t (B_{p-t}(x) - B_{p-t}) / t mod p, which is congruent to the
// harmonic number H^(t) of <-x>_p. Requires 2 <= t < p - 1.
Residue power_sum_H_mod(const Rational& x, unsigned t, unsigned long p);

// H^(t)_{(p-1)/2} via Bernoulli numbers: modulo p^2 for even t, modulo p for
// odd t. Requires 1 < t < p - 4.
Residue half_harmonic_mod(unsigned t, unsigned long p);

}  // namespace mhsc
