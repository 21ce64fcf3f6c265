#pragma once

// Multiple harmonic sums, harmonic numbers, Pochhammer ratios and the two
// binomial transforms, in exact and modular form.

#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "mhsc/exact.hpp"

namespace mhsc {

// Composition (t_1, ..., t_r) of positive integers. Empty is allowed.
class ExponentVector {
 public:
  ExponentVector() = default;
  ExponentVector(std::initializer_list<unsigned> parts);
  explicit ExponentVector(std::vector<unsigned> parts);

  // ({t}^r): r copies of t.
  static ExponentVector uniform(unsigned t, unsigned r);

  std::span<const unsigned> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  unsigned operator[](std::size_t i) const { return parts_[i]; }

  // (t_1, ..., t_r, t).
  ExponentVector appended(unsigned t) const;

 private:
  std::vector<unsigned> parts_;
};

// Sequence a_0, a_1, ... supplied as an evaluator.
using Sequence = std::function<Rational(unsigned k)>;

// S_n(t_1..t_r) summed over 1 <= j_1 <= ... <= j_r <= n. S_n() = 1 and
// S_0(t) = 0 for non-empty t.
Rational mhs_exact(unsigned n, const ExponentVector& t);

// [S_0(t), S_1(t), ..., S_n(t)], all in one pass of the recurrence.
std::vector<Rational> mhs_exact_table(unsigned n, const ExponentVector& t);

// Modular image of mhs_exact; requires n < p.
Residue mhs_mod(unsigned n, const ExponentVector& t, unsigned long p, unsigned k);
std::vector<Residue> mhs_mod_table(unsigned n, const ExponentVector& t, unsigned long p, unsigned k);

// H_n^(t) = sum_{j=1}^n 1/j^t.
Rational harmonic(unsigned n, unsigned t);

// (x)_n / (1)_n mod p^k; requires n < p and p-integral x.
Residue pochhammer_ratio_mod(const Rational& x, unsigned n, unsigned long p, unsigned k);

// Exact rising factorial (x)_n.
Rational pochhammer(const Rational& x, unsigned n);

// T_j = sum_k (-1)^k C(j,k) a_k.
Rational transform_T(unsigned j, const Sequence& a);

// A_j = sum_k (-1)^k C(j,k) C(j+k,k) a_k.
Rational transform_A(unsigned j, const Sequence& a);

// Closed form of A_j for a_k = 1/k^r (a_0 = 0): a signed sum over the
// partitions of r into odd parts.
Rational prodinger_A(unsigned j, unsigned r);

// C(2k,k)/4^k mod p^precision, or its square when `squared` is set.
Residue central_binom_term(unsigned k, unsigned long p, unsigned precision, bool squared);

}  // namespace mhsc
