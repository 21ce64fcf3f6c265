#pragma once

// Exact identity checks: the partial-fraction expansions, the auxiliary
// G/F series and their recurrences, the two binomial harmonic identities,
// and a floating-point check of the Catalan-constant series.

#include "mhsc/exact.hpp"
#include "mhsc/sums.hpp"

namespace mhsc {

enum class Variant {
  kOnePochhammer,  // (x)_k/(1)_k with S_k({1}^r)
  kTwoPochhammer,  // (x)_k(-x)_k/(1)_k^2 (G) or (x)_k(1-x)_k/(1)_k^2 (F) with S_k({2}^r)
};

// G_n^(r)(x) = sum_{k=1}^n c_k(x) S_k({t}^r).
Rational aux_G(unsigned n, unsigned r, const Rational& x, Variant variant);

// F_n^(r)(x) = sum_{k=1}^n c_k(x) S_k({t}^r) / k.
Rational aux_F(unsigned n, unsigned r, const Rational& x, Variant variant);

struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

// sum_{k<n} (x)_k/(1)_k a_k  vs  (x)_n sum_{j<n} (-1)^j T_j / (j!(n-1-j)!) / (x+j).
// Throws PoleAtX when x is one of 0, -1, ..., -(n-1).
IdentitySides pdf1_sides(unsigned n, const Rational& x, const Sequence& a);
bool verify_pdf1(unsigned n, const Rational& x, const Sequence& a);

// Two-Pochhammer expansion with A_j; throws PoleAtX when x+j or 1-x+j
// vanishes for some j < n.
IdentitySides pdf2_sides(unsigned n, const Rational& x, const Sequence& a);
bool verify_pdf2(unsigned n, const Rational& x, const Sequence& a);

// sum_{k=1}^n (-1)^k C(n,k) S_k({1}^r)/k  vs  -H_n^(r+1).
IdentitySides he_sides(unsigned n, unsigned r);
bool verify_he(unsigned n, unsigned r);

// sum_{k=1}^n (-1)^k C(n,k) C(n+k,k) S_k({2}^r)/k  vs  -2 H_n^(2r+1).
IdentitySides ta_sides(unsigned n, unsigned r);
bool verify_ta(unsigned n, unsigned r);

struct CatalanCheck {
  double partial_sum;  // sum_{k<N} C(2k,k)^2 / ((2k+1) 16^k)
  double target;       // 4G/pi
};

// Catalan's constant from its alternating series, accelerated by repeated
// pairwise averaging of partial sums.
double catalan_constant();

CatalanCheck catalan_series(unsigned long terms);

}  // namespace mhsc
