#pragma once

// Gaussian binomials, q-multiple harmonic sums and the q-analogs of the two
// binomial harmonic identities.

#include "mhsc/qpoly.hpp"

namespace mhsc {

// [m, k]_q by the Pascal recurrence [m,k] = [m-1,k-1] + q^k [m-1,k];
// the zero polynomial when k > m.
QPoly gauss_binom(unsigned m, unsigned k);

// S_n({t}^r; q) = sum over 1 <= j_1 <= ... <= j_r <= n of
//   prod_i q^{j_i} / (1 - q^{j_i})^t.
QRatFunc q_mhs(unsigned n, unsigned t, unsigned r);

// Both sides of the q-analog identities multiplied by q^{n(n-1)}, which
// absorbs every negative power q^{C(k,2) - (n-1)k}.
struct QIdentitySides {
  QRatFunc lhs;
  QRatFunc rhs;
  bool holds() const { return lhs == rhs; }
};

QIdentitySides heq_sides(unsigned n, unsigned r);
QIdentitySides taq_sides(unsigned n, unsigned r);

bool verify_heq(unsigned n, unsigned r);
bool verify_taq(unsigned n, unsigned r);

// Value of (1-q)^{t r} S_n({t}^r; q) at q = 1 after cancelling every (1-q)
// factor exactly. Throws ResidualPoleAtOne if a pole at q = 1 survives.
Rational q_limit_value(unsigned n, unsigned t, unsigned r);

// q_limit_value(n, t, r) == mhs_exact(n, {t}^r).
bool q_limit_check(unsigned n, unsigned r, unsigned t);

}  // namespace mhsc
