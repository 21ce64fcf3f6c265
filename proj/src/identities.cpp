#include "mhsc/identities.hpp"

#include <numbers>
#include <string>
#include <vector>

namespace mhsc {

namespace {

// Returns [c_0, ..., c_n] for the variant's hypergeometric coefficient.
std::vector<Rational> coefficients(unsigned n, const Rational& x, Variant variant, bool f_series) {
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  const Rational second = f_series ? Rational(1 - x) : Rational(-x);
  for (unsigned k = 1; k <= n; ++k) {
    c[k] = c[k - 1] * (x + (k - 1)) / Rational(k);
    if (variant == Variant::kTwoPochhammer) c[k] *= (second + (k - 1)) / Rational(k);
  }
  return c;
}

unsigned mhs_exponent(Variant v) { return v == Variant::kOnePochhammer ? 1 : 2; }

Rational aux_series(unsigned n, unsigned r, const Rational& x, Variant variant, bool f_series) {
  const auto c = coefficients(n, x, variant, f_series);
  const auto mhs = mhs_exact_table(n, ExponentVector::uniform(mhs_exponent(variant), r));
  Rational sum = 0;
  for (unsigned k = 1; k <= n; ++k) {
    Rational term = c[k] * mhs[k];
    if (f_series) term /= k;
    sum += term;
  }
  return sum;
}

std::vector<Rational> materialize(const Sequence& a, unsigned n) {
  std::vector<Rational> v;
  v.reserve(n);
  for (unsigned k = 0; k < n; ++k) v.push_back(a(k));
  return v;
}

}  // namespace

Rational aux_G(unsigned n, unsigned r, const Rational& x, Variant variant) {
  return aux_series(n, r, x, variant, false);
}

Rational aux_F(unsigned n, unsigned r, const Rational& x, Variant variant) {
  return aux_series(n, r, x, variant, true);
}

IdentitySides pdf1_sides(unsigned n, const Rational& x, const Sequence& a) {
  for (unsigned j = 0; j < n; ++j) {
    if (x + j == 0) throw PoleAtX("x = " + to_string(x) + " is a pole of the n=" + std::to_string(n) + " expansion");
  }
  const auto values = materialize(a, n);
  const Sequence cached = [&values](unsigned k) { return values[k]; };

  IdentitySides out{0, 0};
  Rational coeff = 1;
  for (unsigned k = 0; k < n; ++k) {
    out.lhs += coeff * values[k];
    coeff *= (x + k) / Rational(k + 1);
  }

  Rational partial = 0;
  for (unsigned j = 0; j < n; ++j) {
    Rational term = transform_T(j, cached) / Rational(factorial(j) * factorial(n - 1 - j)) / (x + j);
    if (j % 2 == 0) partial += term; else partial -= term;
  }
  out.rhs = pochhammer(x, n) * partial;
  return out;
}

bool verify_pdf1(unsigned n, const Rational& x, const Sequence& a) { return pdf1_sides(n, x, a).holds(); }

IdentitySides pdf2_sides(unsigned n, const Rational& x, const Sequence& a) {
  const Rational y = 1 - x;
  for (unsigned j = 0; j < n; ++j) {
    if (x + j == 0 || y + j == 0) {
      throw PoleAtX("x = " + to_string(x) + " is a pole of the n=" + std::to_string(n) + " expansion");
    }
  }
  const auto values = materialize(a, n);
  const Sequence cached = [&values](unsigned k) { return values[k]; };

  IdentitySides out{0, 0};
  Rational coeff = 1;
  for (unsigned k = 0; k < n; ++k) {
    out.lhs += coeff * values[k];
    coeff *= (x + k) * (y + k) / Rational(Integer(k + 1) * (k + 1));
  }

  Rational partial = 0;
  for (unsigned j = 0; j < n; ++j) {
    const Rational poles = 1 / (x + j) + 1 / (y + j);
    Rational term = transform_A(j, cached) / Rational(factorial(n + j) * factorial(n - 1 - j)) * poles;
    if (j % 2 == 0) partial += term; else partial -= term;
  }
  out.rhs = pochhammer(x, n) * pochhammer(y, n) * partial;
  return out;
}

bool verify_pdf2(unsigned n, const Rational& x, const Sequence& a) { return pdf2_sides(n, x, a).holds(); }

IdentitySides he_sides(unsigned n, unsigned r) {
  const auto mhs = mhs_exact_table(n, ExponentVector::uniform(1, r));
  IdentitySides out{0, -harmonic(n, r + 1)};
  for (unsigned k = 1; k <= n; ++k) {
    Rational term = Rational(binomial(n, k)) * mhs[k] / k;
    if (k % 2 == 0) out.lhs += term; else out.lhs -= term;
  }
  return out;
}

bool verify_he(unsigned n, unsigned r) { return he_sides(n, r).holds(); }

IdentitySides ta_sides(unsigned n, unsigned r) {
  const auto mhs = mhs_exact_table(n, ExponentVector::uniform(2, r));
  IdentitySides out{0, -2 * harmonic(n, 2 * r + 1)};
  for (unsigned k = 1; k <= n; ++k) {
    Rational term = Rational(binomial(n, k) * binomial(n + k, k)) * mhs[k] / k;
    if (k % 2 == 0) out.lhs += term; else out.lhs -= term;
  }
  return out;
}

bool verify_ta(unsigned n, unsigned r) { return ta_sides(n, r).holds(); }

double catalan_constant() {
  // Partial sums of sum_j (-1)^j / (2j+1)^2, then repeated averaging of
  // neighbours (each pass cancels the leading alternating error term).
  constexpr int kSums = 64;
  std::vector<double> sums(kSums);
  double acc = 0.0;
  for (int j = 0; j < kSums; ++j) {
    const double d = 2.0 * j + 1.0;
    acc += (j % 2 == 0 ? 1.0 : -1.0) / (d * d);
    sums[j] = acc;
  }
  for (int level = kSums - 1; level > 0; --level) {
    for (int i = 0; i < level; ++i) sums[i] = 0.5 * (sums[i] + sums[i + 1]);
  }
  return sums[0];
}

CatalanCheck catalan_series(unsigned long terms) {
  if (terms == 0) throw PreconditionViolated("catalan_series needs at least one term");
  // c_k = C(2k,k)^2 / 16^k via c_k = c_{k-1} ((2k-1)/(2k))^2
  double c = 1.0;
  double sum = 0.0;
  double compensation = 0.0;
  for (unsigned long k = 0; k < terms; ++k) {
    if (k > 0) {
      const double ratio = (2.0 * k - 1.0) / (2.0 * k);
      c *= ratio * ratio;
    }
    const double y = c / (2.0 * k + 1.0) - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }
  return {sum, 4.0 * catalan_constant() / std::numbers::pi};
}

}  // namespace mhsc
