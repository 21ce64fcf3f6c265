#include "mhsc/qseries.hpp"

#include <string>

#include "mhsc/sums.hpp"

namespace mhsc {

QPoly gauss_binom(unsigned m, unsigned k) {
  if (k > m) return QPoly();
  // row[i] = [row_index, i]
  std::vector<QPoly> row{QPoly(Rational(1))};
  for (unsigned mm = 1; mm <= m; ++mm) {
    std::vector<QPoly> next(mm + 1);
    for (unsigned i = 0; i <= mm; ++i) {
      QPoly v;
      if (i >= 1) v += row[i - 1];
      if (i < mm) v += row[i].shifted(i);
      next[i] = std::move(v);
    }
    row = std::move(next);
  }
  return row[k];
}

QRatFunc q_mhs(unsigned n, unsigned t, unsigned r) {
  if (t == 0) throw PreconditionViolated("q_mhs needs t >= 1");
  // prefix[i] = S_k({t}^i; q) for the current k.
  std::vector<QRatFunc> prefix(r + 1, QRatFunc(QPoly()));
  prefix[0] = QRatFunc(QPoly(Rational(1)));
  for (unsigned k = 1; k <= n; ++k) {
    const QPoly qk = QPoly::monomial(1, k);
    for (unsigned i = 1; i <= r; ++i) {
      QRatFunc step = prefix[i - 1] * qk;
      step.divide_one_minus_q_power(k, t);
      prefix[i] += step;
    }
  }
  return prefix[r];
}

namespace {

// q^{C(k,2) - (n-1)k + n(n-1)}, always a non-negative power for 1 <= k <= n.
QPoly shifted_sign_power(unsigned n, unsigned k) {
  const long e = static_cast<long>(k) * (k - 1) / 2 - static_cast<long>(n - 1) * k +
                 static_cast<long>(n) * (n - 1);
  if (e < 0) throw std::logic_error("negative q exponent after the q^{n(n-1)} prefactor");
  return QPoly::monomial(k % 2 == 0 ? 1 : -1, static_cast<std::size_t>(e));
}

std::size_t prefactor(unsigned n) { return static_cast<std::size_t>(n) * (n - 1); }

}  // namespace

QIdentitySides heq_sides(unsigned n, unsigned r) {
  if (n == 0) throw PreconditionViolated("heq needs n >= 1");
  QIdentitySides out{QRatFunc(QPoly()), QRatFunc(QPoly())};
  for (unsigned k = 1; k <= n; ++k) {
    QRatFunc term = q_mhs(k, 1, r);
    term *= gauss_binom(n, k) * shifted_sign_power(n, k);
    term.divide_one_minus_q_power(k);
    out.lhs += term;

    QRatFunc right(QPoly::monomial(-1, r * k + prefactor(n)));
    right.divide_one_minus_q_power(k, r + 1);
    out.rhs += right;
  }
  return out;
}

QIdentitySides taq_sides(unsigned n, unsigned r) {
  if (n == 0) throw PreconditionViolated("taq needs n >= 1");
  QIdentitySides out{QRatFunc(QPoly()), QRatFunc(QPoly())};
  for (unsigned k = 1; k <= n; ++k) {
    QRatFunc term = q_mhs(k, 2, r);
    term *= gauss_binom(n, k) * gauss_binom(n + k, k) * shifted_sign_power(n, k);
    term.divide_one_minus_q_power(k);
    out.lhs += term;

    QPoly one_plus_qk = QPoly(Rational(1)) + QPoly::monomial(1, k);
    QRatFunc right(-(one_plus_qk.shifted(r * k + prefactor(n))));
    right.divide_one_minus_q_power(k, 2 * r + 1);
    out.rhs += right;
  }
  return out;
}

bool verify_heq(unsigned n, unsigned r) { return heq_sides(n, r).holds(); }
bool verify_taq(unsigned n, unsigned r) { return taq_sides(n, r).holds(); }

Rational q_limit_value(unsigned n, unsigned t, unsigned r) {
  const QRatFunc s = q_mhs(n, t, r);
  QPoly num = s.numerator();
  // 1 - q^j = (1 - q)(1 + q + ... + q^{j-1}): the (1-q) content of the
  // denominator, less the (1-q)^{tr} we multiply by.
  long pending = -static_cast<long>(t) * r;
  Rational tail = 1;  // prod_j j^{m_j}, the other factors at q = 1
  for (const auto& [j, mult] : s.denominator_factors()) {
    pending += mult;
    tail *= Rational(power(Integer(static_cast<unsigned long>(j)), mult));
  }
  for (; pending < 0; ++pending) num.multiply_one_minus_q_power(1);
  while (pending > 0 && !num.is_zero() && num.divide_one_minus_q()) --pending;
  if (num.is_zero()) return 0;
  if (pending > 0) {
    throw ResidualPoleAtOne("(1-q)^" + std::to_string(pending) + " remains in the denominator");
  }
  return num.evaluate(1) / tail;
}

bool q_limit_check(unsigned n, unsigned r, unsigned t) {
  return q_limit_value(n, t, r) == mhs_exact(n, ExponentVector::uniform(t, r));
}

}  // namespace mhsc
