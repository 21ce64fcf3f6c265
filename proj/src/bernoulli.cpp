#include "mhsc/bernoulli.hpp"

#include <mutex>
#include <string>

namespace mhsc {

namespace {

void extend_bernoulli(std::vector<Rational>& values, unsigned N) {
  if (values.empty()) values.emplace_back(1);
  for (unsigned m = static_cast<unsigned>(values.size()); m <= N; ++m) {
    Rational sum = 0;
    for (unsigned j = 0; j < m; ++j) sum += Rational(binomial(m + 1, j)) * values[j];
    values.push_back(-sum / Rational(m + 1));
  }
}

}  // namespace

BernoulliTable bernoulli_numbers(unsigned N) {
  std::vector<Rational> values;
  extend_bernoulli(values, N);
  return BernoulliTable(std::move(values));
}

Rational bernoulli_number(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> cache;
  std::lock_guard lock(mutex);
  if (n >= cache.size()) extend_bernoulli(cache, n);
  return cache[n];
}

Rational bernoulli_poly(unsigned n, const Rational& x) {
  Rational sum = 0;
  Rational xp = 1;  // x^{n-m}, walking m downwards
  for (unsigned m = n + 1; m-- > 0;) {
    sum += Rational(binomial(n, m)) * bernoulli_number(m) * xp;
    xp *= x;
  }
  return sum;
}

Residue bernoulli_poly_mod(unsigned n, const Rational& x, unsigned long p, unsigned k) {
  if (n + 2 > p) {
    throw IndexTooLarge("B_" + std::to_string(n) + "(x) mod " + std::to_string(p) + " needs n <= p-2");
  }
  const Residue xr = mod_reduce(x, p, k);
  Residue sum = Residue::zero(p, k);
  Residue xp = Residue::one(p, k);
  for (unsigned m = n + 1; m-- > 0;) {
    const Rational b = bernoulli_number(m);
    // von Staudt-Clausen: only primes q with (q-1) | m divide the denominator.
    if (!p_integral(b, p)) {
      throw std::logic_error("B_" + std::to_string(m) + " is not " + std::to_string(p) + "-integral");
    }
    sum += Residue(binomial(n, m), p, k) * mod_reduce(b, p, k) * xp;
    xp *= xr;
  }
  return sum;
}

Residue power_sum_H_mod(const Rational& x, unsigned t, unsigned long p) {
  if (t < 2 || t + 1 >= p) {
    throw PreconditionViolated("power_sum_H_mod needs 2 <= t < p-1 (t=" + std::to_string(t) +
                               ", p=" + std::to_string(p) + ")");
  }
  const unsigned n = static_cast<unsigned>(p - t);
  Residue diff = bernoulli_poly_mod(n, x, p) - mod_reduce(bernoulli_number(n), p, 1);
  diff /= Residue(static_cast<long>(t), p, 1);
  return t % 2 == 0 ? diff : -diff;
}

Residue half_harmonic_mod(unsigned t, unsigned long p) {
  if (t <= 1 || t + 4 >= p) {
    throw PreconditionViolated("half_harmonic_mod needs 1 < t < p-4 (t=" + std::to_string(t) +
                               ", p=" + std::to_string(p) + ")");
  }
  if (t % 2 == 0) {
    // t (2^{t+1} - 1) / (2 (t+1)) * p * B_{p-t-1}  mod p^2
    Rational c(Integer(t) * (power(Integer(2), t + 1) - 1), Integer(2 * (t + 1)));
    c.canonicalize();
    const Rational b = bernoulli_number(static_cast<unsigned>(p - t - 1));
    return lift_times_p(mod_reduce(c * b, p, 1));
  }
  // -(2^t - 2) / t * B_{p-t}  mod p
  Rational c(-(power(Integer(2), t) - 2), Integer(t));
  c.canonicalize();
  return mod_reduce(c * bernoulli_number(static_cast<unsigned>(p - t)), p, 1);
}

}  // namespace mhsc
