#include "mhsc/sums.hpp"

#include <string>

namespace mhsc {

ExponentVector::ExponentVector(std::initializer_list<unsigned> parts)
    : ExponentVector(std::vector<unsigned>(parts)) {}

ExponentVector::ExponentVector(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned t : parts_) {
    if (t == 0) throw PreconditionViolated("exponent vector entries must be positive");
  }
}

ExponentVector ExponentVector::uniform(unsigned t, unsigned r) {
  return ExponentVector(std::vector<unsigned>(r, t));
}

ExponentVector ExponentVector::appended(unsigned t) const {
  std::vector<unsigned> parts = parts_;
  parts.push_back(t);
  return ExponentVector(std::move(parts));
}

// Two-index dynamic program: prefix[i] holds S_k(t_1..t_i) for the current k,
// updated by S_k(t_1..t_i) = S_{k-1}(t_1..t_i) + S_k(t_1..t_{i-1}) / k^{t_i}.
std::vector<Rational> mhs_exact_table(unsigned n, const ExponentVector& t) {
  const std::size_t r = t.size();
  std::vector<Rational> prefix(r + 1, Rational(0));
  prefix[0] = 1;
  std::vector<Rational> out;
  out.reserve(n + 1);
  out.push_back(prefix[r]);
  for (unsigned k = 1; k <= n; ++k) {
    for (std::size_t i = 1; i <= r; ++i) {
      prefix[i] += prefix[i - 1] / Rational(power(Integer(k), t[i - 1]));
    }
    out.push_back(prefix[r]);
  }
  return out;
}

Rational mhs_exact(unsigned n, const ExponentVector& t) { return mhs_exact_table(n, t).back(); }

std::vector<Residue> mhs_mod_table(unsigned n, const ExponentVector& t, unsigned long p, unsigned k) {
  if (n >= p) {
    throw PreconditionViolated("mhs_mod needs n < p (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
  }
  const std::size_t r = t.size();
  std::vector<Residue> prefix(r + 1, Residue::zero(p, k));
  prefix[0] = Residue::one(p, k);
  std::vector<Residue> out;
  out.reserve(n + 1);
  out.push_back(prefix[r]);
  for (unsigned j = 1; j <= n; ++j) {
    const Residue inv = mod_inv(Residue(static_cast<long>(j), p, k));
    for (std::size_t i = 1; i <= r; ++i) {
      prefix[i] += prefix[i - 1] * inv.pow(t[i - 1]);
    }
    out.push_back(prefix[r]);
  }
  return out;
}

Residue mhs_mod(unsigned n, const ExponentVector& t, unsigned long p, unsigned k) {
  return mhs_mod_table(n, t, p, k).back();
}

Rational harmonic(unsigned n, unsigned t) {
  Rational sum = 0;
  for (unsigned j = 1; j <= n; ++j) sum += Rational(1, power(Integer(j), t));
  return sum;
}

Residue pochhammer_ratio_mod(const Rational& x, unsigned n, unsigned long p, unsigned k) {
  if (n >= p) {
    throw PreconditionViolated("pochhammer_ratio_mod needs n < p (n=" + std::to_string(n) + ")");
  }
  const Residue xr = mod_reduce(x, p, k);
  Residue num = Residue::one(p, k);
  Residue den = Residue::one(p, k);
  for (unsigned i = 0; i < n; ++i) {
    num *= xr + Residue(static_cast<long>(i), p, k);
    den *= Residue(static_cast<long>(i + 1), p, k);
  }
  return num * mod_inv(den);
}

Rational pochhammer(const Rational& x, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x + i;
  return r;
}

Rational transform_T(unsigned j, const Sequence& a) {
  Rational sum = 0;
  for (unsigned k = 0; k <= j; ++k) {
    Rational term = Rational(binomial(j, k)) * a(k);
    if (k % 2 == 0) sum += term; else sum -= term;
  }
  return sum;
}

Rational transform_A(unsigned j, const Sequence& a) {
  Rational sum = 0;
  for (unsigned k = 0; k <= j; ++k) {
    Rational term = Rational(binomial(j, k) * binomial(j + k, k)) * a(k);
    if (k % 2 == 0) sum += term; else sum -= term;
  }
  return sum;
}

namespace {

// Enumerates multisets of odd parts summing to `remaining`, parts taken in
// decreasing order, accumulating prod_i (2 H^(i) / i)^{k_i} / k_i! over the
// chosen multiplicities k_i.
void accumulate_odd_partitions(int remaining, int max_part, const Rational& weight,
                               const std::vector<Rational>& harmonics, Rational& total) {
  if (remaining == 0) {
    total += weight;
    return;
  }
  for (int part = max_part; part >= 1; part -= 2) {
    const Rational base = 2 * harmonics[part] / Rational(part);
    Rational w = weight;
    for (int mult = 1; mult * part <= remaining; ++mult) {
      w *= base / Rational(mult);
      accumulate_odd_partitions(remaining - mult * part, part - 2, w, harmonics, total);
    }
  }
}

}  // namespace

Rational prodinger_A(unsigned j, unsigned r) {
  if (r == 0) throw PreconditionViolated("prodinger_A needs r >= 1");
  std::vector<Rational> harmonics(r + 1);
  for (unsigned i = 1; i <= r; i += 2) harmonics[i] = harmonic(j, i);
  Rational total = 0;
  const int largest_odd = (r % 2 == 1) ? static_cast<int>(r) : static_cast<int>(r) - 1;
  accumulate_odd_partitions(static_cast<int>(r), largest_odd, Rational(1), harmonics, total);
  return -total;
}

Residue central_binom_term(unsigned k, unsigned long p, unsigned precision, bool squared) {
  Residue term = pochhammer_ratio_mod(make_rational(1, 2), k, p, precision);
  return squared ? term * term : term;
}

}  // namespace mhsc
