#include "mhsc/congruence.hpp"

#include <string>

#include "mhsc/bernoulli.hpp"

namespace mhsc {

std::string_view statement_name(Statement s) {
  switch (s) {
    case Statement::kSI1: return "si1";
    case Statement::kSI2: return "si2";
    case Statement::kCI1: return "ci1";
    case Statement::kCI2: return "ci2";
    case Statement::kA1: return "a1";
    case Statement::kA2: return "a2";
    case Statement::kAuxA: return "aux-a";
    case Statement::kAuxB: return "aux-b";
    case Statement::kAuxC1: return "aux-c1";
    case Statement::kAuxC2: return "aux-c2";
    case Statement::kAuxD1: return "aux-d1";
    case Statement::kAuxD2: return "aux-d2";
    case Statement::kAuxD3: return "aux-d3";
    case Statement::kAuxE: return "aux-e";
  }
  return "?";
}

std::vector<Rational> default_x_set() {
  return {make_rational(0),    make_rational(1),    make_rational(1, 2), make_rational(1, 3),
          make_rational(2, 3), make_rational(1, 4), make_rational(3, 4), make_rational(1, 6),
          make_rational(5),    make_rational(-7, 5)};
}

namespace {

std::string pstr(unsigned long p) { return std::to_string(p); }

void require(bool condition, const std::string& what) {
  if (!condition) throw PreconditionViolated(what);
}

void require_odd_prime(unsigned long p) { require(p > 2 && is_prime(p), pstr(p) + " is not an odd prime"); }

void require_p_integral(const Rational& x, unsigned long p) {
  if (!p_integral(x, p)) throw NotPAdicInteger(to_string(x) + " is not " + pstr(p) + "-integral");
}

Residue signed_residue(long v, unsigned long p, unsigned k) { return Residue(v, p, k); }

CongruenceReport finish(CongruenceReport rep, Residue lhs, Residue rhs, const CheckOptions& opts) {
  if (opts.perturb_rhs) rhs += Residue::one(rhs.prime(), rhs.exponent());
  rep.pass = lhs == rhs;
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  return rep;
}

bool use_exact(LhsMode mode, unsigned long p) {
  return mode == LhsMode::kExact || (mode == LhsMode::kAuto && p <= kExactLhsMaxPrime);
}

// sum_{k=1}^{p-1} c_k S_k(t)/k mod p^prec, where
//   c_k = prod_{a in shifts} (a)_k / (1)_k.
Residue pochhammer_mhs_sum(unsigned long p, unsigned prec, const std::vector<Rational>& shifts,
                           const ExponentVector& t, LhsMode mode) {
  const unsigned n = static_cast<unsigned>(p - 1);
  if (use_exact(mode, p)) {
    const auto mhs = mhs_exact_table(n, t);
    Rational coeff = 1;
    Rational sum = 0;
    for (unsigned k = 1; k <= n; ++k) {
      for (const auto& a : shifts) coeff *= (a + (k - 1)) / Rational(k);
      sum += coeff * mhs[k] / Rational(k);
    }
    return mod_reduce(sum, p, prec);
  }
  const auto mhs = mhs_mod_table(n, t, p, prec);
  std::vector<Residue> shift_res;
  for (const auto& a : shifts) shift_res.push_back(mod_reduce(a, p, prec));
  Residue coeff = Residue::one(p, prec);
  Residue sum = Residue::zero(p, prec);
  for (unsigned k = 1; k <= n; ++k) {
    const Residue inv_k = mod_inv(Residue(static_cast<long>(k), p, prec));
    const Residue km1(static_cast<long>(k - 1), p, prec);
    for (const auto& a : shift_res) coeff *= (a + km1) * inv_k;
    sum += coeff * mhs[k] * inv_k;
  }
  return sum;
}

Residue harmonic_mod(unsigned n, unsigned t, unsigned long p, unsigned k) {
  return mod_reduce(harmonic(n, t), p, k);
}

}  // namespace

CongruenceReport check_si1(unsigned long p, const Rational& x, unsigned r, const CheckOptions& opts) {
  require_odd_prime(p);
  require(p > r + 3, "si1 needs p > r+3");
  require_p_integral(x, p);
  CongruenceReport rep{.statement = Statement::kSI1, .p = p, .r = r, .x = x};

  const Residue lhs = pochhammer_mhs_sum(p, 2, {x}, ExponentVector::uniform(1, r), opts.lhs_mode);

  const auto [m, s] = residue_and_s(x, p, 1);
  const Residue b = bernoulli_poly_mod(static_cast<unsigned>(p - r - 2), x, p, 1);
  const Residue spb = lift_times_p(s * b);  // s p B_{p-r-2}(x) mod p^2
  Residue rhs = -harmonic_mod(static_cast<unsigned>(m), r + 1, p, 2);
  if (r % 2 == 0) rhs -= spb; else rhs += spb;
  return finish(std::move(rep), lhs, rhs, opts);
}

CongruenceReport check_si2(unsigned long p, const Rational& x, unsigned r, const CheckOptions& opts) {
  require_odd_prime(p);
  require(p > 2 * r + 3, "si2 needs p > 2r+3");
  require_p_integral(x, p);
  CongruenceReport rep{.statement = Statement::kSI2, .p = p, .r = r, .x = x};

  const Residue lhs =
      pochhammer_mhs_sum(p, 3, {x, 1 - x}, ExponentVector::uniform(2, r), opts.lhs_mode);

  const auto [m, s2] = residue_and_s(x, p, 2);  // s mod p^2
  const unsigned mm = static_cast<unsigned>(m);
  const long rr = static_cast<long>(r);

  // -2 H^(2r+1)_m  mod p^3
  Residue rhs = signed_residue(-2, p, 3) * harmonic_mod(mm, 2 * r + 1, p, 3);

  // -2(2r+1) s p H^(2r+2)_m: the cofactor of p is needed mod p^2.
  const Residue middle =
      signed_residue(-2 * (2 * rr + 1), p, 2) * s2 * harmonic_mod(mm, 2 * r + 2, p, 2);
  rhs += lift_times_p(middle);

  // 2 s (1 + 3sr + 2sr^2) / (2r+3) p^2 B_{p-2r-3}(x): cofactor of p^2 mod p.
  const Residue s1 = truncate(s2, 1);
  const Residue two_r_plus_3(2 * rr + 3, p, 1);
  const Residue inner = Residue::one(p, 1) + s1 * Residue(3 * rr + 2 * rr * rr, p, 1);
  const Residue last = Residue(2L, p, 1) * s1 * inner * mod_inv(two_r_plus_3) *
                       bernoulli_poly_mod(static_cast<unsigned>(p - 2 * r - 3), x, p, 1);
  rhs += lift_times_p(lift_times_p(last));
  return finish(std::move(rep), lhs, rhs, opts);
}

CongruenceReport check_ci1(unsigned long p, unsigned r, const CheckOptions& opts) {
  require_odd_prime(p);
  require(p > r + 3, "ci1 needs p > r+3");
  CongruenceReport rep{.statement = Statement::kCI1, .p = p, .r = r, .x = make_rational(1, 2)};

  const unsigned n = static_cast<unsigned>(p - 1);
  const auto mhs = mhs_mod_table(n, ExponentVector::uniform(1, r), p, 2);
  Residue lhs = Residue::zero(p, 2);
  for (unsigned k = 1; k <= n; ++k) {
    lhs += central_binom_term(k, p, 2, false) * mhs[k] * mod_inv(Residue(static_cast<long>(k), p, 2));
  }

  Residue rhs = Residue::zero(p, 2);
  if (r % 2 == 0) {
    rhs = -harmonic_mod(n / 2, r + 1, p, 2);
  } else {
    Rational c(power(Integer(2), r + 2) - 1, Integer(2 * (r + 2)));
    c.canonicalize();
    rhs = lift_times_p(mod_reduce(c * bernoulli_number(static_cast<unsigned>(p - r - 2)), p, 1));
  }
  return finish(std::move(rep), lhs, rhs, opts);
}

CongruenceReport check_ci2(unsigned long p, unsigned r, const CheckOptions& opts) {
  require_odd_prime(p);
  require(p > 2 * r + 3, "ci2 needs p > 2r+3");
  CongruenceReport rep{.statement = Statement::kCI2, .p = p, .r = r, .x = make_rational(1, 2)};

  const unsigned n = static_cast<unsigned>(p - 1);
  const auto mhs = mhs_mod_table(n, ExponentVector::uniform(2, r), p, 3);
  Residue lhs = Residue::zero(p, 3);
  for (unsigned k = 1; k <= n; ++k) {
    lhs += central_binom_term(k, p, 3, true) * mhs[k] * mod_inv(Residue(static_cast<long>(k), p, 3));
  }

  Residue rhs = signed_residue(-2, p, 3) * harmonic_mod(n / 2, 2 * r + 1, p, 3);
  // -r (2^{2r+3} - 1) / 2 p^2 B_{p-2r-3}
  Rational c(-Integer(r) * (power(Integer(2), 2 * r + 3) - 1), Integer(2));
  c.canonicalize();
  const Residue tail = mod_reduce(c * bernoulli_number(static_cast<unsigned>(p - 2 * r - 3)), p, 1);
  rhs += lift_times_p(lift_times_p(tail));
  return finish(std::move(rep), lhs, rhs, opts);
}

namespace {

std::vector<Rational> materialize(const Sequence& a, unsigned n, unsigned long p) {
  std::vector<Rational> values;
  values.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    values.push_back(a(k));
    if (!p_integral(values.back(), p)) {
      throw PreconditionViolated("a_" + std::to_string(k) + " = " + to_string(values.back()) +
                                 " is not " + pstr(p) + "-integral");
    }
  }
  return values;
}

}  // namespace

CongruenceReport check_a1(unsigned long p, const Rational& x, const Sequence& a, std::string sequence_id,
                          const CheckOptions& opts) {
  require_odd_prime(p);
  require_p_integral(x, p);
  CongruenceReport rep{.statement = Statement::kA1, .p = p, .x = x, .sequence_id = std::move(sequence_id)};
  const unsigned n = static_cast<unsigned>(p - 1);
  const auto values = materialize(a, n, p);

  const Residue xr = mod_reduce(x, p, 1);
  Residue coeff = Residue::one(p, 1);
  Residue lhs = Residue::zero(p, 1);
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) {
      coeff *= (xr + Residue(static_cast<long>(k - 1), p, 1)) * mod_inv(Residue(static_cast<long>(k), p, 1));
    }
    lhs += coeff * mod_reduce(values[k], p, 1);
  }

  const auto [m, s] = residue_and_s(x, p, 1);
  const Sequence cached = [&values](unsigned k) { return values[k]; };
  const Residue rhs = mod_reduce(transform_T(static_cast<unsigned>(m), cached), p, 1);
  return finish(std::move(rep), lhs, rhs, opts);
}

CongruenceReport check_a2(unsigned long p, const Rational& x, const Sequence& a, std::string sequence_id,
                          const CheckOptions& opts) {
  require_odd_prime(p);
  require_p_integral(x, p);
  CongruenceReport rep{.statement = Statement::kA2, .p = p, .x = x, .sequence_id = std::move(sequence_id)};
  const unsigned n = static_cast<unsigned>(p - 1);
  const auto values = materialize(a, n, p);

  const Residue xr = mod_reduce(x, p, 2);
  const Residue one_minus_x = Residue::one(p, 2) - xr;
  Residue coeff = Residue::one(p, 2);
  Residue lhs = Residue::zero(p, 2);
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) {
      const Residue km1(static_cast<long>(k - 1), p, 2);
      const Residue inv_k = mod_inv(Residue(static_cast<long>(k), p, 2));
      coeff *= (xr + km1) * (one_minus_x + km1) * inv_k * inv_k;
    }
    lhs += coeff * mod_reduce(values[k], p, 2);
  }

  const auto [m, s] = residue_and_s(x, p, 2);
  const Sequence cached = [&values](unsigned k) { return values[k]; };
  const unsigned mm = static_cast<unsigned>(m);
  const Residue a_m = mod_reduce(transform_A(mm, cached), p, 2);
  const Residue a_mirror = mod_reduce(transform_A(n - mm, cached), p, 2);
  Residue rhs = a_m + s * (a_mirror - a_m);

  if (x == make_rational(1, 2)) {
    // At x = 1/2 the index is its own mirror and the s-term drops out.
    if (mm != n - mm || rhs != a_m) throw std::logic_error("a2: x = 1/2 specialization inconsistent");
  }
  return finish(std::move(rep), lhs, rhs, opts);
}

std::vector<CongruenceReport> check_aux_suite(unsigned long p, unsigned r_max,
                                              const std::vector<Rational>& x_set) {
  require_odd_prime(p);
  std::vector<CongruenceReport> out;
  const unsigned n = static_cast<unsigned>(p - 1);
  const CheckOptions plain;

  auto skip = [&](Statement st, std::optional<unsigned> r, std::optional<Rational> x,
                  std::optional<unsigned> index, std::string reason) {
    CongruenceReport rep{.statement = st, .p = p, .r = r, .x = std::move(x), .index = index};
    rep.skip_reason = std::move(reason);
    out.push_back(std::move(rep));
  };
  auto bern_mod = [&](long index, unsigned k) {
    return mod_reduce(bernoulli_number(static_cast<unsigned>(index)), p, k);
  };

  for (unsigned r = 0; r <= r_max; ++r) {
    const long rr = r;
    // (a)
    if (r == 0) {
      skip(Statement::kAuxA, r, {}, {}, "r = 0: S_{p-1}() = 1 is degenerate");
    } else if (p <= r + 3) {
      skip(Statement::kAuxA, r, {}, {}, "needs p > r+3");
    } else {
      out.push_back(finish({.statement = Statement::kAuxA, .p = p, .r = r},
                           mod_reduce(mhs_exact(n, ExponentVector::uniform(1, r)), p, 1),
                           Residue::zero(p, 1), plain));
    }
    // (b)
    if (p <= r + 3) {
      skip(Statement::kAuxB, r, {}, {}, "needs p > r+3");
    } else {
      out.push_back(finish({.statement = Statement::kAuxB, .p = p, .r = r},
                           mod_reduce(mhs_exact(n, ExponentVector::uniform(1, r).appended(2)), p, 1),
                           bern_mod(static_cast<long>(p) - rr - 2, 1), plain));
    }
    // (c) first: used at index r+1 under p > 2r+3, i.e. p > 2r+1 here.
    if (r == 0) {
      skip(Statement::kAuxC1, r, {}, {}, "r = 0: S_{p-1}() = 1 is degenerate");
    } else if (p <= 2 * r + 1) {
      skip(Statement::kAuxC1, r, {}, {}, "needs p > 2r+1");
    } else {
      Rational c = 2 * bernoulli_number(static_cast<unsigned>(p - 2 * r - 1)) / Rational(2 * r + 1);
      out.push_back(finish({.statement = Statement::kAuxC1, .p = p, .r = r},
                           mod_reduce(mhs_exact(n, ExponentVector::uniform(2, r)), p, 2),
                           lift_times_p(mod_reduce(c, p, 1)), plain));
    }
    // (c) second
    if (p <= 2 * r + 3) {
      skip(Statement::kAuxC2, r, {}, {}, "needs p > 2r+3");
    } else {
      out.push_back(finish({.statement = Statement::kAuxC2, .p = p, .r = r},
                           mod_reduce(mhs_exact(n, ExponentVector::uniform(2, r).appended(3)), p, 1),
                           Residue(-2 * rr, p, 1) * bern_mod(static_cast<long>(p) - 2 * rr - 3, 1), plain));
    }
  }

  // (d)
  if (p < 5) {
    skip(Statement::kAuxD1, {}, {}, {}, "needs p >= 5");
  } else {
    out.push_back(finish({.statement = Statement::kAuxD1, .p = p}, Residue(binomial(2 * p - 1, p - 1), p, 3),
                         Residue::one(p, 3), plain));
  }
  for (unsigned j = 0; j <= n; ++j) {
    const Residue two_p_h = lift_times_p(Residue(2L, p, 1) * mod_reduce(harmonic(j, 1), p, 1));
    Residue rhs = Residue::one(p, 2) - two_p_h;
    if (j % 2 == 1) rhs = -rhs;
    out.push_back(finish({.statement = Statement::kAuxD2, .p = p, .index = j},
                         Residue(binomial(2 * p - 1, p + j), p, 2), rhs, plain));
  }
  for (const auto& x : x_set) {
    if (!p_integral(x, p)) {
      skip(Statement::kAuxD3, {}, x, {}, "p divides the denominator of x");
      continue;
    }
    const Rational ratio = pochhammer(x, static_cast<unsigned>(p)) * pochhammer(1 - x, static_cast<unsigned>(p)) /
                           Rational(factorial(p) * factorial(p));
    const auto [m, s] = residue_and_s(x, p, 2);
    const Residue h = lift_times_p(Residue(2L, p, 1) * mod_reduce(harmonic(static_cast<unsigned>(m), 1), p, 1));
    const Residue rhs = s * (Residue::one(p, 2) - s) * (Residue::one(p, 2) + h);
    out.push_back(finish({.statement = Statement::kAuxD3, .p = p, .x = x}, mod_reduce(ratio, p, 2), rhs, plain));
  }

  // (e)
  for (unsigned t = 2; t + 1 < p; ++t) {
    for (const auto& x : x_set) {
      if (!p_integral(x, p)) {
        skip(Statement::kAuxE, {}, x, t, "p divides the denominator of x");
        continue;
      }
      const auto [m, s] = residue_and_s(x, p, 1);
      out.push_back(finish({.statement = Statement::kAuxE, .p = p, .x = x, .index = t},
                           harmonic_mod(static_cast<unsigned>(m), t, p, 1), power_sum_H_mod(x, t, p), plain));
    }
  }
  return out;
}

}  // namespace mhsc
