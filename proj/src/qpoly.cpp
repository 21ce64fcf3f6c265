#include "mhsc/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace mhsc {

QPoly::QPoly(const Rational& c) : coeffs_{c} { trim(); }

QPoly::QPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::one_minus_q_power(std::size_t j) {
  if (j == 0) return QPoly();
  std::vector<Rational> v(j + 1, Rational(0));
  v[0] = 1;
  v[j] = -1;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::evaluate(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

QPoly QPoly::shifted(std::size_t e) const {
  if (is_zero()) return {};
  std::vector<Rational> v(e, Rational(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

QPoly& QPoly::multiply_one_minus_q_power(std::size_t j) {
  if (is_zero()) return *this;
  const std::size_t old = coeffs_.size();
  coeffs_.resize(old + j, Rational(0));
  // Walk downwards so every read sees an original coefficient.
  for (std::size_t i = old + j; i-- > j;) coeffs_[i] -= coeffs_[i - j];
  trim();
  return *this;
}

bool QPoly::divide_one_minus_q() {
  if (is_zero()) return true;
  // f(q) = (1 - q) g(q)  <=>  g = -(f / (q - 1)); Horner from the top.
  std::vector<Rational> g(coeffs_.size() - 1, Rational(0));
  Rational carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 1;) {
    carry += coeffs_[i];
    g[i - 1] = -carry;
  }
  if (carry + coeffs_[0] != 0) return false;
  coeffs_ = std::move(g);
  trim();
  return true;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) os << "q" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

QPoly expand(const CyclotomicFactors& factors) {
  QPoly out(Rational(1));
  for (const auto& [j, mult] : factors) {
    for (unsigned m = 0; m < mult; ++m) out.multiply_one_minus_q_power(j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// QRatFunc

QRatFunc::QRatFunc(QPoly numerator) : num_(std::move(numerator)) {}

QRatFunc::QRatFunc(QPoly numerator, CyclotomicFactors denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->first == 0) throw PreconditionViolated("factor (1 - q^0) is zero");
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

QRatFunc& QRatFunc::divide_one_minus_q_power(std::size_t j, unsigned mult) {
  if (j == 0) throw PreconditionViolated("division by (1 - q^0) = 0");
  if (mult > 0) den_[j] += mult;
  return *this;
}

void QRatFunc::raise_to(const CyclotomicFactors& target) {
  for (const auto& [j, mult] : target) {
    const auto it = den_.find(j);
    const unsigned have = it == den_.end() ? 0 : it->second;
    for (unsigned m = have; m < mult; ++m) num_.multiply_one_minus_q_power(j);
  }
  den_ = target;
}

namespace {

CyclotomicFactors lcm(const CyclotomicFactors& a, const CyclotomicFactors& b) {
  CyclotomicFactors out = a;
  for (const auto& [j, mult] : b) out[j] = std::max(out[j], mult);
  return out;
}

}  // namespace

QRatFunc& QRatFunc::operator+=(const QRatFunc& rhs) {
  const auto common = lcm(den_, rhs.den_);
  QRatFunc other = rhs;
  raise_to(common);
  other.raise_to(common);
  num_ += other.num_;
  return *this;
}

QRatFunc& QRatFunc::operator-=(const QRatFunc& rhs) { return *this += -rhs; }

QRatFunc& QRatFunc::operator*=(const QRatFunc& rhs) {
  num_ *= rhs.num_;
  for (const auto& [j, mult] : rhs.den_) den_[j] += mult;
  return *this;
}

QRatFunc& QRatFunc::operator*=(const QPoly& rhs) {
  num_ *= rhs;
  return *this;
}

QRatFunc QRatFunc::operator-() const {
  QRatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

// a/A == b/B  <=>  a * (L/A) == b * (L/B) with L the lcm of the factored
// denominators; the cofactors L/A and L/B are themselves products of (1-q^j).
bool operator==(const QRatFunc& a, const QRatFunc& b) {
  const auto common = lcm(a.den_, b.den_);
  QRatFunc x = a;
  QRatFunc y = b;
  x.raise_to(common);
  y.raise_to(common);
  return x.num_ == y.num_;
}

}  // namespace mhsc
