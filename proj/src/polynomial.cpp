#include "adjorbit/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace adjorbit {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  const Rational lead = leading();
  for (auto& c : p.coeffs_) c /= lead;
  return p;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Dual Polynomial::operator()(const Dual& t) const {
  Dual acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Dual(*it);
  return acc;
}

RatMatrix Polynomial::operator()(const RatMatrix& m) const {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "polynomial of a non-square matrix");
  RatMatrix acc(m.rows(), m.cols());
  const auto id = RatMatrix::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + id * *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(Polynomial a, const Rational& s) {
  for (auto& c : a.coeffs_) c *= s;
  a.trim();
  return a;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  Polynomial remainder = *this;
  if (degree() < divisor.degree()) return {Polynomial{}, remainder};
  std::vector<Rational> quotient(static_cast<std::size_t>(degree() - divisor.degree() + 1));
  const Rational& lead = divisor.leading();
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    const auto shift = static_cast<std::size_t>(remainder.degree() - divisor.degree());
    const Rational factor = remainder.leading() / lead;
    quotient[shift] = factor;
    for (std::size_t k = 0; k < divisor.coeffs_.size(); ++k) {
      remainder.coeffs_[k + shift] -= factor * divisor.coeffs_[k];
    }
    remainder.trim();
  }
  return {Polynomial(std::move(quotient)), remainder};
}

Polynomial Polynomial::compose_mod(const Polynomial& inner, const Polynomial& modulus) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = (acc * inner + Polynomial::constant(*it)) % modulus;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || magnitude != 1) out << magnitude.get_str();
    if (k >= 1) out << "t";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial old_r = a, r = b;
  Polynomial old_s = Polynomial::constant(1), s;
  Polynomial old_t, t = Polynomial::constant(1);
  while (!r.is_zero()) {
    auto [q, rem] = old_r.divmod(r);
    old_r = std::exchange(r, rem);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r.is_zero()) return {old_r, old_s, old_t};
  const Rational lead = old_r.leading();
  const Rational inv = 1 / lead;
  return {old_r * inv, old_s * inv, old_t * inv};
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree part of the zero polynomial");
  if (p.degree() == 0) return Polynomial::constant(1);
  return (p / gcd(p, p.derivative())).monic();
}

namespace {

// Smallest integer r >= 0 with r^k >= value.
Integer ceil_root(const Integer& value, unsigned long k) {
  Integer r;
  mpz_root(r.get_mpz_t(), value.get_mpz_t(), k);
  Integer check;
  mpz_pow_ui(check.get_mpz_t(), r.get_mpz_t(), k);
  if (check < value) r += 1;
  return r;
}

Integer eval_integer(const std::vector<Integer>& c, const Integer& t) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

std::vector<std::int64_t> integer_roots(const Polynomial& p) {
  Polynomial q = squarefree_part(p);
  std::vector<std::int64_t> roots;

  // Integer coefficients, lowest first.
  Integer den_lcm = 1;
  for (const auto& c : q.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> c;
  for (const auto& v : q.coefficients()) c.push_back(v.get_num() * (den_lcm / v.get_den()));

  if (!c.empty() && sgn(c.front()) == 0) {
    roots.push_back(0);
    c.erase(c.begin());  // squarefree: t divides at most once
  }
  const std::size_t n = c.size() - 1;
  if (n == 0) return roots;

  // Fujiwara: every root has |r| <= 2·max_k |a_{n-k}/a_n|^{1/k}.
  const Integer lead = abs(c[n]);
  Integer bound = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer a = abs(c[n - k]);
    if (k == n) a = (a + 1) / 2;  // the constant term enters halved
    Integer ratio = (a + lead - 1) / lead;
    Integer r = ceil_root(ratio, k);
    if (r > bound) bound = r;
  }
  bound = 2 * bound;

  const Integer constant = abs(c.front());
  for (Integer d = 1; d <= bound; ++d) {
    if (!mpz_divisible_p(constant.get_mpz_t(), d.get_mpz_t())) continue;
    if (sgn(eval_integer(c, d)) == 0) roots.push_back(d.get_si());
    if (sgn(eval_integer(c, -d)) == 0) roots.push_back(-d.get_si());
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

Polynomial char_poly(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // Faddeev–LeVerrier: M_k = A·M_{k-1} + c_{n-k+1}·I, c_{n-k} = -tr(A·M_k)/k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  const auto id = RatMatrix::identity(n);
  RatMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

}  // namespace adjorbit
