#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adjorbit/matrix.hpp"
#include "adjorbit/rational.hpp"

namespace adjorbit {

/// Univariate polynomial over ℚ, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t k) const;
  const Rational& leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;

  Rational operator()(const Rational& t) const;
  Dual operator()(const Dual& t) const;
  RatMatrix operator()(const RatMatrix& m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws ZeroPolynomial on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }
  Polynomial operator/(const Polynomial& divisor) const { return divmod(divisor).first; }

  /// Composition this(inner) reduced modulo `modulus`.
  Polynomial compose_mod(const Polynomial& inner, const Polynomial& modulus) const;

  /// "t^2 - 1" style rendering, for diagnostics.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Returns (g, s, t) with s·a + t·b = g, g = gcd(a, b) monic.
struct ExtendedGcd {
  Polynomial gcd;
  Polynomial s;
  Polynomial t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), made monic. Throws ZeroPolynomial on p = 0.
Polynomial squarefree_part(const Polynomial& p);

/// All distinct integer roots of p in decreasing order. Candidates are the
/// divisors of the constant term (after removing the factor t^k) bounded by
/// the Fujiwara root bound.
std::vector<std::int64_t> integer_roots(const Polynomial& p);

/// Characteristic polynomial det(tI − M), by Faddeev–LeVerrier.
Polynomial char_poly(const RatMatrix& m);

}  // namespace adjorbit
