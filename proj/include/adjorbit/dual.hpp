#pragma once

#include "adjorbit/rational.hpp"

namespace adjorbit {

/// value + eps·ε with ε² = 0. Evaluating a polynomial map at (p + ε·d)
/// yields the exact directional derivative along d in the eps part.
struct Dual {
  Rational value;
  Rational eps;

  Dual() = default;
  Dual(Rational v) : value(std::move(v)) {}  // NOLINT: implicit lift
  Dual(Rational v, Rational e) : value(std::move(v)), eps(std::move(e)) {}

  Dual& operator+=(const Dual& o) {
    value += o.value;
    eps += o.eps;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value -= o.value;
    eps -= o.eps;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    eps = value * o.eps + eps * o.value;
    value *= o.value;
    return *this;
  }
  Dual& operator*=(const Rational& s) {
    value *= s;
    eps *= s;
    return *this;
  }
  Dual& operator/=(const Rational& s) {
    value /= s;
    eps /= s;
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator*(Dual a, const Rational& s) { return a *= s; }
  friend Dual operator/(Dual a, const Rational& s) { return a /= s; }
  friend Dual operator-(const Dual& a) { return Dual(-a.value, -a.eps); }
  friend bool operator==(const Dual& a, const Dual& b) {
    return a.value == b.value && a.eps == b.eps;
  }
};

inline bool is_zero(const Dual& d) { return sgn(d.value) == 0 && sgn(d.eps) == 0; }

}  // namespace adjorbit
