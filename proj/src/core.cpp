#include <cctype>
#include <sstream>

#include "adjorbit/errors.hpp"
#include "adjorbit/matrix.hpp"
#include "adjorbit/rational.hpp"

namespace adjorbit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotInAlgebra: return "NotInAlgebra";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NoTripleFound: return "NoTripleFound";
    case ErrorKind::NonIntegerSpectrum: return "NonIntegerSpectrum";
    case ErrorKind::WitnessNotFound: return "WitnessNotFound";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ZeroSemisimplePart: return "ZeroSemisimplePart";
    case ErrorKind::ZeroClass: return "ZeroClass";
    case ErrorKind::UnsupportedAlgebra: return "UnsupportedAlgebra";
    case ErrorKind::NotBracketClosed: return "NotBracketClosed";
    case ErrorKind::LinearlyDependent: return "LinearlyDependent";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw Error(ErrorKind::Parse, "not a rational number: '" + std::string(text) + "'");
  };
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits(num)) fail();
  if (slash != std::string_view::npos && !digits(den)) fail();

  std::string canonical(text.front() == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(canonical, 10) != 0) fail();
  if (sgn(r.get_den()) == 0) fail();
  r.canonicalize();
  return r;
}

DualMatrix lift(const RatMatrix& m) {
  DualMatrix d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = Dual(m(i, j));
  return d;
}

RatMatrix value_part(const DualMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).value;
  return r;
}

RatMatrix eps_part(const DualMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eps;
  return r;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j).get_str();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

RatMatrix column(std::span<const Rational> v) {
  return RatMatrix(v.size(), 1, RatVector(v.begin(), v.end()));
}

RatVector multiply(const RatMatrix& m, std::span<const Rational> v) {
  if (m.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  RatVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0) out[i] += m(i, j) * v[j];
    }
  return out;
}

RatMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  RatMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

RatMatrix diagonal(std::span<const Rational> entries) {
  RatMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

}  // namespace adjorbit
