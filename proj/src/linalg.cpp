#include "adjorbit/linalg.hpp"

#include <algorithm>
#include <utility>

namespace adjorbit {
namespace {

// Scales a rational row to integers by the lcm of its denominators.
std::vector<Integer> integer_row(const RatMatrix& m, std::size_t i) {
  Integer denominator_lcm = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
  }
  std::vector<Integer> row(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    row[j] = m(i, j).get_num() * (denominator_lcm / m(i, j).get_den());
  }
  return row;
}

// Back substitution on an echelon form: pivot variables from the given
// assignment of free variables, optionally against a right-hand side column.
RatVector back_substitute(const Echelon& e, RatVector x, const std::vector<Integer>* rhs) {
  for (std::size_t k = e.rows.size(); k-- > 0;) {
    const auto& row = e.rows[k];
    const std::size_t p = e.pivots[k];
    Rational acc = rhs ? Rational((*rhs)[k]) : Rational(0);
    for (std::size_t j = p + 1; j < e.cols; ++j) {
      if (sgn(row[j]) != 0 && sgn(x[j]) != 0) acc -= Rational(row[j]) * x[j];
    }
    x[p] = acc / Rational(row[p]);
  }
  return x;
}

}  // namespace

Echelon echelon(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a;
  a.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) a.push_back(integer_row(m, i));

  Echelon out;
  out.cols = cols;
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Integer pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer factor = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = pivot * a[i][j] - factor * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = pivot;
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const RatMatrix& m) { return echelon(m).rank(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const Echelon e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(m.cols());
    x[f] = 1;
    RatVector v = back_substitute(e, std::move(x), nullptr);
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (sgn(*lead) < 0) {
      for (auto& q : v) q = -q;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
  RatMatrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) augmented(i, j) = a(i, j);
    augmented(i, a.cols()) = b[i];
  }
  Echelon e = echelon(augmented);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;

  std::vector<Integer> rhs;
  rhs.reserve(e.rows.size());
  for (auto& row : e.rows) {
    rhs.push_back(row.back());
    row.pop_back();
  }
  e.cols = a.cols();
  return back_substitute(e, RatVector(a.cols()), &rhs);
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "determinant needs a square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational factor = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "inverse needs a square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    const Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(c, j);
        inv(i, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<RatVector> primitive_row_basis(const RatMatrix& m) {
  const Echelon e = echelon(m);
  // Reduce above pivots to reach RREF, over ℚ.
  std::vector<RatVector> rows;
  for (const auto& row : e.rows) {
    RatVector r(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) r[j] = Rational(row[j]);
    rows.push_back(std::move(r));
  }
  for (std::size_t k = rows.size(); k-- > 0;) {
    const std::size_t p = e.pivots[k];
    const Rational pivot = rows[k][p];
    for (auto& v : rows[k]) v /= pivot;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational factor = rows[i][p];
      if (sgn(factor) == 0) continue;
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= factor * rows[k][j];
    }
  }
  for (auto& r : rows) {
    Integer den_lcm = 1;
    for (const auto& v : r) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& v : r) {
      Integer scaled = v.get_num() * (den_lcm / v.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    const Rational scale = Rational(den_lcm) / Rational(num_gcd);
    for (auto& v : r) v *= scale;
  }
  return rows;
}

RatMatrix columns_to_matrix(std::span<const RatVector> vectors, std::size_t length) {
  RatMatrix m(length, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != length) throw Error(ErrorKind::DimensionMismatch, "vector length mismatch");
    for (std::size_t i = 0; i < length; ++i) m(i, j) = vectors[j][i];
  }
  return m;
}

}  // namespace adjorbit
