#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "adjorbit/matrix.hpp"

namespace adjorbit {

/// Row echelon form with integer entries, produced by fraction-free
/// (Bareiss) elimination after clearing denominators row by row.
struct Echelon {
  std::size_t cols = 0;
  std::vector<std::vector<Integer>> rows;  // only the nonzero (pivot) rows
  std::vector<std::size_t> pivots;         // pivot column of each row

  std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basic solutions of M·v = 0: one vector per free column, with that free
/// variable set to ±1 and the others to 0, signed so the first nonzero entry
/// is positive. Count is cols − rank(M).
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// A solution of A·v = b with every free variable set to zero, or nullopt
/// when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b);

Rational determinant(const RatMatrix& m);

/// Exact inverse; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Reduced row echelon basis of the row space (rows as vectors), each
/// scaled to a primitive integer vector whose first nonzero entry is positive.
std::vector<RatVector> primitive_row_basis(const RatMatrix& m);

/// Stacks vectors as the columns of a matrix (length × count).
RatMatrix columns_to_matrix(std::span<const RatVector> vectors, std::size_t length);

}  // namespace adjorbit
