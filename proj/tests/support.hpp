#pragma once

#include <initializer_list>

#include "adjorbit/matrix.hpp"
#include "adjorbit/random.hpp"

namespace adjorbit::testing {

inline RatMatrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Rational> data;
  for (const auto& row : rows) data.insert(data.end(), row.begin(), row.end());
  return RatMatrix(r, c, std::move(data));
}

inline RatVector vec(std::initializer_list<Rational> v) { return RatVector(v); }

inline RatMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational();
  return m;
}

/// Random matrix of prescribed rank: product of random (rows×r)(r×cols).
inline RatMatrix random_rank_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  return random_matrix(rng, rows, r) * random_matrix(rng, r, cols);
}

}  // namespace adjorbit::testing

#include "adjorbit/lie_algebra.hpp"

namespace adjorbit::testing {

/// All partitions of n, largest part first, in reverse lexicographic order.
inline std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t max_part = 0) {
  if (max_part == 0 || max_part > n) max_part = n;
  if (n == 0) return {{}};
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t first = max_part; first >= 1; --first) {
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

/// All compositions of n (ordered block sizes).
inline std::vector<std::vector<std::size_t>> compositions(std::size_t n) {
  if (n == 0) return {{}};
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t first = 1; first <= n; ++first) {
    for (auto rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

/// Direct sum of upper Jordan blocks J_{λ_1} ⊕ J_{λ_2} ⊕ ...
inline RatMatrix jordan_nilpotent(const std::vector<std::size_t>& blocks) {
  std::size_t n = 0;
  for (auto b : blocks) n += b;
  RatMatrix m(n, n);
  std::size_t offset = 0;
  for (auto b : blocks) {
    for (std::size_t i = 0; i + 1 < b; ++i) m(offset + i, offset + i + 1) = 1;
    offset += b;
  }
  return m;
}

/// s(gl_{a_1} × ... × gl_{a_k}) inside sl_n, for a composition (a_i).
inline LieAlgebra block_levi(const std::vector<std::size_t>& blocks) {
  std::size_t n = 0;
  for (auto b : blocks) n += b;
  std::vector<RatMatrix> basis;
  std::size_t offset = 0;
  for (auto b : blocks) {
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j)
        if (i != j) basis.push_back(unit_matrix(n, offset + i, offset + j));
    offset += b;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) basis.push_back(unit_matrix(n, i, i) - unit_matrix(n, i + 1, i + 1));
  return LieAlgebra(n, std::move(basis), "block levi");
}

/// dim 𝔠_{gl_n}(e_λ) = Σ_i (λ'_i)², λ' the conjugate partition.
inline std::size_t gl_centralizer_dim(const std::vector<std::size_t>& partition) {
  std::size_t total = 0;
  for (std::size_t k = 1;; ++k) {
    std::size_t column = 0;
    for (auto part : partition) column += part >= k;
    if (column == 0) break;
    total += column * column;
  }
  return total;
}

/// Random element exp(t·E_ij) of SL_n with i ≠ j, returned with its inverse.
inline std::pair<RatMatrix, RatMatrix> random_unipotent(SplitMix64& rng, std::size_t n, int factors = 4) {
  RatMatrix g = RatMatrix::identity(n);
  RatMatrix g_inv = RatMatrix::identity(n);
  for (int k = 0; k < factors; ++k) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    const Rational t = rng.rational();
    RatMatrix step = RatMatrix::identity(n) + unit_matrix(n, i, j) * t;
    RatMatrix step_inv = RatMatrix::identity(n) - unit_matrix(n, i, j) * t;
    g = g * step;
    g_inv = step_inv * g_inv;
  }
  return {g, g_inv};
}

}  // namespace adjorbit::testing
