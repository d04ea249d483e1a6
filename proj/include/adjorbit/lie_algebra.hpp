#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adjorbit/matrix.hpp"

namespace adjorbit {

enum class Family { sl, so, sp };

std::string to_string(Family family);
/// Accepts "sl", "so", "sp"; throws Error(Parse) otherwise.
Family parse_family(std::string_view text);

/// An element of a LieAlgebra: coordinates in its basis together with the
/// ambient matrix they describe.
struct LieElement {
  RatVector coords;
  RatMatrix matrix;

  bool is_zero() const { return matrix.is_zero(); }
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.matrix == b.matrix; }
};

/// A bracket-closed Lie algebra of n×n rational matrices with a fixed ordered
/// basis. Construction validates linear independence and bracket closure and
/// caches the adjoint matrices of the basis (structure constants). Copies
/// share the immutable state.
class LieAlgebra {
 public:
  LieAlgebra(std::size_t ambient_size, std::vector<RatMatrix> basis, std::string label,
             std::optional<Family> family = std::nullopt);

  std::size_t ambient_size() const noexcept;
  std::size_t dim() const noexcept;
  const std::vector<RatMatrix>& basis() const noexcept;
  const std::string& label() const noexcept;
  std::optional<Family> family() const noexcept;

  /// Coordinates of an ambient matrix in this basis, or nullopt if the
  /// matrix is not in the span.
  std::optional<RatVector> coordinates(const RatMatrix& m) const;
  bool contains(const RatMatrix& m) const { return coordinates(m).has_value(); }

  /// Throws Error(NotInAlgebra) if m is outside the span.
  LieElement element(const RatMatrix& m) const;
  LieElement from_coords(RatVector coords) const;
  LieElement zero() const;
  RatMatrix matrix_of(std::span<const Rational> coords) const;

  LieElement bracket(const LieElement& x, const LieElement& y) const;

  /// Matrix of z ↦ [x, z] in this basis.
  RatMatrix ad_matrix(const LieElement& x) const;
  const RatMatrix& ad_basis(std::size_t i) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Classical split forms:
///   sl_n: traceless matrices; basis E_ij (i≠j) in lexicographic order, then
///         E_ii − E_{i+1,i+1}.
///   so_n: X^T J + J X = 0 with J the antidiagonal of ones.
///   sp_n: X^T J + J X = 0 with J = [[0, A], [−A, 0]], A the m×m antidiagonal
///         of ones (n = 2m).
/// For so/sp the basis is the kernel basis of the defining equations over the
/// n² entries in row-major order.
LieAlgebra build_classical(Family family, std::size_t n);

/// Gram matrix of the invariant form of a classical family (J above), or the
/// empty matrix for sl.
RatMatrix defining_form(Family family, std::size_t n);

/// Subalgebra spanned by vectors given in L's coordinates.
LieAlgebra subalgebra(const LieAlgebra& L, std::span<const RatVector> coords, std::string label);

/// 𝔠(x) = ker ad x.
LieAlgebra centralizer_basis(const LieAlgebra& L, const LieElement& x);

/// {z : [z, w] = 0 for all w}.
LieAlgebra center_basis(const LieAlgebra& L);

/// G_ij = trace(b_i · b_j) for the basis of `sub`, which must live in the
/// same ambient matrix size as L.
RatMatrix trace_form_gram(const LieAlgebra& L, const LieAlgebra& sub);

/// True if every basis element of `sub` lies in `L`.
bool is_subspace_of(const LieAlgebra& sub, const LieAlgebra& L);

}  // namespace adjorbit
