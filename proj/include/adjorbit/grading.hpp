#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "adjorbit/lie_algebra.hpp"

namespace adjorbit {

/// 𝔤 = ⊕ᵢ 𝔤(i) with 𝔤(i) = {z : [grading_element, z] = i·z}.
struct Grading {
  LieAlgebra algebra;
  LieElement grading_element;
  std::map<int, std::vector<LieElement>> pieces;  // ascending degree

  std::size_t piece_dim(int degree) const;
  std::size_t dim_where(bool (*keep)(int)) const;
};

/// Pieces are kernels of ad(h) − i for the integer roots i of χ(ad h).
/// Throws NonIntegerSpectrum when they do not fill L, and Internal if
/// [𝔤(i), 𝔤(j)] ⊄ 𝔤(i+j) on some basis pair.
Grading grading_by(const LieAlgebra& L, const LieElement& h);

/// Parabolic subalgebra 𝔭 = ⊕_{i≥0}, nilradical 𝔲 = ⊕_{i>0}, opposite
/// 𝔲⁻ = ⊕_{i<0}, 𝔲₂ = ⊕_{i≥2}, and the Levi 𝔤(0).
/// 𝔭, 𝔲, 𝔲₂ list pieces by ascending degree; 𝔲⁻ by descending degree.
struct ParabolicData {
  Grading grading;
  std::vector<LieElement> p;
  std::vector<LieElement> u;
  std::vector<LieElement> u_minus;
  std::vector<LieElement> u2;
  LieAlgebra levi0;

  bool u2_differs_from_u() const { return u2.size() != u.size(); }
};

ParabolicData parabolic_data(const Grading& g);

inline constexpr int kWitnessBudget = 64;

/// A semisimple z in the center of `levi` with integer matrix entries and
/// integer ad-spectrum such that 𝔠_L(z) = levi.
///
/// The center's row-reduced basis is scaled to primitive integer matrices
/// g_k. Attempt 0 tries Σ g_k; each further attempt draws coefficients from
/// [−n², n²] with SplitMix64(seed). Each candidate is checked exactly. When
/// levi = L the answer is 0. Throws WitnessNotFound once the budget is spent.
LieElement semisimple_for_levi(const LieAlgebra& L, const LieAlgebra& levi, std::uint64_t seed,
                               int budget = kWitnessBudget);

}  // namespace adjorbit
