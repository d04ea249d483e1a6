#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adjorbit/grading.hpp"
#include "adjorbit/lie_algebra.hpp"
#include "adjorbit/sl2_triple.hpp"

namespace adjorbit {

/// exp(a) = Σ_{k<n} a^k/k! for nilpotent a; throws NotNilpotent otherwise.
template <class T>
Matrix<T> exp_nilpotent(const Matrix<T>& a);

/// One factor S_i of a birational complement: the unipotent group
/// exp(span(basis)), parameterized by exp(Σ t_i b_i).
struct NilpotentFactor {
  std::vector<RatMatrix> basis;

  std::size_t param_count() const noexcept { return basis.size(); }
};

/// Ordered factors S_1, ..., S_m; the multiplication map is
/// (s_1, ..., s_m, h) ↦ s_1⋯s_m·h. The order matters.
struct ComplementSeq {
  std::vector<NilpotentFactor> factors;

  std::size_t param_count() const noexcept;
};

/// Outer factors first, then inner ones.
ComplementSeq compose_complements(const ComplementSeq& outer, const ComplementSeq& inner);

/// exp(Σ t b)_1 ⋯ exp(Σ t b)_m · tail, parameters consumed in factor order.
template <class T>
Matrix<T> eval_complement(const ComplementSeq& seq, std::span<const T> params, const Matrix<T>& tail);

enum class CaseTag { nilpotent, semisimple, mixed };
std::string to_string(CaseTag tag);

/// Nilpotent-case data: the triple through e and the parabolic it induces.
struct NilpotentSlice {
  LieAlgebra algebra;
  Sl2Triple triple;
  ParabolicData parabolic;
};

/// Semisimple-case data: the Levi 𝔩 = 𝔠(x_s), an integer witness z with 𝔠(z) = 𝔩,
/// and the parabolic of the grading by z.
struct LeviSplit {
  LieAlgebra levi;
  LieElement witness;
  ParabolicData parabolic;
};

/// An orbit chart ψ(p) = Ad(g)(offset + Σ v_k·slice_k), g the product of the
/// `outer` factors. Parameters are the outer factor coordinates followed by
/// the slice coordinates v.
///
///   nilpotent:  outer [𝔲⁻],         offset 0,   slice 𝔲₂
///   semisimple: outer [𝔲⁻, 𝔲],      offset x,   no slice
///   mixed:      outer [𝔲⁻, 𝔲, 𝔲ₗ⁻], offset x_s, slice 𝔲₂ of 𝔩
///
/// In the mixed case the last factor and the slice come from the inner
/// nilpotent chart of x_n inside 𝔩; since 𝔩 centralizes x_s this equals
/// Ad(exp a · exp b)(x_s + inner(c, v)).
struct OrbitChart {
  CaseTag case_tag = CaseTag::nilpotent;
  ComplementSeq outer;
  std::vector<RatMatrix> slice_basis;
  RatMatrix offset;
  RatVector base_slice_coords;
  LieElement base_element;
  std::size_t expected_orbit_dim = 0;
  std::shared_ptr<const OrbitChart> inner;
  std::optional<NilpotentSlice> nilpotent;
  std::optional<LeviSplit> levi;

  std::size_t param_count() const noexcept { return outer.param_count() + slice_basis.size(); }
  /// Zero outer coordinates followed by the slice coordinates of the base.
  RatVector base_params() const;
  /// The nilpotent-case data owning the slice (this chart's or the inner one's).
  const NilpotentSlice* slice_data() const;
};

OrbitChart chart_nilpotent(const LieAlgebra& L, const LieElement& e);
OrbitChart chart_semisimple(const LieAlgebra& L, const LieElement& x, std::uint64_t seed);
OrbitChart chart_mixed(const LieAlgebra& L, const LieElement& x, std::uint64_t seed);

/// Dispatches on the Jordan decomposition; ZeroElement for x = 0.
OrbitChart build_chart(const LieAlgebra& L, const LieElement& x, std::uint64_t seed);

template <class T>
Matrix<T> eval_chart(const OrbitChart& chart, std::span<const T> params);

inline RatMatrix eval_chart(const OrbitChart& chart, std::span<const Rational> params) {
  return eval_chart<Rational>(chart, params);
}

extern template RatMatrix exp_nilpotent(const RatMatrix&);
extern template DualMatrix exp_nilpotent(const DualMatrix&);
extern template RatMatrix eval_complement(const ComplementSeq&, std::span<const Rational>, const RatMatrix&);
extern template DualMatrix eval_complement(const ComplementSeq&, std::span<const Dual>, const DualMatrix&);
extern template RatMatrix eval_chart(const OrbitChart&, std::span<const Rational>);
extern template DualMatrix eval_chart(const OrbitChart&, std::span<const Dual>);

}  // namespace adjorbit
