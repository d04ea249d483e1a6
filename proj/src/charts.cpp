#include "adjorbit/charts.hpp"

#include "adjorbit/jordan.hpp"
#include "adjorbit/linalg.hpp"

namespace adjorbit {

template <class T>
Matrix<T> exp_nilpotent(const Matrix<T>& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "exp of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> sum = Matrix<T>::identity(n);
  Matrix<T> term = Matrix<T>::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    term = term * a;
    term /= Rational(static_cast<long>(k));
    sum += term;
  }
  if (!(term * a).is_zero()) throw Error(ErrorKind::NotNilpotent, "exp_nilpotent of a non-nilpotent matrix");
  return sum;
}

std::size_t ComplementSeq::param_count() const noexcept {
  std::size_t total = 0;
  for (const auto& f : factors) total += f.param_count();
  return total;
}

ComplementSeq compose_complements(const ComplementSeq& outer, const ComplementSeq& inner) {
  ComplementSeq out = outer;
  out.factors.insert(out.factors.end(), inner.factors.begin(), inner.factors.end());
  return out;
}

namespace {

template <class T>
Matrix<T> combination(const std::vector<RatMatrix>& basis, std::span<const T> coeffs, std::size_t n) {
  Matrix<T> m(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (is_zero(coeffs[k])) continue;
    auto out = m.data();
    auto in = basis[k].data();
    for (std::size_t e = 0; e < out.size(); ++e) {
      if (sgn(in[e]) != 0) out[e] += coeffs[k] * in[e];
    }
  }
  return m;
}

// g = ∏ exp(a_i) and g⁻¹ = ∏ exp(−a_i) in reverse order.
template <class T>
std::pair<Matrix<T>, Matrix<T>> group_element(const ComplementSeq& seq, std::span<const T> params, std::size_t n) {
  Matrix<T> g = Matrix<T>::identity(n);
  Matrix<T> g_inv = Matrix<T>::identity(n);
  std::size_t offset = 0;
  for (const auto& factor : seq.factors) {
    const auto a = combination<T>(factor.basis, params.subspan(offset, factor.param_count()), n);
    offset += factor.param_count();
    g = g * exp_nilpotent(a);
    g_inv = exp_nilpotent(-a) * g_inv;
  }
  return {g, g_inv};
}

}  // namespace

template <class T>
Matrix<T> eval_complement(const ComplementSeq& seq, std::span<const T> params, const Matrix<T>& tail) {
  if (params.size() != seq.param_count()) {
    throw Error(ErrorKind::DimensionMismatch, "complement expects " + std::to_string(seq.param_count()) +
                                                  " parameters, got " + std::to_string(params.size()));
  }
  return group_element<T>(seq, params, tail.rows()).first * tail;
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::nilpotent: return "nilpotent";
    case CaseTag::semisimple: return "semisimple";
    case CaseTag::mixed: return "mixed";
  }
  return "?";
}

RatVector OrbitChart::base_params() const {
  RatVector p(outer.param_count());
  p.insert(p.end(), base_slice_coords.begin(), base_slice_coords.end());
  return p;
}

const NilpotentSlice* OrbitChart::slice_data() const {
  if (nilpotent) return &*nilpotent;
  if (inner) return inner->slice_data();
  return nullptr;
}

template <class T>
Matrix<T> eval_chart(const OrbitChart& chart, std::span<const T> params) {
  if (params.size() != chart.param_count()) {
    throw Error(ErrorKind::DimensionMismatch, "chart expects " + std::to_string(chart.param_count()) +
                                                  " parameters, got " + std::to_string(params.size()));
  }
  const std::size_t n = chart.offset.rows();
  const std::size_t outer_count = chart.outer.param_count();
  Matrix<T> core = combination<T>(chart.slice_basis, params.subspan(outer_count), n);
  if constexpr (std::is_same_v<T, Rational>) {
    core += chart.offset;
  } else {
    core += lift(chart.offset);
  }
  auto [g, g_inv] = group_element<T>(chart.outer, params.first(outer_count), n);
  return g * core * g_inv;
}

namespace {

std::vector<RatMatrix> matrices(const std::vector<LieElement>& elements) {
  std::vector<RatMatrix> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.matrix);
  return out;
}

std::size_t orbit_dim(const LieAlgebra& L, const LieElement& x) {
  return L.dim() - centralizer_basis(L, x).dim();
}

LeviSplit levi_split(const LieAlgebra& L, const LieElement& xs, std::uint64_t seed) {
  LieAlgebra levi = centralizer_basis(L, xs);
  LieElement z = semisimple_for_levi(L, levi, seed);
  ParabolicData parabolic = parabolic_data(grading_by(L, z));
  return {std::move(levi), std::move(z), std::move(parabolic)};
}

}  // namespace

OrbitChart chart_nilpotent(const LieAlgebra& L, const LieElement& e) {
  Sl2Triple triple = jacobson_morozov(L, e);
  ParabolicData parabolic = parabolic_data(grading_by(L, triple.h));

  OrbitChart chart;
  chart.case_tag = CaseTag::nilpotent;
  chart.outer.factors.push_back({matrices(parabolic.u_minus)});
  chart.slice_basis = matrices(parabolic.u2);
  chart.offset = RatMatrix(L.ambient_size(), L.ambient_size());

  const std::size_t n2 = L.ambient_size() * L.ambient_size();
  RatMatrix slice(n2, chart.slice_basis.size());
  for (std::size_t k = 0; k < chart.slice_basis.size(); ++k)
    for (std::size_t r = 0; r < n2; ++r) slice(r, k) = chart.slice_basis[k].data()[r];
  auto coords = solve(slice, e.matrix.data());
  if (!coords) throw Error(ErrorKind::Internal, "nilpotent element is not in its own slice");
  chart.base_slice_coords = std::move(*coords);
  chart.base_element = e;
  chart.expected_orbit_dim = orbit_dim(L, e);
  chart.nilpotent = NilpotentSlice{L, std::move(triple), std::move(parabolic)};
  if (chart.param_count() != chart.expected_orbit_dim) {
    throw Error(ErrorKind::Internal, "nilpotent chart has " + std::to_string(chart.param_count()) +
                                         " parameters for an orbit of dimension " +
                                         std::to_string(chart.expected_orbit_dim));
  }
  return chart;
}

OrbitChart chart_semisimple(const LieAlgebra& L, const LieElement& x, std::uint64_t seed) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "the zero orbit has no chart");
  if (!is_semisimple(x.matrix)) throw Error(ErrorKind::NotSemisimple, to_string(x.matrix) + " is not semisimple");
  LeviSplit split = levi_split(L, x, seed);

  OrbitChart chart;
  chart.case_tag = CaseTag::semisimple;
  chart.outer.factors.push_back({matrices(split.parabolic.u_minus)});
  chart.outer.factors.push_back({matrices(split.parabolic.u)});
  chart.offset = x.matrix;
  chart.base_element = x;
  chart.expected_orbit_dim = orbit_dim(L, x);
  chart.levi = std::move(split);
  if (chart.param_count() != chart.expected_orbit_dim) {
    throw Error(ErrorKind::Internal, "semisimple chart parameter count differs from the orbit dimension");
  }
  return chart;
}

OrbitChart chart_mixed(const LieAlgebra& L, const LieElement& x, std::uint64_t seed) {
  const JordanPair parts = jordan_decompose(L, x);
  if (parts.semisimple.is_zero() || parts.nilpotent.is_zero()) {
    throw Error(ErrorKind::NotSemisimple, "mixed chart needs nonzero semisimple and nilpotent parts");
  }
  LeviSplit split = levi_split(L, parts.semisimple, seed);
  auto inner = std::make_shared<OrbitChart>(chart_nilpotent(split.levi, split.levi.element(parts.nilpotent.matrix)));

  ComplementSeq levi_complement;
  levi_complement.factors.push_back({matrices(split.parabolic.u_minus)});
  levi_complement.factors.push_back({matrices(split.parabolic.u)});

  OrbitChart chart;
  chart.case_tag = CaseTag::mixed;
  chart.outer = compose_complements(levi_complement, inner->outer);
  chart.slice_basis = inner->slice_basis;
  chart.offset = parts.semisimple.matrix;
  chart.base_slice_coords = inner->base_slice_coords;
  chart.base_element = x;
  chart.expected_orbit_dim = (L.dim() - split.levi.dim()) + inner->expected_orbit_dim;
  chart.inner = std::move(inner);
  chart.levi = std::move(split);
  // 𝔠_𝔤(x) = 𝔠_𝔩(x_n), so the count must match the orbit of x itself.
  if (chart.expected_orbit_dim != orbit_dim(L, x) || chart.param_count() != chart.expected_orbit_dim) {
    throw Error(ErrorKind::Internal, "mixed chart dimension does not match the orbit dimension");
  }
  return chart;
}

OrbitChart build_chart(const LieAlgebra& L, const LieElement& x, std::uint64_t seed) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "the zero orbit has no chart");
  const JordanPair parts = jordan_decompose(L, x);
  if (parts.semisimple.is_zero()) return chart_nilpotent(L, x);
  if (parts.nilpotent.is_zero()) return chart_semisimple(L, x, seed);
  return chart_mixed(L, x, seed);
}

template RatMatrix exp_nilpotent(const RatMatrix&);
template DualMatrix exp_nilpotent(const DualMatrix&);
template RatMatrix eval_complement(const ComplementSeq&, std::span<const Rational>, const RatMatrix&);
template DualMatrix eval_complement(const ComplementSeq&, std::span<const Dual>, const DualMatrix&);
template RatMatrix eval_chart(const OrbitChart&, std::span<const Rational>);
template DualMatrix eval_chart(const OrbitChart&, std::span<const Dual>);

}  // namespace adjorbit
