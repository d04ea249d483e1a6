#include "adjorbit/verify.hpp"

#include <algorithm>
#include <cstdlib>

#include "adjorbit/jordan.hpp"
#include "adjorbit/linalg.hpp"
#include "adjorbit/polynomial.hpp"

namespace adjorbit {

std::string to_string(Severity severity) {
  switch (severity) {
    case Severity::error: return "error";
    case Severity::warning: return "warning";
    case Severity::info: return "info";
  }
  return "?";
}

bool VerificationReport::overall_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

Check equal_check(std::string name, std::int64_t expected, std::int64_t observed,
                  Severity severity = Severity::error) {
  return {std::move(name), expected, observed, expected == observed, severity};
}

Check bool_check(std::string name, bool expected, bool observed) {
  return {std::move(name), expected, observed, expected == observed, Severity::error};
}

Check info(std::string name, CheckValue observed) {
  return {std::move(name), std::monostate{}, std::move(observed), true, Severity::info};
}

RatMatrix flatten_columns(const std::vector<RatMatrix>& mats, std::size_t n) {
  RatMatrix m(n * n, mats.size());
  for (std::size_t k = 0; k < mats.size(); ++k)
    for (std::size_t r = 0; r < n * n; ++r) m(r, k) = mats[k].data()[r];
  return m;
}

Rational int_power(const Rational& t, int exponent) {
  Rational r = 1;
  for (int k = 0; k < std::abs(exponent); ++k) r *= t;
  return exponent < 0 ? Rational(1 / r) : r;
}

RatMatrix conjugate_by_exp(const RatMatrix& a, const RatMatrix& m) {
  return exp_nilpotent(a) * m * exp_nilpotent(RatMatrix(-a));
}

// Ad(p)(e) for a random p in the parabolic of the slice grading.
RatMatrix on_orbit_slice_point(const NilpotentSlice& slice, SplitMix64& rng) {
  const LieAlgebra& A = slice.algebra;
  RatMatrix m = slice.triple.e.matrix;

  for (const auto& b : slice.parabolic.levi0.basis()) {
    if (!is_nilpotent(b)) continue;
    const Rational t = rng.rational();
    if (sgn(t) != 0) m = conjugate_by_exp(b * t, m);
  }

  // The torus t^{ad h}: scale the degree-i component by t^i.
  const Rational t = rng.nonzero_rational();
  std::vector<RatVector> graded;
  std::vector<int> degrees;
  for (const auto& [degree, piece] : slice.parabolic.grading.pieces) {
    for (const auto& z : piece) {
      graded.push_back(z.coords);
      degrees.push_back(degree);
    }
  }
  auto y = solve(columns_to_matrix(graded, A.dim()), *A.coordinates(m));
  for (std::size_t k = 0; k < y->size(); ++k) (*y)[k] *= int_power(t, degrees[k]);
  m = A.matrix_of(multiply(columns_to_matrix(graded, A.dim()), *y));

  RatMatrix a(A.ambient_size(), A.ambient_size());
  for (const auto& z : slice.parabolic.u) a += z.matrix * rng.rational();
  return conjugate_by_exp(a, m);
}

}  // namespace

RatMatrix jacobian_at(const OrbitChart& chart, std::span<const Rational> params) {
  const std::size_t count = chart.param_count();
  if (params.size() != count) throw Error(ErrorKind::DimensionMismatch, "wrong number of chart parameters");
  const std::size_t n = chart.offset.rows();
  RatMatrix jac(n * n, count);
  std::vector<Dual> point(count);
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = 0; i < count; ++i) point[i] = Dual(params[i], i == j ? 1 : 0);
    const DualMatrix value = eval_chart<Dual>(chart, point);
    for (std::size_t r = 0; r < n * n; ++r) jac(r, j) = value.data()[r].eps;
  }
  return jac;
}

std::size_t jacobian_rank_at(const OrbitChart& chart, std::span<const Rational> params) {
  return rank(jacobian_at(chart, params));
}

RatVector sample_params(const OrbitChart& chart, SplitMix64& rng) {
  RatVector params;
  params.reserve(chart.param_count());
  for (std::size_t k = 0; k < chart.outer.param_count(); ++k) params.push_back(rng.rational());
  if (chart.slice_basis.empty()) return params;

  const NilpotentSlice* slice = chart.slice_data();
  if (slice == nullptr) throw Error(ErrorKind::Internal, "chart has a slice but no slice data");
  const RatMatrix point = on_orbit_slice_point(*slice, rng);
  const std::size_t n = point.rows();
  auto coords = solve(flatten_columns(chart.slice_basis, n), point.data());
  if (!coords) throw Error(ErrorKind::Internal, "sampled point left the slice");
  params.insert(params.end(), coords->begin(), coords->end());
  return params;
}

VerificationReport verify_chart(const LieAlgebra& L, const LieElement& x, const OrbitChart& chart,
                                std::uint64_t seed, std::size_t samples) {
  VerificationReport report;
  report.subject = L.label() + " x=" + to_string(x.matrix) + " chart=" + to_string(chart.case_tag);
  report.seed = seed;
  report.sample_count = samples;
  auto& checks = report.checks;
  const auto expected_dim = static_cast<std::int64_t>(L.dim() - centralizer_basis(L, x).dim());
  const auto param_count = static_cast<std::int64_t>(chart.param_count());

  const RatVector base = chart.base_params();
  checks.push_back(bool_check("base_point", true, eval_chart(chart, base) == x.matrix));
  checks.push_back(equal_check("dimension_identity", expected_dim, param_count));

  if (const NilpotentSlice* slice = chart.slice_data()) {
    const LieAlgebra& A = slice->algebra;
    const Grading& g = slice->parabolic.grading;
    checks.push_back(bool_check("sl2_relations", true, satisfies_sl2_relations(A, slice->triple)));
    bool symmetric = true;
    for (const auto& [i, piece] : g.pieces) symmetric = symmetric && g.piece_dim(-i) == piece.size();
    checks.push_back(bool_check("grading_symmetry", true, symmetric));
    checks.push_back(equal_check("centralizer_grading_identity",
                                 static_cast<std::int64_t>(centralizer_basis(A, slice->triple.e).dim()),
                                 static_cast<std::int64_t>(g.piece_dim(0) + g.piece_dim(1))));
    // dim [𝔭, e]
    const RatMatrix ad_e = A.ad_matrix(slice->triple.e);
    std::vector<RatVector> images;
    for (const auto& z : slice->parabolic.p) images.push_back(multiply(ad_e, z.coords));
    checks.push_back(equal_check("tangent_identity", static_cast<std::int64_t>(slice->parabolic.u2.size()),
                                 static_cast<std::int64_t>(rank(columns_to_matrix(images, A.dim())))));
    checks.push_back(info("u2_differs_from_u", slice->parabolic.u2_differs_from_u()));
  }

  if (chart.levi) {
    checks.push_back(equal_check("levi_witness_grading", static_cast<std::int64_t>(chart.levi->levi.dim()),
                                 static_cast<std::int64_t>(chart.levi->parabolic.levi0.dim())));
  }
  if (chart.case_tag == CaseTag::mixed) {
    const JordanPair parts = jordan_decompose(L, x);
    const LieAlgebra& levi = chart.levi->levi;
    checks.push_back(equal_check("centralizer_composition",
                                 static_cast<std::int64_t>(centralizer_basis(L, x).dim()),
                                 static_cast<std::int64_t>(
                                     centralizer_basis(levi, levi.element(parts.nilpotent.matrix)).dim())));
  }

  checks.push_back(equal_check("jacobian_rank_base", expected_dim,
                               static_cast<std::int64_t>(jacobian_rank_at(chart, base))));

  const Polynomial chi = char_poly(x.matrix);
  const std::size_t n = L.ambient_size();
  const bool nilpotent_case = chart.case_tag == CaseTag::nilpotent;
  std::vector<std::size_t> power_ranks;
  if (nilpotent_case) {
    for (std::size_t k = 1; k <= n; ++k) power_ranks.push_back(rank(power(x.matrix, k)));
  }

  SplitMix64 rng(seed);
  std::vector<RatVector> tuples;
  std::vector<RatMatrix> values;
  std::int64_t min_rank = expected_dim;
  std::int64_t preserved = 0;
  std::int64_t jordan_preserved = 0;
  std::int64_t in_algebra = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    RatVector params = sample_params(chart, rng);
    RatMatrix value = eval_chart(chart, params);
    min_rank = std::min(min_rank, static_cast<std::int64_t>(jacobian_rank_at(chart, params)));
    preserved += char_poly(value) == chi;
    in_algebra += L.contains(value);
    if (nilpotent_case) {
      bool same = true;
      for (std::size_t k = 1; k <= n; ++k) same = same && rank(power(value, k)) == power_ranks[k - 1];
      jordan_preserved += same;
    }
    tuples.push_back(std::move(params));
    values.push_back(std::move(value));
  }
  const auto sample_count = static_cast<std::int64_t>(samples);
  checks.push_back(equal_check("jacobian_rank_samples", expected_dim, min_rank));
  checks.push_back(equal_check("values_in_algebra", sample_count, in_algebra));
  checks.push_back(equal_check("char_poly_preserved", sample_count, preserved));
  if (nilpotent_case) checks.push_back(equal_check("jordan_type_preserved", sample_count, jordan_preserved));

  std::int64_t collisions = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      collisions += tuples[i] != tuples[j] && values[i] == values[j];
    }
  checks.push_back(equal_check("injectivity_sampling", 0, collisions, Severity::warning));
  return report;
}

bool check_centralizer_reductive(const LieAlgebra& L, const LieElement& x) {
  const RatMatrix gram = trace_form_gram(L, centralizer_basis(L, x));
  return sgn(determinant(gram)) != 0;
}

VerificationReport redstab_suite(const LieAlgebra& L, const LieElement& x, std::uint64_t seed) {
  VerificationReport report;
  report.subject = L.label() + " x=" + to_string(x.matrix) + " equivalences";
  report.seed = seed;
  auto& checks = report.checks;

  const JordanPair parts = jordan_decompose(L, x);
  const bool semisimple = parts.nilpotent.is_zero();
  checks.push_back(info("semisimple", semisimple));
  checks.push_back(bool_check("reductive_proxy", semisimple, check_centralizer_reductive(L, x)));

  const LieAlgebra centralizer = centralizer_basis(L, x);
  std::optional<LieElement> witness;
  try {
    witness = semisimple_for_levi(L, centralizer, seed);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::WitnessNotFound) throw;
  }
  checks.push_back(bool_check("levi_witness", semisimple, witness.has_value()));
  if (witness) {
    const Grading g = grading_by(L, *witness);
    const auto zero_piece = g.pieces.count(0) ? g.pieces.at(0) : std::vector<LieElement>{};
    bool equal = zero_piece.size() == centralizer.dim();
    for (const auto& z : zero_piece) equal = equal && centralizer.contains(z.matrix);
    checks.push_back(bool_check("levi_witness_grading", true, equal));
    checks.push_back(info("levi_witness_element", to_string(witness->matrix)));
  }
  return report;
}

bool OrbitClassId::is_zero() const {
  return std::all_of(invariant_vector.begin(), invariant_vector.end(), [](const Rational& c) { return sgn(c) == 0; });
}

OrbitClassId invariants(const LieAlgebra& L, const LieElement& x) {
  if (L.family() != Family::sl) {
    throw Error(ErrorKind::UnsupportedAlgebra, "invariants are implemented for sl_n only");
  }
  const std::size_t n = L.ambient_size();
  const Polynomial chi = char_poly(x.matrix);
  OrbitClassId id;
  for (std::size_t k = n - 1; k-- > 0;) id.invariant_vector.push_back(chi.coefficient(k));
  return id;
}

OrbitClassId hamiltonian_class(const LieAlgebra& L, const LieElement& x) {
  const JordanPair parts = jordan_decompose(L, x);
  if (parts.semisimple.is_zero()) {
    throw Error(ErrorKind::ZeroSemisimplePart, "nilpotent elements lie over the zero orbit");
  }
  return invariants(L, parts.semisimple);
}

LieElement kostant_rep(std::size_t n, const OrbitClassId& class_id) {
  if (n < 2 || class_id.invariant_vector.size() != n - 1) {
    throw Error(ErrorKind::DimensionMismatch, "class vector for sl_n needs n - 1 entries");
  }
  if (class_id.is_zero()) throw Error(ErrorKind::ZeroClass, "the zero class is the nilpotent cone");
  RatMatrix companion(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) companion(i + 1, i) = 1;
  // coefficient of t^i is invariant_vector[n-2-i]; t^{n-1} has coefficient 0
  for (std::size_t i = 0; i + 1 < n; ++i) companion(i, n - 1) = -class_id.invariant_vector[n - 2 - i];
  const LieAlgebra sl = build_classical(Family::sl, n);
  return sl.element(semisimple_part(companion));
}

}  // namespace adjorbit
