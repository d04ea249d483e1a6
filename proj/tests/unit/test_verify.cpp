#include <doctest.h>

#include "adjorbit/jordan.hpp"
#include "adjorbit/linalg.hpp"
#include "adjorbit/polynomial.hpp"
#include "adjorbit/verify.hpp"
#include "support.hpp"

using namespace adjorbit;
using adjorbit::testing::mat;
using adjorbit::testing::vec;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

std::string failures(const VerificationReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.pass) out += c.name + " ";
  return out;
}

CheckValue observed(const VerificationReport& r, std::string_view name) {
  const Check* c = r.find(name);
  REQUIRE(c != nullptr);
  return c->observed;
}

}  // namespace

TEST_CASE("jacobian_rank_at examples") {
  const auto sl2 = build_classical(Family::sl, 2);
  const auto nil = chart_nilpotent(sl2, sl2.element(mat({{0, 1}, {0, 0}})));
  CHECK(jacobian_rank_at(nil, vec({0, 1})) == 2);
  // ∂a = −h, ∂v = e at (0, 1)
  const RatMatrix jac = jacobian_at(nil, vec({0, 1}));
  CHECK(jac == mat({{-1, 0}, {0, 1}, {0, 0}, {1, 0}}));
  // v = 0 is off the open orbit: only ∂v = e survives
  CHECK(jacobian_rank_at(nil, vec({0, 0})) == 1);

  const auto ss = chart_semisimple(sl2, sl2.element(mat({{1, 0}, {0, -1}})), 42);
  CHECK(jacobian_rank_at(ss, vec({0, 0})) == 2);
  CHECK(jacobian_at(ss, vec({0, 0})) == mat({{0, 0}, {0, -2}, {2, 0}, {0, 0}}));

  const auto sl3 = build_classical(Family::sl, 3);
  const auto minimal = chart_nilpotent(sl3, sl3.element(unit_matrix(3, 0, 2)));
  CHECK(jacobian_rank_at(minimal, minimal.base_params()) == 4);
  CHECK(kind_of([&] { jacobian_rank_at(minimal, vec({1})); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("jacobian agrees with finite differences of a polynomial map") {
  // The sl2 semisimple chart is quadratic in each parameter, so the central
  // difference with step 1 is the exact partial derivative.
  const auto sl2 = build_classical(Family::sl, 2);
  const auto ss = chart_semisimple(sl2, sl2.element(mat({{1, 0}, {0, -1}})), 42);
  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const RatVector p = {rng.rational(), rng.rational()};
    const RatMatrix jac = jacobian_at(ss, p);
    for (std::size_t j = 0; j < 2; ++j) {
      RatVector plus = p, minus = p;
      plus[j] += 1;
      minus[j] -= 1;
      const RatMatrix diff = (eval_chart(ss, plus) - eval_chart(ss, minus)) / Rational(2);
      for (std::size_t r = 0; r < 4; ++r) CHECK(jac(r, j) == diff.data()[r]);
    }
  }
}

TEST_CASE("verify_chart examples") {
  const auto sl2 = build_classical(Family::sl, 2);
  const auto e = sl2.element(mat({{0, 1}, {0, 0}}));
  const auto r1 = verify_chart(sl2, e, chart_nilpotent(sl2, e), 42, 10);
  CHECK_MESSAGE(r1.overall_pass(), failures(r1));
  CHECK(std::get<std::int64_t>(observed(r1, "jacobian_rank_base")) == 2);
  CHECK(std::get<bool>(observed(r1, "u2_differs_from_u")) == false);
  CHECK(r1.seed == 42);
  CHECK(r1.sample_count == 10);

  const auto h = sl2.element(mat({{1, 0}, {0, -1}}));
  const auto chart_h = chart_semisimple(sl2, h, 42);
  const auto r2 = verify_chart(sl2, h, chart_h, 42, 10);
  CHECK_MESSAGE(r2.overall_pass(), failures(r2));
  CHECK(std::get<std::int64_t>(observed(r2, "jacobian_rank_samples")) == 2);
  SplitMix64 rng(42);
  for (int k = 0; k < 10; ++k) CHECK(determinant(eval_chart(chart_h, sample_params(chart_h, rng))) == -1);

  const auto sl3 = build_classical(Family::sl, 3);
  const auto e13 = sl3.element(unit_matrix(3, 0, 2));
  const auto r3 = verify_chart(sl3, e13, chart_nilpotent(sl3, e13), 42, 10);
  CHECK_MESSAGE(r3.overall_pass(), failures(r3));
  CHECK(std::get<std::int64_t>(observed(r3, "jacobian_rank_base")) == 4);
  CHECK(std::get<bool>(observed(r3, "u2_differs_from_u")) == true);
}

TEST_CASE("verify_chart is a pure function of the seed") {
  const auto sl3 = build_classical(Family::sl, 3);
  const auto x = sl3.element(mat({{1, 1, 0}, {0, 1, 0}, {0, 0, -2}}));
  const auto chart = build_chart(sl3, x, 42);
  const auto a = verify_chart(sl3, x, chart, 9, 5);
  const auto b = verify_chart(sl3, x, chart, 9, 5);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t k = 0; k < a.checks.size(); ++k) CHECK(a.checks[k].observed == b.checks[k].observed);
  CHECK_MESSAGE(a.overall_pass(), failures(a));
  SplitMix64 r1(9), r2(9);
  CHECK(sample_params(chart, r1) == sample_params(chart, r2));
}

TEST_CASE("sampled slice points lie on the orbit of the base") {
  const auto sl4 = build_classical(Family::sl, 4);
  SplitMix64 rng(17);
  for (const auto& lambda : testing::partitions(4)) {
    if (lambda.front() == 1) continue;
    const auto e = sl4.element(testing::jordan_nilpotent(lambda));
    const auto chart = chart_nilpotent(sl4, e);
    for (int k = 0; k < 5; ++k) {
      const RatMatrix y = eval_chart(chart, sample_params(chart, rng));
      for (std::size_t p = 1; p <= 4; ++p) CHECK(rank(power(y, p)) == rank(power(e.matrix, p)));
    }
  }
}

TEST_CASE("a broken chart is reported, not thrown") {
  const auto sl2 = build_classical(Family::sl, 2);
  const auto h = sl2.element(mat({{1, 0}, {0, -1}}));
  OrbitChart chart = chart_semisimple(sl2, h, 42);
  chart.outer.factors.pop_back();  // drop 𝔲: one parameter short
  const auto r = verify_chart(sl2, h, chart, 42, 4);
  CHECK_FALSE(r.overall_pass());
  CHECK_FALSE(r.find("dimension_identity")->pass);
  CHECK_FALSE(r.find("jacobian_rank_base")->pass);
}

TEST_CASE("check_centralizer_reductive examples") {
  const auto sl2 = build_classical(Family::sl, 2);
  CHECK(check_centralizer_reductive(sl2, sl2.element(mat({{1, 0}, {0, -1}}))));
  CHECK_FALSE(check_centralizer_reductive(sl2, sl2.element(mat({{0, 1}, {0, 0}}))));
  const auto sl3 = build_classical(Family::sl, 3);
  const auto x = sl3.element(mat({{1, 1, 0}, {0, 1, 0}, {0, 0, -2}}));
  CHECK_FALSE(check_centralizer_reductive(sl3, x));
  CHECK(trace_form_gram(sl3, centralizer_basis(sl3, x)).rows() == 2);
}

TEST_CASE("redstab_suite examples") {
  const auto sl2 = build_classical(Family::sl, 2);
  const auto rh = redstab_suite(sl2, sl2.element(mat({{1, 0}, {0, -1}})), 42);
  CHECK_MESSAGE(rh.overall_pass(), failures(rh));
  CHECK(std::get<bool>(observed(rh, "semisimple")));
  CHECK(std::get<bool>(observed(rh, "reductive_proxy")));
  CHECK(std::get<std::string>(observed(rh, "levi_witness_element")) == "[[1,0],[0,-1]]");

  const auto re = redstab_suite(sl2, sl2.element(mat({{0, 1}, {0, 0}})), 42);
  CHECK_MESSAGE(re.overall_pass(), failures(re));
  CHECK_FALSE(std::get<bool>(observed(re, "semisimple")));
  CHECK_FALSE(std::get<bool>(observed(re, "reductive_proxy")));
  CHECK_FALSE(std::get<bool>(observed(re, "levi_witness")));

  const auto sl3 = build_classical(Family::sl, 3);
  const auto rd = redstab_suite(sl3, sl3.element(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, -2}})), 42);
  CHECK_MESSAGE(rd.overall_pass(), failures(rd));
  CHECK(std::get<std::string>(observed(rd, "levi_witness_element")) == "[[1,0,0],[0,1,0],[0,0,-2]]");
}

TEST_CASE("invariants examples") {
  const auto sl2 = build_classical(Family::sl, 2);
  CHECK(invariants(sl2, sl2.element(mat({{1, 0}, {0, -1}}))).invariant_vector == vec({-1}));
  const auto sl3 = build_classical(Family::sl, 3);
  CHECK(invariants(sl3, sl3.element(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, -2}}))).invariant_vector == vec({-3, 2}));
  CHECK(invariants(sl3, sl3.element(unit_matrix(3, 0, 2))).is_zero());
  const auto so3 = build_classical(Family::so, 3);
  CHECK(kind_of([&] { invariants(so3, so3.zero()); }) == ErrorKind::UnsupportedAlgebra);
}

TEST_CASE("hamiltonian_class examples") {
  const auto sl2 = build_classical(Family::sl, 2);
  CHECK(hamiltonian_class(sl2, sl2.element(mat({{1, 1}, {0, -1}}))).invariant_vector == vec({-1}));
  const auto sl3 = build_classical(Family::sl, 3);
  CHECK(hamiltonian_class(sl3, sl3.element(mat({{1, 1, 0}, {0, 1, 0}, {0, 0, -2}}))).invariant_vector ==
        vec({-3, 2}));
  CHECK(kind_of([&] { hamiltonian_class(sl2, sl2.element(mat({{0, 1}, {0, 0}}))); }) ==
        ErrorKind::ZeroSemisimplePart);
  CHECK(kind_of([&] { hamiltonian_class(sl2, sl2.zero()); }) == ErrorKind::ZeroSemisimplePart);
}

TEST_CASE("kostant_rep examples") {
  CHECK(kostant_rep(2, {vec({-1})}).matrix == mat({{0, 1}, {1, 0}}));
  const auto rep = kostant_rep(3, {vec({-3, 2})});
  CHECK(is_semisimple(rep.matrix));
  CHECK(char_poly(rep.matrix) == Polynomial({2, -3, 0, 1}));
  CHECK(kind_of([] { kostant_rep(3, {vec({0, 0})}); }) == ErrorKind::ZeroClass);
  CHECK(kind_of([] { kostant_rep(3, {vec({1})}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("invariants are constant on adjoint orbits") {
  SplitMix64 rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto L = build_classical(Family::sl, n);
    RatVector coords(L.dim());
    for (auto& c : coords) c = rng.rational();
    const auto x = L.from_coords(coords);
    const auto [g, g_inv] = testing::random_unipotent(rng, n, 4);
    const auto y = L.element(g * x.matrix * g_inv);
    CHECK(invariants(L, x) == invariants(L, y));
  }
}

TEST_CASE("invariants after kostant_rep is the identity") {
  SplitMix64 rng(25);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto L = build_classical(Family::sl, n);
    int non_squarefree = 0;
    for (int trial = 0; trial < 25; ++trial) {
      OrbitClassId c;
      if (trial % 2 == 0 || n == 2) {
        // roots drawn with repeats allowed, summing to zero
        std::vector<long> roots(n);
        long sum = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) sum += roots[i] = rng.uniform(-2, 2);
        roots[n - 1] = -sum;
        RatMatrix d(n, n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = roots[i];
        c = invariants(L, L.element(d));
      } else {
        c.invariant_vector.resize(n - 1);
        for (auto& v : c.invariant_vector) v = rng.rational();
      }
      if (c.is_zero()) continue;
      const Polynomial chi = char_poly(kostant_rep(n, c).matrix);
      non_squarefree += squarefree_part(chi).degree() < static_cast<long>(n);
      CHECK(invariants(L, kostant_rep(n, c)) == c);
    }
    if (n > 2) CHECK(non_squarefree > 0);
  }
}
