#include <doctest.h>

#include "adjorbit/lie_algebra.hpp"
#include "adjorbit/linalg.hpp"
#include "support.hpp"

using namespace adjorbit;
using adjorbit::testing::mat;

namespace {

RatMatrix E(std::size_t n, std::size_t i, std::size_t j) { return unit_matrix(n, i - 1, j - 1); }

void check_jacobi(const LieAlgebra& L) {
  const auto d = L.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto& a = L.basis()[i];
        const auto& b = L.basis()[j];
        const auto& c = L.basis()[k];
        auto sum = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                   commutator(c, commutator(a, b));
        REQUIRE(sum.is_zero());
      }
}

}  // namespace

TEST_CASE("build_classical dimensions") {
  CHECK(build_classical(Family::sl, 2).dim() == 3);
  CHECK(build_classical(Family::sl, 3).dim() == 8);
  CHECK(build_classical(Family::sp, 4).dim() == 10);
  for (std::size_t n = 2; n <= 5; ++n) CHECK(build_classical(Family::sl, n).dim() == n * n - 1);
  for (std::size_t n = 3; n <= 6; ++n) CHECK(build_classical(Family::so, n).dim() == n * (n - 1) / 2);
  for (std::size_t n = 2; n <= 6; n += 2) CHECK(build_classical(Family::sp, n).dim() == n * (n + 1) / 2);
}

TEST_CASE("build_classical rejects unsupported sizes") {
  CHECK_THROWS_AS(build_classical(Family::sl, 1), Error);
  CHECK_THROWS_AS(build_classical(Family::so, 2), Error);
  CHECK_THROWS_AS(build_classical(Family::sp, 3), Error);
}

TEST_CASE("sl_n basis ordering is frozen") {
  const auto sl3 = build_classical(Family::sl, 3);
  CHECK(sl3.basis()[0] == E(3, 1, 2));
  CHECK(sl3.basis()[1] == E(3, 1, 3));
  CHECK(sl3.basis()[2] == E(3, 2, 1));
  CHECK(sl3.basis()[5] == E(3, 3, 2));
  CHECK(sl3.basis()[6] == E(3, 1, 1) - E(3, 2, 2));
  CHECK(sl3.basis()[7] == E(3, 2, 2) - E(3, 3, 3));
}

TEST_CASE("so and sp bases preserve their forms") {
  for (auto [family, n] : {std::pair{Family::so, 3}, {Family::so, 4}, {Family::so, 5}, {Family::sp, 2},
                           {Family::sp, 4}, {Family::sp, 6}}) {
    const auto L = build_classical(family, n);
    const auto J = defining_form(family, n);
    for (const auto& b : L.basis()) CHECK((b.transpose() * J + J * b).is_zero());
    // split form: a full diagonal Cartan of rank n/2 is present
    RatMatrix diag_part(n, n);
    std::size_t diagonal_elements = 0;
    for (const auto& b : L.basis()) {
      bool is_diag = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && sgn(b(i, j)) != 0) is_diag = false;
      diagonal_elements += is_diag;
    }
    CHECK(diagonal_elements == n / 2);
  }
}

TEST_CASE("Jacobi identity on all basis triples") {
  check_jacobi(build_classical(Family::sl, 2));
  check_jacobi(build_classical(Family::sl, 3));
  check_jacobi(build_classical(Family::so, 4));
  check_jacobi(build_classical(Family::sp, 4));
  check_jacobi(build_classical(Family::so, 5));
  check_jacobi(build_classical(Family::sl, 4));  // dim 15
}

TEST_CASE("bracket examples") {
  const auto sl2 = build_classical(Family::sl, 2);
  const auto e = sl2.element(mat({{0, 1}, {0, 0}}));
  const auto f = sl2.element(mat({{0, 0}, {1, 0}}));
  const auto h = sl2.element(mat({{1, 0}, {0, -1}}));
  CHECK(sl2.bracket(e, f) == h);
  CHECK(sl2.bracket(e, e).is_zero());

  const auto sl3 = build_classical(Family::sl, 3);
  CHECK(sl3.bracket(sl3.element(E(3, 1, 2)), sl3.element(E(3, 2, 3))).matrix == E(3, 1, 3));
}

TEST_CASE("ad_matrix examples") {
  const auto sl2 = build_classical(Family::sl, 2);  // basis (e, f, h)
  const auto e = sl2.element(mat({{0, 1}, {0, 0}}));
  const auto h = sl2.element(mat({{1, 0}, {0, -1}}));
  // In basis (e, h, f) ad h = diag(2, 0, -2); in the frozen order (e, f, h) it is diag(2, -2, 0).
  CHECK(sl2.ad_matrix(h) == mat({{2, 0, 0}, {0, -2, 0}, {0, 0, 0}}));
  CHECK(sl2.ad_matrix(sl2.zero()).is_zero());
  // ad e: [e,e]=0, [e,f]=h, [e,h]=-2e
  CHECK(sl2.ad_matrix(e) == mat({{0, 0, -2}, {0, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("element membership") {
  const auto sl2 = build_classical(Family::sl, 2);
  CHECK_FALSE(sl2.contains(mat({{1, 0}, {0, 0}})));
  CHECK_THROWS_AS(sl2.element(mat({{1, 0}, {0, 0}})), Error);
  CHECK_FALSE(sl2.contains(RatMatrix(3, 3)));
}

TEST_CASE("centralizer_basis examples") {
  const auto sl2 = build_classical(Family::sl, 2);
  const auto ce = centralizer_basis(sl2, sl2.element(mat({{0, 1}, {0, 0}})));
  REQUIRE(ce.dim() == 1);
  CHECK(ce.basis()[0] == mat({{0, 1}, {0, 0}}));
  const auto ch = centralizer_basis(sl2, sl2.element(mat({{1, 0}, {0, -1}})));
  REQUIRE(ch.dim() == 1);
  CHECK(ch.contains(mat({{1, 0}, {0, -1}})));

  const auto sl3 = build_classical(Family::sl, 3);
  const auto c13 = centralizer_basis(sl3, sl3.element(E(3, 1, 3)));
  CHECK(c13.dim() == 4);
  for (const auto& m : {E(3, 1, 3), E(3, 1, 2), E(3, 2, 3), mat({{1, 0, 0}, {0, -2, 0}, {0, 0, 1}})}) {
    CHECK(c13.contains(m));
  }
}

TEST_CASE("center_basis examples") {
  const auto sl3 = build_classical(Family::sl, 3);
  CHECK(center_basis(sl3).dim() == 0);

  const auto levi = centralizer_basis(sl3, sl3.element(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, -2}})));
  CHECK(levi.dim() == 4);
  const auto z = center_basis(levi);
  REQUIRE(z.dim() == 1);
  CHECK(z.contains(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, -2}})));

  const auto cartan = LieAlgebra(3, {sl3.basis()[6], sl3.basis()[7]}, "cartan");
  CHECK(center_basis(cartan).dim() == 2);
}

TEST_CASE("trace_form_gram examples") {
  const auto sl2 = build_classical(Family::sl, 2);
  CHECK(trace_form_gram(sl2, LieAlgebra(2, {mat({{1, 0}, {0, -1}})}, "h")) == mat({{2}}));
  CHECK(trace_form_gram(sl2, LieAlgebra(2, {mat({{0, 1}, {0, 0}})}, "e")) == mat({{0}}));
  const auto sl3 = build_classical(Family::sl, 3);
  const auto sub = LieAlgebra(3, {mat({{1, 0, 0}, {0, 1, 0}, {0, 0, -2}}), E(3, 1, 2)}, "sub");
  CHECK(trace_form_gram(sl3, sub) == mat({{6, 0}, {0, 0}}));
}

TEST_CASE("construction rejects dependent or non-closed bases") {
  CHECK_THROWS_AS(LieAlgebra(2, {mat({{0, 1}, {0, 0}}), mat({{0, 2}, {0, 0}})}, "dep"), Error);
  try {
    LieAlgebra(2, {mat({{0, 1}, {0, 0}}), mat({{0, 0}, {1, 0}})}, "open");
    FAIL("expected NotBracketClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBracketClosed);
  }
}

TEST_CASE("centralizer properties on random elements") {
  SplitMix64 rng(2024);
  for (auto [family, n] : {std::pair{Family::sl, 3}, {Family::sl, 4}, {Family::so, 5}, {Family::sp, 4}}) {
    const auto L = build_classical(family, n);
    const auto center = center_basis(L);
    for (int trial = 0; trial < 10; ++trial) {
      RatVector coords(L.dim());
      for (auto& c : coords) c = rng.uniform(0, 2) == 0 ? rng.rational() : Rational(0);
      const auto x = L.from_coords(coords);
      const auto c = centralizer_basis(L, x);
      CHECK(c.dim() == L.dim() - rank(L.ad_matrix(x)));
      CHECK(c.contains(x.matrix));
      CHECK(is_subspace_of(center, c));
      for (const auto& b : c.basis()) CHECK(commutator(b, x.matrix).is_zero());
    }
  }
}
