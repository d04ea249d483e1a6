#include <doctest.h>

#include "adjorbit/grading.hpp"
#include "adjorbit/jordan.hpp"
#include "adjorbit/sl2_triple.hpp"
#include "support.hpp"

using namespace adjorbit;
using adjorbit::testing::mat;

TEST_CASE("jacobson_morozov examples") {
  const auto sl2 = build_classical(Family::sl, 2);
  const auto t = jacobson_morozov(sl2, sl2.element(mat({{0, 1}, {0, 0}})));
  CHECK(t.h.matrix == mat({{1, 0}, {0, -1}}));
  CHECK(t.f.matrix == mat({{0, 0}, {1, 0}}));

  const auto sl3 = build_classical(Family::sl, 3);
  const auto regular = jacobson_morozov(sl3, sl3.element(mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})));
  CHECK(regular.h.matrix == mat({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}));
  CHECK(regular.f.matrix == mat({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}}));

  const auto minimal = jacobson_morozov(sl3, sl3.element(unit_matrix(3, 0, 2)));
  CHECK(minimal.h.matrix == mat({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}}));
  CHECK(minimal.f.matrix == unit_matrix(3, 2, 0));
}

TEST_CASE("jacobson_morozov errors") {
  const auto sl2 = build_classical(Family::sl, 2);
  try {
    jacobson_morozov(sl2, sl2.element(mat({{1, 0}, {0, -1}})));
    FAIL("expected NotNilpotent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNilpotent);
  }
  CHECK_THROWS_AS(jacobson_morozov(sl2, sl2.zero()), Error);

  // Borel subalgebra of sl2 is not reductive: no f exists.
  const LieAlgebra borel(2, {mat({{0, 1}, {0, 0}}), mat({{1, 0}, {0, -1}})}, "borel");
  try {
    jacobson_morozov(borel, borel.element(mat({{0, 1}, {0, 0}})));
    FAIL("expected NoTripleFound");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoTripleFound);
  }
}

TEST_CASE("every nilpotent Jordan type in sl_n, n <= 5, completes to a triple") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto L = build_classical(Family::sl, n);
    for (const auto& lambda : testing::partitions(n)) {
      if (lambda.front() == 1) continue;  // zero element
      CAPTURE(n);
      const auto e = L.element(testing::jordan_nilpotent(lambda));
      const auto t = jacobson_morozov(L, e);
      CHECK(satisfies_sl2_relations(L, t));
      CHECK(commutator(t.h.matrix, e.matrix) == e.matrix * Rational(2));
      const auto g = grading_by(L, t.h);
      std::size_t total = 0;
      for (const auto& [i, piece] : g.pieces) {
        total += piece.size();
        CHECK(g.piece_dim(-i) == piece.size());
      }
      CHECK(total == L.dim());
    }
  }
}

TEST_CASE("triples in so and sp and in conjugated positions") {
  SplitMix64 rng(3);
  for (auto [family, n] : {std::pair{Family::so, 5}, {Family::so, 4}, {Family::sp, 4}, {Family::sp, 6}}) {
    const auto L = build_classical(family, n);
    // nilpotent elements: basis vectors that are nilpotent, plus sums of two
    for (std::size_t i = 0; i < L.dim(); ++i) {
      const auto& b = L.basis()[i];
      if (!is_nilpotent(b)) continue;
      const auto t = jacobson_morozov(L, L.element(b));
      CHECK(satisfies_sl2_relations(L, t));
    }
  }
  const auto sl4 = build_classical(Family::sl, 4);
  for (int trial = 0; trial < 10; ++trial) {
    auto [g, g_inv] = testing::random_unipotent(rng, 4, 5);
    const auto e = sl4.element(g * testing::jordan_nilpotent({2, 2}) * g_inv);
    CHECK(satisfies_sl2_relations(sl4, jacobson_morozov(sl4, e)));
  }
}
