#include "adjorbit/sl2_triple.hpp"

#include "adjorbit/jordan.hpp"
#include "adjorbit/linalg.hpp"

namespace adjorbit {

Sl2Triple jacobson_morozov(const LieAlgebra& L, const LieElement& e) {
  if (e.is_zero()) throw Error(ErrorKind::ZeroElement, "Jacobson-Morozov needs a nonzero element");
  if (!is_nilpotent(e.matrix)) throw Error(ErrorKind::NotNilpotent, to_string(e.matrix) + " is not nilpotent");
  const std::size_t d = L.dim();
  const RatMatrix ad_e = L.ad_matrix(e);

  // [h, e] = -ad_e·h = 2e and h - ad_e·w = 0, unknowns (h, w).
  RatMatrix first(2 * d, 2 * d);
  RatVector rhs1(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      first(i, j) = -ad_e(i, j);
      first(d + i, d + j) = -ad_e(i, j);
    }
    first(d + i, i) = 1;
    rhs1[i] = 2 * e.coords[i];
  }
  auto hw = solve(first, rhs1);
  if (!hw) throw Error(ErrorKind::NoTripleFound, "no h in [e, L] with [h, e] = 2e");
  LieElement h = L.from_coords(RatVector(hw->begin(), hw->begin() + static_cast<long>(d)));

  // [e, f] = h and [h, f] + 2f = 0.
  const RatMatrix ad_h = L.ad_matrix(h);
  RatMatrix second(2 * d, d);
  RatVector rhs2(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      second(i, j) = ad_e(i, j);
      second(d + i, j) = ad_h(i, j);
    }
    second(d + i, i) += 2;
    rhs2[i] = h.coords[i];
  }
  auto f_coords = solve(second, rhs2);
  if (!f_coords) throw Error(ErrorKind::NoTripleFound, "no f completing the triple");

  Sl2Triple t{e, std::move(h), L.from_coords(std::move(*f_coords))};
  if (!satisfies_sl2_relations(L, t)) throw Error(ErrorKind::Internal, "constructed triple fails its relations");
  return t;
}

bool satisfies_sl2_relations(const LieAlgebra& L, const Sl2Triple& t) {
  const RatMatrix two_e = t.e.matrix * Rational(2);
  return commutator(t.h.matrix, t.e.matrix) == two_e &&
         commutator(t.h.matrix, t.f.matrix) == t.f.matrix * Rational(-2) &&
         commutator(t.e.matrix, t.f.matrix) == t.h.matrix && L.contains(t.h.matrix) && L.contains(t.f.matrix);
}

}  // namespace adjorbit
