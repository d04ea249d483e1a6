#pragma once

#include "adjorbit/lie_algebra.hpp"
#include "adjorbit/polynomial.hpp"

namespace adjorbit {

/// x = semisimple + nilpotent with the two parts commuting.
struct JordanPair {
  LieElement semisimple;
  LieElement nilpotent;
};

/// Polynomial r with r(x) = x_s, reduced modulo the characteristic
/// polynomial χ of x. Chevalley's Newton iteration on q = squarefree(χ):
/// r ← r − q(r)·q'(r)^{-1} (mod χ), the inverse taken by extended Euclid.
Polynomial semisimple_polynomial(const RatMatrix& x);

RatMatrix semisimple_part(const RatMatrix& x);

/// Splits x inside L. Both parts are re-expressed in L's basis; for sl_n
/// this is automatic, for so/sp membership is checked (NotInAlgebra on failure).
JordanPair jordan_decompose(const LieAlgebra& L, const LieElement& x);

bool is_nilpotent(const RatMatrix& m);
/// Squarefree minimal polynomial, tested as squarefree(χ)(m) = 0.
bool is_semisimple(const RatMatrix& m);

}  // namespace adjorbit
