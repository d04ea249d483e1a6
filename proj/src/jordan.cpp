#include "adjorbit/jordan.hpp"

namespace adjorbit {

Polynomial semisimple_polynomial(const RatMatrix& x) {
  const Polynomial chi = char_poly(x);
  const Polynomial q = squarefree_part(chi);
  const Polynomial dq = q.derivative();
  Polynomial r = Polynomial::monomial(1, 1) % chi;
  // The error q(r) lies in (q)^{2^k} mod χ after k steps and χ | q^n, so
  // ⌈log₂ n⌉ + 1 rounds always suffice.
  const long limit = 2 + chi.degree();
  for (long round = 0; round < limit; ++round) {
    const Polynomial residual = q.compose_mod(r, chi);
    if (residual.is_zero()) return r;
    const Polynomial slope = dq.compose_mod(r, chi);
    const ExtendedGcd g = extended_gcd(slope, chi);
    if (g.gcd.degree() != 0) {
      throw Error(ErrorKind::Internal, "Newton step is not invertible modulo the characteristic polynomial");
    }
    r = (r - residual * g.s) % chi;
  }
  throw Error(ErrorKind::Internal, "Jordan-Chevalley iteration did not converge");
}

RatMatrix semisimple_part(const RatMatrix& x) { return semisimple_polynomial(x)(x); }

JordanPair jordan_decompose(const LieAlgebra& L, const LieElement& x) {
  if (x.is_zero()) return {L.zero(), L.zero()};
  const RatMatrix xs = semisimple_part(x.matrix);
  LieElement s = L.element(xs);
  LieElement n = L.element(x.matrix - xs);
  return {std::move(s), std::move(n)};
}

bool is_nilpotent(const RatMatrix& m) {
  if (!m.is_square()) return false;
  return power(m, m.rows()).is_zero();
}

bool is_semisimple(const RatMatrix& m) {
  if (!m.is_square()) return false;
  return squarefree_part(char_poly(m))(m).is_zero();
}

}  // namespace adjorbit
