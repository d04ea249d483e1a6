#pragma once

#include "adjorbit/lie_algebra.hpp"

namespace adjorbit {

/// [h, e] = 2e, [h, f] = −2f, [e, f] = h.
struct Sl2Triple {
  LieElement e;
  LieElement h;
  LieElement f;
};

/// Jacobson–Morozov completion of a nonzero nilpotent e ∈ L.
///
/// Two exact linear solves:
///   1. h = [e, w] with [h, e] = 2e, unknowns (h, w) jointly;
///   2. f with [e, f] = h and [h, f] = −2f.
/// Each takes the basic solution with all free variables zero, so the output
/// is deterministic. Requires L reductive; an inconsistent system raises
/// NoTripleFound. A non-nilpotent e raises NotNilpotent, e = 0 ZeroElement.
Sl2Triple jacobson_morozov(const LieAlgebra& L, const LieElement& e);

/// Exact check of the three defining relations.
bool satisfies_sl2_relations(const LieAlgebra& L, const Sl2Triple& t);

}  // namespace adjorbit
