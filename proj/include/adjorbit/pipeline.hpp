#pragma once

#include <cstdint>

#include "adjorbit/serialize.hpp"

namespace adjorbit {

/// One pipeline stage per function; shared by the command-line tool and the
/// Python module. All four are pure functions of their arguments.

/// {algebra, element, jordan: {x_s, x_n}, case, centralizer_dim, orbit_dim,
/// class_id}. class_id is null when x_s = 0 or the family is not sl.
Json analyze(const LieAlgebra& L, const LieElement& x);

/// Serialized chart. ZeroElement for x = 0, WitnessNotFound when the
/// Levi witness search fails.
Json chart(const LieAlgebra& L, const LieElement& x, std::uint64_t seed);

/// verify_chart followed by redstab_suite (checks prefixed "redstab.") in a
/// single report.
VerificationReport verify(const LieAlgebra& L, const LieElement& x, std::uint64_t seed, std::size_t samples);

/// {class_id, representative}; ZeroSemisimplePart for nilpotent x.
Json classify(const LieAlgebra& L, const LieElement& x);

}  // namespace adjorbit
