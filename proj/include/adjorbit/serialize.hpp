#pragma once

#include <json.hpp>
#include <string_view>

#include "adjorbit/charts.hpp"
#include "adjorbit/jordan.hpp"
#include "adjorbit/verify.hpp"

namespace adjorbit {

/// Key order is insertion order, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

/// Rationals are canonical "p/q" strings ("p" when integral).
Json to_json(const Rational& r);
Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);
Json to_json(const LieAlgebra& L);
Json to_json(const LieElement& x);
Json to_json(const JordanPair& parts);
Json to_json(const Sl2Triple& triple);
Json to_json(const Grading& g);
Json to_json(const OrbitChart& chart);
Json to_json(const VerificationReport& report);
Json to_json(const OrbitClassId& id);

/// Entries may be strings ("p/q", "p") or JSON integers; rows must be
/// nonempty and of equal length. Throws Parse.
RatMatrix matrix_from_json(const Json& j);

/// Parses {"matrix": [[...], ...]}. Throws Parse on malformed text.
RatMatrix parse_element(std::string_view text);

}  // namespace adjorbit
