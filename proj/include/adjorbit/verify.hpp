#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "adjorbit/charts.hpp"
#include "adjorbit/random.hpp"

namespace adjorbit {

using CheckValue = std::variant<std::monostate, bool, std::int64_t, std::string>;

enum class Severity { error, warning, info };
std::string to_string(Severity severity);

struct Check {
  std::string name;
  CheckValue expected;
  CheckValue observed;
  bool pass = false;
  Severity severity = Severity::error;
};

/// Outcome of a verification run. It is a pure function of its inputs and
/// seed; every check (warnings included) must pass for overall_pass().
struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  std::size_t sample_count = 0;

  bool overall_pass() const;
  const Check* find(std::string_view name) const;
  void append(const VerificationReport& other);
};

/// Columns are the flattened directional derivatives ∂ψ/∂p_j at `params`,
/// each obtained by evaluating ψ at params + ε·e_j over the dual numbers.
RatMatrix jacobian_at(const OrbitChart& chart, std::span<const Rational> params);
std::size_t jacobian_rank_at(const OrbitChart& chart, std::span<const Rational> params);

/// A random parameter tuple whose slice coordinates describe a point of the
/// open P-orbit: Ad(p)(e) with p built from exp of nilpotent basis elements of
/// 𝔤(0), the one-parameter torus of the grading, and exp of a random element
/// of 𝔲. Outer coordinates are plain samples.
RatVector sample_params(const OrbitChart& chart, SplitMix64& rng);

/// Dimension and tangent identities, Jacobian rank at the base point and at
/// `samples` on-orbit tuples, injectivity sampling, invariant preservation,
/// and the u2_differs_from_u flag.
VerificationReport verify_chart(const LieAlgebra& L, const LieElement& x, const OrbitChart& chart,
                                std::uint64_t seed, std::size_t samples);

/// Trace form restricted to 𝔠(x) is nondegenerate.
bool check_centralizer_reductive(const LieAlgebra& L, const LieElement& x);

/// semisimple ⇔ reductive centralizer ⇔ the centralizer is a Levi with an
/// integer semisimple witness.
VerificationReport redstab_suite(const LieAlgebra& L, const LieElement& x, std::uint64_t seed);

/// Chevalley invariants of sl_n: (c_{n−2}, …, c_0) of χ(x).
struct OrbitClassId {
  RatVector invariant_vector;

  bool is_zero() const;
  friend bool operator==(const OrbitClassId&, const OrbitClassId&) = default;
};

OrbitClassId invariants(const LieAlgebra& L, const LieElement& x);

/// Class of the unique semisimple orbit in the fiber through x, i.e.
/// invariants(x_s). ZeroSemisimplePart when x is nilpotent.
OrbitClassId hamiltonian_class(const LieAlgebra& L, const LieElement& x);

/// Semisimple part of the companion matrix of tⁿ + c_{n−2}t^{n−2} + … + c_0
/// (ones on the subdiagonal, −coefficients in the last column).
LieElement kostant_rep(std::size_t n, const OrbitClassId& class_id);

}  // namespace adjorbit
