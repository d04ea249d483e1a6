#include "adjorbit/pipeline.hpp"

namespace adjorbit {

Json analyze(const LieAlgebra& L, const LieElement& x) {
  const JordanPair parts = jordan_decompose(L, x);
  const std::size_t centralizer_dim = centralizer_basis(L, x).dim();
  std::string kind = "mixed";
  if (x.is_zero()) {
    kind = "zero";
  } else if (parts.semisimple.is_zero()) {
    kind = "nilpotent";
  } else if (parts.nilpotent.is_zero()) {
    kind = "semisimple";
  }
  Json class_id = nullptr;
  if (!parts.semisimple.is_zero() && L.family() == Family::sl) class_id = to_json(hamiltonian_class(L, x));
  return {{"algebra", L.label()},
          {"element", to_json(x.matrix)},
          {"jordan", to_json(parts)},
          {"case", kind},
          {"centralizer_dim", centralizer_dim},
          {"orbit_dim", L.dim() - centralizer_dim},
          {"class_id", std::move(class_id)}};
}

Json chart(const LieAlgebra& L, const LieElement& x, std::uint64_t seed) {
  Json out = {{"algebra", L.label()}, {"seed", seed}};
  out["chart"] = to_json(build_chart(L, x, seed));
  return out;
}

VerificationReport verify(const LieAlgebra& L, const LieElement& x, std::uint64_t seed, std::size_t samples) {
  VerificationReport report = verify_chart(L, x, build_chart(L, x, seed), seed, samples);
  VerificationReport suite = redstab_suite(L, x, seed);
  for (auto& c : suite.checks) c.name = "redstab." + c.name;
  report.append(suite);
  return report;
}

Json classify(const LieAlgebra& L, const LieElement& x) {
  const OrbitClassId id = hamiltonian_class(L, x);
  return {{"algebra", L.label()},
          {"class_id", to_json(id)},
          {"representative", to_json(kostant_rep(L.ambient_size(), id).matrix)}};
}

}  // namespace adjorbit
