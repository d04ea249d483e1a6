#include "adjorbit/grading.hpp"

#include "adjorbit/jordan.hpp"
#include "adjorbit/linalg.hpp"
#include "adjorbit/polynomial.hpp"
#include "adjorbit/random.hpp"

namespace adjorbit {

std::size_t Grading::piece_dim(int degree) const {
  auto it = pieces.find(degree);
  return it == pieces.end() ? 0 : it->second.size();
}

std::size_t Grading::dim_where(bool (*keep)(int)) const {
  std::size_t total = 0;
  for (const auto& [degree, basis] : pieces) {
    if (keep(degree)) total += basis.size();
  }
  return total;
}

Grading grading_by(const LieAlgebra& L, const LieElement& h) {
  const std::size_t d = L.dim();
  const RatMatrix ad_h = L.ad_matrix(h);
  Grading g{L, h, {}};
  std::size_t filled = 0;
  for (const auto root : integer_roots(char_poly(ad_h))) {
    RatMatrix shifted = ad_h;
    for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= Rational(static_cast<long>(root));
    std::vector<LieElement> piece;
    for (auto& v : kernel_basis(shifted)) piece.push_back(L.from_coords(std::move(v)));
    filled += piece.size();
    g.pieces.emplace(static_cast<int>(root), std::move(piece));
  }
  if (filled != d) {
    throw Error(ErrorKind::NonIntegerSpectrum, "ad of " + to_string(h.matrix) +
                                                   " is not diagonalizable with integer eigenvalues");
  }

  for (const auto& [i, left] : g.pieces) {
    for (const auto& [j, right] : g.pieces) {
      if (j < i) continue;
      for (const auto& a : left) {
        for (const auto& b : right) {
          const RatVector c = multiply(L.ad_matrix(a), b.coords);
          const RatVector hc = multiply(ad_h, c);
          for (std::size_t k = 0; k < d; ++k) {
            if (hc[k] != Rational(i + j) * c[k]) {
              throw Error(ErrorKind::Internal, "grading is not compatible with the bracket");
            }
          }
        }
      }
    }
  }
  return g;
}

namespace {

std::vector<LieElement> collect(const Grading& g, bool (*keep)(int), bool descending = false) {
  std::vector<LieElement> out;
  auto take = [&](const auto& entry) {
    if (keep(entry.first)) out.insert(out.end(), entry.second.begin(), entry.second.end());
  };
  if (descending) {
    for (auto it = g.pieces.rbegin(); it != g.pieces.rend(); ++it) take(*it);
  } else {
    for (const auto& entry : g.pieces) take(entry);
  }
  return out;
}

std::vector<RatMatrix> matrices(const std::vector<LieElement>& elements) {
  std::vector<RatMatrix> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.matrix);
  return out;
}

}  // namespace

ParabolicData parabolic_data(const Grading& g) {
  const LieAlgebra& L = g.algebra;
  ParabolicData data{
      g,
      collect(g, [](int i) { return i >= 0; }),
      collect(g, [](int i) { return i > 0; }),
      collect(g, [](int i) { return i < 0; }, true),
      collect(g, [](int i) { return i >= 2; }),
      LieAlgebra(L.ambient_size(), matrices(collect(g, [](int i) { return i == 0; })), "grade 0 of " + L.label()),
  };
  if (data.p.size() + data.u_minus.size() != L.dim() || data.u.size() != data.u_minus.size()) {
    throw Error(ErrorKind::Internal, "parabolic dimensions are inconsistent");
  }
  for (const auto* part : {&data.u, &data.u_minus, &data.u2}) {
    for (const auto& x : *part) {
      if (!is_nilpotent(x.matrix)) throw Error(ErrorKind::Internal, "nilradical element is not nilpotent");
    }
  }
  return data;
}

namespace {

bool is_witness(const LieAlgebra& L, const LieAlgebra& levi, const RatMatrix& z) {
  auto coords = L.coordinates(z);
  if (!coords || z.is_zero()) return false;
  if (!is_semisimple(z)) return false;
  const LieElement element = L.from_coords(std::move(*coords));
  if (L.dim() - rank(L.ad_matrix(element)) != levi.dim()) return false;
  for (const auto& b : levi.basis()) {
    if (!commutator(z, b).is_zero()) return false;
  }
  try {
    const Grading g = grading_by(L, element);
    return g.piece_dim(0) == levi.dim();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonIntegerSpectrum) return false;
    throw;
  }
}

}  // namespace

LieElement semisimple_for_levi(const LieAlgebra& L, const LieAlgebra& levi, std::uint64_t seed, int budget) {
  if (!is_subspace_of(levi, L)) throw Error(ErrorKind::NotInAlgebra, levi.label() + " is not inside " + L.label());
  if (levi.dim() == L.dim()) return L.zero();

  const LieAlgebra center = center_basis(levi);
  if (center.dim() == 0) throw Error(ErrorKind::WitnessNotFound, levi.label() + " has trivial center");

  const std::size_t n = L.ambient_size();
  RatMatrix flat(center.dim(), n * n);
  for (std::size_t i = 0; i < center.dim(); ++i)
    for (std::size_t k = 0; k < n * n; ++k) flat(i, k) = center.basis()[i].data()[k];
  std::vector<RatMatrix> generators;
  for (auto& row : primitive_row_basis(flat)) generators.emplace_back(n, n, std::move(row));

  SplitMix64 rng(seed);
  const auto range = static_cast<std::int64_t>(n * n);
  for (int attempt = 0; attempt < budget; ++attempt) {
    RatMatrix z(n, n);
    for (const auto& g : generators) {
      const std::int64_t c = attempt == 0 ? 1 : rng.uniform(-range, range);
      if (c != 0) z += g * Rational(static_cast<long>(c));
    }
    if (is_witness(L, levi, z)) return L.element(z);
  }
  throw Error(ErrorKind::WitnessNotFound,
              "no semisimple witness for " + levi.label() + " within " + std::to_string(budget) + " attempts");
}

}  // namespace adjorbit
