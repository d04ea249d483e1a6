#include "adjorbit/lie_algebra.hpp"

#include "adjorbit/linalg.hpp"

namespace adjorbit {

std::string to_string(Family family) {
  switch (family) {
    case Family::sl: return "sl";
    case Family::so: return "so";
    case Family::sp: return "sp";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "sl") return Family::sl;
  if (text == "so") return Family::so;
  if (text == "sp") return Family::sp;
  throw Error(ErrorKind::Parse, "unknown algebra family '" + std::string(text) + "'");
}

struct LieAlgebra::Impl {
  std::size_t n = 0;
  std::vector<RatMatrix> basis;
  std::string label;
  std::optional<Family> family;
  // Coordinates are read off at `pivot_entries` (flattened indices) through
  // `coordinate_map`, then confirmed by reconstruction.
  std::vector<std::size_t> pivot_entries;
  RatMatrix coordinate_map;
  std::vector<RatMatrix> ad_basis;

  std::optional<RatVector> coordinates(const RatMatrix& m) const {
    if (m.rows() != n || m.cols() != n) return std::nullopt;
    const std::size_t d = basis.size();
    RatVector picked(d);
    for (std::size_t k = 0; k < d; ++k) picked[k] = m.data()[pivot_entries[k]];
    RatVector coords = multiply(coordinate_map, picked);
    RatMatrix rebuilt(n, n);
    for (std::size_t k = 0; k < d; ++k) {
      if (sgn(coords[k]) != 0) rebuilt += basis[k] * coords[k];
    }
    if (!(rebuilt == m)) return std::nullopt;
    return coords;
  }
};

LieAlgebra::LieAlgebra(std::size_t ambient_size, std::vector<RatMatrix> basis, std::string label,
                       std::optional<Family> family) {
  auto impl = std::make_shared<Impl>();
  impl->n = ambient_size;
  impl->label = std::move(label);
  impl->family = family;
  const std::size_t d = basis.size();
  for (const auto& b : basis) {
    if (b.rows() != ambient_size || b.cols() != ambient_size) {
      throw Error(ErrorKind::DimensionMismatch, "basis matrix has the wrong size for " + impl->label);
    }
  }
  impl->basis = std::move(basis);

  // Rows are flattened basis matrices; pivot columns give d entries that
  // determine an element of the span.
  const std::size_t n2 = ambient_size * ambient_size;
  RatMatrix flat(d, n2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < n2; ++k) flat(i, k) = impl->basis[i].data()[k];
  const Echelon e = echelon(flat);
  if (e.rank() != d) {
    throw Error(ErrorKind::LinearlyDependent, "basis of " + impl->label + " is linearly dependent");
  }
  impl->pivot_entries = e.pivots;
  RatMatrix selected(d, d);  // selected(k, i) = entry pivot_k of basis i
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) selected(k, i) = flat(i, e.pivots[k]);
  impl->coordinate_map = *inverse(selected);

  impl->ad_basis.assign(d, RatMatrix(d, d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const RatMatrix c = commutator(impl->basis[i], impl->basis[j]);
      auto coords = impl->coordinates(c);
      if (!coords) {
        throw Error(ErrorKind::NotBracketClosed,
                    impl->label + " is not closed under the bracket (basis " + std::to_string(i) + ", " +
                        std::to_string(j) + ")");
      }
      for (std::size_t k = 0; k < d; ++k) {
        impl->ad_basis[i](k, j) = (*coords)[k];
        impl->ad_basis[j](k, i) = -(*coords)[k];
      }
    }
  }
  impl_ = std::move(impl);
}

std::size_t LieAlgebra::ambient_size() const noexcept { return impl_->n; }
std::size_t LieAlgebra::dim() const noexcept { return impl_->basis.size(); }
const std::vector<RatMatrix>& LieAlgebra::basis() const noexcept { return impl_->basis; }
const std::string& LieAlgebra::label() const noexcept { return impl_->label; }
std::optional<Family> LieAlgebra::family() const noexcept { return impl_->family; }

std::optional<RatVector> LieAlgebra::coordinates(const RatMatrix& m) const { return impl_->coordinates(m); }

LieElement LieAlgebra::element(const RatMatrix& m) const {
  auto coords = coordinates(m);
  if (!coords) throw Error(ErrorKind::NotInAlgebra, "matrix " + to_string(m) + " is not in " + label());
  return LieElement{std::move(*coords), m};
}

RatMatrix LieAlgebra::matrix_of(std::span<const Rational> coords) const {
  if (coords.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "coordinate length mismatch");
  RatMatrix m(impl_->n, impl_->n);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (sgn(coords[k]) != 0) m += impl_->basis[k] * coords[k];
  }
  return m;
}

LieElement LieAlgebra::from_coords(RatVector coords) const {
  RatMatrix m = matrix_of(coords);
  return LieElement{std::move(coords), std::move(m)};
}

LieElement LieAlgebra::zero() const { return from_coords(RatVector(dim())); }

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  return from_coords(multiply(ad_matrix(x), y.coords));
}

RatMatrix LieAlgebra::ad_matrix(const LieElement& x) const {
  if (x.coords.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "element is not in " + label());
  RatMatrix ad(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x.coords[i]) != 0) ad += impl_->ad_basis[i] * x.coords[i];
  }
  return ad;
}

const RatMatrix& LieAlgebra::ad_basis(std::size_t i) const { return impl_->ad_basis.at(i); }

RatMatrix defining_form(Family family, std::size_t n) {
  RatMatrix j(n, n);
  switch (family) {
    case Family::sl:
      return RatMatrix{};
    case Family::so:
      for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = 1;
      return j;
    case Family::sp: {
      const std::size_t m = n / 2;
      for (std::size_t i = 0; i < m; ++i) {
        j(i, n - 1 - i) = 1;   // upper-right block A
        j(m + i, m - 1 - i) = -1;  // lower-left block −A
      }
      return j;
    }
  }
  return j;
}

namespace {

// Kernel of X ↦ X^T J + J X over the flattened entries of X.
std::vector<RatMatrix> form_algebra_basis(const RatMatrix& j) {
  const std::size_t n = j.rows();
  const std::size_t n2 = n * n;
  RatMatrix constraints(n2, n2);
  for (std::size_t k = 0; k < n2; ++k) {
    RatMatrix x(n, n);
    x.data()[k] = 1;
    const RatMatrix image = x.transpose() * j + j * x;
    for (std::size_t r = 0; r < n2; ++r) constraints(r, k) = image.data()[r];
  }
  std::vector<RatMatrix> basis;
  for (auto& v : kernel_basis(constraints)) basis.emplace_back(n, n, std::move(v));
  return basis;
}

}  // namespace

LieAlgebra build_classical(Family family, std::size_t n) {
  const std::string label = to_string(family) + std::to_string(n);
  switch (family) {
    case Family::sl: {
      if (n < 2) throw Error(ErrorKind::UnsupportedAlgebra, "sl_n needs n >= 2");
      std::vector<RatMatrix> basis;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) basis.push_back(unit_matrix(n, i, j));
      for (std::size_t i = 0; i + 1 < n; ++i) basis.push_back(unit_matrix(n, i, i) - unit_matrix(n, i + 1, i + 1));
      return LieAlgebra(n, std::move(basis), label, family);
    }
    case Family::so:
      if (n < 3) throw Error(ErrorKind::UnsupportedAlgebra, "so_n needs n >= 3");
      return LieAlgebra(n, form_algebra_basis(defining_form(family, n)), label, family);
    case Family::sp:
      if (n < 2 || n % 2 != 0) throw Error(ErrorKind::UnsupportedAlgebra, "sp_n needs even n >= 2");
      return LieAlgebra(n, form_algebra_basis(defining_form(family, n)), label, family);
  }
  throw Error(ErrorKind::UnsupportedAlgebra, "unknown family");
}

LieAlgebra subalgebra(const LieAlgebra& L, std::span<const RatVector> coords, std::string label) {
  std::vector<RatMatrix> basis;
  basis.reserve(coords.size());
  for (const auto& c : coords) basis.push_back(L.matrix_of(c));
  return LieAlgebra(L.ambient_size(), std::move(basis), std::move(label));
}

LieAlgebra centralizer_basis(const LieAlgebra& L, const LieElement& x) {
  const auto kernel = kernel_basis(L.ad_matrix(x));
  return subalgebra(L, kernel, "centralizer in " + L.label());
}

LieAlgebra center_basis(const LieAlgebra& L) {
  const std::size_t d = L.dim();
  RatMatrix stacked(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const RatMatrix& ad = L.ad_basis(i);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked(i * d + r, c) = ad(r, c);
  }
  return subalgebra(L, kernel_basis(stacked), "center of " + L.label());
}

RatMatrix trace_form_gram(const LieAlgebra& L, const LieAlgebra& sub) {
  if (sub.ambient_size() != L.ambient_size()) {
    throw Error(ErrorKind::DimensionMismatch, "subalgebra lives in a different ambient size");
  }
  const auto& b = sub.basis();
  RatMatrix gram(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j) {
      gram(i, j) = (b[i] * b[j]).trace();
      gram(j, i) = gram(i, j);
    }
  return gram;
}

bool is_subspace_of(const LieAlgebra& sub, const LieAlgebra& L) {
  for (const auto& b : sub.basis()) {
    if (!L.contains(b)) return false;
  }
  return true;
}

}  // namespace adjorbit
