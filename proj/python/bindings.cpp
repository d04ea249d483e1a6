#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adjorbit/pipeline.hpp"

namespace py = pybind11;
using namespace adjorbit;

namespace {

using StrMatrix = std::vector<std::vector<std::string>>;

RatMatrix to_matrix(const StrMatrix& rows) {
  if (rows.empty() || rows.front().empty()) throw Error(ErrorKind::Parse, "empty matrix");
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error(ErrorKind::Parse, "matrix rows differ in length");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = parse_rational(rows[i][j]);
  }
  return m;
}

StrMatrix from_matrix(const RatMatrix& m) {
  StrMatrix out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_string(m(i, j));
  return out;
}

std::vector<std::string> from_vector(const RatVector& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

// The algebra is rebuilt per call; construction is cheap at these sizes.
struct Input {
  LieAlgebra algebra;
  LieElement x;
};

Input input(const std::string& family, std::size_t size, const StrMatrix& rows) {
  LieAlgebra L = build_classical(parse_family(family), size);
  const RatMatrix m = to_matrix(rows);
  if (m.rows() != size || m.cols() != size) throw Error(ErrorKind::NotInAlgebra, "element has the wrong size");
  LieElement x = L.element(m);
  return {std::move(L), std::move(x)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact adjoint-orbit charts over the rationals";

  static py::exception<Error> error(m, "AdjorbitError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(to_string(e.kind()), e.what());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("analyze", [](const std::string& family, std::size_t size, const StrMatrix& rows) {
    auto in = input(family, size, rows);
    return analyze(in.algebra, in.x).dump();
  });
  m.def(
      "chart",
      [](const std::string& family, std::size_t size, const StrMatrix& rows, std::uint64_t seed) {
        auto in = input(family, size, rows);
        return chart(in.algebra, in.x, seed).dump();
      },
      py::arg("family"), py::arg("size"), py::arg("matrix"), py::arg("seed") = 42);
  m.def(
      "verify",
      [](const std::string& family, std::size_t size, const StrMatrix& rows, std::uint64_t seed,
         std::size_t samples) {
        auto in = input(family, size, rows);
        return to_json(verify(in.algebra, in.x, seed, samples)).dump();
      },
      py::arg("family"), py::arg("size"), py::arg("matrix"), py::arg("seed") = 42, py::arg("samples") = 10);
  m.def("classify", [](const std::string& family, std::size_t size, const StrMatrix& rows) {
    auto in = input(family, size, rows);
    return classify(in.algebra, in.x).dump();
  });

  m.def("jordan_decompose", [](const std::string& family, std::size_t size, const StrMatrix& rows) {
    auto in = input(family, size, rows);
    const JordanPair parts = jordan_decompose(in.algebra, in.x);
    return py::make_tuple(from_matrix(parts.semisimple.matrix), from_matrix(parts.nilpotent.matrix));
  });
  m.def("sl2_triple", [](const std::string& family, std::size_t size, const StrMatrix& rows) {
    auto in = input(family, size, rows);
    const Sl2Triple t = jacobson_morozov(in.algebra, in.x);
    return py::make_tuple(from_matrix(t.e.matrix), from_matrix(t.h.matrix), from_matrix(t.f.matrix));
  });
  m.def("centralizer_dim", [](const std::string& family, std::size_t size, const StrMatrix& rows) {
    auto in = input(family, size, rows);
    return centralizer_basis(in.algebra, in.x).dim();
  });
  m.def("invariants", [](const std::string& family, std::size_t size, const StrMatrix& rows) {
    auto in = input(family, size, rows);
    return from_vector(invariants(in.algebra, in.x).invariant_vector);
  });
  m.def("kostant_rep", [](std::size_t n, const std::vector<std::string>& class_id) {
    OrbitClassId id;
    for (const auto& c : class_id) id.invariant_vector.push_back(parse_rational(c));
    return from_matrix(kostant_rep(n, id).matrix);
  });
  m.def(
      "eval_chart",
      [](const std::string& family, std::size_t size, const StrMatrix& rows, const std::vector<std::string>& params,
         std::uint64_t seed) {
        auto in = input(family, size, rows);
        RatVector p;
        for (const auto& c : params) p.push_back(parse_rational(c));
        const OrbitChart c = build_chart(in.algebra, in.x, seed);
        return py::make_tuple(from_matrix(eval_chart(c, p)), jacobian_rank_at(c, p));
      },
      py::arg("family"), py::arg("size"), py::arg("matrix"), py::arg("params"), py::arg("seed") = 42);
}
