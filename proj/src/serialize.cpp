#include "adjorbit/serialize.hpp"

namespace adjorbit {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const LieAlgebra& L) {
  Json basis = Json::array();
  for (const auto& b : L.basis()) basis.push_back(to_json(b));
  return {{"label", L.label()}, {"ambient_size", L.ambient_size()}, {"basis", std::move(basis)}};
}

Json to_json(const LieElement& x) { return {{"coords", to_json(x.coords)}, {"matrix", to_json(x.matrix)}}; }

Json to_json(const JordanPair& parts) {
  return {{"x_s", to_json(parts.semisimple.matrix)}, {"x_n", to_json(parts.nilpotent.matrix)}};
}

Json to_json(const Sl2Triple& t) {
  return {{"e", to_json(t.e.matrix)}, {"h", to_json(t.h.matrix)}, {"f", to_json(t.f.matrix)}};
}

Json to_json(const Grading& g) {
  Json pieces = Json::array();
  for (const auto& [degree, piece] : g.pieces) {
    Json basis = Json::array();
    for (const auto& z : piece) basis.push_back(to_json(z.matrix));
    pieces.push_back({{"degree", degree}, {"basis", std::move(basis)}});
  }
  return {{"grading_element", to_json(g.grading_element.matrix)}, {"pieces", std::move(pieces)}};
}

namespace {

Json matrices(const std::vector<RatMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

Json to_json(const CheckValue& v) {
  return std::visit(
      [](const auto& value) -> Json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else {
          return value;
        }
      },
      v);
}

}  // namespace

Json to_json(const OrbitChart& chart) {
  Json factors = Json::array();
  for (const auto& f : chart.outer.factors) factors.push_back({{"basis", matrices(f.basis)}});
  Json out = {
      {"case_tag", to_string(chart.case_tag)},
      {"base_element", to_json(chart.base_element.matrix)},
      {"offset", to_json(chart.offset)},
      {"factors", std::move(factors)},
      {"slice_basis", matrices(chart.slice_basis)},
      {"base_params", to_json(chart.base_params())},
      {"inner", chart.inner ? to_json(*chart.inner) : Json(nullptr)},
      {"expected_orbit_dim", chart.expected_orbit_dim},
      {"param_count", chart.param_count()},
  };
  if (chart.nilpotent) {
    out["triple"] = to_json(chart.nilpotent->triple);
    out["u2_differs_from_u"] = chart.nilpotent->parabolic.u2_differs_from_u();
  }
  if (chart.levi) out["levi_witness"] = to_json(chart.levi->witness.matrix);
  return out;
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", to_json(c.expected)},
                      {"observed", to_json(c.observed)},
                      {"pass", c.pass},
                      {"severity", to_string(c.severity)}});
  }
  return {{"subject", report.subject},
          {"seed", report.seed},
          {"sample_count", report.sample_count},
          {"checks", std::move(checks)},
          {"overall_pass", report.overall_pass()}};
}

Json to_json(const OrbitClassId& id) { return to_json(id.invariant_vector); }

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::Parse, "matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw Error(ErrorKind::Parse, "matrix rows must be nonempty arrays");
  const std::size_t cols = j[0].size();
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw Error(ErrorKind::Parse, "matrix rows differ in length");
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& entry = j[i][k];
      if (entry.is_string()) {
        m(i, k) = parse_rational(entry.get<std::string>());
      } else if (entry.is_number_integer()) {
        m(i, k) = parse_rational(entry.dump());
      } else {
        throw Error(ErrorKind::Parse, "matrix entries must be strings or integers, got " + entry.dump());
      }
    }
  }
  return m;
}

RatMatrix parse_element(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix")) throw Error(ErrorKind::Parse, "expected an object with \"matrix\"");
  return matrix_from_json(doc["matrix"]);
}

}  // namespace adjorbit
