// Copyright 2026 The qindis authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qindis/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qindis {

namespace {

double number_field(const Json& j, const char* what) {
  if (!j.is_number()) {
    throw Error("bad_input", std::string("expected a number for ") + what);
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw Error("bad_input", std::string("non-finite value for ") + what);
  }
  return v;
}

Complex complex_entry(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw Error("bad_input",
                std::string("expected an [re, im] pair for ") + what);
  }
  return Complex(number_field(j[0], what), number_field(j[1], what));
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      data.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data")) {
    throw Error("bad_input", "matrix JSON needs rows, cols and data");
  }
  const auto rows = j["rows"].get<Eigen::Index>();
  const auto cols = j["cols"].get<Eigen::Index>();
  if (rows < 1 || cols < 1) {
    throw Error("bad_input", "matrix dimensions must be positive");
  }
  const Json& data = j["data"];
  if (!data.is_array() ||
      data.size() != static_cast<std::size_t>(rows * cols)) {
    throw Error("bad_input", "matrix data length does not match dimensions");
  }
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index col = 0; col < cols; ++col) {
      m(i, col) = complex_entry(data[k++], "matrix entry");
    }
  }
  return m;
}

Json pure_state_to_json(const PureState& h) {
  Json amps = Json::array();
  for (Eigen::Index i = 0; i < h.amplitudes().size(); ++i) {
    amps.push_back({h.amplitudes()[i].real(), h.amplitudes()[i].imag()});
  }
  return Json{{"amplitudes", amps}};
}

PureState pure_state_from_json(const Json& j, const Tolerance& tol) {
  if (!j.is_object() || !j.contains("amplitudes") ||
      !j["amplitudes"].is_array() || j["amplitudes"].empty()) {
    throw Error("bad_input", "pure state JSON needs an amplitudes array");
  }
  const Json& amps = j["amplitudes"];
  CVector v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = complex_entry(amps[i], "amplitude");
  }
  return PureState(std::move(v), tol);
}

DensityMatrix state_from_json(const Json& j, const Tolerance& tol) {
  if (j.is_object() && j.contains("amplitudes")) {
    return density_from_pure(pure_state_from_json(j, tol));
  }
  return DensityMatrix(matrix_from_json(j), tol);
}

PureState pure_state_required(const Json& j, const Tolerance& tol) {
  if (!(j.is_object() && j.contains("amplitudes"))) {
    throw Error("bad_input", "this operation needs a pure state "
                             "({\"amplitudes\": ...})");
  }
  return pure_state_from_json(j, tol);
}

Json outcome_label_to_json(const OutcomeLabel& label) {
  Json parts = Json::array();
  for (const Complex& c : label.parts) {
    if (c.imag() == 0.0) {
      parts.push_back(c.real());
    } else {
      parts.push_back(Json{{"re", c.real()}, {"im", c.imag()}});
    }
  }
  return parts;
}

namespace {

OutcomeLabel label_from_json(const Json& j) {
  if (!j.is_array()) {
    throw Error("bad_input", "outcome label must be an array");
  }
  OutcomeLabel label;
  for (const Json& part : j) {
    if (part.is_number()) {
      label.parts.push_back(Complex(part.get<double>(), 0.0));
    } else if (part.is_object() && part.contains("re") && part.contains("im")) {
      label.parts.push_back(Complex(number_field(part["re"], "label re"),
                                    number_field(part["im"], "label im")));
    } else {
      throw Error("bad_input",
                  "label components must be numbers or {re, im} objects");
    }
  }
  return label;
}

}  // namespace

Json pvm_to_json(const PVM& p) {
  Json outs = Json::array();
  for (const auto& o : p.outcomes()) {
    outs.push_back({{"label", outcome_label_to_json(o.label)},
                    {"projection", matrix_to_json(o.projection)}});
  }
  return Json{{"dim", p.dim()}, {"outcomes", outs}};
}

PVM pvm_from_json(const Json& j, const Tolerance& tol) {
  if (!j.is_object() || !j.contains("outcomes") || !j["outcomes"].is_array()) {
    throw Error("bad_input", "PVM JSON needs an outcomes array");
  }
  std::vector<Outcome> outs;
  for (const Json& o : j["outcomes"]) {
    if (!o.is_object() || !o.contains("label") || !o.contains("projection")) {
      throw Error("bad_input", "each outcome needs a label and a projection");
    }
    outs.push_back({label_from_json(o["label"]),
                    matrix_from_json(o["projection"])});
  }
  PVM pvm(std::move(outs), tol);
  if (j.contains("dim") && j["dim"].get<int>() != pvm.dim()) {
    throw Error("bad_input", "declared PVM dim does not match projections");
  }
  return pvm;
}

GeneratorFile generators_from_json(const Json& j) {
  GeneratorFile out;
  const Json* list = nullptr;
  if (j.is_array()) {
    list = &j;
  } else if (j.is_object() && j.contains("generators")) {
    list = &j["generators"];
    if (j.contains("dim")) out.dim = j["dim"].get<int>();
  } else {
    throw Error("bad_input",
                "generators file must be an array of matrices or "
                "{\"dim\": d, \"generators\": [...]}");
  }
  for (const Json& m : *list) out.generators.push_back(matrix_from_json(m));
  if (out.dim == 0) {
    if (out.generators.empty()) {
      throw Error("bad_input",
                  "an empty generator list needs an explicit \"dim\"");
    }
    out.dim = static_cast<int>(out.generators.front().rows());
  }
  return out;
}

Json algebra_to_json(const AbelianAlgebra& alg) {
  Json atoms = Json::array();
  for (const auto& atom : alg.atoms()) {
    atoms.push_back({{"projection", matrix_to_json(atom.projection)},
                     {"rank", atom.rank}});
  }
  return Json{{"dim", alg.dim()},
              {"atom_count", alg.atoms().size()},
              {"atoms", atoms}};
}

Json holevo_point_to_json(const HolevoPoint& p) {
  return Json{{"probabilities", p.probabilities}};
}

HolevoPoint holevo_point_from_json(const Json& j, const Tolerance& tol) {
  if (!j.is_object() || !j.contains("probabilities") ||
      !j["probabilities"].is_array()) {
    throw Error("bad_input", "Holevo point JSON needs a probabilities array");
  }
  std::vector<double> probs;
  for (const Json& v : j["probabilities"]) {
    probs.push_back(number_field(v, "probability"));
  }
  return HolevoPoint::make(std::move(probs), tol);
}

Json grid_to_json(const GridDensity& g) {
  return Json{{"axes", g.axes}, {"masses", g.masses}};
}

GridDensity grid_from_json(const Json& j, const Tolerance& tol) {
  if (!j.is_object() || !j.contains("axes") || !j.contains("masses")) {
    throw Error("bad_input", "grid JSON needs axes and masses");
  }
  std::vector<std::vector<double>> axes;
  for (const Json& ax : j["axes"]) {
    std::vector<double> edges;
    for (const Json& e : ax) edges.push_back(number_field(e, "cell edge"));
    axes.push_back(std::move(edges));
  }
  std::vector<double> masses;
  for (const Json& m : j["masses"]) {
    masses.push_back(number_field(m, "cell mass"));
  }
  return GridDensity::make(std::move(axes), std::move(masses), tol);
}

ClassicalSystem classical_system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("observables")) {
    throw Error("bad_input",
                "classical system JSON needs points and observables");
  }
  ClassicalSystem sys;
  for (const Json& p : j["points"]) {
    sys.points.push_back(p.is_string() ? p.get<std::string>() : p.dump());
  }
  for (const Json& obs : j["observables"]) {
    if (!obs.is_array()) {
      throw Error("bad_input", "each observable must be an array of values");
    }
    std::vector<std::string> values;
    for (const Json& v : obs) values.push_back(v.dump());
    sys.observables.push_back(std::move(values));
  }
  sys.validate();
  return sys;
}

Json witness_to_json(const WitnessUnitary& w) {
  return Json{{"matrix", matrix_to_json(w.matrix)},
              {"residual_commutation", w.residual_commutation},
              {"mapping_error", w.mapping_error}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("bad_input", "cannot open file", {{"path", path}});
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("bad_input", std::string("invalid JSON: ") + e.what(),
                {{"path", path}});
  }
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << hash;
  return out.str();
}

}  // namespace qindis
