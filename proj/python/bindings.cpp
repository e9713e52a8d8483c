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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qindis/algebra.hpp"
#include "qindis/holevo.hpp"
#include "qindis/numerics.hpp"
#include "qindis/observables.hpp"
#include "qindis/scenarios.hpp"
#include "qindis/states.hpp"

namespace py = pybind11;
using namespace qindis;

namespace {

Tolerance tol_from(double abs_eq, double eig_cluster, double opt_conv) {
  Tolerance t;
  t.abs_eq = abs_eq;
  t.eig_cluster = eig_cluster;
  t.opt_conv = opt_conv;
  t.validate();
  return t;
}

std::vector<std::vector<Complex>> labels_of(const PVM& p) {
  std::vector<std::vector<Complex>> out;
  for (const auto& o : p.outcomes()) out.push_back(o.label.parts);
  return out;
}

std::vector<Matrix> projections_of(const PVM& p) {
  std::vector<Matrix> out;
  for (const auto& o : p.outcomes()) out.push_back(o.projection);
  return out;
}

}  // namespace

PYBIND11_MODULE(_qindis, m) {
  m.doc() = "Quantum-state indiscernibility toolkit: PVMs, abelian algebras, "
            "Holevo spaces, and the qubit/EPR/Bell computations.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError,
                      (e.code() + ": " + std::string(e.what())).c_str());
    }
  });

  py::class_<Tolerance>(m, "Tolerance")
      .def(py::init(&tol_from), py::arg("abs_eq") = 1e-9,
           py::arg("eig_cluster") = 1e-8, py::arg("opt_conv") = 1e-6)
      .def_readonly("abs_eq", &Tolerance::abs_eq)
      .def_readonly("eig_cluster", &Tolerance::eig_cluster)
      .def_readonly("opt_conv", &Tolerance::opt_conv);

  // numerics
  m.def(
      "hermitian_eigensystem",
      [](const Matrix& a, const Tolerance& tol) {
        std::vector<std::pair<double, Matrix>> out;
        for (auto& c : hermitian_eigensystem(a, tol)) {
          out.emplace_back(c.eigenvalue, std::move(c.projection));
        }
        return out;
      },
      py::arg("matrix"), py::arg("tol") = Tolerance{},
      "Clustered (eigenvalue, eigenprojection) pairs, ascending.");
  m.def("kronecker", &kronecker, py::arg("a"), py::arg("b"));
  m.def("matrix_commutator", &matrix_commutator, py::arg("a"), py::arg("b"));
  m.def("is_orthogonal_projection", &is_orthogonal_projection,
        py::arg("matrix"), py::arg("tol") = Tolerance{});
  m.def("frobenius_norm", &frobenius_norm, py::arg("matrix"));
  m.def("pauli", &pauli, py::arg("k"));

  // states
  py::class_<PureState>(m, "PureState")
      .def(py::init([](const CVector& amps) { return PureState(amps); }),
           py::arg("amplitudes"))
      .def_property_readonly("amplitudes",
                             [](const PureState& h) { return h.amplitudes(); })
      .def_property_readonly("dim", &PureState::dim);
  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](const Matrix& rho) { return DensityMatrix(rho); }),
           py::arg("matrix"))
      .def_property_readonly("matrix",
                             [](const DensityMatrix& r) { return r.matrix(); })
      .def_property_readonly("dim", &DensityMatrix::dim);
  m.def("density_from_pure",
        [](const PureState& h) { return density_from_pure(h).matrix(); },
        py::arg("state"));
  m.def("overlap", &overlap, py::arg("h1"), py::arg("h2"));
  m.def("hs_distance_pure", &hs_distance_pure, py::arg("h1"), py::arg("h2"));
  m.def(
      "bloch_from_pure",
      [](const PureState& h) {
        const BlochVector b = bloch_from_pure(h);
        return std::array<double, 3>{b.x, b.y, b.z};
      },
      py::arg("state"));
  m.def(
      "random_pure",
      [](int dim, std::uint64_t seed) { return random_pure(dim, seed); },
      py::arg("dim"), py::arg("seed"));

  // observables
  py::class_<PVM>(m, "PVM")
      .def_property_readonly("dim", &PVM::dim)
      .def_property_readonly("labels", &labels_of)
      .def_property_readonly("projections", &projections_of);
  m.def("pvm_from_hermitian", &pvm_from_hermitian, py::arg("matrix"),
        py::arg("tol") = Tolerance{});
  m.def("product_pvm", &product_pvm, py::arg("p"), py::arg("q"),
        py::arg("tol") = Tolerance{});
  m.def("rotate_pvm_qubit", &rotate_pvm_qubit, py::arg("p"), py::arg("gamma"),
        py::arg("tol") = Tolerance{});
  m.def("joint_pvm_commuting", &joint_pvm_commuting, py::arg("family"),
        py::arg("tol") = Tolerance{});
  m.def("measurement_distribution", &measurement_distribution, py::arg("pvm"),
        py::arg("state"), py::arg("tol") = Tolerance{});

  // algebra
  py::class_<AbelianAlgebra>(m, "AbelianAlgebra")
      .def_property_readonly("dim", &AbelianAlgebra::dim)
      .def_property_readonly("atom_projections",
                             [](const AbelianAlgebra& alg) {
                               std::vector<Matrix> out;
                               for (const auto& a : alg.atoms()) {
                                 out.push_back(a.projection);
                               }
                               return out;
                             })
      .def_property_readonly("atom_ranks", [](const AbelianAlgebra& alg) {
        std::vector<int> out;
        for (const auto& a : alg.atoms()) out.push_back(a.rank);
        return out;
      });
  m.def(
      "algebra_from_projections",
      [](const std::vector<Matrix>& gens, int dim, const Tolerance& tol) {
        return AbelianAlgebra::from_projections(gens, dim, tol);
      },
      py::arg("generators"), py::arg("dim"), py::arg("tol") = Tolerance{});
  m.def("commutant_basis", &commutant_basis, py::arg("generators"),
        py::arg("dim"), py::arg("tol") = Tolerance{});
  m.def(
      "witness_unitary",
      [](const AbelianAlgebra& alg, const PureState& h, const PureState& h2,
         const Tolerance& tol) {
        const WitnessUnitary w = witness_unitary(alg, h, h2, tol);
        return py::make_tuple(w.matrix, w.residual_commutation,
                              w.mapping_error);
      },
      py::arg("algebra"), py::arg("h"), py::arg("h2"),
      py::arg("tol") = Tolerance{},
      "Returns (matrix, residual_commutation, mapping_error).");
  m.def("single_generator", &single_generator, py::arg("projections"),
        py::arg("tol") = Tolerance{});
  m.def("recover_projection", &recover_projection, py::arg("matrix"),
        py::arg("index"), py::arg("n_total"), py::arg("tol") = Tolerance{});
  m.def(
      "incompatibility_check",
      [](const PVM& p, const PVM& q, const Tolerance& tol) {
        const auto rep = incompatibility_check(p, q, tol);
        return py::make_tuple(rep.compatible, rep.max_commutator_norm,
                              rep.witness_pair);
      },
      py::arg("p"), py::arg("q"), py::arg("tol") = Tolerance{},
      "Returns (compatible, max_commutator_norm, witness_pair).");

  // holevo
  m.def(
      "density_vector",
      [](const AbelianAlgebra& alg, const DensityMatrix& rho,
         const Tolerance& tol) {
        return density_vector(alg, rho, tol).probabilities;
      },
      py::arg("algebra"), py::arg("state"), py::arg("tol") = Tolerance{});
  m.def(
      "indiscernible",
      [](const AbelianAlgebra& alg, const DensityMatrix& a,
         const DensityMatrix& b, const Tolerance& tol) {
        const auto rep = indiscernible(alg, a, b, tol);
        return py::make_tuple(rep.equal, rep.max_deviation);
      },
      py::arg("algebra"), py::arg("state_a"), py::arg("state_b"),
      py::arg("tol") = Tolerance{},
      "Returns (indiscernible, max_deviation).");
  m.def(
      "cyclic_vector",
      [](const AbelianAlgebra& alg, std::uint64_t seed) {
        const CyclicVector cv = cyclic_vector(alg, seed);
        return py::make_tuple(cv.vector, cv.atom_masses);
      },
      py::arg("algebra"), py::arg("seed"),
      "Returns (state, atom_masses).");
  m.def(
      "state_from_density",
      [](const AbelianAlgebra& alg, const std::vector<double>& target,
         std::uint64_t seed) {
        const CyclicVector cv = cyclic_vector(alg, seed);
        return state_from_density(alg, HolevoPoint::make(target), cv);
      },
      py::arg("algebra"), py::arg("target"), py::arg("seed") = 0,
      "Pure state whose atom probability vector equals target.");
  m.def(
      "hellinger_sq",
      [](const std::vector<double>& p, const std::vector<double>& q) {
        return hellinger_sq(HolevoPoint::make(p), HolevoPoint::make(q));
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "bhattacharyya",
      [](const std::vector<double>& p, const std::vector<double>& q) {
        return bhattacharyya(HolevoPoint::make(p), HolevoPoint::make(q));
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "quotient_hs_distance",
      [](const std::vector<double>& p, const std::vector<double>& q) {
        return quotient_hs_distance(HolevoPoint::make(p),
                                    HolevoPoint::make(q));
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "lift_observable",
      [](const AbelianAlgebra& alg, const Matrix& a,
         const std::vector<double>& p, const Tolerance& tol) {
        return lift_observable(alg, a, HolevoPoint::make(p, tol), tol);
      },
      py::arg("algebra"), py::arg("matrix"), py::arg("p"),
      py::arg("tol") = Tolerance{});

  // scenarios
  m.def("bell_state", &bell_state);
  m.def(
      "two_qubit_state",
      [](const std::array<double, 3>& theta, const std::array<double, 3>& phi) {
        return two_qubit_state({theta, phi});
      },
      py::arg("theta"), py::arg("phi") = std::array<double, 3>{0, 0, 0});
  m.def(
      "epr_class",
      [](const PureState& h, const Tolerance& tol) {
        return epr_class(h, tol);
      },
      py::arg("state"), py::arg("tol") = Tolerance{});
  m.def("epr_lifts", &epr_lifts, py::arg("triple"));
  m.def("m_map", &m_map, py::arg("state"));
  m.def("m_inverse", &m_inverse, py::arg("m1"), py::arg("m2"));
  m.def("holevo_projection_A", &holevo_projection_A, py::arg("triple"));
  m.def(
      "bell_rotation_4x4",
      [](double gamma_a, double gamma_b) {
        return bell_rotation_4x4({gamma_a, gamma_b});
      },
      py::arg("gamma_a"), py::arg("gamma_b"));
  m.def(
      "bell_stats",
      [](double gamma_a, double gamma_b, const PureState& h,
         const Tolerance& tol) {
        return bell_stats({gamma_a, gamma_b}, h, tol);
      },
      py::arg("gamma_a"), py::arg("gamma_b"), py::arg("state"),
      py::arg("tol") = Tolerance{},
      "Outcome probabilities in the order (1,1), (-1,1), (1,-1), (-1,-1).");
  m.def(
      "theta_recover",
      [](double gamma_a, double gamma_b, const std::array<double, 3>& triple,
         const Tolerance& tol) {
        return theta_recover({gamma_a, gamma_b}, triple, tol);
      },
      py::arg("gamma_a"), py::arg("gamma_b"), py::arg("triple"),
      py::arg("tol") = Tolerance{});
  m.def("invariant_states", &invariant_states, py::arg("tol") = Tolerance{});
  m.def(
      "aspect_simulate",
      [](double a1, double a2, double b1, double b2, std::int64_t runs,
         std::uint64_t seed, const PureState& h, const Tolerance& tol) {
        AspectConfig cfg{a1, a2, b1, b2, runs, seed};
        const AspectResult r = aspect_simulate(cfg, h, tol);
        return py::make_tuple(r.counts, r.frequencies, r.setting_counts);
      },
      py::arg("a1"), py::arg("a2"), py::arg("b1"), py::arg("b2"),
      py::arg("runs"), py::arg("seed"), py::arg("state"),
      py::arg("tol") = Tolerance{},
      "Returns (counts, frequencies, setting_counts), outcomes in the order "
      "(1,1), (-1,1), (1,-1), (-1,-1).");

  // free particle grids
  py::class_<GridDensity>(m, "GridDensity")
      .def(py::init([](std::vector<std::vector<double>> axes,
                       std::vector<double> masses) {
             return GridDensity::make(std::move(axes), std::move(masses));
           }),
           py::arg("axes"), py::arg("masses"))
      .def_readonly("axes", &GridDensity::axes)
      .def_readonly("masses", &GridDensity::masses);
  m.def("grid_marginal", &grid_marginal, py::arg("grid"), py::arg("keep"));
  m.def("grid_lift", &grid_lift, py::arg("grid"), py::arg("axis"),
        py::arg("cells"));
  m.def(
      "grid_hellinger",
      [](const GridDensity& a, const GridDensity& b) {
        const auto h = grid_hellinger(a, b);
        return py::make_tuple(h.hellinger_sq, h.paper_dsq);
      },
      py::arg("grid_a"), py::arg("grid_b"),
      "Returns (hellinger_sq, paper_dsq).");
}
