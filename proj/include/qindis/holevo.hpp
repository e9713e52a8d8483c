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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qindis/algebra.hpp"
#include "qindis/core.hpp"
#include "qindis/states.hpp"

namespace qindis {

/// Probability vector over the atoms of an AbelianAlgebra: the simplex
/// coordinate of an indiscernibility class. Entries are clipped at zero and
/// normalised exactly at construction.
struct HolevoPoint {
  std::vector<double> probabilities;

  static HolevoPoint make(std::vector<double> probabilities,
                          const Tolerance& tol = {});
  std::size_t size() const { return probabilities.size(); }
};

/// Atom probabilities (tr(Q_j rho))_j of a state.
HolevoPoint density_vector(const AbelianAlgebra& alg, const DensityMatrix& rho,
                           const Tolerance& tol = {});

struct IndiscernibilityReport {
  bool equal = false;
  double max_deviation = 0.0;
};

/// Indiscernibility for the algebra: equality of atom probability vectors.
IndiscernibilityReport indiscernible(const AbelianAlgebra& alg,
                                     const DensityMatrix& s1,
                                     const DensityMatrix& s2,
                                     const Tolerance& tol = {});

/// Unit vector with strictly positive mass on every atom, built from
/// geometrically damped random unit vectors per atom (mass 2^{-(j+1)} before
/// renormalisation). Deterministic given the seed.
struct CyclicVector {
  PureState vector;
  std::vector<double> atom_masses;
};
CyclicVector cyclic_vector(const AbelianAlgebra& alg, std::uint64_t seed);

/// Pure state whose atom probability vector equals `target`:
/// h = sum_j sqrt(target_j / mass_j) Q_j h0.
PureState state_from_density(const AbelianAlgebra& alg,
                             const HolevoPoint& target,
                             const CyclicVector& h0);

/// Bhattacharyya coefficient sum_j sqrt(p_j q_j).
double bhattacharyya(const HolevoPoint& p, const HolevoPoint& q);

/// (1/2) sum_j (sqrt(p_j) - sqrt(q_j))^2 = 1 - BC(p, q).
double hellinger_sq(const HolevoPoint& p, const HolevoPoint& q);

/// Quotient Hilbert-Schmidt distance sqrt(2 (1 - BC(p,q)^2)): the infimum of
/// the pure-state HS distance over class representatives.
double quotient_hs_distance(const HolevoPoint& p, const HolevoPoint& q);

/// Lift of an algebra element to the simplex: a = sum_j alpha_j Q_j gives
/// sum_j alpha_j p_j = <a h, h> for any h in the class of p.
/// Throws not_in_algebra when a is not a combination of the atoms.
Complex lift_observable(const AbelianAlgebra& alg, const Matrix& a,
                        const HolevoPoint& p, const Tolerance& tol = {});

/// Finite classical system: points with observable values attached. Values
/// are canonical strings (the CLI uses compact JSON encodings), compared by
/// equality only.
struct ClassicalSystem {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> observables;  // [observable][point]

  void validate() const;
};

/// Partition of the points by equality of all observable values; classes in
/// order of first occurrence, each class listing point indices ascending.
std::vector<std::vector<int>> classical_quotient(const ClassicalSystem& sys);

/// The bi-measurable witness for an equivalent pair: the transposition
/// swapping the two points, as a permutation of point indices. Satisfies
/// f o u = f for every observable. Throws not_equivalent.
std::vector<int> transposition_witness(const ClassicalSystem& sys, int a,
                                       int b);

}  // namespace qindis
