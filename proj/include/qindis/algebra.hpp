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

#include <utility>
#include <vector>

#include "qindis/core.hpp"
#include "qindis/observables.hpp"
#include "qindis/rng.hpp"
#include "qindis/states.hpp"

namespace qindis {

/// Minimal joint eigenprojection of the generating projections.
struct Atom {
  Matrix projection;
  Matrix basis;  // orthonormal basis of the range, d x rank
  int rank = 0;
};

/// Abelian von Neumann algebra generated by commuting projections, stored
/// through its atom decomposition. Atom order follows the joint-PVM
/// lexicographic eigenvalue-tuple order, so it is stable across runs.
class AbelianAlgebra {
 public:
  /// Atoms of the algebra generated by `generators` on C^dim. An empty
  /// generator list yields the trivial algebra CI (one atom of full rank).
  /// Throws not_projection / not_commuting / dimension_mismatch.
  static AbelianAlgebra from_projections(std::vector<Matrix> generators,
                                         int dim, const Tolerance& tol = {});
  static AbelianAlgebra from_projections(std::vector<Matrix> generators,
                                         const Tolerance& tol = {});

  int dim() const { return dim_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Matrix>& generators() const { return generators_; }

 private:
  AbelianAlgebra() = default;
  int dim_ = 0;
  std::vector<Atom> atoms_;
  std::vector<Matrix> generators_;
};

/// Orthonormal basis (Frobenius inner product) of {X : gX = Xg for all
/// generators g}, via the null space of the stacked commutation maps.
/// With no generators this is the full matrix space (the d^2 matrix units).
std::vector<Matrix> commutant_basis(const std::vector<Matrix>& generators,
                                    int dim, const Tolerance& tol = {});

struct WitnessUnitary {
  Matrix matrix;
  double residual_commutation = 0.0;
  double mapping_error = 0.0;
};

/// Unitary in the commutant mapping h to h2, built block-per-atom: inside
/// each atom the normalised component of h is rotated onto that of h2 in
/// their common plane, the rest of the atom is fixed. Requires the pair to
/// be indiscernible for the algebra; throws not_indiscernible otherwise.
WitnessUnitary witness_unitary(const AbelianAlgebra& alg, const PureState& h,
                               const PureState& h2, const Tolerance& tol = {});

/// Same mapping h -> h2, but the fixed parts inside each atom are replaced
/// by random unitaries. Used to exercise the partial-uniqueness statement.
WitnessUnitary witness_unitary_randomized(const AbelianAlgebra& alg,
                                          const PureState& h,
                                          const PureState& h2, Rng& rng,
                                          const Tolerance& tol = {});

/// Haar-random block unitary per atom; always a commutant element.
Matrix random_commutant_unitary(const AbelianAlgebra& alg, Rng& rng);

/// a = sum_k 3^{-k} P_k for commuting projections P_0..P_{n-1}.
Matrix single_generator(const std::vector<Matrix>& projections,
                        const Tolerance& tol = {});

/// Recovers P_k from single_generator output by grouping eigenvalues by the
/// k-th digit of their greedy base-3 expansion with digits {0,1}. For k = 0
/// this is the spectral projection of [1, 3/2]. Throws spectral_ambiguity
/// when an eigenvalue sits within tol.eig_cluster of a digit boundary.
Matrix recover_projection(const Matrix& a, int index, int n_total,
                          const Tolerance& tol = {});

struct IncompatibilityReport {
  bool compatible = false;
  double max_commutator_norm = 0.0;
  std::pair<int, int> witness_pair{0, 0};  // outcome indices into p, q
};

/// Pairwise commutators of all projections across two PVMs (max-entry norm).
IncompatibilityReport incompatibility_check(const PVM& p, const PVM& q,
                                            const Tolerance& tol = {});

}  // namespace qindis
