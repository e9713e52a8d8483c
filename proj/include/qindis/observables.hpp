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

#include <vector>

#include "qindis/core.hpp"
#include "qindis/states.hpp"

namespace qindis {

/// Measurement outcome label: a tuple of scalar components. Components are
/// complex so joint eigenvalues of normal operators fit; real-valued labels
/// carry zero imaginary parts. Ordering is lexicographic by (re, im).
struct OutcomeLabel {
  std::vector<Complex> parts;

  static OutcomeLabel real(double v) { return {{Complex(v, 0.0)}}; }
  static OutcomeLabel pair(double a, double b) {
    return {{Complex(a, 0.0), Complex(b, 0.0)}};
  }

  bool operator==(const OutcomeLabel& o) const { return parts == o.parts; }
  bool operator<(const OutcomeLabel& o) const;
};

struct Outcome {
  OutcomeLabel label;
  Matrix projection;
};

/// Finite projection-valued measure: orthogonal projections indexed by
/// distinct labels, pairwise orthogonal, summing to the identity.
/// Outcomes are kept sorted by label.
class PVM {
 public:
  PVM(std::vector<Outcome> outcomes, const Tolerance& tol = {});

  static PVM trivial(int dim);

  int dim() const { return dim_; }
  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  std::size_t size() const { return outcomes_.size(); }

  /// Index of a label, or -1 when absent.
  int index_of(const OutcomeLabel& label) const;

 private:
  int dim_ = 0;
  std::vector<Outcome> outcomes_;
};

/// Spectral PVM of a Hermitian matrix; outcome labels are the clustered
/// eigenvalues. Throws not_hermitian / not_square.
PVM pvm_from_hermitian(const Matrix& a, const Tolerance& tol = {});

/// All outcome pairs (label concatenation) with Kronecker-product projections.
PVM product_pvm(const PVM& p, const PVM& q, const Tolerance& tol = {});

/// Conjugates every projection of a qubit PVM by the plane rotation over
/// gamma: P -> R_g P R_g^T with R_g = ((cos g, -sin g), (sin g, cos g)).
/// diag(1,0) maps to ((cos^2 g, sin g cos g), (sin g cos g, sin^2 g)).
PVM rotate_pvm_qubit(const PVM& p, double gamma, const Tolerance& tol = {});

/// Joint PVM of a commuting family of normal matrices: outcomes are joint
/// eigenvalue tuples with joint eigenprojections, built by iterative
/// refinement. Non-Hermitian normal inputs are split into commuting
/// Hermitian real/imaginary parts; their label component is complex.
/// Zero joint eigenspaces are omitted. Throws not_commuting / not_normal.
PVM joint_pvm_commuting(const std::vector<Matrix>& family,
                        const Tolerance& tol = {});

/// Born-rule outcome distribution (tr(P_i rho))_i, aligned with
/// pvm.outcomes(); entries clipped to [0, 1].
std::vector<double> measurement_distribution(const PVM& p,
                                             const DensityMatrix& state,
                                             const Tolerance& tol = {});

/// Equality of outcome distributions under each PVM of the family
/// separately (marginal statistics, not the generated algebra).
struct FamilyIndiscernibility {
  bool equal = false;
  double max_deviation = 0.0;
};
FamilyIndiscernibility family_indiscernible(const std::vector<PVM>& family,
                                            const DensityMatrix& s1,
                                            const DensityMatrix& s2,
                                            const Tolerance& tol = {});

}  // namespace qindis
