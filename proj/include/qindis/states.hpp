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

#include "qindis/core.hpp"
#include "qindis/rng.hpp"

namespace qindis {

/// Unit vector modulo global phase. Construction renormalises exactly and
/// applies the canonical phase: the first amplitude with modulus above
/// tol.abs_eq is made real and nonnegative, so equal states compare equal.
class PureState {
 public:
  explicit PureState(CVector amplitudes, const Tolerance& tol = {});

  static PureState basis_vector(int dim, int index);

  const CVector& amplitudes() const { return amps_; }
  int dim() const { return static_cast<int>(amps_.size()); }

 private:
  CVector amps_;
};

/// Positive semidefinite trace-one operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m, const Tolerance& tol = {});

  const Matrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  Matrix m_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// |h><h|.
DensityMatrix density_from_pure(const PureState& h);

/// <h1, h2>, linear in the first argument (canonical representatives).
Complex overlap(const PureState& h1, const PureState& h2);

/// <a h, h> for a square matrix a.
Complex expectation(const Matrix& a, const PureState& h);

/// sqrt(2 (1 - |<h1,h2>|^2)); agrees with the Frobenius distance of the
/// corresponding rank-one projections.
double hs_distance_pure(const PureState& h1, const PureState& h2);

/// Pauli expectation values (<s1>, <s2>, <s3>) of a qubit state.
BlochVector bloch_from_pure(const PureState& h);

/// Haar-distributed pure state (normalised complex Gaussian vector).
PureState random_pure(int dim, Rng& rng);
PureState random_pure(int dim, std::uint64_t seed);

}  // namespace qindis
