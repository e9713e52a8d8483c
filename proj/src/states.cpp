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

#include "qindis/states.hpp"

#include <cmath>
#include <string>

#include "qindis/numerics.hpp"

namespace qindis {

PureState::PureState(CVector amplitudes, const Tolerance& tol)
    : amps_(std::move(amplitudes)) {
  tol.validate();
  if (amps_.size() < 1) {
    throw Error("bad_input", "state vector must have dimension >= 1");
  }
  if (!all_finite(amps_)) {
    throw Error("bad_input", "state vector has non-finite entries");
  }
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > tol.abs_eq) {
    throw Error("not_normalized", "state vector must have unit norm",
                {{"norm", std::to_string(norm)}});
  }
  amps_ /= norm;
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    const double a = std::abs(amps_[i]);
    if (a > tol.abs_eq) {
      amps_ *= std::conj(amps_[i]) / a;
      amps_[i] = Complex(a, 0.0);
      break;
    }
  }
}

PureState PureState::basis_vector(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim) {
    throw Error("bad_input", "basis index out of range");
  }
  CVector v = CVector::Zero(dim);
  v[index] = Complex(1, 0);
  return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(Matrix m, const Tolerance& tol)
    : m_(std::move(m)) {
  tol.validate();
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw Error("bad_density", "density matrix must be square");
  }
  if (!all_finite(m_)) {
    throw Error("bad_density", "density matrix has non-finite entries");
  }
  if (max_abs(m_ - m_.adjoint()) > tol.abs_eq) {
    throw Error("not_hermitian", "density matrix is not Hermitian");
  }
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > tol.abs_eq) {
    throw Error("bad_density", "density matrix must have trace one",
                {{"trace", std::to_string(tr)}});
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m_ + m_.adjoint()));
  if (solver.eigenvalues().minCoeff() < -tol.abs_eq) {
    throw Error("bad_density", "density matrix has a negative eigenvalue",
                {{"min_eigenvalue", std::to_string(solver.eigenvalues().minCoeff())}});
  }
}

DensityMatrix density_from_pure(const PureState& h) {
  const CVector& a = h.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

Complex overlap(const PureState& h1, const PureState& h2) {
  if (h1.dim() != h2.dim()) {
    throw Error("dimension_mismatch", "states have different dimensions");
  }
  // <h1,h2> is linear in the first argument: sum h1_i conj(h2_i).
  return h2.amplitudes().dot(h1.amplitudes());
}

Complex expectation(const Matrix& a, const PureState& h) {
  if (a.rows() != a.cols() || a.rows() != h.dim()) {
    throw Error("dimension_mismatch", "operator/state dimension mismatch");
  }
  return h.amplitudes().dot(a * h.amplitudes());
}

double hs_distance_pure(const PureState& h1, const PureState& h2) {
  const double ov = std::abs(overlap(h1, h2));
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - ov * ov)));
}

BlochVector bloch_from_pure(const PureState& h) {
  if (h.dim() != 2) {
    throw Error("wrong_dimension", "Bloch coordinates need a qubit state");
  }
  const Complex z = h.amplitudes()[1] * std::conj(h.amplitudes()[0]);
  BlochVector b;
  b.x = 2.0 * z.real();
  b.y = 2.0 * z.imag();
  b.z = std::norm(h.amplitudes()[0]) - std::norm(h.amplitudes()[1]);
  return b;
}

PureState random_pure(int dim, Rng& rng) {
  if (dim < 1) throw Error("bad_input", "dimension must be positive");
  CVector v;
  double norm = 0.0;
  do {
    v = random_complex_gaussian(dim, rng);
    norm = v.norm();
  } while (norm < 1e-12);
  return PureState(v / norm);
}

PureState random_pure(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(dim, rng);
}

}  // namespace qindis
