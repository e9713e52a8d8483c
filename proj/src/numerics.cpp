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

#include "qindis/numerics.hpp"

#include <string>

namespace qindis {

std::vector<SpectralCluster> hermitian_eigensystem(const Matrix& m,
                                                   const Tolerance& tol) {
  tol.validate();
  if (m.rows() != m.cols()) {
    throw Error("not_square", "matrix must be square",
                {{"rows", std::to_string(m.rows())},
                 {"cols", std::to_string(m.cols())}});
  }
  const double asym = max_abs(m - m.adjoint());
  if (asym > tol.abs_eq) {
    throw Error("not_hermitian", "matrix is not Hermitian",
                {{"asymmetry", std::to_string(asym)}});
  }
  const int d = static_cast<int>(m.rows());
  // Symmetrise before solving; the asymmetry is below abs_eq by now.
  Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error("internal", "eigensolver failed to converge");
  }
  const auto& values = solver.eigenvalues();
  const Matrix& vectors = solver.eigenvectors();

  std::vector<SpectralCluster> clusters;
  int start = 0;
  while (start < d) {
    int end = start + 1;
    while (end < d && values[end] - values[end - 1] <= tol.eig_cluster) ++end;
    const int mult = end - start;
    Matrix block = vectors.middleCols(start, mult);
    // Re-orthonormalise the cluster basis before assembling the projection.
    Eigen::HouseholderQR<Matrix> qr(block);
    Matrix q = qr.householderQ() * Matrix::Identity(d, mult);
    SpectralCluster c;
    c.eigenvalue = values.segment(start, mult).mean();
    c.projection = q * q.adjoint();
    c.multiplicity = mult;
    clusters.push_back(std::move(c));
    start = end;
  }
  return clusters;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix matrix_commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw Error("dimension_mismatch",
                "commutator needs square matrices of equal dimension");
  }
  return a * b - b * a;
}

bool is_orthogonal_projection(const Matrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) return false;
  if (max_abs(m - m.adjoint()) > tol.abs_eq) return false;
  return max_abs(m * m - m) <= tol.abs_eq;
}

double frobenius_norm(const Matrix& m) { return m.norm(); }

Matrix range_basis(const Matrix& projection, const Tolerance& tol) {
  if (!is_orthogonal_projection(projection, tol)) {
    throw Error("not_projection", "matrix is not an orthogonal projection");
  }
  const int d = static_cast<int>(projection.rows());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(
      0.5 * (projection + projection.adjoint()));
  const auto& values = solver.eigenvalues();
  int rank = 0;
  for (int i = 0; i < d; ++i) {
    if (values[i] > 0.5) ++rank;
  }
  Matrix basis(d, rank);
  int k = 0;
  for (int i = 0; i < d; ++i) {
    if (values[i] > 0.5) basis.col(k++) = solver.eigenvectors().col(i);
  }
  return basis;
}

}  // namespace qindis
