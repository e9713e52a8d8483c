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

namespace qindis {

/// One spectral cluster of a Hermitian matrix: eigenvalues within
/// tol.eig_cluster are merged and carry a single orthogonal eigenprojection.
struct SpectralCluster {
  double eigenvalue = 0.0;
  Matrix projection;
  int multiplicity = 0;
};

/// Clustered eigendecomposition of a Hermitian matrix. Eigenvalues ascending;
/// projections mutually orthogonal, summing to the identity, and
/// sum(lambda_i P_i) reconstructs the input within tol.eig_cluster.
/// Throws not_square / not_hermitian.
std::vector<SpectralCluster> hermitian_eigensystem(const Matrix& m,
                                                   const Tolerance& tol = {});

/// Kronecker product, basis order |00>,|01>,|10>,|11> (first factor major).
Matrix kronecker(const Matrix& a, const Matrix& b);

/// ab - ba. Throws dimension_mismatch.
Matrix matrix_commutator(const Matrix& a, const Matrix& b);

/// True iff m is Hermitian and idempotent within tol.abs_eq (max-entry norm).
bool is_orthogonal_projection(const Matrix& m, const Tolerance& tol = {});

/// sqrt(tr(m* m)) = entrywise 2-norm.
double frobenius_norm(const Matrix& m);

/// Orthonormal basis of the range of a projection (d x rank).
Matrix range_basis(const Matrix& projection, const Tolerance& tol = {});

}  // namespace qindis
