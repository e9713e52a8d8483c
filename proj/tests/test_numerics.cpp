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

#include <doctest.h>

#include "qindis/numerics.hpp"
#include "qindis/rng.hpp"
#include "qindis/scenarios.hpp"
#include "test_helpers.hpp"

using namespace qindis;
using namespace qindis::testing;

TEST_CASE("hermitian_eigensystem on sigma3") {
  const auto sys = hermitian_eigensystem(pauli(3));
  REQUIRE(sys.size() == 2);
  CHECK(sys[0].eigenvalue == doctest::Approx(-1.0));
  CHECK(sys[1].eigenvalue == doctest::Approx(1.0));
  CHECK(matrix_dist(sys[0].projection, diag({0, 1})) < 1e-12);
  CHECK(matrix_dist(sys[1].projection, diag({1, 0})) < 1e-12);
}

TEST_CASE("hermitian_eigensystem merges the degenerate identity") {
  const auto sys = hermitian_eigensystem(Matrix::Identity(2, 2));
  REQUIRE(sys.size() == 1);
  CHECK(sys[0].eigenvalue == doctest::Approx(1.0));
  CHECK(sys[0].multiplicity == 2);
  CHECK(matrix_dist(sys[0].projection, Matrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("hermitian_eigensystem on sigma1 gives (I ± sigma1)/2") {
  const auto sys = hermitian_eigensystem(pauli(1));
  REQUIRE(sys.size() == 2);
  CHECK(sys[0].eigenvalue == doctest::Approx(-1.0));
  CHECK(matrix_dist(sys[0].projection,
                    0.5 * (Matrix::Identity(2, 2) - pauli(1))) < 1e-12);
  CHECK(matrix_dist(sys[1].projection,
                    0.5 * (Matrix::Identity(2, 2) + pauli(1))) < 1e-12);
}

TEST_CASE("hermitian_eigensystem input validation") {
  Matrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_WITH_AS(hermitian_eigensystem(rect), "matrix must be square",
                       Error);
  CHECK_THROWS_AS(hermitian_eigensystem(mat2(0, 1, 0, 0)), Error);
}

TEST_CASE("eigenprojections are an orthogonal resolution of the identity") {
  Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + static_cast<int>(rng.below(7));
    const Matrix h = random_hermitian(d, rng);
    const auto sys = hermitian_eigensystem(h);
    Matrix sum = Matrix::Zero(d, d);
    Matrix reconstruction = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      sum += sys[i].projection;
      reconstruction += sys[i].eigenvalue * sys[i].projection;
      for (std::size_t j = 0; j < sys.size(); ++j) {
        const Matrix prod = sys[i].projection * sys[j].projection;
        if (i == j) {
          CHECK(matrix_dist(prod, sys[i].projection) < 1e-8);
        } else {
          CHECK(max_abs(prod) < 1e-8);
        }
      }
    }
    CHECK(matrix_dist(sum, Matrix::Identity(d, d)) < 1e-8);
    CHECK(matrix_dist(reconstruction, h) < 1e-7);
  }
}

TEST_CASE("kronecker matches the displayed two-qubit spin matrices") {
  CHECK(matrix_dist(kronecker(pauli(3), Matrix::Identity(2, 2)),
                    diag({1, 1, -1, -1})) == 0.0);
  CHECK(matrix_dist(kronecker(Matrix::Identity(2, 2), pauli(3)),
                    diag({1, -1, 1, -1})) == 0.0);
  CHECK(matrix_dist(kronecker(Matrix::Identity(2, 2), Matrix::Identity(2, 2)),
                    Matrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("kronecker is associative on small triples") {
  Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix a = random_hermitian(2, rng);
    const Matrix b = random_hermitian(3, rng);
    const Matrix c = random_hermitian(2, rng);
    CHECK(matrix_dist(kronecker(kronecker(a, b), c),
                      kronecker(a, kronecker(b, c))) < 1e-14);
  }
}

TEST_CASE("matrix_commutator basics") {
  CHECK(max_abs(matrix_commutator(pauli(3), pauli(3))) == 0.0);
  // [diag(1,2), ((0,1),(0,0))] = ((0,-1),(0,0))
  const Matrix a = diag({1, 2});
  const Matrix n = mat2(0, 1, 0, 0);
  CHECK(matrix_dist(matrix_commutator(a, n), mat2(0, -1, 0, 0)) == 0.0);
  CHECK_THROWS_AS(matrix_commutator(a, Matrix::Identity(3, 3)), Error);
}

TEST_CASE("commutator of rotated spin projections") {
  // [P+^(0), P+^(pi/4)] = (1/2) ((0,1),(-1,0))
  const PVM p3 = pvm_from_hermitian(pauli(3));
  const Matrix p0 = rotate_pvm_qubit(p3, 0.0).outcomes()[1].projection;
  const Matrix p45 = rotate_pvm_qubit(p3, M_PI / 4).outcomes()[1].projection;
  CHECK(matrix_dist(matrix_commutator(p0, p45), 0.5 * mat2(0, 1, -1, 0)) <
        1e-15);
}

TEST_CASE("is_orthogonal_projection") {
  CHECK(is_orthogonal_projection(diag({1, 0})));
  CHECK(is_orthogonal_projection(0.5 * (Matrix::Identity(2, 2) + pauli(1))));
  CHECK_FALSE(is_orthogonal_projection(diag({2, 0})));
  CHECK_FALSE(is_orthogonal_projection(mat2(0, 1, 0, 0)));
}

TEST_CASE("frobenius_norm") {
  CHECK(frobenius_norm(Matrix::Identity(2, 2)) ==
        doctest::Approx(std::sqrt(2.0)));
  CHECK(frobenius_norm(diag({1, 0}) - diag({0, 1})) ==
        doctest::Approx(std::sqrt(2.0)));
  CHECK(frobenius_norm(Matrix::Zero(3, 3)) == 0.0);
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = random_hermitian(4, rng);
    const double n = frobenius_norm(m);
    CHECK(n * n == doctest::Approx((m.adjoint() * m).trace().real())
                       .epsilon(1e-12));
  }
}
