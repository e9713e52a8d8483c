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

#include "qindis/observables.hpp"
#include "qindis/scenarios.hpp"
#include "test_helpers.hpp"

using namespace qindis;
using namespace qindis::testing;

TEST_CASE("pvm_from_hermitian on spin and identity") {
  const PVM p3 = pvm_from_hermitian(pauli(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3.outcomes()[0].label == OutcomeLabel::real(-1.0));
  CHECK(matrix_dist(p3.outcomes()[0].projection, diag({0, 1})) < 1e-12);
  CHECK(matrix_dist(p3.outcomes()[1].projection, diag({1, 0})) < 1e-12);

  const PVM id3 = pvm_from_hermitian(Matrix::Identity(3, 3));
  REQUIRE(id3.size() == 1);
  CHECK(matrix_dist(id3.outcomes()[0].projection, Matrix::Identity(3, 3)) <
        1e-12);

  const PVM p1 = pvm_from_hermitian(pauli(1));
  CHECK(matrix_dist(p1.outcomes()[1].projection,
                    0.5 * (Matrix::Identity(2, 2) + pauli(1))) < 1e-12);
}

TEST_CASE("product_pvm gives the four rank-one spin pairs") {
  const PVM p3 = pvm_from_hermitian(pauli(3));
  const PVM prod = product_pvm(p3, p3);
  REQUIRE(prod.size() == 4);
  // (1,1) outcome is |00><00|.
  const int idx = prod.index_of(OutcomeLabel::pair(1, 1));
  REQUIRE(idx >= 0);
  CHECK(matrix_dist(prod.outcomes()[static_cast<std::size_t>(idx)].projection,
                    diag({1, 0, 0, 0})) < 1e-12);

  const PVM pa = product_pvm(p3, PVM::trivial(2));
  REQUIRE(pa.size() == 2);
  const int ia = pa.index_of(OutcomeLabel::pair(1, 1));
  REQUIRE(ia >= 0);
  CHECK(matrix_dist(pa.outcomes()[static_cast<std::size_t>(ia)].projection,
                    diag({1, 1, 0, 0})) < 1e-12);

  const PVM tt = product_pvm(PVM::trivial(2), PVM::trivial(2));
  REQUIRE(tt.size() == 1);
  CHECK(matrix_dist(tt.outcomes()[0].projection, Matrix::Identity(4, 4)) <
        1e-12);
}

TEST_CASE("product distribution factorises on product states") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const PVM p = pvm_from_hermitian(random_hermitian(2, rng));
    const PVM q = pvm_from_hermitian(random_hermitian(3, rng));
    const PureState ha = random_pure(2, rng);
    const PureState hb = random_pure(3, rng);
    const DensityMatrix rho_a = density_from_pure(ha);
    const DensityMatrix rho_b = density_from_pure(hb);
    const DensityMatrix joint(
        kronecker(rho_a.matrix(), rho_b.matrix()));
    const auto da = measurement_distribution(p, rho_a);
    const auto db = measurement_distribution(q, rho_b);
    const auto dj = measurement_distribution(product_pvm(p, q), joint);
    std::size_t k = 0;
    for (double va : da) {
      for (double vb : db) {
        CHECK(std::abs(dj[k++] - va * vb) < 1e-10);
      }
    }
  }
}

TEST_CASE("rotate_pvm_qubit matches the displayed projection") {
  const PVM p3 = pvm_from_hermitian(pauli(3));
  SUBCASE("gamma = 0 leaves the PVM unchanged") {
    const PVM r = rotate_pvm_qubit(p3, 0.0);
    CHECK(matrix_dist(r.outcomes()[1].projection, diag({1, 0})) < 1e-15);
  }
  SUBCASE("general gamma") {
    const double g = 0.813;
    const PVM r = rotate_pvm_qubit(p3, g);
    Matrix expected(2, 2);
    const double c = std::cos(g), s = std::sin(g);
    expected << Complex(c * c, 0), Complex(s * c, 0), Complex(s * c, 0),
        Complex(s * s, 0);
    CHECK(matrix_dist(r.outcomes()[1].projection, expected) < 1e-15);
  }
  SUBCASE("gamma = pi/2 maps diag(1,0) to diag(0,1)") {
    const PVM r = rotate_pvm_qubit(p3, M_PI / 2);
    CHECK(matrix_dist(r.outcomes()[1].projection, diag({0, 1})) < 1e-15);
  }
  SUBCASE("rotating by gamma then -gamma is the identity") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      const double g = rng.uniform(0, 2 * M_PI);
      const PVM fwd = rotate_pvm_qubit(p3, g);
      const PVM back = rotate_pvm_qubit(fwd, -g);
      for (std::size_t i = 0; i < 2; ++i) {
        CHECK(matrix_dist(back.outcomes()[i].projection,
                          p3.outcomes()[i].projection) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(rotate_pvm_qubit(PVM::trivial(3), 0.1), Error);
}

TEST_CASE("joint_pvm_commuting refines diagonal families") {
  const Matrix a = diag({1, 1, 2});
  const Matrix b = diag({3, 4, 4});
  const PVM joint = joint_pvm_commuting({a, b});
  REQUIRE(joint.size() == 3);
  CHECK(joint.index_of(OutcomeLabel::pair(1, 3)) >= 0);
  CHECK(joint.index_of(OutcomeLabel::pair(1, 4)) >= 0);
  CHECK(joint.index_of(OutcomeLabel::pair(2, 4)) >= 0);
  for (const auto& o : joint.outcomes()) {
    CHECK(std::lround(o.projection.trace().real()) == 1);
  }
}

TEST_CASE("joint_pvm_commuting of a single matrix equals its spectral PVM") {
  const PVM a = joint_pvm_commuting({pauli(3)});
  const PVM b = pvm_from_hermitian(pauli(3));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(matrix_dist(a.outcomes()[i].projection,
                      b.outcomes()[i].projection) < 1e-12);
  }
}

TEST_CASE("joint_pvm_commuting on the two-qubit spin pair") {
  const Matrix s3i = kronecker(pauli(3), Matrix::Identity(2, 2));
  const Matrix is3 = kronecker(Matrix::Identity(2, 2), pauli(3));
  const PVM joint = joint_pvm_commuting({s3i, is3});
  REQUIRE(joint.size() == 4);
  const int idx = joint.index_of(OutcomeLabel::pair(1, -1));
  REQUIRE(idx >= 0);
  // (+1,-1) outcome corresponds to |01><01|.
  CHECK(matrix_dist(joint.outcomes()[static_cast<std::size_t>(idx)].projection,
                    diag({0, 1, 0, 0})) < 1e-12);
}

TEST_CASE("joint_pvm_commuting validates commutation and normality") {
  CHECK_THROWS_AS(joint_pvm_commuting({pauli(1), pauli(3)}), Error);
  CHECK_THROWS_AS(joint_pvm_commuting({mat2(0, 1, 0, 0)}), Error);
}

TEST_CASE("joint_pvm_commuting handles normal non-Hermitian input") {
  // diag(i, -i, 1) is normal with complex eigenvalues.
  Matrix n = Matrix::Zero(3, 3);
  n(0, 0) = Complex(0, 1);
  n(1, 1) = Complex(0, -1);
  n(2, 2) = Complex(1, 0);
  const PVM joint = joint_pvm_commuting({n});
  REQUIRE(joint.size() == 3);
  OutcomeLabel li{{Complex(0, 1)}};
  CHECK(joint.index_of(li) >= 0);
  // Projections commute with the input.
  for (const auto& o : joint.outcomes()) {
    CHECK(max_abs(matrix_commutator(o.projection, n)) < 1e-10);
  }
}

TEST_CASE("joint projections commute with every input") {
  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + static_cast<int>(rng.below(5));
    // Commuting family from a common eigenbasis with random integer spectra.
    const Matrix u = random_unitary(d, rng);
    std::vector<Matrix> family;
    for (int k = 0; k < 3; ++k) {
      Matrix evals = Matrix::Zero(d, d);
      for (int i = 0; i < d; ++i) {
        evals(i, i) = Complex(static_cast<double>(rng.below(3)), 0);
      }
      family.push_back(u * evals * u.adjoint());
    }
    const PVM joint = joint_pvm_commuting(family);
    for (const auto& o : joint.outcomes()) {
      for (const auto& m : family) {
        CHECK(max_abs(matrix_commutator(o.projection, m)) < 1e-8);
      }
    }
  }
}

TEST_CASE("measurement_distribution") {
  const PVM p3 = pvm_from_hermitian(pauli(3));
  const auto d0 = measurement_distribution(
      p3, density_from_pure(PureState::basis_vector(2, 0)));
  CHECK(d0[0] == doctest::Approx(0.0));  // outcome -1
  CHECK(d0[1] == doctest::Approx(1.0));  // outcome +1

  const PVM pairs = product_pvm(p3, p3);
  const auto dbell =
      measurement_distribution(pairs, density_from_pure(bell_state()));
  const int i11 = pairs.index_of(OutcomeLabel::pair(1, 1));
  const int i1m = pairs.index_of(OutcomeLabel::pair(1, -1));
  const int im1 = pairs.index_of(OutcomeLabel::pair(-1, 1));
  const int imm = pairs.index_of(OutcomeLabel::pair(-1, -1));
  CHECK(dbell[static_cast<std::size_t>(i11)] == doctest::Approx(0.5));
  CHECK(dbell[static_cast<std::size_t>(imm)] == doctest::Approx(0.5));
  CHECK(dbell[static_cast<std::size_t>(i1m)] == doctest::Approx(0.0));
  CHECK(dbell[static_cast<std::size_t>(im1)] == doctest::Approx(0.0));

  const DensityMatrix mixed(0.25 * Matrix::Identity(4, 4));
  for (double p : measurement_distribution(pairs, mixed)) {
    CHECK(p == doctest::Approx(0.25));
  }
}

TEST_CASE("distribution equals direct pure-state expectations") {
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + static_cast<int>(rng.below(5));
    const PVM pvm = pvm_from_hermitian(random_hermitian(d, rng));
    const PureState h = random_pure(d, rng);
    const auto dist = measurement_distribution(pvm, density_from_pure(h));
    for (std::size_t i = 0; i < pvm.size(); ++i) {
      const double direct =
          expectation(pvm.outcomes()[i].projection, h).real();
      CHECK(std::abs(dist[i] - direct) < 1e-12);
    }
  }
}

TEST_CASE("family_indiscernible sees marginals only") {
  const Matrix s3i = kronecker(pauli(3), Matrix::Identity(2, 2));
  const Matrix is3 = kronecker(Matrix::Identity(2, 2), pauli(3));
  const PVM pa = pvm_from_hermitian(s3i);
  const PVM pb = pvm_from_hermitian(is3);
  CVector v(4);
  const double s = 1.0 / std::sqrt(2.0);
  v << Complex(0, 0), Complex(s, 0), Complex(s, 0), Complex(0, 0);
  const PureState swapped(v);
  const auto rep = family_indiscernible(
      {pa, pb}, density_from_pure(bell_state()), density_from_pure(swapped));
  CHECK(rep.equal);
}
