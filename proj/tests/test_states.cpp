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

#include "qindis/states.hpp"
#include "test_helpers.hpp"

using namespace qindis;
using namespace qindis::testing;

namespace {

CVector plus_state() {
  CVector v(2);
  const double s = 1.0 / std::sqrt(2.0);
  v << Complex(s, 0), Complex(s, 0);
  return v;
}

}  // namespace

TEST_CASE("canonical phase is independent of the input phase") {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + static_cast<int>(rng.below(6));
    const PureState h = random_pure(d, rng);
    const double phase = rng.uniform(0, 2 * M_PI);
    const Complex c(std::cos(phase), std::sin(phase));
    const PureState rephased(c * h.amplitudes());
    CHECK((rephased.amplitudes() - h.amplitudes()).norm() < 1e-12);
  }
}

TEST_CASE("pure state constructor validates the norm") {
  CVector v(2);
  v << Complex(1, 0), Complex(1, 0);
  CHECK_THROWS_AS((void)PureState(v), Error);
}

TEST_CASE("density_from_pure") {
  CHECK(matrix_dist(density_from_pure(PureState::basis_vector(2, 0)).matrix(),
                    diag({1, 0})) == 0.0);
  CHECK(matrix_dist(density_from_pure(PureState::basis_vector(2, 1)).matrix(),
                    diag({0, 1})) == 0.0);
  const Matrix half = 0.5 * mat2(1, 1, 1, 1);
  CHECK(matrix_dist(density_from_pure(PureState(plus_state())).matrix(),
                    half) < 1e-15);

  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + static_cast<int>(rng.below(6));
    const DensityMatrix rho = density_from_pure(random_pure(d, rng));
    CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
    CHECK(matrix_dist(rho.matrix() * rho.matrix(), rho.matrix()) < 1e-12);
  }
}

TEST_CASE("overlap conventions") {
  const PureState zero = PureState::basis_vector(2, 0);
  const PureState one = PureState::basis_vector(2, 1);
  const PureState plus{plus_state()};
  CHECK(overlap(zero, zero) == Complex(1, 0));
  CHECK(overlap(zero, one) == Complex(0, 0));
  CHECK(overlap(zero, plus).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK_THROWS_AS(overlap(zero, PureState::basis_vector(3, 0)), Error);
}

TEST_CASE("hs_distance_pure closed form vs Frobenius route") {
  const PureState zero = PureState::basis_vector(2, 0);
  const PureState one = PureState::basis_vector(2, 1);
  const PureState plus{plus_state()};
  CHECK(hs_distance_pure(zero, one) == doctest::Approx(std::sqrt(2.0)));
  CHECK(hs_distance_pure(zero, zero) == 0.0);
  CHECK(hs_distance_pure(zero, plus) == doctest::Approx(1.0));

  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + static_cast<int>(rng.below(7));
    const PureState a = random_pure(d, rng);
    const PureState b = random_pure(d, rng);
    const double direct = frobenius_norm(density_from_pure(a).matrix() -
                                         density_from_pure(b).matrix());
    CHECK(std::abs(hs_distance_pure(a, b) - direct) < 1e-12);
  }
}

TEST_CASE("hs_distance_pure is a metric on canonical representatives") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + static_cast<int>(rng.below(4));
    const PureState a = random_pure(d, rng);
    const PureState b = random_pure(d, rng);
    const PureState c = random_pure(d, rng);
    CHECK(hs_distance_pure(a, b) == hs_distance_pure(b, a));
    CHECK(hs_distance_pure(a, c) <=
          hs_distance_pure(a, b) + hs_distance_pure(b, c) + 1e-12);
  }
}

TEST_CASE("bloch coordinates of the axis states") {
  const BlochVector bz = bloch_from_pure(PureState::basis_vector(2, 0));
  CHECK(bz.x == doctest::Approx(0.0));
  CHECK(bz.y == doctest::Approx(0.0));
  CHECK(bz.z == doctest::Approx(1.0));

  const BlochVector bx = bloch_from_pure(PureState(plus_state()));
  CHECK(bx.x == doctest::Approx(1.0));
  CHECK(bx.y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(bx.z == doctest::Approx(0.0).epsilon(1e-12));

  CVector vy(2);
  const double s = 1.0 / std::sqrt(2.0);
  vy << Complex(s, 0), Complex(0, s);
  const BlochVector by = bloch_from_pure(PureState(vy));
  CHECK(by.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(by.y == doctest::Approx(1.0));

  CHECK_THROWS_AS(bloch_from_pure(PureState::basis_vector(3, 0)), Error);
}

TEST_CASE("Bloch vs HS distance relation") {
  // hs^2 = ||delta bloch||^2 / 2 for qubit pairs.
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const PureState a = random_pure(2, rng);
    const PureState b = random_pure(2, rng);
    const BlochVector ba = bloch_from_pure(a);
    const BlochVector bb = bloch_from_pure(b);
    const double db2 = (ba.x - bb.x) * (ba.x - bb.x) +
                       (ba.y - bb.y) * (ba.y - bb.y) +
                       (ba.z - bb.z) * (ba.z - bb.z);
    const double hs = hs_distance_pure(a, b);
    CHECK(std::abs(hs * hs - 0.5 * db2) < 1e-12);
  }
}

TEST_CASE("random_pure determinism and edge cases") {
  CHECK(random_pure(1, 123).amplitudes()[0] == Complex(1, 0));
  const PureState a = random_pure(4, 7);
  const PureState b = random_pure(4, 7);
  CHECK((a.amplitudes() - b.amplitudes()).norm() == 0.0);
}

TEST_CASE("random_pure is Haar on average") {
  // Mean of <A h, h> over samples should vanish for traceless Hermitian A.
  Rng rng(77);
  Matrix a = Matrix::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = -1.0;
  a(0, 2) = Complex(0.3, 0.4);
  a(2, 0) = Complex(0.3, -0.4);
  const int n = 10000;
  double mean = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = expectation(a, random_pure(3, rng)).real();
    mean += v;
    sq += v * v;
  }
  mean /= n;
  sq /= n;
  const double stderr_est = std::sqrt((sq - mean * mean) / n);
  CHECK(std::abs(mean) < 4.0 * stderr_est);
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(DensityMatrix(diag({1, 1})), Error);        // trace 2
  CHECK_THROWS_AS(DensityMatrix(diag({2, -1})), Error);       // negative
  CHECK_THROWS_AS(DensityMatrix(mat2(0.5, 0.5, 0, 0.5)), Error);  // not herm
  CHECK_NOTHROW(DensityMatrix(diag({0.75, 0.25})));
}
