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

#include "qindis/rng.hpp"

#include <cmath>

namespace qindis {

double Rng::normal() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  // Box-Muller; u clamped away from 0 so log() stays finite.
  double u = uniform();
  if (u < 1e-300) u = 1e-300;
  double v = uniform();
  double r = std::sqrt(-2.0 * std::log(u));
  double a = 2.0 * M_PI * v;
  cached_ = r * std::sin(a);
  have_cached_ = true;
  return r * std::cos(a);
}

CVector random_complex_gaussian(int dim, Rng& rng) {
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.complex_normal();
  return v;
}

Matrix random_unitary(int dim, Rng& rng) {
  Matrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is Haar.
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    double a = std::abs(d);
    q.col(j) *= (a > 0) ? d / a : Complex(1, 0);
  }
  return q;
}

Matrix random_hermitian(int dim, Rng& rng) {
  Matrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = rng.complex_normal();
  }
  return 0.5 * (g + g.adjoint());
}

}  // namespace qindis
