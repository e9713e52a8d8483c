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

#include "qindis/holevo.hpp"

#include <cmath>
#include <map>
#include <string>

#include "qindis/numerics.hpp"

namespace qindis {

HolevoPoint HolevoPoint::make(std::vector<double> probabilities,
                              const Tolerance& tol) {
  tol.validate();
  if (probabilities.empty()) {
    throw Error("bad_input", "a Holevo point needs at least one entry");
  }
  double sum = 0.0;
  for (double& p : probabilities) {
    if (!std::isfinite(p) || p < -tol.abs_eq) {
      throw Error("bad_input", "probabilities must be nonnegative",
                  {{"value", std::to_string(p)}});
    }
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol.abs_eq) {
    throw Error("bad_input", "probabilities must sum to one",
                {{"sum", std::to_string(sum)}});
  }
  for (double& p : probabilities) p /= sum;
  return HolevoPoint{std::move(probabilities)};
}

HolevoPoint density_vector(const AbelianAlgebra& alg, const DensityMatrix& rho,
                           const Tolerance& tol) {
  if (alg.dim() != rho.dim()) {
    throw Error("dimension_mismatch", "algebra/state dimension mismatch");
  }
  std::vector<double> probs;
  probs.reserve(alg.atoms().size());
  for (const auto& atom : alg.atoms()) {
    probs.push_back((atom.projection * rho.matrix()).trace().real());
  }
  return HolevoPoint::make(std::move(probs), tol);
}

IndiscernibilityReport indiscernible(const AbelianAlgebra& alg,
                                     const DensityMatrix& s1,
                                     const DensityMatrix& s2,
                                     const Tolerance& tol) {
  const HolevoPoint p = density_vector(alg, s1, tol);
  const HolevoPoint q = density_vector(alg, s2, tol);
  IndiscernibilityReport rep;
  for (std::size_t j = 0; j < p.size(); ++j) {
    rep.max_deviation = std::max(
        rep.max_deviation, std::abs(p.probabilities[j] - q.probabilities[j]));
  }
  rep.equal = rep.max_deviation <= tol.abs_eq;
  return rep;
}

CyclicVector cyclic_vector(const AbelianAlgebra& alg, std::uint64_t seed) {
  Rng rng(seed);
  const int d = alg.dim();
  CVector h0 = CVector::Zero(d);
  double weight = 1.0;
  for (const auto& atom : alg.atoms()) {
    weight *= 0.5;  // atom j carries mass 2^{-(j+1)} before renormalisation
    CVector component;
    double norm = 0.0;
    do {
      component = atom.projection * random_complex_gaussian(d, rng);
      norm = component.norm();
    } while (norm < 1e-8);
    h0 += std::sqrt(weight) * component / norm;
  }
  CyclicVector cv{PureState(h0 / h0.norm()), {}};
  cv.atom_masses.reserve(alg.atoms().size());
  for (const auto& atom : alg.atoms()) {
    cv.atom_masses.push_back(
        (atom.projection * cv.vector.amplitudes()).squaredNorm());
  }
  return cv;
}

PureState state_from_density(const AbelianAlgebra& alg,
                             const HolevoPoint& target,
                             const CyclicVector& h0) {
  if (target.size() != alg.atoms().size()) {
    throw Error("index_mismatch", "target/atom count mismatch");
  }
  if (h0.vector.dim() != alg.dim()) {
    throw Error("dimension_mismatch", "cyclic vector dimension mismatch");
  }
  const int d = alg.dim();
  CVector h = CVector::Zero(d);
  for (std::size_t j = 0; j < alg.atoms().size(); ++j) {
    const double mass = h0.atom_masses[j];
    if (!(mass > 0.0)) {
      throw Error("bad_input", "cyclic vector has a zero-mass atom");
    }
    h += std::sqrt(target.probabilities[j] / mass) *
         (alg.atoms()[j].projection * h0.vector.amplitudes());
  }
  return PureState(h / h.norm());
}

double bhattacharyya(const HolevoPoint& p, const HolevoPoint& q) {
  if (p.size() != q.size()) {
    throw Error("index_mismatch", "Holevo points have different atom counts");
  }
  double bc = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    bc += std::sqrt(p.probabilities[j] * q.probabilities[j]);
  }
  return bc;
}

double hellinger_sq(const HolevoPoint& p, const HolevoPoint& q) {
  if (p.size() != q.size()) {
    throw Error("index_mismatch", "Holevo points have different atom counts");
  }
  double h2 = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double diff =
        std::sqrt(p.probabilities[j]) - std::sqrt(q.probabilities[j]);
    h2 += diff * diff;
  }
  return 0.5 * h2;
}

double quotient_hs_distance(const HolevoPoint& p, const HolevoPoint& q) {
  const double bc = bhattacharyya(p, q);
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - bc * bc)));
}

Complex lift_observable(const AbelianAlgebra& alg, const Matrix& a,
                        const HolevoPoint& p, const Tolerance& tol) {
  if (a.rows() != alg.dim() || a.cols() != alg.dim()) {
    throw Error("dimension_mismatch", "operator/algebra dimension mismatch");
  }
  if (p.size() != alg.atoms().size()) {
    throw Error("index_mismatch", "point/atom count mismatch");
  }
  std::vector<Complex> coeffs;
  coeffs.reserve(alg.atoms().size());
  Matrix reconstructed = Matrix::Zero(alg.dim(), alg.dim());
  for (const auto& atom : alg.atoms()) {
    const Complex alpha =
        (a * atom.projection).trace() / static_cast<double>(atom.rank);
    coeffs.push_back(alpha);
    reconstructed += alpha * atom.projection;
  }
  const double residual = max_abs(a - reconstructed);
  if (residual > tol.abs_eq) {
    throw Error("not_in_algebra",
                "operator is not a combination of the atoms",
                {{"residual", std::to_string(residual)}});
  }
  Complex value(0, 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    value += coeffs[j] * p.probabilities[j];
  }
  return value;
}

void ClassicalSystem::validate() const {
  for (const auto& obs : observables) {
    if (obs.size() != points.size()) {
      throw Error("bad_input",
                  "every observable must assign a value to every point");
    }
  }
}

std::vector<std::vector<int>> classical_quotient(const ClassicalSystem& sys) {
  sys.validate();
  std::map<std::vector<std::string>, int> class_of;
  std::vector<std::vector<int>> classes;
  for (std::size_t i = 0; i < sys.points.size(); ++i) {
    std::vector<std::string> key;
    key.reserve(sys.observables.size());
    for (const auto& obs : sys.observables) key.push_back(obs[i]);
    auto [it, inserted] =
        class_of.emplace(std::move(key), static_cast<int>(classes.size()));
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(static_cast<int>(i));
  }
  return classes;
}

std::vector<int> transposition_witness(const ClassicalSystem& sys, int a,
                                       int b) {
  sys.validate();
  const int n = static_cast<int>(sys.points.size());
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw Error("bad_input", "point index out of range");
  }
  for (const auto& obs : sys.observables) {
    if (obs[a] != obs[b]) {
      throw Error("not_equivalent",
                  "points differ on an observable; no witness exists");
    }
  }
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::swap(perm[a], perm[b]);
  return perm;
}

}  // namespace qindis
