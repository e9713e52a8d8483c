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

#include "qindis/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qindis/numerics.hpp"

namespace qindis {

AbelianAlgebra AbelianAlgebra::from_projections(std::vector<Matrix> generators,
                                                int dim, const Tolerance& tol) {
  tol.validate();
  if (dim < 1) throw Error("bad_input", "dimension must be positive");
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim) {
      throw Error("dimension_mismatch", "generator dimension mismatch");
    }
    if (!is_orthogonal_projection(g, tol)) {
      throw Error("not_projection", "generator is not an orthogonal projection");
    }
  }
  AbelianAlgebra alg;
  alg.dim_ = dim;
  if (generators.empty()) {
    Atom atom;
    atom.projection = Matrix::Identity(dim, dim);
    atom.basis = Matrix::Identity(dim, dim);
    atom.rank = dim;
    alg.atoms_.push_back(std::move(atom));
    return alg;
  }
  // joint_pvm_commuting also validates commutativity.
  PVM joint = joint_pvm_commuting(generators, tol);
  for (const auto& o : joint.outcomes()) {
    Atom atom;
    atom.rank = static_cast<int>(std::lround(o.projection.trace().real()));
    atom.basis = range_basis(o.projection, tol);
    atom.projection = o.projection;
    alg.atoms_.push_back(std::move(atom));
  }
  alg.generators_ = std::move(generators);
  return alg;
}

AbelianAlgebra AbelianAlgebra::from_projections(std::vector<Matrix> generators,
                                                const Tolerance& tol) {
  if (generators.empty()) {
    throw Error("bad_input",
                "dimension is required when the generator list is empty");
  }
  const int dim = static_cast<int>(generators.front().rows());
  return from_projections(std::move(generators), dim, tol);
}

std::vector<Matrix> commutant_basis(const std::vector<Matrix>& generators,
                                    int dim, const Tolerance& tol) {
  tol.validate();
  if (dim < 1) throw Error("bad_input", "dimension must be positive");
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim) {
      throw Error("dimension_mismatch", "generator dimension mismatch");
    }
  }
  const int d2 = dim * dim;
  std::vector<Matrix> basis;
  if (generators.empty()) {
    basis.reserve(d2);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        Matrix e = Matrix::Zero(dim, dim);
        e(i, j) = Complex(1, 0);
        basis.push_back(std::move(e));
      }
    }
    return basis;
  }
  // vec is column-major: vec(gX - Xg) = (I (x) g - g^T (x) I) vec(X).
  const Matrix id = Matrix::Identity(dim, dim);
  Matrix stacked(static_cast<Eigen::Index>(generators.size()) * d2, d2);
  for (std::size_t k = 0; k < generators.size(); ++k) {
    stacked.middleRows(static_cast<Eigen::Index>(k) * d2, d2) =
        kronecker(id, generators[k]) -
        kronecker(generators[k].transpose(), id);
  }
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  const double threshold = 100.0 * tol.eig_cluster * std::max(1.0, smax);
  for (Eigen::Index i = 0; i < svd.matrixV().cols(); ++i) {
    if (i < sv.size() && sv[i] > threshold) continue;
    CVector v = svd.matrixV().col(i);
    Matrix x(dim, dim);
    for (int col = 0; col < dim; ++col) {
      x.col(col) = v.segment(static_cast<Eigen::Index>(col) * dim, dim);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

// Block of a witness unitary inside one atom: maps the unit vector u to the
// unit vector v and fixes the orthogonal complement of their plane.
Matrix plane_map(const Matrix& atom_projection, const CVector& u,
                 const CVector& v, double s_threshold) {
  Matrix block = atom_projection;
  const Complex c = u.dot(v);  // <v, u>, coefficient of u in v
  CVector w = v - c * u;
  const double s = w.norm();
  if (s <= s_threshold) {
    const double a = std::abs(c);
    const Complex phase = (a > 0) ? c / a : Complex(1, 0);
    block += (phase - Complex(1, 0)) * (u * u.adjoint());
    return block;
  }
  w /= s;
  block += (c - Complex(1, 0)) * (u * u.adjoint());
  block += Complex(s, 0) * (w * u.adjoint());
  block -= Complex(s, 0) * (u * w.adjoint());
  block += (std::conj(c) - Complex(1, 0)) * (w * w.adjoint());
  return block;
}

WitnessUnitary witness_impl(const AbelianAlgebra& alg, const PureState& h,
                            const PureState& h2, Rng* rng,
                            const Tolerance& tol) {
  tol.validate();
  if (h.dim() != alg.dim() || h2.dim() != alg.dim()) {
    throw Error("dimension_mismatch", "state/algebra dimension mismatch");
  }
  const int d = alg.dim();
  // Precondition: equal atom masses (indiscernibility for the algebra).
  for (std::size_t j = 0; j < alg.atoms().size(); ++j) {
    const auto& q = alg.atoms()[j].projection;
    const double pj = expectation(q, h).real();
    const double qj = expectation(q, h2).real();
    if (std::abs(pj - qj) > tol.abs_eq) {
      throw Error("not_indiscernible",
                  "states are not indiscernible for the algebra",
                  {{"atom", std::to_string(j)},
                   {"deviation", std::to_string(std::abs(pj - qj))}});
    }
  }

  Matrix u_total = Matrix::Zero(d, d);
  // Components below this norm are treated as zero-weight; the block is then
  // the identity (or a random unitary for the randomized variant). The
  // residual mapping error stays at the same scale.
  const double mass_floor = 1e-12;
  for (const auto& atom : alg.atoms()) {
    const CVector uh = atom.projection * h.amplitudes();
    const CVector vh = atom.projection * h2.amplitudes();
    const double nu = uh.norm();
    const double nv = vh.norm();
    Matrix block;
    if (nu <= mass_floor || nv <= mass_floor) {
      block = atom.projection;
    } else {
      block = plane_map(atom.projection, uh / nu, vh / nv, tol.abs_eq);
    }
    if (rng != nullptr) {
      // Compose with a random unitary of the atom that fixes the image
      // vector, so the witness stays a witness but is otherwise generic.
      const int r = atom.rank;
      Matrix stab;
      if (nv > mass_floor && r > 1) {
        CVector vhat = vh / nv;
        // Basis of the atom with vhat first.
        Matrix ext(d, r);
        ext.col(0) = vhat;
        int k = 1;
        for (int i = 0; i < r && k < r; ++i) {
          CVector cand = atom.basis.col(i);
          cand -= vhat * vhat.dot(cand);
          for (int l = 1; l < k; ++l) {
            cand -= ext.col(l) * ext.col(l).dot(cand);
          }
          const double n = cand.norm();
          if (n > 1e-8) ext.col(k++) = cand / n;
        }
        if (k == r) {
          Matrix small = Matrix::Identity(r, r);
          small.block(1, 1, r - 1, r - 1) = random_unitary(r - 1, *rng);
          stab = ext * small * ext.adjoint();  // supported on the atom
          block = stab * block;
        }
      } else if (nv <= mass_floor && r >= 1) {
        block = atom.basis * random_unitary(r, *rng) * atom.basis.adjoint();
      }
    }
    u_total += block;
  }

  WitnessUnitary w;
  w.matrix = std::move(u_total);
  w.mapping_error = (w.matrix * h.amplitudes() - h2.amplitudes()).norm();
  double res = 0.0;
  for (const auto& g : alg.generators()) {
    res = std::max(res, max_abs(w.matrix * g - g * w.matrix));
  }
  w.residual_commutation = res;
  return w;
}

}  // namespace

WitnessUnitary witness_unitary(const AbelianAlgebra& alg, const PureState& h,
                               const PureState& h2, const Tolerance& tol) {
  return witness_impl(alg, h, h2, nullptr, tol);
}

WitnessUnitary witness_unitary_randomized(const AbelianAlgebra& alg,
                                          const PureState& h,
                                          const PureState& h2, Rng& rng,
                                          const Tolerance& tol) {
  return witness_impl(alg, h, h2, &rng, tol);
}

Matrix random_commutant_unitary(const AbelianAlgebra& alg, Rng& rng) {
  const int d = alg.dim();
  Matrix u = Matrix::Zero(d, d);
  for (const auto& atom : alg.atoms()) {
    u += atom.basis * random_unitary(atom.rank, rng) * atom.basis.adjoint();
  }
  return u;
}

Matrix single_generator(const std::vector<Matrix>& projections,
                        const Tolerance& tol) {
  tol.validate();
  if (projections.empty()) {
    throw Error("bad_input", "at least one projection is required");
  }
  const int d = static_cast<int>(projections.front().rows());
  for (const auto& p : projections) {
    if (p.rows() != d || p.cols() != d) {
      throw Error("dimension_mismatch", "projection dimension mismatch");
    }
    if (!is_orthogonal_projection(p, tol)) {
      throw Error("not_projection", "input is not an orthogonal projection");
    }
  }
  for (std::size_t i = 0; i < projections.size(); ++i) {
    for (std::size_t j = i + 1; j < projections.size(); ++j) {
      if (max_abs(matrix_commutator(projections[i], projections[j])) >
          tol.abs_eq) {
        throw Error("not_commuting", "projections do not commute",
                    {{"i", std::to_string(i)}, {"j", std::to_string(j)}});
      }
    }
  }
  Matrix a = Matrix::Zero(d, d);
  double weight = 1.0;
  for (const auto& p : projections) {
    a += weight * p;
    weight /= 3.0;
  }
  return a;
}

namespace {

// Greedy base-3 expansion with digits {0, 1}: digit k is set iff the
// remainder exceeds (3/4) 3^{-k}. Valid spectra stay clear of the boundary.
bool ternary_digit(double value, int k, double boundary_tol) {
  double r = value;
  double scale = 1.0;
  for (int j = 0; j <= k; ++j) {
    const double boundary = 0.75 * scale;
    if (std::abs(r - boundary) <= boundary_tol) {
      throw Error("spectral_ambiguity",
                  "eigenvalue sits on a ternary digit boundary",
                  {{"eigenvalue", std::to_string(value)},
                   {"digit", std::to_string(j)}});
    }
    const bool bit = r > boundary;
    if (j == k) return bit;
    if (bit) r -= scale;
    scale /= 3.0;
  }
  return false;  // unreachable
}

}  // namespace

Matrix recover_projection(const Matrix& a, int index, int n_total,
                          const Tolerance& tol) {
  tol.validate();
  if (n_total < 1 || index < 0 || index >= n_total) {
    throw Error("bad_input", "digit index out of range");
  }
  auto clusters = hermitian_eigensystem(a, tol);
  const int d = static_cast<int>(a.rows());
  Matrix out = Matrix::Zero(d, d);
  for (const auto& c : clusters) {
    if (ternary_digit(c.eigenvalue, index, tol.eig_cluster)) {
      out += c.projection;
    }
  }
  return out;
}

IncompatibilityReport incompatibility_check(const PVM& p, const PVM& q,
                                            const Tolerance& tol) {
  if (p.dim() != q.dim()) {
    throw Error("dimension_mismatch", "PVM dimension mismatch");
  }
  IncompatibilityReport rep;
  rep.max_commutator_norm = -1.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      const double norm = max_abs(matrix_commutator(
          p.outcomes()[i].projection, q.outcomes()[j].projection));
      if (norm > rep.max_commutator_norm) {
        rep.max_commutator_norm = norm;
        rep.witness_pair = {static_cast<int>(i), static_cast<int>(j)};
      }
    }
  }
  rep.compatible = rep.max_commutator_norm <= tol.abs_eq;
  return rep;
}

}  // namespace qindis
