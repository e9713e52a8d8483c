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

#include "qindis/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qindis/numerics.hpp"

namespace qindis {

bool OutcomeLabel::operator<(const OutcomeLabel& o) const {
  const std::size_t n = std::min(parts.size(), o.parts.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (parts[i].real() != o.parts[i].real()) {
      return parts[i].real() < o.parts[i].real();
    }
    if (parts[i].imag() != o.parts[i].imag()) {
      return parts[i].imag() < o.parts[i].imag();
    }
  }
  return parts.size() < o.parts.size();
}

PVM::PVM(std::vector<Outcome> outcomes, const Tolerance& tol)
    : outcomes_(std::move(outcomes)) {
  tol.validate();
  if (outcomes_.empty()) {
    throw Error("bad_pvm", "a PVM needs at least one outcome");
  }
  dim_ = static_cast<int>(outcomes_.front().projection.rows());
  for (const auto& o : outcomes_) {
    if (o.projection.rows() != dim_ || o.projection.cols() != dim_) {
      throw Error("bad_pvm", "outcome projections have mixed dimensions");
    }
    if (!is_orthogonal_projection(o.projection, tol)) {
      throw Error("not_projection",
                  "outcome projection is not an orthogonal projection");
    }
  }
  std::sort(outcomes_.begin(), outcomes_.end(),
            [](const Outcome& a, const Outcome& b) { return a.label < b.label; });
  Matrix sum = Matrix::Zero(dim_, dim_);
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    sum += outcomes_[i].projection;
    if (i > 0 && outcomes_[i].label == outcomes_[i - 1].label) {
      throw Error("bad_pvm", "outcome labels must be distinct");
    }
    for (std::size_t j = i + 1; j < outcomes_.size(); ++j) {
      if (max_abs(outcomes_[i].projection * outcomes_[j].projection) >
          tol.abs_eq) {
        throw Error("bad_pvm", "outcome projections are not orthogonal",
                    {{"i", std::to_string(i)}, {"j", std::to_string(j)}});
      }
    }
  }
  if (max_abs(sum - Matrix::Identity(dim_, dim_)) > tol.abs_eq) {
    throw Error("bad_pvm", "outcome projections do not sum to the identity");
  }
}

PVM PVM::trivial(int dim) {
  return PVM({{OutcomeLabel::real(1.0), Matrix::Identity(dim, dim)}});
}

int PVM::index_of(const OutcomeLabel& label) const {
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    if (outcomes_[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

PVM pvm_from_hermitian(const Matrix& a, const Tolerance& tol) {
  auto clusters = hermitian_eigensystem(a, tol);
  std::vector<Outcome> outs;
  outs.reserve(clusters.size());
  for (auto& c : clusters) {
    outs.push_back({OutcomeLabel::real(c.eigenvalue), std::move(c.projection)});
  }
  return PVM(std::move(outs), tol);
}

PVM product_pvm(const PVM& p, const PVM& q, const Tolerance& tol) {
  std::vector<Outcome> outs;
  outs.reserve(p.size() * q.size());
  for (const auto& po : p.outcomes()) {
    for (const auto& qo : q.outcomes()) {
      OutcomeLabel label = po.label;
      label.parts.insert(label.parts.end(), qo.label.parts.begin(),
                         qo.label.parts.end());
      outs.push_back({std::move(label), kronecker(po.projection, qo.projection)});
    }
  }
  return PVM(std::move(outs), tol);
}

PVM rotate_pvm_qubit(const PVM& p, double gamma, const Tolerance& tol) {
  if (p.dim() != 2) {
    throw Error("wrong_dimension", "rotation is defined for qubit PVMs");
  }
  Matrix r(2, 2);
  const double c = std::cos(gamma), s = std::sin(gamma);
  r << Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0);
  std::vector<Outcome> outs;
  outs.reserve(p.size());
  for (const auto& o : p.outcomes()) {
    outs.push_back({o.label, r * o.projection * r.transpose()});
  }
  return PVM(std::move(outs), tol);
}

namespace {

// One block of the running joint decomposition: an orthonormal basis of the
// subspace together with the eigenvalue tuple accumulated so far.
struct Block {
  Matrix basis;  // d x r, orthonormal columns
  OutcomeLabel label;
};

// Refines every block by the eigenspaces of the compressed Hermitian matrix.
// The eigenvalue either opens a new label component or becomes the imaginary
// part of the last one (for the imaginary part of a normal matrix).
enum class LabelMode { Append, AddImaginary };

std::vector<Block> refine(const std::vector<Block>& blocks, const Matrix& h,
                          LabelMode mode, const Tolerance& tol) {
  std::vector<Block> next;
  for (const auto& b : blocks) {
    const int r = static_cast<int>(b.basis.cols());
    Matrix compressed = b.basis.adjoint() * h * b.basis;
    compressed = 0.5 * (compressed + compressed.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(compressed);
    const auto& values = solver.eigenvalues();
    const Matrix& vectors = solver.eigenvectors();
    int start = 0;
    while (start < r) {
      int end = start + 1;
      while (end < r && values[end] - values[end - 1] <= tol.eig_cluster) {
        ++end;
      }
      const int mult = end - start;
      Matrix sub = b.basis * vectors.middleCols(start, mult);
      Eigen::HouseholderQR<Matrix> qr(sub);
      Block nb;
      nb.basis = qr.householderQ() *
                 Matrix::Identity(b.basis.rows(), mult);
      nb.label = b.label;
      const double lambda = values.segment(start, mult).mean();
      if (mode == LabelMode::Append) {
        nb.label.parts.push_back(Complex(lambda, 0.0));
      } else {
        nb.label.parts.back() += Complex(0.0, lambda);
      }
      next.push_back(std::move(nb));
      start = end;
    }
  }
  return next;
}

}  // namespace

PVM joint_pvm_commuting(const std::vector<Matrix>& family,
                        const Tolerance& tol) {
  tol.validate();
  if (family.empty()) {
    throw Error("bad_input", "joint PVM needs at least one matrix");
  }
  const int d = static_cast<int>(family.front().rows());
  for (const auto& m : family) {
    if (m.rows() != m.cols() || m.rows() != d) {
      throw Error("dimension_mismatch",
                  "family members must be square and of equal dimension");
    }
    const double nn = max_abs(m * m.adjoint() - m.adjoint() * m);
    if (nn > tol.abs_eq) {
      throw Error("not_normal", "family member is not normal",
                  {{"defect", std::to_string(nn)}});
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const double c = max_abs(matrix_commutator(family[i], family[j]));
      if (c > tol.abs_eq) {
        throw Error("not_commuting", "family members do not commute",
                    {{"i", std::to_string(i)},
                     {"j", std::to_string(j)},
                     {"commutator_norm", std::to_string(c)}});
      }
    }
  }

  std::vector<Block> blocks;
  blocks.push_back({Matrix::Identity(d, d), OutcomeLabel{}});
  for (const auto& m : family) {
    const bool hermitian = max_abs(m - m.adjoint()) <= tol.abs_eq;
    if (hermitian) {
      blocks = refine(blocks, m, LabelMode::Append, tol);
    } else {
      const Matrix re = 0.5 * (m + m.adjoint());
      const Matrix im = (m - m.adjoint()) / Complex(0.0, 2.0);
      blocks = refine(blocks, re, LabelMode::Append, tol);
      blocks = refine(blocks, im, LabelMode::AddImaginary, tol);
    }
  }

  std::vector<Outcome> outs;
  outs.reserve(blocks.size());
  for (auto& b : blocks) {
    outs.push_back({std::move(b.label), b.basis * b.basis.adjoint()});
  }
  return PVM(std::move(outs), tol);
}

std::vector<double> measurement_distribution(const PVM& p,
                                             const DensityMatrix& state,
                                             const Tolerance& tol) {
  if (p.dim() != state.dim()) {
    throw Error("dimension_mismatch", "PVM/state dimension mismatch");
  }
  std::vector<double> probs;
  probs.reserve(p.size());
  double sum = 0.0;
  for (const auto& o : p.outcomes()) {
    double v = (o.projection * state.matrix()).trace().real();
    v = std::min(1.0, std::max(0.0, v));
    probs.push_back(v);
    sum += v;
  }
  if (std::abs(sum - 1.0) > 10.0 * tol.abs_eq) {
    throw Error("internal", "outcome probabilities do not sum to one",
                {{"sum", std::to_string(sum)}});
  }
  return probs;
}

FamilyIndiscernibility family_indiscernible(const std::vector<PVM>& family,
                                            const DensityMatrix& s1,
                                            const DensityMatrix& s2,
                                            const Tolerance& tol) {
  FamilyIndiscernibility rep;
  for (const auto& pvm : family) {
    auto d1 = measurement_distribution(pvm, s1, tol);
    auto d2 = measurement_distribution(pvm, s2, tol);
    for (std::size_t i = 0; i < d1.size(); ++i) {
      rep.max_deviation = std::max(rep.max_deviation, std::abs(d1[i] - d2[i]));
    }
  }
  rep.equal = rep.max_deviation <= tol.abs_eq;
  return rep;
}

}  // namespace qindis
