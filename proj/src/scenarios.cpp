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

#include "qindis/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qindis/numerics.hpp"
#include "qindis/rng.hpp"

namespace qindis {

namespace {

double reduce_mod_2pi(double phi) {
  const double two_pi = 2.0 * M_PI;
  double r = std::fmod(phi, two_pi);
  if (r < 0) r += two_pi;
  return r;
}

// Permutation between the standard order |00>,|01>,|10>,|11> and the
// parametrisation order |00>,|10>,|01>,|11> (swap the middle components).
template <typename Vec>
Vec swap_middle(const Vec& v) {
  Vec out = v;
  std::swap(out[1], out[2]);
  return out;
}

}  // namespace

Matrix pauli(int k) {
  Matrix m(2, 2);
  switch (k) {
    case 1:
      m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
      break;
    case 2:
      m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
      break;
    case 3:
      m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
      break;
    default:
      throw Error("bad_input", "Pauli index must be 1, 2 or 3");
  }
  return m;
}

PureState bell_state() {
  CVector v(4);
  const double s = 1.0 / std::sqrt(2.0);
  v << Complex(s, 0), Complex(0, 0), Complex(0, 0), Complex(s, 0);
  return PureState(v);
}

const std::array<OutcomeLabel, 4>& epr_outcome_order() {
  static const std::array<OutcomeLabel, 4> order = {
      OutcomeLabel::pair(1, 1), OutcomeLabel::pair(-1, 1),
      OutcomeLabel::pair(1, -1), OutcomeLabel::pair(-1, -1)};
  return order;
}

PureState two_qubit_state(const TwoQubitAngles& angles) {
  for (double t : angles.theta) {
    if (!(t >= 0.0 && t <= M_PI)) {
      throw Error("out_of_range", "theta angles must lie in [0, pi]",
                  {{"theta", std::to_string(t)}});
    }
  }
  const double t1 = angles.theta[0] / 2.0;
  const double t2 = angles.theta[1] / 2.0;
  const double t3 = angles.theta[2] / 2.0;
  const auto phase = [&](int i) {
    const double f = reduce_mod_2pi(angles.phi[i]);
    return Complex(std::cos(f), std::sin(f));
  };
  CVector v(4);
  v[0] = Complex(std::cos(t1), 0);                                   // |00>
  v[2] = phase(0) * std::sin(t1) * std::cos(t2);                     // |10>
  v[1] = phase(1) * std::sin(t1) * std::sin(t2) * std::cos(t3);      // |01>
  v[3] = phase(2) * std::sin(t1) * std::sin(t2) * std::sin(t3);      // |11>
  return PureState(v);
}

std::array<double, 3> angle_cascade(const std::array<double, 4>& probabilities,
                                    const Tolerance& tol) {
  std::array<double, 3> theta{0.0, 0.0, 0.0};
  const double m0 = std::sqrt(std::max(0.0, probabilities[0]));
  const double m1 = std::sqrt(std::max(0.0, probabilities[1]));
  const double m2 = std::sqrt(std::max(0.0, probabilities[2]));
  const double m3 = std::sqrt(std::max(0.0, probabilities[3]));
  // atan2 forms of the arccos cascade: 2 acos(m0) = 2 atan2(s, m0) with
  // s the norm of the remaining components. This stays well conditioned at
  // the boundary of the angle cube, where acos amplifies rounding.
  const double s1 = std::sqrt(m1 * m1 + m2 * m2 + m3 * m3);
  theta[0] = 2.0 * std::atan2(s1, m0);
  if (s1 <= tol.abs_eq) return theta;  // theta2 := 0, theta3 := 0
  const double s2 = std::sqrt(m2 * m2 + m3 * m3);
  theta[1] = 2.0 * std::atan2(s2, m1);
  if (s2 <= tol.abs_eq * s1) return theta;  // theta3 := 0
  theta[2] = 2.0 * std::atan2(m3, m2);
  return theta;
}

std::array<double, 3> epr_class(const PureState& h, const Tolerance& tol) {
  if (h.dim() != 4) {
    throw Error("wrong_dimension", "EPR class needs a two-qubit state");
  }
  const CVector& a = h.amplitudes();
  // Probabilities in the reporting order (1,1),(-1,1),(1,-1),(-1,-1), i.e.
  // |00>,|10>,|01>,|11>.
  std::array<double, 4> p = {std::norm(a[0]), std::norm(a[2]), std::norm(a[1]),
                             std::norm(a[3])};
  return angle_cascade(p, tol);
}

std::array<double, 4> epr_lifts(const std::array<double, 3>& triple) {
  for (double t : triple) {
    if (!(t >= 0.0 && t <= M_PI)) {
      throw Error("out_of_range", "triple entries must lie in [0, pi]");
    }
  }
  const double c1 = std::cos(triple[0] / 2.0), s1 = std::sin(triple[0] / 2.0);
  const double c2 = std::cos(triple[1] / 2.0), s2 = std::sin(triple[1] / 2.0);
  const double c3 = std::cos(triple[2] / 2.0), s3 = std::sin(triple[2] / 2.0);
  return {c1 * c1, s1 * s1 * c2 * c2, s1 * s1 * s2 * s2 * c3 * c3,
          s1 * s1 * s2 * s2 * s3 * s3};
}

std::array<double, 2> m_map(const PureState& h) {
  if (h.dim() != 4) {
    throw Error("wrong_dimension", "m-map needs a two-qubit state");
  }
  const CVector& a = h.amplitudes();
  const double p00 = std::norm(a[0]), p01 = std::norm(a[1]);
  const double p10 = std::norm(a[2]), p11 = std::norm(a[3]);
  return {p00 + p01 - p10 - p11, p00 - p01 + p10 - p11};
}

PureState m_inverse(double m1, double m2) {
  if (!(m1 >= -1.0 && m1 <= 1.0) || !(m2 >= -1.0 && m2 <= 1.0)) {
    throw Error("out_of_range", "m-coordinates must lie in [-1, 1]");
  }
  const double lambda = 0.5 * (1.0 + m1);
  const double phi0 = std::sqrt(0.5 * (1.0 + m2));
  const double phi1 = std::sqrt(0.5 * (1.0 - m2));
  CVector v(4);
  v[0] = std::sqrt(lambda) * phi0;
  v[1] = std::sqrt(lambda) * phi1;
  v[2] = std::sqrt(1.0 - lambda) * phi0;
  v[3] = std::sqrt(1.0 - lambda) * phi1;
  return PureState(v);
}

std::array<double, 2> holevo_projection_A(const std::array<double, 3>& triple) {
  const auto p = epr_lifts(triple);
  // Signed sums over outcomes (1,1),(-1,1),(1,-1),(-1,-1): the first sign
  // pattern reads off eps_A, the second eps_B.
  return {p[0] - p[1] + p[2] - p[3], p[0] + p[1] - p[2] - p[3]};
}

Matrix bell_rotation_4x4(const BellSettings& s) {
  Matrix ra(2, 2), rb(2, 2);
  const double ca = std::cos(s.gamma_a), sa = std::sin(s.gamma_a);
  const double cb = std::cos(s.gamma_b), sb = std::sin(s.gamma_b);
  ra << Complex(ca, 0), Complex(-sa, 0), Complex(sa, 0), Complex(ca, 0);
  rb << Complex(cb, 0), Complex(-sb, 0), Complex(sb, 0), Complex(cb, 0);
  return kronecker(ra, rb);
}

PVM bell_pvm(const BellSettings& s, const Tolerance& tol) {
  const PVM p3 = pvm_from_hermitian(pauli(3), tol);
  return product_pvm(rotate_pvm_qubit(p3, s.gamma_a, tol),
                     rotate_pvm_qubit(p3, s.gamma_b, tol), tol);
}

std::array<double, 4> bell_stats(const BellSettings& s, const PureState& h,
                                 const Tolerance& tol) {
  if (h.dim() != 4) {
    throw Error("wrong_dimension", "Bell statistics need a two-qubit state");
  }
  const PVM pvm = bell_pvm(s, tol);
  const auto dist = measurement_distribution(pvm, density_from_pure(h), tol);
  std::array<double, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) {
    const int idx = pvm.index_of(epr_outcome_order()[k]);
    if (idx < 0) throw Error("internal", "missing outcome label");
    out[k] = dist[static_cast<std::size_t>(idx)];
  }
  return out;
}

std::array<double, 3> theta_recover(const BellSettings& s,
                                    const std::array<double, 3>& triple,
                                    const Tolerance& tol) {
  for (double t : triple) {
    if (!(t >= 0.0 && t <= M_PI)) {
      throw Error("out_of_range", "triple entries must lie in [0, pi]");
    }
  }
  // Real coefficient vector of the class representative, in the
  // parametrisation order |00>,|10>,|01>,|11>.
  const double c1 = std::cos(triple[0] / 2.0), sn1 = std::sin(triple[0] / 2.0);
  const double c2 = std::cos(triple[1] / 2.0), sn2 = std::sin(triple[1] / 2.0);
  const double c3 = std::cos(triple[2] / 2.0), sn3 = std::sin(triple[2] / 2.0);
  const std::array<double, 4> c = {c1, sn1 * c2, sn1 * sn2 * c3,
                                   sn1 * sn2 * sn3};

  // Rotate as the measurement does: probabilities under the rotated
  // observable are |(R^T h)_j|^2, so the coefficient vector is mapped by the
  // transposed rotation (in the standard component order).
  const std::array<double, 4> std_order = swap_middle(c);
  const Matrix r = bell_rotation_4x4(s);
  std::array<double, 4> rotated{};
  for (int i = 0; i < 4; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) acc += r(j, i).real() * std_order[j];
    rotated[i] = acc;
  }
  const std::array<double, 4> back = swap_middle(rotated);
  std::array<double, 4> probs{};
  for (int i = 0; i < 4; ++i) probs[i] = back[i] * back[i];
  return angle_cascade(probs, tol);
}

std::array<double, 3> bell_class(const BellSettings& s, const PureState& h,
                                 const Tolerance& tol) {
  return angle_cascade(bell_stats(s, h, tol), tol);
}

std::vector<PureState> invariant_states(const Tolerance& tol) {
  const double s = 1.0 / std::sqrt(2.0);
  CVector yp(2), ym(2);
  yp << Complex(s, 0), Complex(0, s);
  ym << Complex(s, 0), Complex(0, -s);
  std::vector<CVector> singles = {yp, ym};
  std::vector<PureState> states;
  for (const auto& a : singles) {
    for (const auto& b : singles) {
      CVector v(4);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) v[2 * i + j] = a[i] * b[j];
      }
      states.emplace_back(v);
    }
  }
  // Self-check: invariance up to phase across a fixed sample of settings.
  const std::array<BellSettings, 4> sample = {
      BellSettings{0.0, 0.0}, BellSettings{0.3, 1.1},
      BellSettings{2.0, -0.7}, BellSettings{-1.2, 0.4}};
  for (const auto& st : states) {
    for (const auto& set : sample) {
      const Matrix r = bell_rotation_4x4(set);
      const PureState rotated(r * st.amplitudes());
      if (std::abs(std::abs(overlap(st, rotated)) - 1.0) > tol.abs_eq) {
        throw Error("internal", "invariant state failed its invariance check");
      }
    }
  }
  return states;
}

AspectResult aspect_simulate(const AspectConfig& cfg, const PureState& h,
                             const Tolerance& tol) {
  if (cfg.runs < 1) throw Error("bad_input", "runs must be >= 1");
  if (h.dim() != 4) {
    throw Error("wrong_dimension", "Aspect sampler needs a two-qubit state");
  }
  const std::array<double, 2> a_angles = {cfg.a1, cfg.a2};
  const std::array<double, 2> b_angles = {cfg.b1, cfg.b2};
  std::array<std::array<std::array<double, 4>, 2>, 2> law{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      law[i][j] = bell_stats({a_angles[i], b_angles[j]}, h, tol);
    }
  }
  AspectResult result;
  Rng rng(cfg.seed);
  for (std::int64_t run = 0; run < cfg.runs; ++run) {
    // Setting draws first (A then B), then the outcome draw.
    const int ia = rng.uniform() < 0.5 ? 0 : 1;
    const int ib = rng.uniform() < 0.5 ? 0 : 1;
    const double u = rng.uniform();
    double acc = 0.0;
    int outcome = 3;
    for (int k = 0; k < 4; ++k) {
      acc += law[ia][ib][k];
      if (u < acc) {
        outcome = k;
        break;
      }
    }
    result.counts[ia][ib][outcome] += 1;
    result.setting_counts[ia][ib] += 1;
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double n = static_cast<double>(result.setting_counts[i][j]);
      for (int k = 0; k < 4; ++k) {
        result.frequencies[i][j][k] =
            n > 0 ? static_cast<double>(result.counts[i][j][k]) / n : 0.0;
      }
    }
  }
  return result;
}

GridDensity GridDensity::make(std::vector<std::vector<double>> axes,
                              std::vector<double> masses,
                              const Tolerance& tol) {
  tol.validate();
  if (axes.empty() || axes.size() > 3) {
    throw Error("bad_input", "a grid density needs 1 to 3 axes");
  }
  std::size_t expected = 1;
  for (const auto& ax : axes) {
    if (ax.size() < 2) {
      throw Error("bad_input", "each axis needs at least two cell edges");
    }
    for (std::size_t i = 1; i < ax.size(); ++i) {
      if (!(ax[i] > ax[i - 1])) {
        throw Error("bad_input", "cell edges must be strictly increasing");
      }
    }
    expected *= ax.size() - 1;
  }
  if (masses.size() != expected) {
    throw Error("bad_input", "mass array does not match the grid shape",
                {{"expected", std::to_string(expected)},
                 {"got", std::to_string(masses.size())}});
  }
  double sum = 0.0;
  for (double& m : masses) {
    if (!std::isfinite(m) || m < -tol.abs_eq) {
      throw Error("bad_input", "cell masses must be nonnegative");
    }
    if (m < 0.0) m = 0.0;
    sum += m;
  }
  if (std::abs(sum - 1.0) > tol.abs_eq) {
    throw Error("bad_input", "cell masses must sum to one",
                {{"sum", std::to_string(sum)}});
  }
  for (double& m : masses) m /= sum;
  GridDensity g;
  g.axes = std::move(axes);
  g.masses = std::move(masses);
  return g;
}

GridDensity grid_marginal(const GridDensity& g, const std::vector<int>& keep) {
  const int n = g.num_axes();
  std::vector<bool> kept(n, false);
  if (keep.empty()) throw Error("bad_axes", "at least one axis must be kept");
  for (int axis : keep) {
    if (axis < 0 || axis >= n) {
      throw Error("bad_axes", "axis index out of range",
                  {{"axis", std::to_string(axis)}});
    }
    if (kept[axis]) throw Error("bad_axes", "duplicate axis index");
    kept[axis] = true;
  }
  std::vector<int> kept_axes;
  for (int i = 0; i < n; ++i) {
    if (kept[i]) kept_axes.push_back(i);
  }
  std::vector<std::vector<double>> new_axes;
  std::vector<int> shape(n), new_shape;
  for (int i = 0; i < n; ++i) shape[i] = g.cells(i);
  std::size_t new_total = 1;
  for (int i : kept_axes) {
    new_axes.push_back(g.axes[i]);
    new_shape.push_back(shape[i]);
    new_total *= static_cast<std::size_t>(shape[i]);
  }
  std::vector<double> new_masses(new_total, 0.0);
  std::vector<int> idx(n, 0);
  for (std::size_t flat = 0; flat < g.masses.size(); ++flat) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < kept_axes.size(); ++k) {
      out = out * static_cast<std::size_t>(new_shape[k]) +
            static_cast<std::size_t>(idx[kept_axes[k]]);
    }
    new_masses[out] += g.masses[flat];
    for (int ax = n - 1; ax >= 0; --ax) {
      if (++idx[ax] < shape[ax]) break;
      idx[ax] = 0;
    }
  }
  GridDensity out;
  out.axes = std::move(new_axes);
  out.masses = std::move(new_masses);
  return out;
}

double grid_lift(const GridDensity& g, int axis, const std::vector<int>& cells) {
  const int n = g.num_axes();
  if (axis < 0 || axis >= n) {
    throw Error("bad_axes", "axis index out of range");
  }
  if (cells.empty()) throw Error("bad_cells", "cell list must be nonempty");
  std::vector<bool> selected(static_cast<std::size_t>(g.cells(axis)), false);
  for (int c : cells) {
    if (c < 0 || c >= g.cells(axis)) {
      throw Error("bad_cells", "cell index out of range",
                  {{"cell", std::to_string(c)}});
    }
    selected[static_cast<std::size_t>(c)] = true;
  }
  std::vector<int> shape(n);
  for (int i = 0; i < n; ++i) shape[i] = g.cells(i);
  double mass = 0.0;
  std::vector<int> idx(n, 0);
  for (std::size_t flat = 0; flat < g.masses.size(); ++flat) {
    if (selected[static_cast<std::size_t>(idx[axis])]) mass += g.masses[flat];
    for (int ax = n - 1; ax >= 0; --ax) {
      if (++idx[ax] < shape[ax]) break;
      idx[ax] = 0;
    }
  }
  return mass;
}

GridHellinger grid_hellinger(const GridDensity& g1, const GridDensity& g2) {
  if (g1.axes != g2.axes) {
    throw Error("grid_mismatch", "densities live on different grids");
  }
  double h2 = 0.0;
  for (std::size_t i = 0; i < g1.masses.size(); ++i) {
    const double diff = std::sqrt(g1.masses[i]) - std::sqrt(g2.masses[i]);
    h2 += diff * diff;
  }
  GridHellinger out;
  out.hellinger_sq = 0.5 * h2;
  out.paper_dsq = 2.0 * out.hellinger_sq;
  return out;
}

}  // namespace qindis
