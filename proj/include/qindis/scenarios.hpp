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

#include <array>
#include <cstdint>
#include <vector>

#include "qindis/algebra.hpp"
#include "qindis/core.hpp"
#include "qindis/observables.hpp"
#include "qindis/states.hpp"

namespace qindis {

// ---------------------------------------------------------------------------
// Two-qubit states. Basis order throughout is |00>,|01>,|10>,|11> (first
// factor major); 4-vectors of outcome probabilities are reported in the order
// (1,1), (-1,1), (1,-1), (-1,-1).
// ---------------------------------------------------------------------------

Matrix pauli(int k);  // k = 1, 2, 3

PureState bell_state();

/// Fixed reporting order for two-qubit outcome 4-vectors.
const std::array<OutcomeLabel, 4>& epr_outcome_order();

/// Parameters of the two-qubit pure-state parametrisation:
/// cos(t1/2)|00> + e^{i f1} sin(t1/2) cos(t2/2)|10>
///   + e^{i f2} sin(t1/2) sin(t2/2) cos(t3/2)|01>
///   + e^{i f3} sin(t1/2) sin(t2/2) sin(t3/2)|11>.
struct TwoQubitAngles {
  std::array<double, 3> theta{};  // each in [0, pi]
  std::array<double, 3> phi{};    // reduced mod 2 pi
};

PureState two_qubit_state(const TwoQubitAngles& angles);

/// Recovers the canonical (theta1, theta2, theta3) of a 4-dimensional state
/// from its amplitude moduli via the arccos cascade; later angles are set to
/// zero when a denominator vanishes. Two states are indiscernible for the
/// unrotated pair observable iff their triples agree.
std::array<double, 3> epr_class(const PureState& h, const Tolerance& tol = {});

/// Angle cascade applied to an outcome probability 4-vector (in the standard
/// reporting order); epr_class is this applied to |amplitudes|^2.
std::array<double, 3> angle_cascade(const std::array<double, 4>& probabilities,
                                    const Tolerance& tol = {});

/// Lifted outcome probabilities of the class `triple`:
/// (cos^2 t1~, sin^2 t1~ cos^2 t2~, sin^2 t1~ sin^2 t2~ cos^2 t3~,
///  sin^2 t1~ sin^2 t2~ sin^2 t3~) with tj~ = tj / 2.
std::array<double, 4> epr_lifts(const std::array<double, 3>& triple);

/// Marginal spin expectations (m1, m2) = (<(s3 x I) h, h>, <(I x s3) h, h>).
std::array<double, 2> m_map(const PureState& h);

/// Right inverse of m_map: h = sqrt(l)|0>phi + sqrt(1-l)|1>phi with
/// l = (1+m1)/2 and phi = sqrt((1+m2)/2)|0> + sqrt((1-m2)/2)|1>.
PureState m_inverse(double m1, double m2);

/// Projection between the Holevo spaces: the signed sums of the lifted
/// probabilities that reproduce (m1, m2).
std::array<double, 2> holevo_projection_A(const std::array<double, 3>& triple);

// ---------------------------------------------------------------------------
// Bell experiment.
// ---------------------------------------------------------------------------

struct BellSettings {
  double gamma_a = 0.0;
  double gamma_b = 0.0;
};

/// R_{gamma_a} (x) R_{gamma_b} as a real 4x4 matrix in the standard basis
/// order, with R_g = ((cos g, -sin g), (sin g, cos g)).
Matrix bell_rotation_4x4(const BellSettings& s);

/// The rotated product observable: outcomes (eps_a, eps_b) with projections
/// Q_a(eps_a) (x) Q_b(eps_b), Q(eps) the rotated spin projections.
PVM bell_pvm(const BellSettings& s, const Tolerance& tol = {});

/// Outcome probabilities of `h` under bell_pvm, reported in the order
/// (1,1), (-1,1), (1,-1), (-1,-1). For the Bell state this equals
/// (cos^2 D, sin^2 D, sin^2 D, cos^2 D)/2 with D = gamma_a - gamma_b.
std::array<double, 4> bell_stats(const BellSettings& s, const PureState& h,
                                 const Tolerance& tol = {});

/// Rotated parameter triple: builds the real coefficient vector of `triple`,
/// applies the polariser rotation, and recovers angles by the arccos
/// cascade. Settings (0,0) give the identity map.
std::array<double, 3> theta_recover(const BellSettings& s,
                                    const std::array<double, 3>& triple,
                                    const Tolerance& tol = {});

/// Triple of a state under the rotated observable (cascade of its
/// bell_stats); agrees with theta_recover on real-amplitude representatives.
std::array<double, 3> bell_class(const BellSettings& s, const PureState& h,
                                 const Tolerance& tol = {});

/// The four product eigenvectors y_s (x) y_t, y_± = (|0> ± i|1>)/sqrt(2),
/// invariant up to phase under every polariser rotation pair. Verifies the
/// invariance on a fixed sample of settings.
std::vector<PureState> invariant_states(const Tolerance& tol = {});

// ---------------------------------------------------------------------------
// Aspect sampler.
// ---------------------------------------------------------------------------

struct AspectConfig {
  double a1 = 0.0, a2 = 0.0;
  double b1 = 0.0, b2 = 0.0;
  std::int64_t runs = 1;
  std::uint64_t seed = 0;
};

struct AspectResult {
  // Indexed [setting_a][setting_b][outcome], outcomes in the standard
  // reporting order.
  std::array<std::array<std::array<std::int64_t, 4>, 2>, 2> counts{};
  std::array<std::array<std::array<double, 4>, 2>, 2> frequencies{};
  std::array<std::array<std::int64_t, 2>, 2> setting_counts{};
};

/// Per run: draw gamma_a uniform on {a1,a2} and gamma_b uniform on {b1,b2}
/// independently, then sample an outcome pair by inverse CDF over the
/// bell_stats 4-vector in the standard reporting order. Deterministic
/// given the seed; frequencies are counts divided by total runs.
AspectResult aspect_simulate(const AspectConfig& cfg, const PureState& h,
                             const Tolerance& tol = {});

// ---------------------------------------------------------------------------
// Discretised free particle.
// ---------------------------------------------------------------------------

/// Probability masses on a rectangular cell grid (1 to 3 axes). `axes` hold
/// strictly increasing cell-edge coordinates; masses are row-major with the
/// first axis slowest. Masses are clipped at zero and normalised.
struct GridDensity {
  std::vector<std::vector<double>> axes;
  std::vector<double> masses;

  static GridDensity make(std::vector<std::vector<double>> axes,
                          std::vector<double> masses,
                          const Tolerance& tol = {});
  int num_axes() const { return static_cast<int>(axes.size()); }
  int cells(int axis) const {
    return static_cast<int>(axes[axis].size()) - 1;
  }
};

/// Sums masses over the dropped axes. `keep` must be a nonempty subset of
/// axis indices; throws bad_axes otherwise.
GridDensity grid_marginal(const GridDensity& g, const std::vector<int>& keep);

/// Probability mass of the cylinder set over `cells` of one axis.
double grid_lift(const GridDensity& g, int axis, const std::vector<int>& cells);

struct GridHellinger {
  double hellinger_sq = 0.0;
  double paper_dsq = 0.0;  // 2 * hellinger_sq
};

/// Hellinger-squared between densities on identical grids.
GridHellinger grid_hellinger(const GridDensity& g1, const GridDensity& g2);

}  // namespace qindis
