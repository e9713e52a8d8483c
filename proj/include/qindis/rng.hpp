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

#include <cstdint>
#include <random>

#include "qindis/core.hpp"

namespace qindis {

/// Deterministic random source. All randomness in the library flows through
/// an explicitly seeded Rng; there is no ambient/global generator.
/// Distributions are implemented here (not via std::*_distribution) so that a
/// seed pins the exact sample sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in {0, ..., n-1}.
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  /// Standard normal via Box-Muller; pairs are cached.
  double normal();

  /// Standard complex normal, E|z|^2 = 1.
  Complex complex_normal() {
    const double inv_sqrt2 = 0.7071067811865476;
    double re = normal();
    double im = normal();
    return Complex(re * inv_sqrt2, im * inv_sqrt2);
  }

  /// Derived child generator (for chunked work with a deterministic merge).
  Rng spawn() { return Rng(next_u64() ^ 0x9e3779b97f4a7c15ull); }

 private:
  std::mt19937_64 gen_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

/// Vector of independent standard complex normals.
CVector random_complex_gaussian(int dim, Rng& rng);

/// Haar-distributed unitary (Ginibre + QR with phase fix).
Matrix random_unitary(int dim, Rng& rng);

/// Random Hermitian matrix with entries of order one.
Matrix random_hermitian(int dim, Rng& rng);

}  // namespace qindis
