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

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qindis {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Numerical tolerances shared across the library.
///   abs_eq      - entrywise equality / invariant checks
///   eig_cluster - eigenvalues closer than this form one spectral cluster
///   opt_conv    - convergence threshold for iterative searches
struct Tolerance {
  double abs_eq = 1e-9;
  double eig_cluster = 1e-8;
  double opt_conv = 1e-6;

  void validate() const;
};

/// Error with a stable machine-readable code (surfaced as JSON by the CLI).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        std::map<std::string, std::string> context = {})
      : std::runtime_error(message),
        code_(std::move(code)),
        context_(std::move(context)) {}

  const std::string& code() const noexcept { return code_; }
  const std::map<std::string, std::string>& context() const noexcept {
    return context_;
  }

 private:
  std::string code_;
  std::map<std::string, std::string> context_;
};

/// Max-entry (Chebyshev) norm; the default norm for invariant checks.
double max_abs(const Matrix& m);

bool all_finite(const Matrix& m);
bool all_finite(const CVector& v);

}  // namespace qindis
