// Copyright 2026 The dualswitch Authors
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

// Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.
// Self-contained on purpose: it serves as an independent cross-check of the
// exact spectra and must not share code with them.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace dualswitch {

struct JacobiOptions {
  int max_sweeps = 100;
  /// Converged once the off-diagonal Frobenius norm falls below
  /// tolerance * (Frobenius norm of the input).
  double tolerance = 1e-12;
};

/// Eigenvalues of a symmetric matrix, sorted descending. Throws
/// std::runtime_error if the sweep cap is reached before convergence.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> jacobi_eigenvalues(const Eigen::MatrixBase<Derived>& input,
                                                                             JacobiOptions options = {}) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  using std::sqrt;
  if (input.rows() != input.cols()) throw std::invalid_argument("jacobi_eigenvalues needs a square matrix");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  const Eigen::Index n = a.rows();

  const auto off_norm = [&] {
    Scalar sum(0);
    for (Eigen::Index q = 1; q < n; ++q) {
      for (Eigen::Index p = 0; p < q; ++p) sum += a(p, q) * a(p, q);
    }
    return sqrt(Scalar(2) * sum);
  };
  const Scalar threshold = Scalar(options.tolerance) * std::max(Scalar(1), Scalar(a.norm()));

  int sweep = 0;
  for (; sweep < options.max_sweeps && off_norm() > threshold; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) / (abs(theta) + sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        // A <- J^T A J with J the rotation in the (p, q) plane.
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = Scalar(0);
      }
    }
  }
  if (off_norm() > threshold) throw std::runtime_error("Jacobi iteration did not converge");

  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values = a.diagonal();
  std::sort(values.data(), values.data() + values.size(), std::greater<Scalar>());
  return values;
}

}  // namespace dualswitch
