// Copyright 2026 The cbem3d Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <optional>

#include <Eigen/Core>

#include "cbem/assembly.hpp"

namespace cbem {

/// Reciprocal condition estimates below this mark a system as ill-conditioned.
inline constexpr double kIllConditionedRcond = 1e-12;

struct SolveReport {
  double residual_norm = 0.0;                 ///< |K x - F|_2 / max(|F|_2, tiny)
  std::optional<double> condition_estimate;   ///< 1-norm estimate of cond(K)
  /// No displacement is prescribed anywhere: rigid-body motion is
  /// undetermined even when the discrete matrix is invertible.
  bool unconstrained = false;
  /// rcond below kIllConditionedRcond, or unconstrained.
  bool ill_conditioned = false;
  std::chrono::duration<double> elapsed{};
};

struct SolveResult {
  Eigen::VectorXd solution;
  SolveReport report;
};

/// LU factorization with partial pivoting. Throws SingularSystemError on an
/// exactly zero pivot or a non-finite solution.
SolveResult solve_dense(const DenseSystem& system);

/// Displacement at a point strictly inside the solid:
///   u(p) = sum_m (U_hat(p, m) t_m - T_hat(p, m) u_m).
/// Containment is not checked.
Vec3 evaluate_interior(const Vec3& point, const Mesh& mesh, const SolutionField& field,
                       const MaterialConstants& mat);

}  // namespace cbem
