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

#include "cbem/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>
#include <fmt/format.h>

#include "cbem/error.hpp"

namespace cbem {

SolveResult solve_dense(const DenseSystem& system) {
  const auto start = std::chrono::steady_clock::now();
  const Eigen::MatrixXd& K = system.K;
  if (K.rows() != K.cols() || K.rows() != system.F.size()) {
    throw ValidationError(fmt::format("system shape mismatch: K is {}x{}, F has {} entries", K.rows(),
                                      K.cols(), system.F.size()));
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(K);
  const auto pivots = lu.matrixLU().diagonal();
  for (Eigen::Index i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == 0.0) {
      throw SingularSystemError(fmt::format(
          "zero pivot in column {} (is any displacement prescribed? a floating body is singular)", i));
    }
  }

  SolveResult result;
  result.solution = lu.solve(system.F);
  if (!result.solution.allFinite()) throw SingularSystemError("non-finite solution");

  SolveReport& report = result.report;
  const double f_norm = system.F.norm();
  report.residual_norm =
      (K * result.solution - system.F).norm() / std::max(f_norm, std::numeric_limits<double>::min());
  const double rcond = lu.rcond();
  if (std::isfinite(rcond) && rcond > 0.0) report.condition_estimate = 1.0 / rcond;
  report.unconstrained =
      !system.unknown_kinds.empty() &&
      std::all_of(system.unknown_kinds.begin(), system.unknown_kinds.end(),
                  [](BcKind k) { return k == BcKind::Displacement; });
  report.ill_conditioned = !(rcond >= kIllConditionedRcond) || report.unconstrained;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

Vec3 evaluate_interior(const Vec3& point, const Mesh& mesh, const SolutionField& field,
                       const MaterialConstants& mat) {
  if (field.elements.size() != mesh.size()) {
    throw ValidationError(fmt::format("field has {} elements, mesh has {}", field.elements.size(), mesh.size()));
  }
  Vec3 u = Vec3::Zero();
  for (std::size_t m = 0; m < mesh.size(); ++m) {
    ElementInfluence infl;
    try {
      infl = element_influence(point, mesh[m], mat);
    } catch (const SingularityError&) {
      throw ValidationError(fmt::format("interior point ({}, {}, {}) coincides with a quadrature node of element {}",
                                        point.x(), point.y(), point.z(), m + 1));
    }
    const ElementSolution& s = field.elements[m];
    u += infl.U_hat * s.traction - infl.T_hat * s.displacement;
  }
  return u;
}

}  // namespace cbem
