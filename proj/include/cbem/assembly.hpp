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

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "cbem/kernels.hpp"
#include "cbem/mesh.hpp"

namespace cbem {

/// Which vector quantity of an element is known. The other one is solved for.
enum class BcKind { Displacement, Traction };

inline BcKind complement(BcKind k) {
  return k == BcKind::Displacement ? BcKind::Traction : BcKind::Displacement;
}
std::string_view to_string(BcKind k);

/// Prescribed displacement or traction, all three components jointly.
struct BoundaryCondition {
  std::size_t element;  ///< 1-based
  BcKind kind;
  Vec3 value;
};

/// Checks that `bcs` covers elements 1..element_count exactly once and
/// returns them ordered by element. Throws ValidationError naming the
/// offending element.
std::vector<BoundaryCondition> ordered_boundary_conditions(std::span<const BoundaryCondition> bcs,
                                                           std::size_t element_count);

/// K u = F. Block e (0-based) spans rows/columns 3e..3e+2 in x, y, z order.
struct DenseSystem {
  Eigen::MatrixXd K;
  Eigen::VectorXd F;
  std::vector<BcKind> unknown_kinds;  ///< quantity held in each element's three slots

  std::size_t element_count() const noexcept { return unknown_kinds.size(); }
};

/// Integrated kernels of element m seen from a source point.
struct ElementInfluence {
  Matrix3 U_hat;
  Matrix3 T_hat;
};

ElementInfluence element_influence(const Vec3& source, const TriangleElement& elem,
                                   const MaterialConstants& mat);

struct AssemblyOptions {
  unsigned threads = 0;  ///< 0 picks std::thread::hardware_concurrency()
};

/// Collocates the boundary identity 1/2 u(P_e) = sum_m (U_hat t_m - T_hat u_m)
/// at every element and moves the unknowns to the left-hand side.
DenseSystem assemble_system(const Mesh& mesh, std::span<const BoundaryCondition> bcs,
                            const MaterialConstants& mat, const AssemblyOptions& options = {});

enum class Origin { Prescribed, Solved };

struct ElementSolution {
  Vec3 displacement;
  Vec3 traction;
  Origin displacement_origin;
  Origin traction_origin;
};

struct SolutionField {
  std::vector<ElementSolution> elements;
};

SolutionField extract_solution(const DenseSystem& system, const Eigen::VectorXd& raw_solution,
                               std::span<const BoundaryCondition> bcs);

/// Per-collocation-point deviation D_e = I/2 + sum_m T_hat(e, m). Exact
/// integration over a closed surface gives D_e = 0: a rigid
/// translation carries no traction.
struct RigidBodyDiagnostic {
  std::vector<Matrix3> deviation;
  double max_norm = 0.0;   ///< max_e |D_e|_F
  double mean_norm = 0.0;  ///< mean_e |D_e|_F
};

RigidBodyDiagnostic rigid_body_diagnostic(const Mesh& mesh, const MaterialConstants& mat,
                                          const AssemblyOptions& options = {});

}  // namespace cbem
