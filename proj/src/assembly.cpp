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

#include "cbem/assembly.hpp"

#include <optional>
#include <string>

#include <fmt/format.h>

#include "cbem/error.hpp"
#include "cbem/quadrature.hpp"
#include "parallel.hpp"

namespace cbem {

std::string_view to_string(BcKind k) {
  return k == BcKind::Displacement ? "displacement" : "traction";
}

std::vector<BoundaryCondition> ordered_boundary_conditions(std::span<const BoundaryCondition> bcs,
                                                           std::size_t element_count) {
  std::vector<std::optional<BoundaryCondition>> slots(element_count);
  for (const auto& bc : bcs) {
    if (bc.element < 1 || bc.element > element_count) {
      throw ValidationError(fmt::format("boundary condition for element {} is outside 1..{}",
                                        bc.element, element_count));
    }
    if (!bc.value.allFinite()) {
      throw ValidationError(fmt::format("element {}: non-finite boundary value", bc.element));
    }
    auto& slot = slots[bc.element - 1];
    if (slot) throw ValidationError(fmt::format("element {} has more than one boundary condition", bc.element));
    slot = bc;
  }
  std::vector<BoundaryCondition> ordered;
  ordered.reserve(element_count);
  for (std::size_t i = 0; i < element_count; ++i) {
    if (!slots[i]) throw ValidationError(fmt::format("element {} has no boundary condition", i + 1));
    ordered.push_back(*slots[i]);
  }
  return ordered;
}

ElementInfluence element_influence(const Vec3& source, const TriangleElement& elem,
                                   const MaterialConstants& mat) {
  const Vec3& normal = elem.normal();
  const KernelPair k = integrate_over_element(
      [&](const Vec3& field) { return kernel_eval(source, field, normal, mat); }, elem);
  return {k.U, k.T};
}

DenseSystem assemble_system(const Mesh& mesh, std::span<const BoundaryCondition> bcs,
                            const MaterialConstants& mat, const AssemblyOptions& options) {
  const std::size_t count = mesh.size();
  if (count < 4) {
    throw ValidationError(fmt::format("a closed surface needs at least 4 elements, mesh has {}", count));
  }
  const auto ordered = ordered_boundary_conditions(bcs, count);
  const auto n = static_cast<Eigen::Index>(3 * count);

  DenseSystem sys;
  sys.K.resize(n, n);
  sys.F.resize(n);
  sys.unknown_kinds.reserve(count);
  for (const auto& bc : ordered) sys.unknown_kinds.push_back(complement(bc.kind));

  const Matrix3 half = 0.5 * Matrix3::Identity();
  parallel_for(count, options.threads, [&](std::size_t e) {
    const Vec3& source = mesh[e].collocation();
    const auto row = static_cast<Eigen::Index>(3 * e);
    Vec3 rhs = Vec3::Zero();
    for (std::size_t m = 0; m < count; ++m) {
      const auto col = static_cast<Eigen::Index>(3 * m);
      const ElementInfluence infl = element_influence(source, mesh[m], mat);
      const BoundaryCondition& bc = ordered[m];
      if (bc.kind == BcKind::Traction) {
        // u_m unknown, t_m known
        Matrix3 block = infl.T_hat;
        if (m == e) block += half;
        sys.K.block<3, 3>(row, col) = block;
        rhs += infl.U_hat * bc.value;
      } else {
        // t_m unknown, u_m known
        sys.K.block<3, 3>(row, col) = -infl.U_hat;
        rhs -= infl.T_hat * bc.value;
        if (m == e) rhs -= half * bc.value;
      }
    }
    sys.F.segment<3>(row) = rhs;
  });
  return sys;
}

SolutionField extract_solution(const DenseSystem& system, const Eigen::VectorXd& raw_solution,
                               std::span<const BoundaryCondition> bcs) {
  const std::size_t count = system.element_count();
  if (static_cast<std::size_t>(raw_solution.size()) != 3 * count) {
    throw ValidationError(fmt::format("solution has {} entries, expected {}", raw_solution.size(), 3 * count));
  }
  const auto ordered = ordered_boundary_conditions(bcs, count);
  SolutionField field;
  field.elements.reserve(count);
  for (std::size_t e = 0; e < count; ++e) {
    const Vec3 solved = raw_solution.segment<3>(static_cast<Eigen::Index>(3 * e));
    const BoundaryCondition& bc = ordered[e];
    if (bc.kind == BcKind::Displacement) {
      field.elements.push_back({bc.value, solved, Origin::Prescribed, Origin::Solved});
    } else {
      field.elements.push_back({solved, bc.value, Origin::Solved, Origin::Prescribed});
    }
  }
  return field;
}

RigidBodyDiagnostic rigid_body_diagnostic(const Mesh& mesh, const MaterialConstants& mat,
                                          const AssemblyOptions& options) {
  const std::size_t count = mesh.size();
  RigidBodyDiagnostic diag;
  diag.deviation.assign(count, Matrix3::Zero());
  parallel_for(count, options.threads, [&](std::size_t e) {
    Matrix3 d = 0.5 * Matrix3::Identity();
    for (std::size_t m = 0; m < count; ++m) {
      d += element_influence(mesh[e].collocation(), mesh[m], mat).T_hat;
    }
    diag.deviation[e] = d;
  });
  double sum = 0.0;
  for (const Matrix3& d : diag.deviation) {
    const double norm = d.norm();
    diag.max_norm = std::max(diag.max_norm, norm);
    sum += norm;
  }
  diag.mean_norm = count == 0 ? 0.0 : sum / static_cast<double>(count);
  return diag;
}

}  // namespace cbem
