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
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cbem/assembly.hpp"
#include "cbem/bar_mesh.hpp"
#include "cbem/boundary.hpp"
#include "cbem/solver.hpp"

namespace cbem {

/// Built-in prismatic bar, see generate_bar_mesh.
struct BarSpec {
  double width;
  double height;
  double length;
  Resolution resolution;
};

/// "WxH,L,RES", e.g. "4x4,100,medium".
BarSpec parse_bar_spec(std::string_view text);

/// "axis=value[:vx,vy,vz]", e.g. "z=0" or "z=100:0,0,10000". The vector is
/// required for traction predicates and defaults to zero for displacement.
PlanarPredicate parse_predicate(std::string_view text, BcKind kind);

/// "x,y,z".
Vec3 parse_point(std::string_view text);

struct RunConfig {
  std::variant<std::filesystem::path, BarSpec> mesh_source;
  std::optional<std::filesystem::path> bc_file;
  std::vector<PlanarPredicate> predicates;
  BcPayload fallback{BcKind::Traction, Vec3::Zero()};
  double E = 0.0;
  double nu = 0.0;
  std::filesystem::path output_path;
  std::optional<std::filesystem::path> unknowns_path;  ///< default: output_path + ".unknowns"
  std::optional<std::filesystem::path> report_path;
  std::vector<Vec3> interior_points;
  unsigned threads = 0;
};

struct RunTimings {
  std::chrono::duration<double> mesh{}, assembly{}, solve{}, diagnostic{}, interior{}, total{};
};

struct RunOutcome {
  Mesh mesh;
  std::vector<BoundaryCondition> bcs;  ///< ordered by element
  SolutionField field;
  Eigen::VectorXd unknowns;
  SolveReport solve;
  RigidBodyDiagnostic diagnostic;
  std::vector<Vec3> interior_displacements;
  RunTimings timings;
};

Mesh load_mesh(const RunConfig& config);

/// BC file entries override predicate tagging; predicates and the fallback
/// apply only when at least one predicate is given. Either way every element
/// must end up with exactly one condition.
std::vector<BoundaryCondition> resolve_boundary_conditions(const Mesh& mesh, const RunConfig& config);

/// Whole pipeline without touching output files.
RunOutcome solve_problem(const RunConfig& config);

/// One line per element: index,solved_kind,sx,sy,sz,prescribed_kind,px,py,pz.
std::string format_results(const RunOutcome& outcome);

/// 3T lines, the unknown vector in element-major x, y, z order.
std::string format_unknowns(const RunOutcome& outcome);

std::string format_report(const RunConfig& config, const RunOutcome& outcome);

/// solve_problem, then writes results, unknowns and (if requested) the
/// report. Nothing is written when any stage fails.
RunOutcome run(const RunConfig& config);

}  // namespace cbem
