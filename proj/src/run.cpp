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

#include "cbem/run.hpp"

#include <optional>

#include <fmt/format.h>

#include "cbem/error.hpp"
#include "cbem/stl.hpp"
#include "text.hpp"

namespace cbem {

namespace {

using Clock = std::chrono::steady_clock;

std::filesystem::path unknowns_path(const RunConfig& config) {
  if (config.unknowns_path) return *config.unknowns_path;
  std::filesystem::path p = config.output_path;
  p += ".unknowns";
  return p;
}

}  // namespace

BarSpec parse_bar_spec(std::string_view text) {
  const auto bad = [&] {
    return ValidationError(fmt::format("invalid bar spec '{}' (expected WxH,L,RES such as 4x4,100,medium)", text));
  };
  const auto x = text.find('x');
  const auto c1 = text.find(',');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
  if (x == std::string_view::npos || c1 == std::string_view::npos || c2 == std::string_view::npos || x > c1) {
    throw bad();
  }
  const auto w = parse_double(text.substr(0, x));
  const auto h = parse_double(text.substr(x + 1, c1 - x - 1));
  const auto l = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
  if (!w || !h || !l || *w <= 0 || *h <= 0 || *l <= 0) throw bad();
  return {*w, *h, *l, parse_resolution(text.substr(c2 + 1))};
}

namespace {

std::optional<Vec3> parse_triple(std::string_view text) {
  Vec3 v;
  for (int i = 0; i < 3; ++i) {
    const auto comma = text.find(',');
    if ((comma == std::string_view::npos) != (i == 2)) return std::nullopt;
    const auto value = parse_double(text.substr(0, comma));
    if (!value) return std::nullopt;
    v[i] = *value;
    if (comma != std::string_view::npos) text.remove_prefix(comma + 1);
  }
  return v;
}

}  // namespace

PlanarPredicate parse_predicate(std::string_view text, BcKind kind) {
  const auto bad = [&](std::string_view why) {
    return ValidationError(fmt::format("invalid predicate '{}': {}", text, why));
  };
  const auto eq = text.find('=');
  if (eq != 1) throw bad("expected axis=value");
  Axis axis;
  switch (text[0]) {
    case 'x': case 'X': axis = Axis::X; break;
    case 'y': case 'Y': axis = Axis::Y; break;
    case 'z': case 'Z': axis = Axis::Z; break;
    default: throw bad("axis must be x, y or z");
  }
  const auto colon = text.find(':');
  const auto value = parse_double(text.substr(eq + 1, colon == std::string_view::npos ? colon : colon - eq - 1));
  if (!value) throw bad("plane coordinate is not a number");
  Vec3 payload = Vec3::Zero();
  if (colon != std::string_view::npos) {
    const auto v = parse_triple(text.substr(colon + 1));
    if (!v) throw bad("expected three comma-separated components after ':'");
    payload = *v;
  } else if (kind == BcKind::Traction) {
    throw bad("traction predicates need ':tx,ty,tz'");
  }
  return {axis, *value, std::nullopt, {kind, payload}};
}

Vec3 parse_point(std::string_view text) {
  const auto v = parse_triple(text);
  if (!v) throw ValidationError(fmt::format("invalid point '{}' (expected x,y,z)", text));
  return *v;
}

Mesh load_mesh(const RunConfig& config) {
  if (const auto* path = std::get_if<std::filesystem::path>(&config.mesh_source)) {
    return read_stl(*path);
  }
  const auto& bar = std::get<BarSpec>(config.mesh_source);
  return generate_bar_mesh(bar.width, bar.height, bar.length, bar.resolution);
}

std::vector<BoundaryCondition> resolve_boundary_conditions(const Mesh& mesh, const RunConfig& config) {
  if (!config.bc_file && config.predicates.empty()) {
    throw ValidationError("no boundary conditions given (need a BC file or at least one predicate)");
  }
  std::vector<BoundaryCondition> bcs;
  if (!config.predicates.empty()) bcs = tag_elements(mesh, config.predicates, config.fallback);
  if (config.bc_file) {
    const auto from_file = parse_bc_file(read_text_file(*config.bc_file), mesh.size());
    if (bcs.empty()) {
      bcs = from_file;
    } else {
      for (const auto& bc : from_file) bcs[bc.element - 1] = bc;
    }
  }
  return ordered_boundary_conditions(bcs, mesh.size());
}

RunOutcome solve_problem(const RunConfig& config) {
  const auto t0 = Clock::now();
  const MaterialConstants mat = material_constants(config.E, config.nu);
  RunOutcome out;
  out.mesh = load_mesh(config);
  out.bcs = resolve_boundary_conditions(out.mesh, config);
  const auto t1 = Clock::now();

  const AssemblyOptions options{config.threads};
  const DenseSystem system = assemble_system(out.mesh, out.bcs, mat, options);
  const auto t2 = Clock::now();

  SolveResult solved = solve_dense(system);
  out.unknowns = std::move(solved.solution);
  out.solve = solved.report;
  out.field = extract_solution(system, out.unknowns, out.bcs);
  const auto t3 = Clock::now();

  out.diagnostic = rigid_body_diagnostic(out.mesh, mat, options);
  const auto t4 = Clock::now();

  for (const Vec3& p : config.interior_points) {
    out.interior_displacements.push_back(evaluate_interior(p, out.mesh, out.field, mat));
  }
  const auto t5 = Clock::now();

  out.timings = {t1 - t0, t2 - t1, t3 - t2, t4 - t3, t5 - t4, t5 - t0};
  return out;
}

std::string format_results(const RunOutcome& outcome) {
  std::string text = "index,solved_kind,sx,sy,sz,prescribed_kind,px,py,pz\n";
  for (std::size_t e = 0; e < outcome.bcs.size(); ++e) {
    const BoundaryCondition& bc = outcome.bcs[e];
    const ElementSolution& s = outcome.field.elements[e];
    const Vec3& solved = bc.kind == BcKind::Displacement ? s.traction : s.displacement;
    text += fmt::format("{},{},{:.17g},{:.17g},{:.17g},{},{:.17g},{:.17g},{:.17g}\n", e + 1,
                        to_string(complement(bc.kind)), solved.x(), solved.y(), solved.z(),
                        to_string(bc.kind), bc.value.x(), bc.value.y(), bc.value.z());
  }
  return text;
}

std::string format_unknowns(const RunOutcome& outcome) {
  std::string text;
  text.reserve(static_cast<std::size_t>(outcome.unknowns.size()) * 25);
  for (double v : outcome.unknowns) text += fmt::format("{:.17g}\n", v);
  return text;
}

std::string format_report(const RunConfig& config, const RunOutcome& outcome) {
  std::size_t displacement_count = 0;
  for (const auto& bc : outcome.bcs) displacement_count += bc.kind == BcKind::Displacement;
  std::string r = "cbem3d run report\n";
  if (const auto* bar = std::get_if<BarSpec>(&config.mesh_source)) {
    r += fmt::format("mesh: built-in bar {:.6g}x{:.6g}x{:.6g} ({})\n", bar->width, bar->height, bar->length,
                     to_string(bar->resolution));
  } else {
    r += fmt::format("mesh: {}\n", std::get<std::filesystem::path>(config.mesh_source).string());
  }
  r += fmt::format("elements: {}\n", outcome.mesh.size());
  r += fmt::format("unknowns: {}\n", outcome.unknowns.size());
  r += fmt::format("displacement-prescribed elements: {}\n", displacement_count);
  r += fmt::format("traction-prescribed elements: {}\n", outcome.bcs.size() - displacement_count);
  r += fmt::format("material: E = {:.6g}, nu = {:.6g}\n", config.E, config.nu);
  r += fmt::format("relative residual: {:.6g}\n", outcome.solve.residual_norm);
  if (outcome.solve.condition_estimate) {
    r += fmt::format("condition estimate (1-norm): {:.6g}{}\n", *outcome.solve.condition_estimate,
                     outcome.solve.ill_conditioned ? " (ill-conditioned)" : "");
  } else {
    r += "condition estimate (1-norm): unavailable\n";
  }
  if (outcome.solve.unconstrained) {
    r += "warning: no displacement prescribed; rigid-body motion is undetermined and the solution is not unique\n";
  }
  r += fmt::format("rigid-body deviation |D_e|_F: max {:.6g}, mean {:.6g}\n", outcome.diagnostic.max_norm,
                   outcome.diagnostic.mean_norm);
  if (!config.interior_points.empty()) {
    r += "interior displacements:\n";
    for (std::size_t i = 0; i < config.interior_points.size(); ++i) {
      const Vec3& p = config.interior_points[i];
      const Vec3& u = outcome.interior_displacements[i];
      r += fmt::format("  ({:.6g}, {:.6g}, {:.6g}): ({:.6g}, {:.6g}, {:.6g})\n", p.x(), p.y(), p.z(), u.x(),
                       u.y(), u.z());
    }
  }
  const RunTimings& t = outcome.timings;
  r += fmt::format("timings [s]: mesh {:.6g}, assembly {:.6g}, solve {:.6g}, diagnostic {:.6g}, interior {:.6g}, total {:.6g}\n",
                   t.mesh.count(), t.assembly.count(), t.solve.count(), t.diagnostic.count(), t.interior.count(),
                   t.total.count());
  return r;
}

RunOutcome run(const RunConfig& config) {
  RunOutcome outcome = solve_problem(config);
  std::vector<OutputFile> files{{config.output_path, format_results(outcome)},
                                {unknowns_path(config), format_unknowns(outcome)}};
  if (config.report_path) files.push_back({*config.report_path, format_report(config, outcome)});
  write_text_files(files);
  return outcome;
}

}  // namespace cbem
