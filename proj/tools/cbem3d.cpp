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

// Command-line driver: mesh + boundary conditions + material in, boundary
// solution, flat unknown vector and a run report out.
//
// Exit codes: 0 success, 1 invalid input, 2 numerical failure, 3 I/O error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbem/error.hpp"
#include "cbem/run.hpp"

namespace {

enum ExitCode { kOk = 0, kInvalid = 1, kNumerical = 2, kIo = 3 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-element boundary element solver for 3D linear elastostatics"};
  app.set_version_flag("--version", "cbem3d 0.1.0");

  std::string mesh_path, bar_spec, bc_path, out_path, unknowns_path, report_path;
  std::vector<std::string> fixes, loads, interior;
  double E = 0.0, nu = 0.0;
  double tolerance = -1.0;
  unsigned threads = 0;

  auto* mesh_opt = app.add_option("--mesh", mesh_path, "ASCII STL surface, outward winding")->check(CLI::ExistingFile);
  auto* bar_opt = app.add_option("--bar", bar_spec, "built-in bar WxH,L,RES, e.g. 4x4,100,medium");
  mesh_opt->excludes(bar_opt);
  app.add_option("--bc", bc_path, "boundary condition file: <element> <D|T> <vx> <vy> <vz> per line");
  app.add_option("--fix", fixes, "prescribe displacement on a plane: axis=value[:ux,uy,uz]");
  app.add_option("--load", loads, "prescribe traction on a plane: axis=value:tx,ty,tz");
  app.add_option("--tol", tolerance, "plane-matching tolerance (default 1e-6 x mesh diameter)");
  app.add_option("--E", E, "Young's modulus")->required();
  app.add_option("--nu", nu, "Poisson's ratio")->required();
  app.add_option("--out", out_path, "results file (CSV)")->required();
  app.add_option("--unknowns", unknowns_path, "flat unknown vector (default <out>.unknowns)");
  app.add_option("--report", report_path, "run report (default: standard output)");
  app.add_option("--interior", interior, "interior point x,y,z for displacement evaluation");
  app.add_option("--threads", threads, "assembly threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (mesh_path.empty() && bar_spec.empty()) throw cbem::ValidationError("one of --mesh or --bar is required");
    cbem::RunConfig config;
    if (!mesh_path.empty()) {
      config.mesh_source = std::filesystem::path(mesh_path);
    } else {
      config.mesh_source = cbem::parse_bar_spec(bar_spec);
    }
    if (!bc_path.empty()) config.bc_file = bc_path;
    for (const auto& f : fixes) config.predicates.push_back(cbem::parse_predicate(f, cbem::BcKind::Displacement));
    for (const auto& l : loads) config.predicates.push_back(cbem::parse_predicate(l, cbem::BcKind::Traction));
    if (tolerance >= 0.0) {
      for (auto& p : config.predicates) p.tolerance = tolerance;
    }
    for (const auto& p : interior) config.interior_points.push_back(cbem::parse_point(p));
    config.E = E;
    config.nu = nu;
    config.output_path = out_path;
    if (!unknowns_path.empty()) config.unknowns_path = unknowns_path;
    if (!report_path.empty()) config.report_path = report_path;
    config.threads = threads;

    const cbem::RunOutcome outcome = cbem::run(config);
    if (report_path.empty()) std::cout << cbem::format_report(config, outcome);
    if (outcome.solve.unconstrained) {
      std::cerr << "cbem3d: warning: no displacement prescribed; the solution is not unique\n";
    } else if (outcome.solve.ill_conditioned) {
      std::cerr << "cbem3d: warning: system is ill-conditioned\n";
    }
    return kOk;
  } catch (const cbem::IoError& e) {
    std::cerr << "cbem3d: I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const cbem::SingularSystemError& e) {
    std::cerr << "cbem3d: numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const cbem::SingularityError& e) {
    std::cerr << "cbem3d: numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const cbem::Error& e) {
    std::cerr << "cbem3d: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "cbem3d: unexpected error: " << e.what() << '\n';
    return kNumerical;
  }
}
