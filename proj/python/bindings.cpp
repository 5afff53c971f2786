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

#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cbem/assembly.hpp"
#include "cbem/bar_mesh.hpp"
#include "cbem/error.hpp"
#include "cbem/kernels.hpp"
#include "cbem/solver.hpp"
#include "cbem/stl.hpp"

namespace py = pybind11;
using namespace cbem;

namespace {

using Triangles = py::array_t<double, py::array::c_style | py::array::forcecast>;

Mesh mesh_from_array(const Triangles& tris) {
  if (tris.ndim() != 3 || tris.shape(1) != 3 || tris.shape(2) != 3) {
    throw py::value_error("triangles must have shape (n, 3, 3)");
  }
  const auto t = tris.unchecked<3>();
  std::vector<TriangleElement> elements;
  elements.reserve(static_cast<std::size_t>(t.shape(0)));
  for (py::ssize_t i = 0; i < t.shape(0); ++i) {
    auto v = [&](py::ssize_t k) { return Vec3(t(i, k, 0), t(i, k, 1), t(i, k, 2)); };
    try {
      elements.emplace_back(v(0), v(1), v(2));
    } catch (const DegenerateElementError& e) {
      throw DegenerateElementError(e.what(), static_cast<std::size_t>(i) + 1);
    }
  }
  return Mesh(std::move(elements));
}

py::array_t<double> vertices(const Mesh& mesh) {
  py::array_t<double> out({static_cast<py::ssize_t>(mesh.size()), py::ssize_t{3}, py::ssize_t{3}});
  auto o = out.mutable_unchecked<3>();
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const Vec3* p[] = {&mesh[i].a(), &mesh[i].b(), &mesh[i].c()};
    for (int k = 0; k < 3; ++k) {
      for (int d = 0; d < 3; ++d) o(static_cast<py::ssize_t>(i), k, d) = (*p[k])[d];
    }
  }
  return out;
}

template <class F>
Eigen::MatrixX3d per_element(const Mesh& mesh, F&& f) {
  Eigen::MatrixX3d out(static_cast<Eigen::Index>(mesh.size()), 3);
  for (std::size_t i = 0; i < mesh.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = f(mesh[i]).transpose();
  return out;
}

py::dict solve(const Mesh& mesh, const std::vector<BcKind>& kinds, const Eigen::MatrixX3d& values, double E, double nu,
               const std::vector<Vec3>& interior, unsigned threads) {
  if (kinds.size() != mesh.size() || static_cast<std::size_t>(values.rows()) != mesh.size()) {
    throw ValidationError("need one boundary condition kind and value row per element");
  }
  std::vector<BoundaryCondition> bcs;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    bcs.push_back({i + 1, kinds[i], values.row(static_cast<Eigen::Index>(i)).transpose()});
  }
  SolutionField field;
  SolveReport report;
  std::vector<Vec3> interior_u;
  {
    py::gil_scoped_release release;
    const MaterialConstants mat = material_constants(E, nu);
    const DenseSystem sys = assemble_system(mesh, bcs, mat, {threads});
    SolveResult result = solve_dense(sys);
    field = extract_solution(sys, result.solution, bcs);
    report = result.report;
    for (const Vec3& p : interior) interior_u.push_back(evaluate_interior(p, mesh, field, mat));
  }
  Eigen::MatrixX3d u(static_cast<Eigen::Index>(mesh.size()), 3), t(static_cast<Eigen::Index>(mesh.size()), 3);
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    u.row(static_cast<Eigen::Index>(i)) = field.elements[i].displacement.transpose();
    t.row(static_cast<Eigen::Index>(i)) = field.elements[i].traction.transpose();
  }
  Eigen::MatrixX3d ui(static_cast<Eigen::Index>(interior_u.size()), 3);
  for (std::size_t i = 0; i < interior_u.size(); ++i) ui.row(static_cast<Eigen::Index>(i)) = interior_u[i].transpose();
  py::dict out;
  out["displacement"] = u;
  out["traction"] = t;
  out["interior_displacement"] = ui;
  out["residual"] = report.residual_norm;
  out["condition_estimate"] = report.condition_estimate ? py::cast(*report.condition_estimate) : py::none();
  out["ill_conditioned"] = report.ill_conditioned;
  out["unconstrained"] = report.unconstrained;
  return out;
}

}  // namespace

PYBIND11_MODULE(_cbem3d, m) {
  m.doc() = "Constant-element boundary element solver for 3D linear elastostatics";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<DegenerateElementError>(m, "DegenerateElementError", error);
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<SingularityError>(m, "SingularityError", error);
  py::register_exception<ValidationError>(m, "ValidationError", error);
  py::register_exception<SingularSystemError>(m, "SingularSystemError", error);
  py::register_exception<IoError>(m, "IoError", error);

  py::enum_<BcKind>(m, "BcKind")
      .value("DISPLACEMENT", BcKind::Displacement)
      .value("TRACTION", BcKind::Traction);

  py::class_<MaterialConstants>(m, "MaterialConstants")
      .def_readonly("E", &MaterialConstants::E)
      .def_readonly("nu", &MaterialConstants::nu)
      .def_readonly("G", &MaterialConstants::G)
      .def_readonly("C", &MaterialConstants::C)
      .def_readonly("C1", &MaterialConstants::C1)
      .def_readonly("C2", &MaterialConstants::C2)
      .def_readonly("C3", &MaterialConstants::C3)
      .def("__repr__", [](const MaterialConstants& c) {
        return "MaterialConstants(E=" + std::to_string(c.E) + ", nu=" + std::to_string(c.nu) + ")";
      });
  m.def("material_constants", &material_constants, py::arg("E"), py::arg("nu"));

  m.def(
      "kernel_eval",
      [](const Vec3& source, const Vec3& field, const Vec3& normal, const MaterialConstants& mat) {
        const KernelPair k = kernel_eval(source, field, normal, mat);
        return py::make_tuple(Matrix3(k.U), Matrix3(k.T));
      },
      py::arg("source"), py::arg("field"), py::arg("normal"), py::arg("material"),
      "Displacement and traction kernels (U, T) as 3x3 arrays.");

  m.def(
      "element_influence",
      [](const Vec3& source, const Matrix3& triangle, const MaterialConstants& mat) {
        const TriangleElement e(triangle.row(0).transpose(), triangle.row(1).transpose(), triangle.row(2).transpose());
        const ElementInfluence infl = element_influence(source, e, mat);
        return py::make_tuple(infl.U_hat, infl.T_hat);
      },
      py::arg("source"), py::arg("triangle"), py::arg("material"),
      "Integrated kernels (U_hat, T_hat) of one triangle, rows of `triangle` being its vertices.");

  py::class_<Mesh>(m, "Mesh")
      .def(py::init(&mesh_from_array), py::arg("triangles"), "From an (n, 3, 3) array of outward-wound triangles.")
      .def("__len__", &Mesh::size)
      .def_property_readonly("vertices", &vertices)
      .def_property_readonly("normals", [](const Mesh& mm) { return per_element(mm, [](const auto& e) { return e.normal(); }); })
      .def_property_readonly("collocation_points",
                             [](const Mesh& mm) { return per_element(mm, [](const auto& e) { return e.collocation(); }); })
      .def_property_readonly("areas",
                             [](const Mesh& mm) {
                               Eigen::VectorXd a(static_cast<Eigen::Index>(mm.size()));
                               for (std::size_t i = 0; i < mm.size(); ++i) a[static_cast<Eigen::Index>(i)] = mm[i].area();
                               return a;
                             })
      .def_property_readonly("diameter", &Mesh::diameter)
      .def_property_readonly("signed_volume", &Mesh::signed_volume)
      .def("is_closed_and_consistent", &Mesh::is_closed_and_consistent);

  m.def(
      "bar_mesh",
      [](double w, double h, double l, const std::string& res) { return generate_bar_mesh(w, h, l, parse_resolution(res)); },
      py::arg("width"), py::arg("height"), py::arg("length"), py::arg("resolution") = "medium");
  m.def("box_mesh", &generate_box_mesh, py::arg("width"), py::arg("height"), py::arg("length"), py::arg("nx"),
        py::arg("ny"), py::arg("nz"));
  m.def("parse_stl", [](const std::string& text) { return parse_stl(text); }, py::arg("text"));
  m.def("read_stl", [](const std::string& path) { return read_stl(path); }, py::arg("path"));
  m.def("format_stl", [](const Mesh& mesh, const std::string& name) { return format_stl(mesh, name); },
        py::arg("mesh"), py::arg("name") = "cbem3d");

  m.def("_solve", &solve, py::arg("mesh"), py::arg("kinds"), py::arg("values"), py::arg("E"), py::arg("nu"),
        py::arg("interior") = std::vector<Vec3>{}, py::arg("threads") = 0u);

  m.def(
      "rigid_body_diagnostic",
      [](const Mesh& mesh, double E, double nu) {
        RigidBodyDiagnostic d;
        {
          py::gil_scoped_release release;
          d = rigid_body_diagnostic(mesh, material_constants(E, nu));
        }
        py::array_t<double> dev({static_cast<py::ssize_t>(mesh.size()), py::ssize_t{3}, py::ssize_t{3}});
        auto o = dev.mutable_unchecked<3>();
        for (std::size_t i = 0; i < d.deviation.size(); ++i) {
          for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) o(static_cast<py::ssize_t>(i), r, c) = d.deviation[i](r, c);
          }
        }
        py::dict out;
        out["deviation"] = dev;
        out["max_norm"] = d.max_norm;
        out["mean_norm"] = d.mean_norm;
        return out;
      },
      py::arg("mesh"), py::arg("E"), py::arg("nu"));
}
