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

#include "cbem/kernels.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "cbem/error.hpp"

namespace cbem {

MaterialConstants material_constants(double E, double nu) {
  if (!(E > 0.0) || !std::isfinite(E)) {
    throw DomainError(fmt::format("Young's modulus must be positive and finite, got {}", E));
  }
  if (!(nu > 0.0 && nu < 0.5)) {
    throw DomainError(fmt::format("Poisson's ratio must lie in (0, 0.5), got {}", nu));
  }
  constexpr double pi = std::numbers::pi;
  MaterialConstants m{};
  m.E = E;
  m.nu = nu;
  m.G = E / (2.0 * (1.0 + nu));
  m.C = 1.0 / (16.0 * pi * m.G * (1.0 - nu));
  m.C1 = 3.0 - 4.0 * nu;
  m.C2 = 1.0 / (8.0 * pi * (1.0 - nu));
  m.C3 = 1.0 - 2.0 * nu;
  m.n = 2;
  return m;
}

Separation separation(const Vec3& source, const Vec3& field, const Vec3& field_normal) {
  const double dx = field.x() - source.x();
  const double dy = field.y() - source.y();
  const double dz = field.z() - source.z();
  const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
  if (!(r >= kMinSeparation)) {
    throw SingularityError(fmt::format(
        "kernel evaluated at coincident points ({}, {}, {})", field.x(), field.y(), field.z()));
  }
  Separation s;
  s.r = r;
  s.dr = {dx / r, dy / r, dz / r};
  s.cos_theta = (dx * field_normal.x() + dy * field_normal.y() + dz * field_normal.z()) / r;
  return s;
}

KernelPair kernel_eval(const Vec3& source, const Vec3& field, const Vec3& field_normal,
                       const MaterialConstants& mat) {
  const Separation s = separation(source, field, field_normal);
  const Vec3& d = s.dr;
  const Vec3& n = field_normal;
  const double c_r = mat.C / s.r;
  const double t_r = -mat.C2 / (s.r * s.r);

  KernelPair k;
  for (int i = 0; i < 3; ++i) {
    k.U(i, i) = c_r * (mat.C1 + d[i] * d[i]);
    k.T(i, i) = t_r * ((mat.C3 + 3.0 * d[i] * d[i]) * s.cos_theta);
    for (int j = i + 1; j < 3; ++j) {
      const double u = c_r * d[i] * d[j];
      k.U(i, j) = u;
      k.U(j, i) = u;
      k.T(i, j) = t_r * (3.0 * d[i] * d[j] * s.cos_theta - mat.C3 * (n[j] * d[i] - n[i] * d[j]));
      k.T(j, i) = t_r * (3.0 * d[j] * d[i] * s.cos_theta - mat.C3 * (n[i] * d[j] - n[j] * d[i]));
    }
  }
  return k;
}

}  // namespace cbem
