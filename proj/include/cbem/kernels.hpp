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

#include "cbem/mesh.hpp"

namespace cbem {

/// Isotropic material and the constants of the Kelvin fundamental solution.
struct MaterialConstants {
  double E;   ///< Young's modulus
  double nu;  ///< Poisson's ratio, 0 < nu < 0.5
  double G;   ///< shear modulus E / (2 (1 + nu))
  double C;   ///< 1 / (16 pi G (1 - nu))
  double C1;  ///< 3 - 4 nu
  double C2;  ///< 1 / (8 pi (1 - nu))
  double C3;  ///< 1 - 2 nu
  int n = 2;  ///< spatial exponent of the traction kernel; the expanded kernels hard-code n + 1 = 3
};

/// Throws DomainError unless E > 0 and 0 < nu < 0.5.
MaterialConstants material_constants(double E, double nu);

/// Distance quantities shared by both kernels. `dr` holds dr/dx, dr/dy,
/// dr/dz, i.e. the unit vector from source to field point.
struct Separation {
  double r;
  Vec3 dr;
  double cos_theta;  ///< dr . field normal
};

/// Below this distance (absolute) the kernels refuse to evaluate.
inline constexpr double kMinSeparation = 1e-30;

Separation separation(const Vec3& source, const Vec3& field, const Vec3& field_normal);

/// Displacement kernel U and traction kernel T of a unit point load at
/// `source`, observed at `field` on a surface with unit normal `field_normal`.
struct KernelPair {
  Matrix3 U;
  Matrix3 T;

  static KernelPair Zero() { return {Matrix3::Zero(), Matrix3::Zero()}; }
  KernelPair& operator+=(const KernelPair& o) {
    U += o.U;
    T += o.T;
    return *this;
  }
  friend KernelPair operator*(const KernelPair& k, double s) { return {k.U * s, k.T * s}; }
};

/// Throws SingularityError when source and field coincide.
KernelPair kernel_eval(const Vec3& source, const Vec3& field, const Vec3& field_normal,
                       const MaterialConstants& mat);

}  // namespace cbem
