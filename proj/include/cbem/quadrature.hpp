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

#include <array>
#include <type_traits>

#include "cbem/mesh.hpp"

namespace cbem {

/// One node of the triangle rule. (t, v) live on the unit square; u = t (1 - v)
/// collapses the square onto the unit triangle.
struct QuadraturePoint {
  double t;
  double v;
  double u;
  double weight;
};

inline constexpr std::size_t kQuadratureOrder = 16;
using QuadratureRule = std::array<QuadraturePoint, kQuadratureOrder>;

/// Two-point Gauss-Legendre on each half of [0,1] in both t and v: nodes
/// 1/4 +- 1/(4 sqrt 3) and 3/4 +- 1/(4 sqrt 3), weight 1/16 each.
const QuadratureRule& quadrature_rule();

namespace detail {
template <class R>
R zero_like() {
  if constexpr (std::is_arithmetic_v<R>) {
    return R{0};
  } else {
    return R::Zero();
  }
}
}  // namespace detail

/// Integrates `f(point)` over the element surface:
///   sum_k weight_k (1 - v_k) f(x_k) J
/// with x_k the node mapped through map_param_to_point. Nodes are visited in
/// rule order, so results are bitwise reproducible. The value type must
/// support `+=` and multiplication by a double.
template <class F>
auto integrate_over_element(F&& f, const TriangleElement& elem) {
  using R = std::decay_t<decltype(f(std::declval<const Vec3&>()))>;
  R acc = detail::zero_like<R>();
  for (const QuadraturePoint& q : quadrature_rule()) {
    acc += f(map_param_to_point(elem, q.u, q.v)) * (q.weight * (1.0 - q.v));
  }
  return R(acc * elem.jacobian());
}

}  // namespace cbem
