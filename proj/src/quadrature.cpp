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

#include "cbem/quadrature.hpp"

#include <cmath>

namespace cbem {

namespace {

QuadratureRule build_rule() {
  const double h = 1.0 / (4.0 * std::sqrt(3.0));
  const double lo_p = 0.25 + h, lo_m = 0.25 - h;
  const double hi_p = 0.75 + h, hi_m = 0.75 - h;
  // (t, v) pairs in tabulated order: v-pairs sweep the lower half first.
  const std::array<std::array<double, 2>, kQuadratureOrder> tv{{
      {lo_p, lo_p}, {lo_p, lo_m}, {lo_m, lo_p}, {lo_m, lo_m},
      {hi_p, lo_p}, {hi_p, lo_m}, {hi_m, lo_p}, {hi_m, lo_m},
      {hi_p, hi_p}, {hi_p, hi_m}, {hi_m, hi_p}, {hi_m, hi_m},
      {lo_p, hi_p}, {lo_p, hi_m}, {lo_m, hi_p}, {lo_m, hi_m},
  }};
  QuadratureRule rule{};
  for (std::size_t k = 0; k < kQuadratureOrder; ++k) {
    const double t = tv[k][0];
    const double v = tv[k][1];
    rule[k] = {t, v, t * (1.0 - v), 1.0 / 16.0};
  }
  return rule;
}

}  // namespace

const QuadratureRule& quadrature_rule() {
  static const QuadratureRule rule = build_rule();
  return rule;
}

}  // namespace cbem
