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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cbem/assembly.hpp"
#include "cbem/mesh.hpp"

namespace cbem {

/// Parses `<element> <D|T> <vx> <vy> <vz>` lines; `#` starts a comment.
/// Indices are checked against `element_count` and for duplicates, with the
/// offending line number in the error. Coverage is not required here.
std::vector<BoundaryCondition> parse_bc_file(std::string_view text, std::size_t element_count);

enum class Axis { X, Y, Z };

/// Boundary value applied to a whole element.
struct BcPayload {
  BcKind kind;
  Vec3 value;
};

/// Selects elements whose three vertices all lie on the plane axis = value.
struct PlanarPredicate {
  Axis axis;
  double value;
  std::optional<double> tolerance;  ///< default: 1e-6 * mesh diameter
  BcPayload payload;
};

bool matches(const PlanarPredicate& p, const TriangleElement& elem, double tolerance);

/// One BC per element: predicate payload where exactly one predicate
/// matches, `fallback` where none does. Throws ValidationError listing the
/// elements matched by more than one predicate.
std::vector<BoundaryCondition> tag_elements(const Mesh& mesh, std::span<const PlanarPredicate> predicates,
                                            const BcPayload& fallback);

}  // namespace cbem
