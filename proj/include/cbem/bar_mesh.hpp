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

#include <string_view>

#include "cbem/mesh.hpp"

namespace cbem {

enum class Resolution { Coarse, Medium, High };

/// "coarse", "medium" or "high"; throws ValidationError otherwise.
Resolution parse_resolution(std::string_view name);
std::string_view to_string(Resolution r);

/// Closed, outward-wound triangulation of the box [0,W]x[0,H]x[0,L].
///
/// Facet order: the four lateral faces (y=0, x=W, y=H, x=0), then the z=0
/// end, then the z=L end. Cross-section divisions (width x height) are 1x1,
/// 1x2 and 2x2 for coarse / medium / high; the slice count follows from the
/// length. A 4x4x100 bar yields 60 / 188 / 384 facets.
Mesh generate_bar_mesh(double width, double height, double length, Resolution resolution);

/// Box triangulation with explicit divisions along x, y and z, two
/// triangles per lattice cell, same facet order as generate_bar_mesh.
Mesh generate_box_mesh(double width, double height, double length, int nx, int ny, int nz);

}  // namespace cbem
