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

#include <filesystem>
#include <string>
#include <string_view>

#include "cbem/mesh.hpp"

namespace cbem {

/// Parses an ASCII STL document. Facets keep file order and vertex order;
/// the stored facet normals are ignored and recomputed from the winding.
/// Binary STL is rejected.
Mesh parse_stl(std::string_view text);

Mesh read_stl(const std::filesystem::path& path);

/// ASCII STL with round-trip precision coordinates.
std::string format_stl(const Mesh& mesh, std::string_view name = "cbem3d");

}  // namespace cbem
