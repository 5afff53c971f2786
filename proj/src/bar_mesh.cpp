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

#include "cbem/bar_mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cbem/error.hpp"

namespace cbem {

namespace {

struct Density {
  int nx, ny;     // divisions along the width and height
  double aspect;  // target slice length / smaller cross-section cell edge
};

Density density(Resolution r) {
  switch (r) {
    case Resolution::Coarse: return {1, 1, 4.0};
    case Resolution::Medium: return {1, 2, 3.4};
    case Resolution::High: return {2, 2, 2.2};
  }
  return {1, 1, 1.0};
}

std::vector<double> lattice(double extent, int divisions) {
  std::vector<double> xs(static_cast<std::size_t>(divisions) + 1);
  for (int i = 0; i <= divisions; ++i) xs[static_cast<std::size_t>(i)] = extent * i / divisions;
  return xs;
}

}  // namespace

Resolution parse_resolution(std::string_view name) {
  if (name == "coarse") return Resolution::Coarse;
  if (name == "medium") return Resolution::Medium;
  if (name == "high") return Resolution::High;
  throw ValidationError("unknown resolution '" + std::string(name) + "' (coarse|medium|high)");
}

std::string_view to_string(Resolution r) {
  switch (r) {
    case Resolution::Coarse: return "coarse";
    case Resolution::Medium: return "medium";
    case Resolution::High: return "high";
  }
  return "?";
}

Mesh generate_bar_mesh(double width, double height, double length, Resolution resolution) {
  if (!(width > 0.0 && height > 0.0 && length > 0.0) ||
      !std::isfinite(width * height * length)) {
    throw ValidationError("bar dimensions must be positive and finite");
  }
  const Density d = density(resolution);
  const double cell = std::min(width / d.nx, height / d.ny);
  const int nz = std::max(1, static_cast<int>(std::ceil(length / (d.aspect * cell) - 1e-9)));
  return generate_box_mesh(width, height, length, d.nx, d.ny, nz);
}

Mesh generate_box_mesh(double width, double height, double length, int nx, int ny, int nz) {
  if (!(width > 0.0 && height > 0.0 && length > 0.0) ||
      !std::isfinite(width * height * length)) {
    throw ValidationError("box dimensions must be positive and finite");
  }
  if (nx < 1 || ny < 1 || nz < 1) throw ValidationError("box divisions must be at least 1");

  const auto xs = lattice(width, nx);
  const auto ys = lattice(height, ny);
  const auto zs = lattice(length, nz);

  // Lattice points are addressed by integer index so shared vertices are
  // bitwise identical across faces.
  struct Index { int i, j, k; };
  auto point = [&](Index p) {
    return Vec3(xs[static_cast<std::size_t>(p.i)], ys[static_cast<std::size_t>(p.j)],
                zs[static_cast<std::size_t>(p.k)]);
  };

  std::vector<TriangleElement> elements;
  // Rectangular patch from `origin`, stepping `du` n_u times and `dv` n_v
  // times; du x dv must point outwards.
  auto patch = [&](Index origin, Index du, int n_u, Index dv, int n_v) {
    auto at = [&](int s, int t) {
      return point({origin.i + s * du.i + t * dv.i, origin.j + s * du.j + t * dv.j,
                    origin.k + s * du.k + t * dv.k});
    };
    for (int t = 0; t < n_v; ++t) {
      for (int s = 0; s < n_u; ++s) {
        elements.emplace_back(at(s, t), at(s + 1, t), at(s + 1, t + 1));
        elements.emplace_back(at(s, t), at(s + 1, t + 1), at(s, t + 1));
      }
    }
  };

  patch({0, 0, 0}, {1, 0, 0}, nx, {0, 0, 1}, nz);     // y = 0
  patch({nx, 0, 0}, {0, 1, 0}, ny, {0, 0, 1}, nz);    // x = W
  patch({nx, ny, 0}, {-1, 0, 0}, nx, {0, 0, 1}, nz);  // y = H
  patch({0, ny, 0}, {0, -1, 0}, ny, {0, 0, 1}, nz);   // x = 0
  patch({0, 0, 0}, {0, 1, 0}, ny, {1, 0, 0}, nx);     // z = 0
  patch({0, 0, nz}, {1, 0, 0}, nx, {0, 1, 0}, ny);    // z = L
  return Mesh(std::move(elements));
}

}  // namespace cbem
