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

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace cbem {

using Vec3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

/// Triangles whose Jacobian falls below this multiple of diameter^2 are degenerate.
inline constexpr double kDegeneracyRatio = 1e-14;

/// Unit normal of the triangle (a, b, c); counter-clockwise winding points it
/// towards the viewer. Throws DegenerateElementError for collinear vertices.
Vec3 unit_normal(const Vec3& a, const Vec3& b, const Vec3& c);

/// Twice the triangle area, from the three edge lengths (Heron).
double jacobian(const Vec3& a, const Vec3& b, const Vec3& c);

/// Longest edge.
double triangle_diameter(const Vec3& a, const Vec3& b, const Vec3& c);

/// A flat triangular constant boundary element.
///
/// The vertex order defines the outward direction. Normal, Jacobian and the
/// collocation point are computed once at construction; a degenerate
/// triangle cannot be constructed.
class TriangleElement {
 public:
  TriangleElement(const Vec3& a, const Vec3& b, const Vec3& c);

  const Vec3& a() const noexcept { return a_; }
  const Vec3& b() const noexcept { return b_; }
  const Vec3& c() const noexcept { return c_; }
  const Vec3& normal() const noexcept { return normal_; }
  double jacobian() const noexcept { return jacobian_; }
  double area() const noexcept { return 0.5 * jacobian_; }
  double diameter() const noexcept { return diameter_; }
  const Vec3& collocation() const noexcept { return collocation_; }
  Vec3 centroid() const { return (a_ + b_ + c_) / 3.0; }

 private:
  Vec3 a_, b_, c_;
  Vec3 normal_;
  double jacobian_;
  double diameter_;
  Vec3 collocation_;
};

/// Maps parametric (u, v), u, v >= 0, u + v <= 1, onto the element plane.
///
/// Two coordinates come from the affine map; the third is recovered from the
/// plane equation, solving for the coordinate along which the normal is
/// largest (|n_z| >= 1/sqrt(3) first, then |n_y|, else x).
Vec3 map_param_to_point(const TriangleElement& elem, double u, double v);

/// Parametric point (1/4, 1/2), i.e. barycentric (1/4, 1/4, 1/2) over (a, b, c).
Vec3 collocation_point(const TriangleElement& elem);

/// Ordered set of boundary elements. Element i (0-based here) is element
/// i + 1 in every external file.
class Mesh {
 public:
  Mesh() = default;
  explicit Mesh(std::vector<TriangleElement> elements) : elements_(std::move(elements)) {}

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const TriangleElement& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const TriangleElement> elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  /// Diagonal of the axis-aligned bounding box.
  double diameter() const;

  /// Enclosed volume by the divergence theorem; positive for outward winding.
  double signed_volume() const;

  /// Every edge is shared by exactly two facets, traversed in opposite
  /// directions. Vertices are matched by exact coordinates.
  bool is_closed_and_consistent() const;

 private:
  std::vector<TriangleElement> elements_;
};

}  // namespace cbem
