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

// Shared fixtures: random geometry and the built-in bar benchmark.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cbem/assembly.hpp"
#include "cbem/bar_mesh.hpp"
#include "cbem/kernels.hpp"
#include "cbem/mesh.hpp"

namespace cbem::testing {

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  Vec3 point(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }
  Vec3 direction() {
    std::normal_distribution<double> g;
    return Vec3(g(engine_), g(engine_), g(engine_)).normalized();
  }
  /// Proper rotation, uniformly distributed (unit quaternion).
  Matrix3 rotation() {
    std::normal_distribution<double> g;
    Eigen::Quaterniond q(g(engine_), g(engine_), g(engine_), g(engine_));
    return q.normalized().toRotationMatrix();
  }
  /// Random triangle inside [lo, hi]^3 whose smallest angle is at least
  /// `min_angle_deg`.
  TriangleElement triangle(double lo, double hi, double min_angle_deg = 5.0) {
    for (;;) {
      const Vec3 a = point(lo, hi), b = point(lo, hi), c = point(lo, hi);
      if (min_angle(a, b, c) >= min_angle_deg) return TriangleElement(a, b, c);
    }
  }

  static double min_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
    auto angle = [](const Vec3& p, const Vec3& q, const Vec3& r) {
      return std::acos(std::clamp((q - p).normalized().dot((r - p).normalized()), -1.0, 1.0)) * 180.0 / std::numbers::pi;
    };
    return std::min({angle(a, b, c), angle(b, c, a), angle(c, a, b)});
  }

 private:
  std::mt19937_64 engine_;
};

/// Closest point on triangle (a, b, c) to p (Voronoi-region walk).
inline Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 ab = b - a, ac = c - a, ap = p - a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0 && d2 <= 0) return a;
  const Vec3 bp = p - b;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0 && d4 <= d3) return b;
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) return a + d1 / (d1 - d3) * ab;
  const Vec3 cp = p - c;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0 && d5 <= d6) return c;
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) return a + d2 / (d2 - d6) * ac;
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0) return b + (d4 - d3) / ((d4 - d3) + (d5 - d6)) * (c - b);
  const double denom = 1.0 / (va + vb + vc);
  return a + ab * (vb * denom) + ac * (vc * denom);
}

inline double distance_to_triangle(const Vec3& p, const TriangleElement& e) {
  return (p - closest_point_on_triangle(p, e.a(), e.b(), e.c())).norm();
}

/// Point at distance exactly `separation` from the triangle, on the ray
/// from its centroid along `dir`.
inline Vec3 source_at_separation(const TriangleElement& e, const Vec3& dir, double separation) {
  double lo = 0.0, hi = separation + e.diameter();
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (distance_to_triangle(e.centroid() + mid * dir, e) < separation ? lo : hi) = mid;
  }
  return e.centroid() + hi * dir;
}

inline constexpr double kBarWidth = 4.0, kBarHeight = 4.0, kBarLength = 100.0;
inline constexpr double kBarE = 200000.0, kBarNu = 0.33, kBarLoad = 10000.0;

inline bool on_plane_z(const TriangleElement& e, double z) {
  return e.a().z() == z && e.b().z() == z && e.c().z() == z;
}

/// Fixed z = 0 end, axial traction on z = L, free lateral faces.
inline std::vector<BoundaryCondition> bar_conditions(const Mesh& mesh, double load = kBarLoad) {
  std::vector<BoundaryCondition> bcs;
  for (std::size_t e = 0; e < mesh.size(); ++e) {
    if (on_plane_z(mesh[e], 0.0)) {
      bcs.push_back({e + 1, BcKind::Displacement, Vec3::Zero()});
    } else if (on_plane_z(mesh[e], kBarLength)) {
      bcs.push_back({e + 1, BcKind::Traction, Vec3(0, 0, load)});
    } else {
      bcs.push_back({e + 1, BcKind::Traction, Vec3::Zero()});
    }
  }
  return bcs;
}

}  // namespace cbem::testing
