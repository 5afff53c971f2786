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

#include "cbem/mesh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include <Eigen/Geometry>

#include "cbem/error.hpp"

namespace cbem {

namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

bool below_degeneracy(double jac, double diameter) {
  return !(jac > 0.0 && jac >= kDegeneracyRatio * diameter * diameter);
}

}  // namespace

double triangle_diameter(const Vec3& a, const Vec3& b, const Vec3& c) {
  return std::max({(a - b).norm(), (b - c).norm(), (c - a).norm()});
}

Vec3 unit_normal(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double nx = (b.y() - a.y()) * (c.z() - a.z()) - (b.z() - a.z()) * (c.y() - a.y());
  const double ny = (b.z() - a.z()) * (c.x() - a.x()) - (b.x() - a.x()) * (c.z() - a.z());
  const double nz = (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
  const double d = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (below_degeneracy(d, triangle_diameter(a, b, c))) {
    throw DegenerateElementError("collinear vertices, normal undefined");
  }
  return {nx / d, ny / d, nz / d};
}

double jacobian(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double alpha = (a - b).norm();
  const double beta = (b - c).norm();
  const double gamma = (c - a).norm();
  // Heron's product rearranged for sides sorted l0 >= l1 >= l2; keeps the
  // radicand accurate for needle-shaped triangles.
  std::array<double, 3> l{alpha, beta, gamma};
  std::sort(l.begin(), l.end(), std::greater<>());
  const double radicand = (l[0] + (l[1] + l[2])) * (l[2] - (l[0] - l[1])) *
                          (l[2] + (l[0] - l[1])) * (l[0] + (l[1] - l[2]));
  const double jac = 0.5 * std::sqrt(std::max(radicand, 0.0));
  if (below_degeneracy(jac, l[0])) {
    throw DegenerateElementError("zero-area triangle");
  }
  return jac;
}

TriangleElement::TriangleElement(const Vec3& a, const Vec3& b, const Vec3& c)
    : a_(a), b_(b), c_(c) {
  if (!a.allFinite() || !b.allFinite() || !c.allFinite()) {
    throw DegenerateElementError("non-finite vertex coordinate");
  }
  jacobian_ = cbem::jacobian(a, b, c);
  normal_ = unit_normal(a, b, c);
  diameter_ = triangle_diameter(a, b, c);
  collocation_ = map_param_to_point(*this, 0.25, 0.5);
}

Vec3 map_param_to_point(const TriangleElement& elem, double u, double v) {
  const Vec3& a = elem.a();
  const Vec3& b = elem.b();
  const Vec3& c = elem.c();
  const Vec3& n = elem.normal();
  Vec3 p;
  if (std::abs(n.z()) >= kInvSqrt3) {
    p.x() = (b.x() - a.x()) * u + (c.x() - a.x()) * v + a.x();
    p.y() = (b.y() - a.y()) * u + (c.y() - a.y()) * v + a.y();
    p.z() = -(n.x() * (p.x() - a.x()) + n.y() * (p.y() - a.y())) / n.z() + a.z();
  } else if (std::abs(n.y()) >= kInvSqrt3) {
    p.x() = (b.x() - a.x()) * u + (c.x() - a.x()) * v + a.x();
    p.z() = (b.z() - a.z()) * u + (c.z() - a.z()) * v + a.z();
    p.y() = -(n.x() * (p.x() - a.x()) + n.z() * (p.z() - a.z())) / n.y() + a.y();
  } else {
    p.y() = (b.y() - a.y()) * u + (c.y() - a.y()) * v + a.y();
    p.z() = (b.z() - a.z()) * u + (c.z() - a.z()) * v + a.z();
    p.x() = -(n.y() * (p.y() - a.y()) + n.z() * (p.z() - a.z())) / n.x() + a.x();
  }
  return p;
}

Vec3 collocation_point(const TriangleElement& elem) { return elem.collocation(); }

double Mesh::diameter() const {
  if (elements_.empty()) return 0.0;
  Vec3 lo = elements_.front().a();
  Vec3 hi = lo;
  for (const auto& e : elements_) {
    for (const Vec3* p : {&e.a(), &e.b(), &e.c()}) {
      lo = lo.cwiseMin(*p);
      hi = hi.cwiseMax(*p);
    }
  }
  return (hi - lo).norm();
}

double Mesh::signed_volume() const {
  double six_volume = 0.0;
  for (const auto& e : elements_) six_volume += e.a().dot(e.b().cross(e.c()));
  return six_volume / 6.0;
}

bool Mesh::is_closed_and_consistent() const {
  using Key = std::array<double, 6>;
  std::map<Key, int> directed;
  auto key = [](const Vec3& p, const Vec3& q) {
    return Key{p.x(), p.y(), p.z(), q.x(), q.y(), q.z()};
  };
  for (const auto& e : elements_) {
    for (auto [p, q] : {std::pair{&e.a(), &e.b()}, {&e.b(), &e.c()}, {&e.c(), &e.a()}}) {
      if (++directed[key(*p, *q)] > 1) return false;
    }
  }
  for (const auto& [k, count] : directed) {
    const Key reverse{k[3], k[4], k[5], k[0], k[1], k[2]};
    if (directed.find(reverse) == directed.end()) return false;
  }
  return true;
}

}  // namespace cbem
