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

#include <gtest/gtest.h>

#include "cbem/assembly.hpp"
#include "cbem/bar_mesh.hpp"
#include "cbem/error.hpp"
#include "support/fixtures.hpp"

namespace cbem {
namespace {

class AssemblyTest : public ::testing::Test {
 protected:
  Mesh mesh = generate_box_mesh(2.0, 1.0, 3.0, 1, 1, 3);
  MaterialConstants mat = material_constants(1000.0, 0.3);

  std::vector<BoundaryCondition> mixed(const Vec3& fixed, const Vec3& load) const {
    std::vector<BoundaryCondition> bcs;
    for (std::size_t e = 0; e < mesh.size(); ++e) {
      if (testing::on_plane_z(mesh[e], 0.0)) {
        bcs.push_back({e + 1, BcKind::Displacement, fixed});
      } else if (testing::on_plane_z(mesh[e], 3.0)) {
        bcs.push_back({e + 1, BcKind::Traction, load});
      } else {
        bcs.push_back({e + 1, BcKind::Traction, Vec3::Zero()});
      }
    }
    return bcs;
  }
};

TEST_F(AssemblyTest, BlocksFollowBoundaryConditionKind) {
  const auto bcs = mixed(Vec3(0.1, 0.2, 0.3), Vec3(1, 2, 3));
  const DenseSystem sys = assemble_system(mesh, bcs, mat);
  ASSERT_EQ(sys.K.rows(), static_cast<Eigen::Index>(3 * mesh.size()));
  for (std::size_t e : {std::size_t{0}, mesh.size() - 1}) {
    Vec3 rhs = Vec3::Zero();
    for (std::size_t m = 0; m < mesh.size(); ++m) {
      const ElementInfluence infl = element_influence(mesh[e].collocation(), mesh[m], mat);
      const Matrix3 block = sys.K.block<3, 3>(3 * e, 3 * m);
      const Matrix3 half = m == e ? Matrix3(0.5 * Matrix3::Identity()) : Matrix3::Zero();
      if (bcs[m].kind == BcKind::Traction) {
        EXPECT_TRUE(block == infl.T_hat + half);
        rhs += infl.U_hat * bcs[m].value;
      } else {
        EXPECT_TRUE(block == -infl.U_hat);
        rhs -= infl.T_hat * bcs[m].value + half * bcs[m].value;
      }
    }
    EXPECT_LE((sys.F.segment<3>(3 * e) - rhs).norm(), 1e-12 * rhs.norm());
  }
  EXPECT_EQ(sys.unknown_kinds.front(), BcKind::Displacement);
}

// Rigid translation c: displacement elements prescribe c, traction elements
// prescribe zero. Substituting the rigid field into K U - F leaves exactly
// the rigid-body deviation D_e c.
TEST_F(AssemblyTest, RigidTranslationResidualIsDiagnostic) {
  const Vec3 c(0.3, -0.2, 0.5);
  const auto bcs = mixed(c, Vec3::Zero());
  const DenseSystem sys = assemble_system(mesh, bcs, mat);
  Eigen::VectorXd rigid(sys.K.rows());
  for (std::size_t m = 0; m < mesh.size(); ++m) {
    rigid.segment<3>(3 * m) = bcs[m].kind == BcKind::Traction ? c : Vec3::Zero();
  }
  const Eigen::VectorXd residual = sys.K * rigid - sys.F;
  const RigidBodyDiagnostic diag = rigid_body_diagnostic(mesh, mat);
  for (std::size_t e = 0; e < mesh.size(); ++e) {
    const Vec3 expected = diag.deviation[e] * c;
    EXPECT_NEAR((residual.segment<3>(3 * e) - expected).norm(), 0.0, 1e-12);
  }
}

TEST_F(AssemblyTest, ZeroConditionsGiveZeroRightHandSide) {
  const DenseSystem sys = assemble_system(mesh, mixed(Vec3::Zero(), Vec3::Zero()), mat);
  EXPECT_EQ(sys.F.cwiseAbs().maxCoeff(), 0.0);
}

TEST_F(AssemblyTest, RightHandSideIsLinear) {
  const Vec3 u1(0.1, 0, 0.2), t1(1, 2, 3), u2(-0.3, 0.4, 0), t2(0, -5, 7);
  const DenseSystem a = assemble_system(mesh, mixed(u1, t1), mat);
  const DenseSystem b = assemble_system(mesh, mixed(u2, t2), mat);
  const DenseSystem ab = assemble_system(mesh, mixed(2 * u1 + u2, 2 * t1 + t2), mat);
  EXPECT_TRUE(a.K == ab.K);
  EXPECT_LE((2 * a.F + b.F - ab.F).norm(), 1e-12 * ab.F.norm());
}

TEST_F(AssemblyTest, ThreadCountDoesNotChangeBits) {
  const auto bcs = mixed(Vec3(0, 0, 0), Vec3(0, 0, 10));
  const DenseSystem one = assemble_system(mesh, bcs, mat, {.threads = 1});
  const DenseSystem many = assemble_system(mesh, bcs, mat, {.threads = 5});
  EXPECT_TRUE(one.K == many.K);
  EXPECT_TRUE(one.F == many.F);
}

TEST_F(AssemblyTest, RejectsIncompleteOrConflictingConditions) {
  auto bcs = mixed(Vec3::Zero(), Vec3::Zero());
  auto missing = bcs;
  missing.pop_back();
  EXPECT_THROW(assemble_system(mesh, missing, mat), ValidationError);
  auto duplicate = bcs;
  duplicate.push_back(bcs.front());
  EXPECT_THROW(assemble_system(mesh, duplicate, mat), ValidationError);
  auto out_of_range = bcs;
  out_of_range.back().element = mesh.size() + 1;
  EXPECT_THROW(assemble_system(mesh, out_of_range, mat), ValidationError);
  auto non_finite = bcs;
  non_finite[2].value.x() = std::nan("");
  EXPECT_THROW(assemble_system(mesh, non_finite, mat), ValidationError);
}

TEST(Assembly, NeedsAtLeastFourElements) {
  const Mesh tri({TriangleElement(Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0))});
  const std::vector<BoundaryCondition> bcs{{1, BcKind::Displacement, Vec3::Zero()}};
  EXPECT_THROW(assemble_system(tri, bcs, material_constants(1, 0.3)), ValidationError);
}

TEST(OrderedConditions, SortsByElement) {
  const std::vector<BoundaryCondition> bcs{{2, BcKind::Traction, Vec3(1, 0, 0)}, {1, BcKind::Displacement, Vec3::Zero()}};
  const auto ordered = ordered_boundary_conditions(bcs, 2);
  EXPECT_EQ(ordered[0].element, 1u);
  EXPECT_EQ(ordered[1].kind, BcKind::Traction);
}

TEST(ExtractSolution, InterleavesPrescribedAndSolved) {
  const Mesh mesh = generate_box_mesh(1, 1, 1, 1, 1, 1);
  std::vector<BoundaryCondition> bcs;
  for (std::size_t e = 0; e < mesh.size(); ++e) {
    bcs.push_back({e + 1, e % 2 ? BcKind::Traction : BcKind::Displacement, Vec3(double(e), 0, 0)});
  }
  DenseSystem sys;
  for (const auto& bc : bcs) sys.unknown_kinds.push_back(complement(bc.kind));
  Eigen::VectorXd raw = Eigen::VectorXd::LinSpaced(3 * mesh.size(), 0, 3 * mesh.size() - 1);
  const SolutionField f = extract_solution(sys, raw, bcs);
  EXPECT_EQ(f.elements[0].displacement, Vec3(0, 0, 0));
  EXPECT_EQ(f.elements[0].displacement_origin, Origin::Prescribed);
  EXPECT_EQ(f.elements[0].traction, Vec3(0, 1, 2));
  EXPECT_EQ(f.elements[0].traction_origin, Origin::Solved);
  EXPECT_EQ(f.elements[1].displacement, Vec3(3, 4, 5));
  EXPECT_EQ(f.elements[1].traction, Vec3(1, 0, 0));
  EXPECT_THROW(extract_solution(sys, Eigen::VectorXd::Zero(5), bcs), ValidationError);
}

TEST(RigidBodyDiagnostic, SmallOnClosedBarAndLargeOnOpenSurface) {
  const MaterialConstants mat = material_constants(1.0, 0.3);
  const Mesh bar = generate_bar_mesh(4, 4, 100, Resolution::Medium);
  const RigidBodyDiagnostic closed = rigid_body_diagnostic(bar, mat);
  EXPECT_LT(closed.mean_norm, 0.2);
  EXPECT_LE(closed.mean_norm, closed.max_norm);

  std::vector<TriangleElement> half(bar.begin(), bar.begin() + static_cast<std::ptrdiff_t>(bar.size() / 2));
  const RigidBodyDiagnostic open = rigid_body_diagnostic(Mesh(half), mat);
  EXPECT_GT(open.mean_norm, closed.mean_norm);
}

TEST(RigidBodyDiagnostic, IndependentOfYoungsModulus) {
  const Mesh box = generate_box_mesh(1, 1, 2, 1, 1, 2);
  const auto a = rigid_body_diagnostic(box, material_constants(1.0, 0.3));
  const auto b = rigid_body_diagnostic(box, material_constants(7e5, 0.3));
  EXPECT_NEAR(a.mean_norm, b.mean_norm, 1e-14);
}

}  // namespace
}  // namespace cbem
