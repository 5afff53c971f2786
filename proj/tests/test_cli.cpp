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

// End-to-end checks of the command-line driver and its exit codes.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("cbem_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  int cli(const std::string& args) const {
    const std::string cmd = std::string(CBEM_CLI_PATH) + " " + args + " >" + (dir / "stdout.txt").string() + " 2>" +
                            (dir / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(dir / name, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string out(const std::string& name = "out.csv") const { return (dir / name).string(); }

  fs::path dir;
};

constexpr const char* kBarArgs = "--bar 4x4,100,coarse --fix z=0 --load z=100:0,0,10000 --E 200000 --nu 0.33";

TEST_F(CliTest, BarBenchmark) {
  ASSERT_EQ(cli(std::string(kBarArgs) + " --out " + out() + " --interior 2,2,50"), 0) << read("stderr.txt");
  EXPECT_TRUE(fs::exists(dir / "out.csv"));
  EXPECT_TRUE(fs::exists(dir / "out.csv.unknowns"));
  const std::string report = read("stdout.txt");
  EXPECT_NE(report.find("elements: 60"), std::string::npos);
  EXPECT_NE(report.find("(2, 2, 50)"), std::string::npos);
}

TEST_F(CliTest, ExplicitPaths) {
  ASSERT_EQ(cli(std::string(kBarArgs) + " --out " + out() + " --unknowns " + out("u.txt") + " --report " +
                out("r.txt") + " --threads 2"),
            0);
  EXPECT_TRUE(fs::exists(dir / "u.txt"));
  EXPECT_NE(read("r.txt").find("cbem3d run report"), std::string::npos);
  EXPECT_TRUE(read("stdout.txt").empty());
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  ASSERT_EQ(cli(std::string(kBarArgs) + " --out " + out("a.csv") + " --threads 1"), 0);
  ASSERT_EQ(cli(std::string(kBarArgs) + " --out " + out("b.csv") + " --threads 3"), 0);
  EXPECT_EQ(read("a.csv"), read("b.csv"));
  EXPECT_EQ(read("a.csv.unknowns"), read("b.csv.unknowns"));
}

TEST_F(CliTest, ValidationErrorsExitOne) {
  EXPECT_EQ(cli("--bar 4x4,100,coarse --fix z=0 --E 200000 --nu 0.5 --out " + out()), 1);
  EXPECT_NE(read("stderr.txt").find("Poisson"), std::string::npos);
  EXPECT_EQ(cli("--bar 4x4,100,coarse --E 200000 --nu 0.3 --out " + out()), 1);
  EXPECT_EQ(cli("--bar 4x4,100 --fix z=0 --E 200000 --nu 0.3 --out " + out()), 1);
  EXPECT_EQ(cli("--fix z=0 --E 200000 --nu 0.3 --out " + out()), 1);
  EXPECT_EQ(cli("--bar 4x4,100,coarse --fix z=0 --E 1 --nu 0.3"), 1);
  EXPECT_EQ(cli("--bar 4x4,100,coarse --fix q=0 --E 1 --nu 0.3 --out " + out()), 1);
  EXPECT_FALSE(fs::exists(dir / "out.csv"));
}

TEST_F(CliTest, BadBcFileExitsOneWithLine) {
  std::ofstream(dir / "bc.txt") << "1 D 0 0 0\n2 Q 0 0 0\n";
  EXPECT_EQ(cli("--bar 4x4,100,coarse --bc " + out("bc.txt") + " --E 1 --nu 0.3 --out " + out()), 1);
  EXPECT_NE(read("stderr.txt").find("line 2"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir / "out.csv"));
}

TEST_F(CliTest, DegenerateFacetExitsOne) {
  std::ofstream(dir / "bad.stl") << "solid s\nfacet normal 0 0 1\nouter loop\nvertex 0 0 0\nvertex 1 1 1\n"
                                    "vertex 2 2 2\nendloop\nendfacet\nendsolid s\n";
  EXPECT_EQ(cli("--mesh " + out("bad.stl") + " --fix z=0 --E 1 --nu 0.3 --out " + out()), 1);
  EXPECT_NE(read("stderr.txt").find("element 1"), std::string::npos);
}

TEST_F(CliTest, SingularSystemExitsTwo) {
  // Duplicated facet with prescribed displacement: two identical columns.
  std::ofstream stl(dir / "dup.stl");
  stl << "solid d\n";
  const char* tris[][3] = {{"0 0 0", "1 0 0", "0 1 0"}, {"0 0 0", "1 0 0", "0 1 0"}, {"0 0 0", "0 0 1", "1 0 0"},
                           {"0 0 0", "0 1 0", "0 0 1"}, {"1 0 0", "0 0 1", "0 1 0"}};
  for (const auto& t : tris) {
    stl << "facet normal 0 0 0\nouter loop\n";
    for (const char* v : t) stl << "vertex " << v << "\n";
    stl << "endloop\nendfacet\n";
  }
  stl << "endsolid d\n";
  stl.close();
  EXPECT_EQ(cli("--mesh " + out("dup.stl") + " --fix z=0 --E 1 --nu 0.3 --out " + out()), 2);
  EXPECT_FALSE(fs::exists(dir / "out.csv"));
}

TEST_F(CliTest, UnwritableOutputExitsThree) {
  EXPECT_EQ(cli(std::string(kBarArgs) + " --out " + out("missing/dir/out.csv")), 3);
}

TEST_F(CliTest, PureTractionWarns) {
  EXPECT_EQ(cli("--bar 4x4,100,coarse --load z=0:0,0,-1 --load z=100:0,0,1 --E 1 --nu 0.3 --out " + out()), 0);
  EXPECT_NE(read("stderr.txt").find("not unique"), std::string::npos);
}

TEST_F(CliTest, HelpAndVersion) {
  EXPECT_EQ(cli("--help"), 0);
  EXPECT_NE(read("stdout.txt").find("--bar"), std::string::npos);
  EXPECT_EQ(cli("--version"), 0);
}

}  // namespace
