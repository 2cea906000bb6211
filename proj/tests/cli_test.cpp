// Copyright 2026 The tropscat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace tropscat::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tropscat_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) const {
    auto p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  int call(std::vector<std::string> args) {
    args.insert(args.begin(), "tropscat");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

const char* kTwoPoint = R"({"fan": [[1,0],[0,1],[-1,-1]], "points": [["0","0"],["-1","2"]], "seed": 1})";
const char* kOnePoint = R"({"fan": "P2", "points": [["0/1","0/1"]]})";

TEST_F(CliTest, DiagramRoundTripIsByteIdentical) {
  auto cfg = file("two.json", kTwoPoint);
  ASSERT_EQ(call({"diagram", "--config", cfg, "--json", path("d.json"), "--svg", path("d.svg")}), kOk);
  ASSERT_EQ(call({"render", "--input", path("d.json"), "--json", path("d2.json"), "--svg", path("r.svg")}), kOk);
  EXPECT_EQ(slurp(path("d.json")), slurp(path("d2.json")));
  EXPECT_EQ(slurp(path("d.svg")), slurp(path("r.svg")));
}

TEST_F(CliTest, SvgContents) {
  auto one = file("one.json", kOnePoint);
  ASSERT_EQ(call({"diagram", "--config", one, "--svg", path("one.svg")}), kOk);
  std::string svg = slurp(path("one.svg"));
  std::size_t lines = 0;
  for (auto pos = svg.find("<g id=\"walls\""); (pos = svg.find("<line", pos + 1)) < svg.find("</g>");) ++lines;
  EXPECT_EQ(lines, 3u);
  EXPECT_EQ(svg.find("<path"), std::string::npos);  // no joints
  EXPECT_NE(svg.find("z^{e_a} u1"), std::string::npos);

  auto empty = file("empty.json", R"({"fan": "P2", "points": []})");
  ASSERT_EQ(call({"diagram", "--config", empty, "--svg", path("empty.svg")}), kOk);
  std::string e = slurp(path("empty.svg"));
  EXPECT_NE(e.find("<g id=\"fan\""), std::string::npos);
  EXPECT_EQ(e.find("<circle"), std::string::npos);

  auto two = file("two.json", kTwoPoint);
  ASSERT_EQ(call({"diagram", "--config", two, "--svg", path("two.svg")}), kOk);
  std::string t = slurp(path("two.svg"));
  // The scattered wall starts at the joint (-1, 0).
  EXPECT_NE(t.find("x1=\"-1.0000\" y1=\"0.0000\""), std::string::npos);
  EXPECT_NE(t.find("<path"), std::string::npos);
  // Deterministic.
  ASSERT_EQ(call({"diagram", "--config", two, "--svg", path("two_again.svg")}), kOk);
  EXPECT_EQ(t, slurp(path("two_again.svg")));
}

TEST_F(CliTest, Potential) {
  ASSERT_EQ(call({"potential", "--q", "1,1"}), kOk);
  Json j = Json::parse(out_.str());
  EXPECT_EQ(j[0]["terms"].size(), 3u);

  auto one = file("one.json", kOnePoint);
  ASSERT_EQ(call({"potential", "--config", one, "--q", "-1,-2"}), kOk);
  j = Json::parse(out_.str());
  ASSERT_EQ(j[0]["terms"].size(), 4u);
  bool found = false;
  for (const auto& t : j[0]["terms"])
    found = found || (t["m"] == Json::array({1, 1, 0}) && t["marks"] == Json::array({1}) && t["coeff"] == "1/1");
  EXPECT_TRUE(found);

  EXPECT_EQ(call({"potential", "--config", one, "--q", "-3/2,0"}), kNonGeneric);
  Json e = Json::parse(err_.str());
  EXPECT_EQ(e["error"], "NonGenericQuery");
}

TEST_F(CliTest, Verify) {
  auto two = file("two.json", kTwoPoint);
  EXPECT_EQ(call({"verify", "--config", two, "--json", path("report.json")}), kOk);
  Json report = Json::parse(slurp(path("report.json")));
  EXPECT_EQ(report["pass"], true);
  EXPECT_EQ(report["joints"].size(), 1u);
  EXPECT_EQ(report["wall_crossing"].size(), 20u);
  EXPECT_FALSE(report["oracle"].empty());

  // Dropping the scattered wall (index 8 in tree order) must be detected.
  EXPECT_EQ(call({"verify", "--config", two, "--drop-wall", "8"}), kVerificationFailed);
  EXPECT_NE(out_.str().find("FAIL joint"), std::string::npos);

  auto empty = file("empty.json", R"({"fan": "P2", "points": []})");
  EXPECT_EQ(call({"verify", "--config", empty, "--json", path("r0.json")}), kOk);
  Json r0 = Json::parse(slurp(path("r0.json")));
  EXPECT_TRUE(r0["joints"].empty());
  EXPECT_EQ(r0["pass"], true);
}

TEST_F(CliTest, OracleCompare) {
  auto two = file("two.json", kTwoPoint);
  EXPECT_EQ(call({"oracle-compare", "--config", two}), kOk);
  EXPECT_EQ(out_.str().find("FAIL"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({}), kUsage);
  EXPECT_EQ(call({"frobnicate"}), kUsage);
  EXPECT_EQ(call({"diagram", "--config", path("missing.json")}), kUsage);
  auto bad_fan = file("bad.json", R"({"fan": [[2,0],[0,1],[-1,-1]]})");
  EXPECT_EQ(call({"diagram", "--config", bad_fan}), kUsage);
  EXPECT_NE(err_.str().find("use (1,0)"), std::string::npos);
  auto unsorted = file("unsorted.json", R"({"fan": [[1,0],[-1,-1],[0,1]]})");
  EXPECT_EQ(call({"diagram", "--config", unsorted}), kUsage);
  EXPECT_NE(Json::parse(err_.str())["error"], nullptr);
  auto bad_point = file("badpt.json", R"({"points": [["1.5","0"]]})");
  EXPECT_EQ(call({"diagram", "--config", bad_point}), kUsage);
  auto unknown = file("unknown.json", R"({"pointz": []})");
  EXPECT_EQ(call({"diagram", "--config", unknown}), kUsage);
}

TEST_F(CliTest, NonGenericConfiguration) {
  auto cfg = file("ng.json", R"({"points": [["0","0"],["-3","0"]]})");
  EXPECT_EQ(call({"diagram", "--config", cfg}), kNonGeneric);
  Json e = Json::parse(err_.str());
  EXPECT_EQ(e["error"], "NonGenericConfiguration");
  const std::string message = e["message"].get<std::string>();
  EXPECT_NE(message.find("J(L:a, M:1)"), std::string::npos);
  EXPECT_NE(message.find(", 0/1)"), std::string::npos);
}

TEST_F(CliTest, ConfigParsing) {
  Config c = parse_config(Json::parse(
      R"({"fan": "F1", "points": [["1/2", "-3"], "2/3,4"], "queries": [["0", "5"]],
          "pairs": [[["1","2"],["3","4"]]], "seed": 7, "pair_count": 3})"));
  EXPECT_EQ(c.fan, hirzebruch_f1_fan());
  ASSERT_EQ(c.points.size(), 2u);
  EXPECT_EQ(c.points[0], Point(Scalar(1, 2), Scalar(-3)));
  EXPECT_EQ(c.points[1], Point(Scalar(2, 3), Scalar(4)));
  EXPECT_EQ(c.pairs.size(), 1u);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.pair_count, 3);
  Config p = parse_config(Json::parse(R"({"points": [["0","0"]], "perturb_seed": 4})"));
  EXPECT_NE(p.points[0], Point(0, 0));
  EXPECT_EQ(parse_point(" -1/2 , 3 "), Point(Scalar(-1, 2), Scalar(3)));
}

TEST(ClippingBox, PaddingAndMinimum) {
  Diagram none{projective_plane_fan(), {}, {}, {}};
  Box b = clipping_box(none);
  EXPECT_EQ(b.xmax - b.xmin, 10);
  Diagram two{projective_plane_fan(), {}, {}, {Point(0, 0), Point(4, 1)}};
  Box c = clipping_box(two);
  EXPECT_EQ(c.xmin, -12);
  EXPECT_EQ(c.xmax, 16);
  EXPECT_EQ(c.ymin, -12);
  EXPECT_EQ(c.ymax, 13);
}

}  // namespace
}  // namespace tropscat::cli
