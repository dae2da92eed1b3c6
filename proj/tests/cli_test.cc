// Copyright 2026 The Authors.
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
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"

namespace nashcore::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = Run(args, Streams{out, err});
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("nashcore_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string Slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }

  std::string Gen(const std::string& name, std::vector<std::string> params) {
    std::vector<std::string> args = {"gen", "--name", name, "--out", Path(name + ".json")};
    for (auto& p : params) {
      args.push_back("--params");
      args.push_back(p);
    }
    EXPECT_EQ(Call(args).code, kExitOk);
    return Path(name + ".json");
  }

  fs::path dir_;
};

TEST_F(CliTest, SolveThenVerify) {
  std::string xos = Gen("xos", {"k=2"});
  Outcome s = Call({"solve", "--rule", "snw", "--in", xos});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  Json body = Json::parse(s.out);
  EXPECT_EQ(body["committee"], Json::array({"b1", "b2"}));
  EXPECT_EQ(body["manifest"]["command"], "solve");
  EXPECT_EQ(body["manifest"]["exit_status"], 0);
  EXPECT_EQ(body["manifest"]["inputs"][xos]["sha256"].get<std::string>().size(), 64u);
  EXPECT_FALSE(body["manifest"].contains("wall_clock_seconds"));

  Outcome pass = Call({"verify", "--notion", "core", "--gamma", "1", "--committee", "b1,b2", "--in", xos});
  EXPECT_EQ(pass.code, kExitOk) << pass.err;
  Outcome fail = Call({"verify", "--notion", "core", "--gamma", "1", "--committee", "a1,a2", "--in", xos});
  EXPECT_EQ(fail.code, kExitFail);
  EXPECT_EQ(Json::parse(fail.out)["witness"]["deviation"], Json::array({"b1", "b2"}));
  // Numeric indices are accepted when they are not ids.
  Outcome idx = Call({"verify", "--notion", "core", "--gamma", "1", "--committee", "0,1", "--in", xos});
  EXPECT_EQ(idx.code, kExitFail);
}

TEST_F(CliTest, GammaFromExponentWarns) {
  std::string xos = Gen("xos", {"k=2"});
  Outcome o = Call({"verify", "--notion", "restrained-core", "--gamma", "e^1", "--committee", "b1,b2", "--in", xos});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  Json j = Json::parse(o.out);
  EXPECT_EQ(j["parameter"], "135914091423/50000000000");
  EXPECT_EQ(j["warnings"].size(), 1u);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  std::string xos = Gen("xos", {"k=2"});
  EXPECT_EQ(Call({"solve", "--bogus", "--in", xos}).code, kExitUsage);
  EXPECT_EQ(Call({"gen", "--name", "nope"}).code, kExitUsage);
  EXPECT_EQ(Call({}).code, kExitUsage);
  std::ofstream(Path("bad.json")) << "{ not json";
  Outcome bad = Call({"solve", "--in", Path("bad.json")});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("error"), std::string::npos);
  EXPECT_EQ(Call({"verify", "--committee", "zz", "--in", xos}).code, kExitUsage);
  EXPECT_EQ(Call({"solve", "--in", Path("missing.json")}).code, kExitUsage);
}

TEST_F(CliTest, EnumerationCapIsReported) {
  std::string tight = Gen("tight2a", {"alpha=1/2", "eps=1/2"});
  Json inst = Json::parse(Slurp(tight));
  std::string w;
  for (const auto& id : inst["layout"]["local_optimum"]) w += (w.empty() ? "" : ",") + id.get<std::string>();
  Outcome o = Call({"verify", "--notion", "core", "--gamma", "3/2", "--committee", w, "--in", tight});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("advisory:"), std::string::npos);
}

TEST_F(CliTest, TheoremSuiteSmall) {
  Outcome o = Call({"theorem-suite", "--name", "main1", "--seeds", "10", "--seed", "3"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  Json j = Json::parse(o.out);
  EXPECT_EQ(j["manifest"]["seed"], 3);
}

TEST_F(CliTest, ExperimentSamplingBound) {
  std::string lb = Gen("lb00", {"beta=5", "r=1"});
  Outcome o = Call({"experiment", "--kind", "sampling-bound", "--alpha", "1/2", "--beta", "5", "--voter", "0",
                    "--set", "0,1,2,3,4,5", "--in", lb});
  EXPECT_EQ(o.code, kExitOk) << o.err;
}

int Shell(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CliTest, BinaryRerunsAreByteIdentical) {
  const std::string bin = NASHCORE_CLI_PATH;
  std::string inst = Path("rest1.json");
  ASSERT_EQ(Shell(bin + " gen --name rest1 --params q=2 --out " + inst), 0);
  for (const char* tag : {"a", "b"}) {
    std::string cmd = bin + " --seed 7 verify --notion restrained-core --mode anyW --gamma 1 --committee d1,d2,d3,d4 --in " +
                      inst + " --report " + Path(std::string("r_") + tag + ".json");
    EXPECT_EQ(Shell(cmd), 1);
  }
  EXPECT_EQ(Slurp(Path("r_a.json")), Slurp(Path("r_b.json")));
  EXPECT_FALSE(Slurp(Path("r_a.json")).empty());
  EXPECT_EQ(Shell(bin + " --no-such-flag > /dev/null 2>&1"), 2);
  EXPECT_EQ(Shell(bin + " --version > /dev/null"), 0);
}

}  // namespace
}  // namespace nashcore::cli
