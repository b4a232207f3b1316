// Copyright 2026 The inpd Authors.
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
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("inpd_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(const std::string& args) {
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd = std::string(INPD_CLI) + " " + args + " >" + (dir_ / "stdout.txt").string() + " 2>" +
                            err.string();
    const int status = std::system(cmd.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(err);
    std::ostringstream s;
    s << in.rdbuf();
    r.err = s.str();
    return r;
  }

  fs::path write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return dir_ / name;
  }

  fs::path dir_;
};

const char* kTiny = R"j({"master_seed": 2, "agents": ["IM50"], "networks": ["er(20,30)"], "matrices": ["M1"],
                        "rounds": 5, "sims_per_cell": 2})j";

TEST_F(Cli, ValidateShippedConfig) {
  EXPECT_EQ(run("validate " + std::string(INPD_SOURCE_DIR) + "/configs/desk.json").code, 0);
}

TEST_F(Cli, ValidateReportsConfigErrors) {
  EXPECT_EQ(run("validate " + (dir_ / "missing.json").string()).code, 1);
  auto r = run("validate " + write("bad.json", R"j({"master_seed": 1, "agents": ["NOPE"]})j").string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("config error"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("simulate").code, 1);
  EXPECT_EQ(run("simulate x.json --workers notanumber").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, SimulateThenReport) {
  const auto cfg = write("tiny.json", kTiny);
  const auto out = dir_ / "out";
  EXPECT_EQ(run("simulate " + cfg.string() + " --out " + out.string() + " --workers 2 --seed 5 -q").code, 0);
  EXPECT_TRUE(fs::exists(out / "summary.csv"));
  EXPECT_TRUE(fs::exists(out / "logs" / "IM50__ER20_30__M1__sim01.csv"));
  EXPECT_EQ(run("report " + (out / "logs").string() + " --out " + (dir_ / "re").string()).code, 0);
  EXPECT_TRUE(fs::exists(dir_ / "re" / "reports" / "mcc.csv"));
}

TEST_F(Cli, NonStrictMatrixWarns) {
  const auto cfg = write("warn.json", R"j({"master_seed": 2, "agents": ["ALLC"], "networks": ["er(10,9)"],
      "matrices": [{"label": "stag", "T": 2, "R": 3, "P": 1, "S": 0}], "rounds": 2, "sims_per_cell": 1})j");
  auto r = run("validate " + cfg.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning:"), std::string::npos);
}

TEST_F(Cli, ReportRuntimeFailures) {
  fs::create_directories(dir_ / "empty");
  EXPECT_EQ(run("report " + (dir_ / "empty").string()).code, 2);
  fs::create_directories(dir_ / "broken");
  write("broken/a__b__c__sim00.csv", "sim_id,round,agent_id,action,payoff,coop_neighbors,degree\nx,0,0,Q,0,0,0\n");
  auto r = run("report " + (dir_ / "broken").string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("a__b__c__sim00.csv"), std::string::npos);
}

}  // namespace
