// Copyright 2026 The rankregret Authors
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

// End-to-end runs of the command-line tool.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult Cli(const std::string& args) {
  const std::string command =
      std::string(RANKREGRET_CLI) + " " + args + " 2>&1";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return {};
  RunResult result;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.out.append(buf.data(), got);
  }
  const int status = ::pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string Slurp(const fs::path& file) {
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rankregret_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, MetricsOnFile) {
  std::ofstream(Path("list.csv")) << "label,score\n0,0.9\n1,0.8\n0,0.1\n";
  const auto r = Cli("metrics --kind auc " + Path("list.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("\"value\":0.5"), std::string::npos) << r.out;
}

TEST_F(CliTest, MetricsUndefinedIsReportedPerList) {
  std::ofstream(Path("one_class.csv")) << "0,0.9\n0,0.8\n";
  const auto r = Cli("metrics --kind ndcg " + Path("one_class.csv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"error\""), std::string::npos) << r.out;
}

TEST_F(CliTest, MetricsEmptyDirectoryWarns) {
  fs::create_directories(dir_ / "empty");
  const auto r = Cli("metrics " + Path("empty"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("warning"), std::string::npos);
}

TEST_F(CliTest, BadInputExitsTwo) {
  std::ofstream(Path("bad.csv")) << "1,0.5\n3,0.2\n";
  const auto r = Cli("metrics " + Path("bad.csv"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("bad.csv:2:"), std::string::npos) << r.out;
  EXPECT_EQ(Cli("metrics --kind xyz " + Path("bad.csv")).code, 2);
  EXPECT_EQ(Cli("bounds --n-pos 2").code, 2);
  EXPECT_EQ(Cli("nonsense").code, 2);
  EXPECT_EQ(Cli("").code, 2);
}

TEST_F(CliTest, Bounds) {
  const auto r = Cli("bounds --direction auc-acc --n-pos 2 --n-neg 2 "
                     "--margin 0.3 --worst-case");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("3.3333333333333"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"worst_case\""), std::string::npos);
  EXPECT_EQ(Cli("bounds --direction auc-acc --n-pos 2 --n-neg 2 --margin 0")
                .code,
            2);
  const auto rev = Cli("bounds --direction trunc-reverse --n-pos 3 --n-neg 2 "
                       "--k1 1 --k2 3 --metric ndcg");
  ASSERT_EQ(rev.code, 0) << rev.out;
  EXPECT_NE(rev.out.find("\"divergent\": true"), std::string::npos) << rev.out;
}

TEST_F(CliTest, PsiWritesCsv) {
  const auto r = Cli("psi --source ndcg --target auc --labels 1,0,1,0 "
                     "--out-dir " + Path("psi"));
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string csv = Slurp(dir_ / "psi" / "psi.csv");
  EXPECT_EQ(csv.rfind("# config: ", 0), 0u);
  EXPECT_NE(csv.find("\nepsilon,psi\n0,0\n"), std::string::npos) << csv;
  EXPECT_TRUE(fs::exists(dir_ / "psi" / "psi.json"));
}

TEST_F(CliTest, PsiCapacityExitsThree) {
  EXPECT_EQ(Cli("psi --labels 1,0,1,0,1,0,1,0,1,0").code, 3);
  EXPECT_EQ(Cli("psi --labels 1,0 --eta 0.3,0.4").code, 2);
}

TEST_F(CliTest, VerifyExitCodes) {
  EXPECT_EQ(Cli("verify --n-min 3 --n-max 5 --directions auc-ndcg,trunc,"
                "trunc-reverse").code,
            0);
  const auto failing =
      Cli("verify --n-min 3 --n-max 4 --directions ndcg-acc --margins 0.25");
  EXPECT_EQ(failing.code, 1) << failing.out;
  EXPECT_NE(failing.out.find("fail n="), std::string::npos);
  EXPECT_EQ(Cli("verify --n-max 12 --directions auc-ndcg").code, 3);
}

TEST_F(CliTest, VerifyWritesJson) {
  const auto r = Cli("verify --n-min 3 --n-max 4 --directions auc-acc "
                     "--out " + Path("verify.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(Slurp(dir_ / "verify.json").find("auc-acc"), std::string::npos);
}

TEST_F(CliTest, SimulateIsReproducibleFromItsConfig) {
  const std::string base = "simulate -n 120 --snapshots 12 --seed 5 ";
  ASSERT_EQ(Cli(base + "--format csv,json,svg --out-dir " + Path("a")).code,
            0);
  ASSERT_EQ(Cli(base + "--out-dir " + Path("b")).code, 0);
  const std::string csv = Slurp(dir_ / "a" / "snapshots.csv");
  EXPECT_EQ(csv, Slurp(dir_ / "b" / "snapshots.csv"));
  EXPECT_EQ(csv.rfind("# config: ", 0), 0u);
  EXPECT_TRUE(fs::exists(dir_ / "a" / "ndcg_vs_acc.svg"));

  // summary.json carries the config; feeding it back reproduces the run.
  ASSERT_EQ(Cli("simulate --config " + Path("a/summary.json") +
                " --out-dir " + Path("c"))
                .code,
            0);
  EXPECT_EQ(csv, Slurp(dir_ / "c" / "snapshots.csv"));

  // Flags override the file.
  ASSERT_EQ(Cli("simulate --config " + Path("a/summary.json") +
                " --seed 6 --out-dir " + Path("d"))
                .code,
            0);
  EXPECT_NE(csv, Slurp(dir_ / "d" / "snapshots.csv"));
}

TEST_F(CliTest, SimulateRejectsBadConfig) {
  EXPECT_EQ(Cli("simulate --snapshots 0 --out-dir " + Path("x")).code, 2);
  std::ofstream(Path("bad.json")) << "{\"bogus\": 1}";
  EXPECT_EQ(Cli("simulate --config " + Path("bad.json") + " --out-dir " +
                Path("x"))
                .code,
            2);
  std::ofstream(Path("blocker")) << "file";
  EXPECT_EQ(Cli("simulate -n 20 --snapshots 2 --out-dir " +
                Path("blocker/sub"))
                .code,
            2);
}

TEST_F(CliTest, Rates) {
  const auto r = Cli("rates --out-dir " + Path("rates"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(fs::exists(dir_ / "rates" / "rates.json"));
  EXPECT_EQ(Cli("rates --grid 10,20,30").code, 2);
}

}  // namespace
