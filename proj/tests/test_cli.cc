// Copyright 2026 The tsow Authors
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
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tsow/cli.h"

namespace tsow {
namespace {

using nlohmann::json;

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "tsow");
    std::vector<const char *> argv;
    for (const std::string &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliRun r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string error_code(const CliRun &r) {
    const json j = json::parse(r.err);
    EXPECT_EQ(j["schema"], "tsow/1");
    return j["error"]["code"];
}

class TempDir {
   public:
    TempDir() {
        char tmpl[] = "/tmp/tsow_cli_XXXXXX";
        path_ = mkdtemp(tmpl);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string &name) const { return (path_ / name).string(); }

   private:
    std::filesystem::path path_;
};

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

TEST(Cli, ExitCodeClasses) {
    EXPECT_EQ(exit_code_for(ErrorCode::kConfig), 2);
    EXPECT_EQ(exit_code_for(ErrorCode::kSizeLimit), 2);
    EXPECT_EQ(exit_code_for(ErrorCode::kModeNotSupported), 2);
    EXPECT_EQ(exit_code_for(ErrorCode::kLayoutMismatch), 3);
    EXPECT_EQ(exit_code_for(ErrorCode::kSearchBudgetExceeded), 3);
    EXPECT_EQ(exit_code_for(ErrorCode::kCalibrationFailed), 3);
    EXPECT_EQ(exit_code_for(ErrorCode::kOutputNotCanonical), 4);
    EXPECT_EQ(exit_code_for(ErrorCode::kVerificationFailed), 4);
    EXPECT_EQ(exit_code_for(ErrorCode::kUndetermined), 4);
}

TEST(Cli, ListAndHelp) {
    const CliRun list = run({"list"});
    EXPECT_EQ(list.code, 0);
    EXPECT_NE(list.out.find("deutsch-jozsa"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CompareJsonEnvelope) {
    const CliRun r = run({"compare", "grover", "--n", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["schema"], "tsow/1");
    EXPECT_EQ(j["command"], "compare");
    EXPECT_EQ(j["config"]["rng"], "mt19937_64");
    EXPECT_EQ(j["config"]["seed"], 0);
    ASSERT_EQ(j["rows"].size(), 1u);
    EXPECT_EQ(j["rows"][0]["classical_depth"], 3);
    EXPECT_EQ(j["rows"][0]["predicted_quantum"], 1);
    EXPECT_EQ(j["rows"][0]["simulated_quantum_queries"], 1);
}

TEST(Cli, CompareIsByteIdentical) {
    const std::vector<std::string> args = {"compare", "dj", "--n", "2", "--format", "json", "--seed", "11"};
    const CliRun a = run(args);
    const CliRun b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CompareCsvHeader) {
    const CliRun r = run({"compare", "grover", "--n", "4", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
              "problem,n,classical_depth,predicted_quantum,simulated_quantum_queries,simulated_success");
    EXPECT_NE(r.out.find("grover,4,15,3,3,"), std::string::npos);
}

TEST(Cli, OutFile) {
    TempDir dir;
    const std::string path = dir.file("report.json");
    const CliRun r = run({"predict", "grover", "--n", "2", "--format", "json", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    const json j = json::parse(slurp(path));
    EXPECT_EQ(j["command"], "predict");
    EXPECT_EQ(run({"list", "--out", "/nonexistent/dir/x"}).code, 2);
}

TEST(Cli, ProblemFile) {
    TempDir dir;
    const std::string path = dir.file("xor2.json");
    std::ofstream(path) << R"({"name": "xor2", "setting_width": 2, "settings": ["00", "01", "10", "11"],
      "domain": ["0", "1"],
      "answers": {"00": ["0", "0"], "01": ["0", "1"], "10": ["1", "0"], "11": ["1", "1"]},
      "solutions": {"00": "0", "01": "1", "10": "1", "11": "0"}, "encoding": "table"})";
    const CliRun r = run({"predict", "--problem-file", path, "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["report"]["problem"], "xor2");
    EXPECT_EQ(j["report"]["exploratory"], true);

    const CliRun cmp = run({"compare", "--problem-file", path, "--format", "json"});
    ASSERT_EQ(cmp.code, 0) << cmp.err;
    const json row = json::parse(cmp.out)["rows"][0];
    EXPECT_EQ(row["classical_depth"], 2);
    EXPECT_TRUE(row["simulated_quantum_queries"].is_null());
    EXPECT_EQ(run({"simulate", "--problem-file", path}).code, 2);

    const std::string bad = dir.file("bad.json");
    std::ofstream(bad) << R"({"name": "x", "setting_width": 0})";
    const CliRun e = run({"predict", "--problem-file", bad});
    EXPECT_EQ(e.code, 2);
    EXPECT_EQ(error_code(e), "INVALID_PROBLEM");
    EXPECT_NE(e.err.find("setting_width"), std::string::npos);

    EXPECT_EQ(error_code(run({"predict", "grover", "--problem-file", path})), "CONFIG");
}

TEST(Cli, ErrorsGoToStderrAsJson) {
    struct Case {
        std::vector<std::string> args;
        int code;
        const char *name;
    };
    const std::vector<Case> cases = {
        {{"simulate", "grover", "--n", "13"}, 2, "SIZE_LIMIT"},
        {{"simulate", "shor"}, 2, "CONFIG"},
        {{"predict", "dj", "--n", "2", "--mode", "gf2-linear"}, 2, "MODE_NOT_SUPPORTED"},
        {{"predict", "dj", "--mode", "diagonal"}, 2, "CONFIG"},
        {{"simulate", "dj", "--n", "2", "--setting", "0001"}, 2, "INVALID_SUBSET"},
        {{"probe-simon", "--n", "3"}, 2, "SIZE_LIMIT"},
        {{"frobnicate"}, 2, "CONFIG"},
    };
    for (const Case &c : cases) {
        const CliRun r = run(c.args);
        EXPECT_EQ(r.code, c.code) << c.args[0];
        EXPECT_EQ(error_code(r), c.name);
        EXPECT_TRUE(r.out.empty());
    }
}

TEST(Cli, QubitCapIsALayoutError) {
    ASSERT_EQ(setenv("TSOW_MAX_QUBITS", "4", 1), 0);
    const CliRun r = run({"simulate", "grover", "--n", "3"});
    unsetenv("TSOW_MAX_QUBITS");
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(error_code(r), "LAYOUT_MISMATCH");
}

TEST(Cli, SimulateSettings) {
    const CliRun hex = run({"simulate", "dj", "--n", "2", "--setting", "0x3", "--format", "json"});
    ASSERT_EQ(hex.code, 0) << hex.err;
    EXPECT_EQ(json::parse(hex.out)["resolved_setting"], "0011");

    const CliRun rnd1 = run({"simulate", "grover", "--n", "4", "--setting", "random", "--seed", "5", "--format", "json"});
    const CliRun rnd2 = run({"simulate", "grover", "--n", "4", "--setting", "random", "--seed", "5", "--format", "json"});
    ASSERT_EQ(rnd1.code, 0) << rnd1.err;
    EXPECT_EQ(rnd1.out, rnd2.out);

    const CliRun dump = run({"simulate", "grover", "--n", "2", "--setting", "10", "--dump-states"});
    ASSERT_EQ(dump.code, 0);
    EXPECT_NE(dump.out.find("1010\t1\t0"), std::string::npos) << dump.out;
}

TEST(Cli, SimonSimulateAndVerify) {
    const CliRun sim = run({"simulate", "simon", "--n", "2", "--format", "csv"});
    ASSERT_EQ(sim.code, 0) << sim.err;
    EXPECT_EQ(sim.out.find("false"), std::string::npos);
    const CliRun ver = run({"verify", "grover", "--n", "2", "--format", "json"});
    ASSERT_EQ(ver.code, 0) << ver.err;
    EXPECT_EQ(json::parse(ver.out)["report"]["passed"], true);
}

}  // namespace
}  // namespace tsow
