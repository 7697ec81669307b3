// Copyright 2026 The ddsynth Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "ddsynth/cli.hpp"
#include "ddsynth/fixtures.hpp"
#include "ddsynth/scheme.hpp"

namespace ddsynth::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("ddsynth_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        const Result r = invoke({"examples", "--output-dir", dir_.string()});
        ASSERT_EQ(r.code, kPass) << r.err;
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }
    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(dir_ / name) << text;
        return path(name);
    }

    fs::path dir_;
};

TEST_F(CliTest, ExamplesExportEveryFixture) {
    for (const auto &f : reference_fixtures()) {
        for (const std::string ext : {".ham", ".target", ".scheme"}) {
            EXPECT_TRUE(fs::exists(dir_ / (f.name + ext))) << f.name << ext;
        }
        const Result r = invoke({"verify", path(f.name + ".ham"), path(f.name + ".target"), path(f.name + ".scheme")});
        EXPECT_EQ(r.code, kPass) << f.name << "\n" << r.out << r.err;
        EXPECT_NE(r.out.find("PASS"), std::string::npos);
    }
    EXPECT_NE(invoke({"examples"}).out.find("two-qubit"), std::string::npos);
}

TEST_F(CliTest, SolveTwoQubitGivesScalingThree) {
    const Result r = invoke({"solve", path("two-qubit.ham"), path("two-qubit.target")});
    ASSERT_EQ(r.code, kPass) << r.err;
    const DecouplingScheme s = parse_scheme(r.out);
    EXPECT_EQ(s.scaling, Rational(3));
    EXPECT_EQ(s.length(), 12u);
    EXPECT_NE(r.err.find("check = pass"), std::string::npos) << r.err;
}

TEST_F(CliTest, SolveWritesFileAndVerifies) {
    for (const auto &f : reference_fixtures()) {
        const std::string out = path(f.name + ".solved");
        const Result r = invoke({"solve", path(f.name + ".ham"), path(f.name + ".target"), "-o", out});
        ASSERT_EQ(r.code, kPass) << f.name << r.err;
        EXPECT_NE(r.out.find("D = "), std::string::npos);
        const Result v = invoke({"verify", path(f.name + ".ham"), path(f.name + ".target"), out});
        EXPECT_EQ(v.code, kPass) << f.name << "\n" << v.out;
    }
}

TEST_F(CliTest, SolveChainHasUnitScaling) {
    const Result r = invoke({"solve", path("chain.ham"), path("chain.target")});
    ASSERT_EQ(r.code, kPass) << r.err;
    EXPECT_EQ(parse_scheme(r.out).scaling, Rational(1));
}

TEST_F(CliTest, SolveIdentityTarget) {
    const std::string h = write("closed.ham", "dim 2 sites 2\nterm 11 1 0\nterm 23 0.5 0\nterm 32 0.5 0\n");
    const Result r = invoke({"solve", h, h});
    ASSERT_EQ(r.code, kPass) << r.err;
    const DecouplingScheme s = parse_scheme(r.out);
    EXPECT_EQ(s.scaling, Rational(1));
    ASSERT_EQ(s.length(), 1u);
    EXPECT_TRUE(s.order[0].is_identity_basis());
}

TEST_F(CliTest, SolveParticularMethodAndOrdering) {
    const Result r = invoke({"solve", path("two-qubit.ham"), path("two-qubit.target"), "--method", "particular",
                             "--ordering", "paper"});
    ASSERT_EQ(r.code, kPass) << r.err;
    EXPECT_EQ(r.out, slurp(dir_ / "two-qubit.scheme"));
    const Result rounded = invoke({"solve", path("square.ham"), path("square.target"), "--method", "particular"});
    EXPECT_EQ(rounded.code, kPass);
    EXPECT_NE(rounded.err.find("note:"), std::string::npos) << rounded.err;
    const Result fine = invoke({"solve", path("square.ham"), path("square.target"), "--method", "particular",
                                "--max-denominator", "4096"});
    EXPECT_NE(fine.err.find("check = pass"), std::string::npos) << fine.err;
}

TEST_F(CliTest, SolveUnreachableTarget) {
    const std::string target = write("bad.target", "dim 2 sites 2\nterm 10 1 0\n");
    EXPECT_EQ(invoke({"solve", path("two-qubit.ham"), target}).code, kUnsolvable);
}

TEST_F(CliTest, SolveDumpSystem) {
    const std::string csv = path("rows.csv");
    ASSERT_EQ(invoke({"solve", path("swap.ham"), path("swap.target"), "--dump-system", csv}).code, kPass);
    EXPECT_FALSE(slurp(csv).empty());
}

TEST_F(CliTest, InputErrors) {
    EXPECT_EQ(invoke({"solve", path("missing.ham"), path("swap.target")}).code, kInputError);
    const std::string garbage = write("garbage.ham", "dim 2 sites 2\nterm 1x 1 0\n");
    EXPECT_EQ(invoke({"solve", garbage, path("swap.target")}).code, kInputError);
    const std::string non_hermitian = write("nh.ham", "dim 2 sites 1\nterm 1 0 1\n");
    EXPECT_EQ(invoke({"solve", non_hermitian, non_hermitian}).code, kInputError);
    EXPECT_EQ(invoke({"verify", path("swap.ham"), path("swap.target"), garbage}).code, kInputError);
    EXPECT_EQ(invoke({"verify", path("chain.ham"), path("chain.target"), path("swap.scheme")}).code, kInputError);
    EXPECT_EQ(invoke({"solve", path("swap.ham"), path("swap.target"), "--method", "magic"}).code, kInputError);
    EXPECT_EQ(invoke({}).code, kInputError);
    EXPECT_EQ(invoke({"frobnicate"}).code, kInputError);
}

TEST_F(CliTest, VerifyFailure) {
    const Result r = invoke({"verify", path("two-qubit.ham"), path("two-qubit.target"), path("swap.scheme")});
    EXPECT_EQ(r.code, kVerifyFailed);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
    const Result csv =
        invoke({"verify", path("two-qubit.ham"), path("two-qubit.target"), path("swap.scheme"), "--csv"});
    EXPECT_EQ(csv.code, kVerifyFailed);
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "label,target,achieved,deviation");
    const Result loose = invoke({"verify", path("two-qubit.ham"), path("two-qubit.target"), path("swap.scheme"),
                                 "--tolerance", "1"});
    EXPECT_EQ(loose.code, kPass) << loose.out;
}

TEST(CliSimulate, TenRowSweep) {
    const Result r = invoke({"simulate", "--example", "swap", "--scheme", "eq17", "--lambda", "0.5", "--n", "1..10"});
    ASSERT_EQ(r.code, kPass) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "lambda,n,dt,fidelity,scheme_id");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(line.rfind("0.5," + std::to_string(rows) + ",", 0), 0u) << line;
        EXPECT_EQ(line.substr(line.size() - 5), ",eq17");
    }
    EXPECT_EQ(rows, 10);
    EXPECT_EQ(r.out, invoke({"simulate", "--example", "swap", "--scheme", "eq17", "--lambda", "0.5", "--n", "1..10",
                             "--serial"})
                         .out);
}

double fidelity_column(const std::string &csv, int row) {
    std::istringstream in(csv);
    std::string line;
    for (int i = 0; i <= row; ++i) {
        std::getline(in, line);
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) {
        cells.push_back(c);
    }
    return std::stod(cells.at(3));
}

TEST(CliSimulate, BaselineBelowDecoupled) {
    const Result base = invoke({"simulate", "--example", "swap", "--no-decoupling", "--lambda", "0.5", "--n", "1"});
    const Result dd = invoke({"simulate", "--example", "swap", "--lambda", "0.5", "--n", "1"});
    ASSERT_EQ(base.code, kPass);
    ASSERT_EQ(dd.code, kPass);
    EXPECT_NE(base.out.find(",none"), std::string::npos);
    EXPECT_LT(fidelity_column(base.out, 1), fidelity_column(dd.out, 1));
}

TEST(CliSimulate, EmptyGridAndBadInput) {
    const Result empty = invoke({"simulate", "--example", "swap", "--n", "0..0"});
    EXPECT_EQ(empty.code, kPass);
    EXPECT_EQ(empty.out, "lambda,n,dt,fidelity,scheme_id\n");
    EXPECT_EQ(invoke({"simulate", "--example", "swap", "--n", "5..1"}).code, kInputError);
    EXPECT_EQ(invoke({"simulate", "--example", "swap", "--lambda", "-1"}).code, kInputError);
    EXPECT_EQ(invoke({"simulate", "--example", "nope"}).code, kInputError);
}

TEST(CliParse, Ranges) {
    EXPECT_EQ(parse_n_range("1..3"), (std::vector<std::uint64_t>{1, 2, 3}));
    EXPECT_EQ(parse_n_range("4,2"), (std::vector<std::uint64_t>{4, 2}));
    EXPECT_TRUE(parse_n_range("0..0").empty());
    EXPECT_THROW(parse_n_range("a..b"), std::invalid_argument);
    EXPECT_EQ(parse_lambda_list("0.25,1"), (std::vector<double>{0.25, 1.0}));
    EXPECT_THROW(parse_lambda_list("nan"), std::invalid_argument);
}

}  // namespace
}  // namespace ddsynth::cli
