/*
   Copyright 2026 The pma-sanitize Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "pma/cli.hpp"
#include "test_support.hpp"

using namespace pma;
using namespace pma::test;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("pma_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    cli::RunConfig toy() const {
        cli::RunConfig cfg;
        cfg.input = data_path("table1.dat");
        cfg.patterns = data_path("table2_patterns.txt");
        return cfg;
    }

    std::ostringstream out_, err_;

private:
    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, MineToy) {
    auto cfg = toy();
    cfg.min_sup = "3abs";
    ASSERT_EQ(cli::cmd_mine(cfg, out_, err_), 0) << err_.str();
    EXPECT_NE(out_.str().find("1 3 : 3\n"), std::string::npos);
    EXPECT_NE(err_.str().find("frequent patterns: 13"), std::string::npos);
}

TEST_F(CliTest, MineAboveNAndRelative) {
    auto cfg = toy();
    cfg.min_sup = "6abs";
    ASSERT_EQ(cli::cmd_mine(cfg, out_, err_), 0);
    EXPECT_EQ(out_.str(), "");
    cfg.min_sup = "0.6";
    cfg.out = path("dump.txt");
    ASSERT_EQ(cli::cmd_mine(cfg, out_, err_), 0);
    EXPECT_NE(read_file(cfg.out).find("1 3 : 3\n"), std::string::npos);
}

TEST_F(CliTest, MineMissingFile) {
    auto cfg = toy();
    cfg.input = path("missing.dat");
    cfg.min_sup = "1abs";
    EXPECT_NE(cli::cmd_mine(cfg, out_, err_), 0);
    EXPECT_NE(err_.str().find("error:"), std::string::npos);
}

TEST_F(CliTest, SanitizeToy) {
    auto cfg = toy();
    cfg.out = path("sanitized.dat");
    cfg.log = path("log.json");
    ASSERT_EQ(cli::cmd_sanitize(cfg, out_, err_), 0) << err_.str();
    EXPECT_EQ(read_file(cfg.out), read_file(data_path("table1_sanitized.dat")));
    EXPECT_NE(out_.str().find("removed items: 5"), std::string::npos);
    EXPECT_EQ(parse_log(read_file(cfg.log)).total_removed(), 5u);
}

TEST_F(CliTest, SanitizeNoLog) {
    auto cfg = toy();
    cfg.out = path("sanitized.dat");
    cfg.log = path("log.json");
    cfg.no_log = true;
    ASSERT_EQ(cli::cmd_sanitize(cfg, out_, err_), 0);
    EXPECT_FALSE(fs::exists(cfg.log));
}

TEST_F(CliTest, SanitizeEmptyPatternsIsIdentity) {
    auto cfg = toy();
    cfg.patterns = data_path("empty_patterns.txt");
    cfg.out = path("same.dat");
    ASSERT_EQ(cli::cmd_sanitize(cfg, out_, err_), 0);
    EXPECT_EQ(read_file(cfg.out), read_file(cfg.input));
}

TEST_F(CliTest, SanitizeErrors) {
    auto cfg = toy();
    cfg.out = path("no/such/dir/out.dat");
    EXPECT_NE(cli::cmd_sanitize(cfg, out_, err_), 0);

    std::ofstream(path("dup.txt")) << "1 3\n3 1\n";
    cfg = toy();
    cfg.patterns = path("dup.txt");
    EXPECT_NE(cli::cmd_sanitize(cfg, out_, err_), 0);
    EXPECT_NE(err_.str().find("duplicate"), std::string::npos);

    cfg = toy();
    cfg.prefix = 9;
    EXPECT_NE(cli::cmd_sanitize(cfg, out_, err_), 0);
}

TEST_F(CliTest, EvaluateToy) {
    auto cfg = toy();
    cfg.sanitized = data_path("table1_sanitized.dat");
    cfg.min_sup = "1abs";
    cfg.report = path("report.json");
    ASSERT_EQ(cli::cmd_evaluate(cfg, out_, err_), 0) << err_.str();
    const auto parsed = parse_report(read_file(cfg.report));
    EXPECT_EQ(parsed.report.hf.value(), 0.0);
    EXPECT_DOUBLE_EQ(parsed.report.sr.value(), 0.625);
    EXPECT_DOUBLE_EQ(parsed.report.dif.value(), 0.25);
    EXPECT_EQ(parsed.params.sigma_abs, 1u);
}

TEST_F(CliTest, EvaluateIdenticalEmptyPatterns) {
    auto cfg = toy();
    cfg.patterns = data_path("empty_patterns.txt");
    cfg.sanitized = cfg.input;
    cfg.min_sup = "2abs";
    ASSERT_EQ(cli::cmd_evaluate(cfg, out_, err_), 0) << err_.str();
    const auto parsed = parse_report(out_.str());
    for (const auto* f : {&parsed.report.hf, &parsed.report.mc, &parsed.report.sr, &parsed.report.ap,
                          &parsed.report.dif})
        EXPECT_EQ(f->value(), 0.0);
}

TEST_F(CliTest, EvaluateSwappedPairFails) {
    auto cfg = toy();
    cfg.input = data_path("table1_sanitized.dat");
    cfg.sanitized = data_path("table1.dat");
    cfg.min_sup = "1abs";
    EXPECT_NE(cli::cmd_evaluate(cfg, out_, err_), 0);
    EXPECT_NE(err_.str().find("more often"), std::string::npos);
}

TEST_F(CliTest, BenchDeterministicCsv) {
    cli::RunConfig gen;
    gen.generate_transactions = 1500;
    gen.seed = 1;
    gen.out = path("synthetic.dat");
    ASSERT_EQ(cli::cmd_generate(gen, out_, err_), 0);

    cli::RunConfig cfg;
    cfg.input = gen.out;
    cfg.min_sup = "0.006";
    cfg.sizes = {1000};
    cfg.num_patterns = {5};
    cfg.seed = 7;
    cfg.repeats = 1;
    cfg.out = path("a.csv");
    cfg.report = path("a.json");
    ASSERT_EQ(cli::cmd_bench(cfg, out_, err_), 0) << err_.str();
    cfg.out = path("b.csv");
    ASSERT_EQ(cli::cmd_bench(cfg, out_, err_), 0);
    EXPECT_EQ(read_file(path("a.csv")), read_file(path("b.csv")));
    const auto csv = read_file(path("a.csv"));
    EXPECT_NE(csv.find("\n1000,5,6,"), std::string::npos);
    const auto summary = nlohmann::json::parse(read_file(path("a.json")));
    EXPECT_EQ(summary.at("cells").size(), 1u);
}
