// Copyright 2026 The GaussFisher Authors
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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "gaussfisher/cli.hpp"
#include "gaussfisher/curvature.hpp"
#include "gaussfisher/errors.hpp"

namespace gf = gaussfisher;
namespace cli = gaussfisher::cli;
namespace fs = std::filesystem;

namespace {

class TempDir {
  public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("gaussfisher_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                 "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path file(const std::string &name, const std::string &content) const {
        const fs::path p = path_ / name;
        std::ofstream(p) << content;
        return p;
    }
    fs::path operator/(const std::string &name) const { return path_ / name; }

  private:
    fs::path path_;
};

int run_cli(const std::string &args) {
    const std::string cmd = std::string(GAUSSFISHER_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// rows of a CSV table, header dropped
std::vector<std::vector<double>> parse_csv(const std::string &csv) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

const char *kMts = "family = MTS\nn1 = 2\nn2 = 1\ntheta = 1.5707963267948966\nphi = 0\n";

} // namespace

TEST(StateSpec, ParseAndRoundTrip) {
    const cli::StateSpec s = cli::StateSpec::parse(
        "# probe\nfamily = STS\nn1 = 0.5\nn2 = 0.25\nr = 0.3\nphi = -1.25\nmean = 0.1 0 0 2\n");
    EXPECT_EQ(s.point.tag(), gf::FamilyTag::STS);
    EXPECT_EQ(s.mean[3], 2.0);
    EXPECT_TRUE(cli::StateSpec::parse(s.serialize()) == s);

    const cli::StateSpec t = cli::StateSpec::parse("family = MTS\nn1 = 0.1\nn2 = 0.3\ntheta = 0.1\nphi = 0.7\n");
    EXPECT_TRUE(cli::StateSpec::parse(t.serialize()) == t);
}

TEST(StateSpec, Rejections) {
    EXPECT_THROW(cli::StateSpec::parse("family = MTS\nn1 = 1\nn2 = 0\nphi = 0\n"), gf::ValidationError);
    EXPECT_THROW(cli::StateSpec::parse("family = TS\nn1 = 1\nn2 = 0\nr = 1\n"), gf::ValidationError);
    EXPECT_THROW(cli::StateSpec::parse("family = TS\nn1 = 1\nn1 = 2\nn2 = 0\n"), gf::ValidationError);
    EXPECT_THROW(cli::StateSpec::parse("family = TS\nn1 = abc\nn2 = 0\n"), gf::ValidationError);
    EXPECT_THROW(cli::StateSpec::parse("family = TS\nn1 = -1\nn2 = 0\n"), gf::ValidationError);
}

TEST(Axis, SamplesAndParsing) {
    const cli::Axis lin = cli::Axis::parse("n1", "0:1:5");
    EXPECT_EQ(lin.samples(), (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
    const cli::Axis lg = cli::Axis::parse("n", "1:100:3:log");
    const auto s = lg.samples();
    EXPECT_NEAR(s[1], 10.0, 1e-12);
    EXPECT_EQ(s.back(), 100.0);
    EXPECT_THROW(cli::Axis::parse("n", "0:1"), gf::ValidationError);
    EXPECT_THROW(cli::Axis::parse("n", "0:100:3:log"), gf::ValidationError);
    EXPECT_THROW(cli::merge_axes("1", {cli::Axis::parse("n", "0:1:3")}), gf::ValidationError);
}

TEST(CmdFidelity, IdenticalMts) {
    const cli::StateSpec a = cli::StateSpec::parse(kMts);
    const auto j = cli::cmd_fidelity(a, a);
    EXPECT_NEAR(j["general"]["fidelity"].get<double>(), 1.0, 1e-12);
    EXPECT_LT(j["closed_form"]["residual"].get<double>(), 1e-12);
}

TEST(CmdFidelity, VacuumVersusThermal) {
    const auto j = cli::cmd_fidelity(cli::StateSpec::parse("family = TS\nn1 = 0\nn2 = 0\n"),
                                     cli::StateSpec::parse("family = TS\nn1 = 1\nn2 = 1\n"));
    EXPECT_NEAR(j["general"]["fidelity"].get<double>(), 0.25, 1e-12);
    EXPECT_NEAR(j["closed_form"]["fidelity"].get<double>(), 0.25, 1e-12);
    EXPECT_NEAR(j["bures_distance"].get<double>(), 1.0, 1e-12);
}

TEST(CmdFidelity, DisplacedMeansKeepClosedFormConsistent) {
    const cli::StateSpec a = cli::StateSpec::parse(std::string(kMts) + "mean = 0.3 0 0 -0.2\n");
    const cli::StateSpec b = cli::StateSpec::parse(kMts);
    const auto j = cli::cmd_fidelity(a, b);
    EXPECT_LT(j["general"]["fidelity"].get<double>(), 1.0);
    EXPECT_LT(j["closed_form"]["residual"].get<double>(), 1e-12);
}

TEST(CmdMetric, MtsAnchor) {
    cli::MetricFlags flags;
    flags.numeric = true;
    const auto j = cli::cmd_metric(cli::StateSpec::parse(kMts), flags);
    EXPECT_NEAR(j["qfi"]["n1"].get<double>(), 1.0 / 6.0, 1e-14);
    EXPECT_NEAR(j["qfi"]["n2"].get<double>(), 0.5, 1e-14);
    EXPECT_NEAR(j["qfi"]["theta"].get<double>(), 1.0 / 7.0, 1e-14);
    EXPECT_NEAR(j["qfi"]["phi"].get<double>(), 1.0 / 7.0, 1e-14);
    EXPECT_NEAR(j["cramer_rao"]["theta"].get<double>(), 7.0, 1e-12);
    EXPECT_LT(j["numeric"]["max_relative_diagonal_deviation"].get<double>(), 1e-5);
}

TEST(CmdMetric, StsVacuumAndBoundary) {
    const auto j = cli::cmd_metric(cli::StateSpec::parse("family = STS\nn1 = 0\nn2 = 0\nr = 0.4\nphi = 0\n"), {});
    EXPECT_NEAR(j["qfi"]["2r"].get<double>(), 1.0, 1e-14);
    EXPECT_TRUE(j["jeffreys_prior"].is_null());
    EXPECT_FALSE(j["notes"].empty());
}

TEST(CmdCurvature, Anchors) {
    EXPECT_NEAR(cli::cmd_curvature(gf::FamilyTag::MTS, 0.5, 0.5, {})["R"].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(cli::cmd_curvature(gf::FamilyTag::STS, 0, 0, {})["R"].get<double>(), -16.0, 1e-12);
}

TEST(CmdCurvature, AllMethodsAgree) {
    cli::CurvatureFlags flags;
    flags.method = "all";
    const auto j = cli::cmd_curvature(gf::FamilyTag::MTS, 2, 1, flags);
    ASSERT_EQ(j["values"].size(), 3u);
    for (const auto &[k, v] : j["residuals"].items()) EXPECT_LT(v.get<double>(), 1e-3) << k;
}

TEST(CmdCurvature, FallbackOnDiagonal) {
    cli::CurvatureFlags flags;
    flags.method = "warped";
    const auto j = cli::cmd_curvature(gf::FamilyTag::MTS, 1, 1, flags);
    EXPECT_TRUE(j["fallback"].get<bool>());
    EXPECT_NEAR(j["R"].get<double>(), gf::scalar_closed(gf::FamilyTag::MTS, 1, 1), 1e-12);
    EXPECT_FALSE(j["warnings"].empty());
}

TEST(CmdSurface, Figure2aZeroCrossing) {
    const auto rows = parse_csv(cli::cmd_surface("2a", cli::default_grid("2a")));
    ASSERT_EQ(rows.size(), 201u);
    bool found = false;
    for (const auto &r : rows) {
        if (std::abs(r[0] - 0.5) < 1e-12) {
            EXPECT_NEAR(r[1], 0.0, 1e-6);
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(CmdSurface, AllFiguresHaveRows) {
    for (const std::string &fig : cli::figure_names()) {
        const auto rows = parse_csv(cli::cmd_surface(fig, cli::default_grid(fig)));
        EXPECT_FALSE(rows.empty()) << fig;
    }
    EXPECT_THROW(cli::default_grid("6"), gf::ValidationError);
}

TEST(CmdSurface, AxisOverride) {
    const cli::GridSpec g = cli::merge_axes("5", {cli::Axis::parse("n1", "1:8:8")});
    const auto rows = parse_csv(cli::cmd_surface("5", g));
    ASSERT_EQ(rows.size(), 8u);
    EXPECT_NEAR(rows[0][1], 20.0, 1e-12);
    EXPECT_NEAR(rows[7][2], 0.0, 1e-12);
}

TEST(CmdVerify, CoreSuitePasses) {
    const cli::VerifyOutcome v = cli::cmd_verify("core", 42, false);
    EXPECT_TRUE(v.passed);
    EXPECT_FALSE(v.report["checks"].empty());
    EXPECT_THROW(cli::cmd_verify("bogus", 1, false), gf::ValidationError);
}

TEST(CmdOracle, AgreesWithGeneralPath) {
    const cli::StateSpec a = cli::StateSpec::parse("family = MTS\nn1 = 0.4\nn2 = 0.1\ntheta = 1\nphi = 0\n");
    const cli::StateSpec b = cli::StateSpec::parse("family = MTS\nn1 = 0.2\nn2 = 0.3\ntheta = 2\nphi = 1\n");
    const auto j = cli::cmd_oracle(a, b, 0);
    EXPECT_EQ(j["truncation"].get<int>(), 25);
    EXPECT_LT(j["difference"].get<double>(), 1e-6);
    const cli::StateSpec c = cli::StateSpec::parse(std::string(kMts) + "mean = 1 0 0 0\n");
    EXPECT_THROW(cli::cmd_oracle(c, c, 10), gf::ValidationError);
}

TEST(Executable, ExitCodesAndOutputFile) {
    TempDir dir;
    const fs::path a = dir.file("a.state", kMts);
    const fs::path bad = dir.file("bad.state", "family = MTS\nn1 = oops\n");
    const fs::path out = dir / "report.json";
    const fs::path csv = dir / "fig.csv";

    EXPECT_EQ(run_cli("fidelity " + a.string() + " " + a.string() + " --out " + out.string()), 0);
    EXPECT_NE(slurp(out).find("\"fidelity\""), std::string::npos);
    fs::remove(out);

    EXPECT_EQ(run_cli("fidelity " + bad.string() + " " + a.string() + " --out " + out.string()), 2);
    EXPECT_FALSE(fs::exists(out));

    EXPECT_EQ(run_cli("surface 2b --axis n1=0:1:11 --out " + csv.string()), 0);
    EXPECT_EQ(parse_csv(slurp(csv)).size(), 11u);
    EXPECT_EQ(run_cli("surface 2b --axis n=0:1:11"), 2);
    EXPECT_EQ(run_cli("curvature MTS 0.5 0.5 --method bogus"), 2);
    EXPECT_EQ(run_cli("metric " + a.string() + " --numeric"), 0);
    EXPECT_EQ(run_cli("nonsense"), 2);
}
