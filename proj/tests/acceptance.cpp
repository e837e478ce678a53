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

// Acceptance driver: one pass/fail line per criterion, each with a runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "gaussfisher/cli.hpp"
#include "gaussfisher/curvature.hpp"
#include "gaussfisher/verify.hpp"

namespace gf = gaussfisher;
namespace cli = gaussfisher::cli;

namespace {

constexpr std::uint64_t kSeed = 20240607;

struct Outcome {
    bool passed = true;
    std::string detail;
};

Outcome from_checks(const std::vector<gf::CheckResult> &checks) {
    Outcome o;
    std::ostringstream os;
    for (const gf::CheckResult &c : checks) {
        o.passed = o.passed && c.passed;
        os << (os.tellp() > 0 ? "; " : "") << c.name << (c.passed ? " ok" : " FAILED") << " ("
           << c.detail << ")";
    }
    o.detail = os.str();
    return o;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string &name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw std::runtime_error("missing column " + name);
    }
};

Table surface(const std::string &figure) {
    Table t;
    std::istringstream in(cli::cmd_surface(figure, cli::default_grid(figure)));
    std::string line, cell;
    std::getline(in, line);
    std::istringstream hs(line);
    while (std::getline(hs, cell, ',')) t.header.push_back(cell);
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        t.rows.push_back(row);
    }
    return t;
}

// Row of a one-parameter table where column y changes sign with the smallest |y|.
std::pair<double, double> zero_crossing(const Table &t, const std::string &x, const std::string &y) {
    const std::size_t ix = t.column(x), iy = t.column(y);
    double best_x = std::nan(""), best_y = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
        const double y0 = t.rows[i][iy], y1 = t.rows[i + 1][iy];
        if ((y0 <= 0) != (y1 <= 0) || y0 == 0 || y1 == 0) {
            for (std::size_t k : {i, i + 1}) {
                if (std::abs(t.rows[k][iy]) < std::abs(best_y)) {
                    best_y = t.rows[k][iy];
                    best_x = t.rows[k][ix];
                }
            }
        }
    }
    return {best_x, best_y};
}

// The single interior row that is a strict local maximum (or minimum) of column y.
std::pair<double, double> interior_extremum(const Table &t, const std::string &x, const std::string &y,
                                            bool maximum) {
    const std::size_t ix = t.column(x), iy = t.column(y);
    const double sign = maximum ? 1.0 : -1.0;
    std::vector<std::size_t> hits;
    for (std::size_t i = 1; i + 1 < t.rows.size(); ++i) {
        const double c = sign * t.rows[i][iy];
        if (c > sign * t.rows[i - 1][iy] && c > sign * t.rows[i + 1][iy]) hits.push_back(i);
    }
    if (hits.size() != 1) return {std::nan(""), std::nan("")};
    return {t.rows[hits[0]][ix], t.rows[hits[0]][iy]};
}

Outcome figure_anchors() {
    Outcome o;
    std::ostringstream os;
    auto expect = [&](const std::string &what, double got, double want) {
        const bool ok = std::abs(got - want) < 1e-6;
        o.passed = o.passed && ok;
        os << (os.tellp() > 0 ? "; " : "") << what << " = " << got << (ok ? "" : " FAILED");
    };
    const double ns = gf::sts_saddle_occupancy();

    const Table f1 = surface("1");
    for (const auto &r : f1.rows)
        if (std::abs(r[0] - 0.5) < 1e-12 && std::abs(r[1] - 0.5) < 1e-12) expect("fig1 R(1/2,1/2)", r[2], 0.0);

    const Table f2a = surface("2a");
    const auto [x2a, y2a] = zero_crossing(f2a, "n", "R_MT");
    expect("fig2a zero crossing n", x2a, 0.5);
    expect("fig2a R at crossing", y2a, 0.0);
    expect("fig2a symmetric asymptote", f2a.rows.back()[1], -12.0);

    const Table f2b = surface("2b");
    for (const auto &r : f2b.rows)
        if (std::abs(r[0] - 0.5) < 1e-12) expect("fig2b R at n1 = n2 = 1/2", r[2], 0.0);

    const Table f4a = surface("4a");
    const auto [x4a, y4a] = interior_extremum(f4a, "n", "R_ST", true);
    expect("fig4a saddle n", x4a, ns);
    expect("fig4a saddle value", y4a, -143.0 / 14.0);
    expect("fig4a symmetric asymptote", f4a.rows.back()[1], -12.0);

    const Table f4b = surface("4b");
    const auto [x4b, y4b] = interior_extremum(f4b, "n1", "R_ST", false);
    expect("fig4b saddle n1", x4b, ns);
    expect("fig4b saddle value", y4b, -143.0 / 14.0);

    const Table f5 = surface("5");
    const auto [x5, y5] = zero_crossing(f5, "n1", "R_ST_edge");
    expect("fig5 STS edge zero n1", x5, 8.0);
    expect("fig5 R at crossing", y5, 0.0);
    expect("fig5 MTS edge asymptote", f5.rows.back()[f5.column("R_MT_edge")], 2.0);

    const Table f3 = surface("3");
    expect("fig3 R(0,0)", f3.rows.front()[2], -16.0);

    o.detail = os.str();
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "closed-form anchors", 1.0, [] { return from_checks({gf::check_closed_anchors()}); }},
        {2, "fidelity oracles", 300.0,
         [] {
             return from_checks({gf::check_closed_vs_general(kSeed + 1, 200),
                                 gf::check_fock_mts(kSeed + 2, 10, 25),
                                 gf::check_fock_sts(kSeed + 3, 10, 40)});
         }},
        {3, "numeric Bures metric", 30.0,
         [] { return from_checks({gf::check_numeric_metric(kSeed + 4, 20)}); }},
        {4, "curvature agreement", 120.0,
         [] {
             return from_checks({gf::check_curvature_agreement(kSeed + 5, 10),
                                 gf::check_curvature_grid_spread(kSeed + 6)});
         }},
        {5, "curvature calibration", 60.0, [] { return from_checks({gf::check_curvature_calibration()}); }},
        {6, "fidelity properties", 10.0,
         [] {
             return from_checks({gf::check_fidelity_symmetry(kSeed + 7, 200),
                                 gf::check_fidelity_saturation(kSeed + 8, 200),
                                 gf::check_fidelity_overlap(kSeed + 9, 200),
                                 gf::check_fidelity_chains(kSeed + 10, 200),
                                 gf::check_fidelity_determinants(kSeed + 11, 200)});
         }},
        {7, "Jeffreys identity", 10.0, [] { return from_checks({gf::check_jeffreys(kSeed + 12, 50)}); }},
        {8, "figure grid anchors", 60.0, figure_anchors},
    };

    int failures = 0;
    for (const Criterion &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = secs < c.budget_seconds;
        const bool ok = o.passed && in_budget;
        failures += ok ? 0 : 1;
        std::printf("[%s] criterion %d: %s (%.3f s, budget %.0f s%s) %s\n", ok ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), secs, c.budget_seconds, in_budget ? "" : ", over budget",
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
