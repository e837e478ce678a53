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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gaussfisher/curvature.hpp"
#include "gaussfisher/special_states.hpp"

namespace gaussfisher::cli {

/// A state read from a key = value document:
///
///     # comment
///     family = STS
///     n1 = 0.5
///     n2 = 0.25
///     r = 0.3          (theta for MTS, nothing for TS)
///     phi = 0
///     mean = 0 0 0 0   (optional)
struct StateSpec {
    FamilyPoint point = TsParams{};
    QuadratureVector mean;

    static StateSpec parse(const std::string &text);
    static StateSpec load(const std::string &path);
    /// Lossless rendering (17 significant digits).
    std::string serialize() const;

    friend bool operator==(const StateSpec &a, const StateSpec &b) {
        return a.point == b.point && a.mean == b.mean;
    }
};

struct Axis {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    int count = 2;
    bool log = false;

    /// "lo:hi:count" or "lo:hi:count:log", with the name given separately.
    static Axis parse(const std::string &name, const std::string &range);
    std::vector<double> samples() const;
};

struct GridSpec {
    std::vector<Axis> axes;
    std::string output;  ///< empty for stdout
};

/// Figures 1, 2a, 2b, 3, 4a, 4b, 5.
const std::vector<std::string> &figure_names();
GridSpec default_grid(const std::string &figure);
/// Replaces default axes by name; unknown names are an axis mismatch.
GridSpec merge_axes(const std::string &figure, const std::vector<Axis> &overrides);

std::string format_number(double x);

nlohmann::ordered_json cmd_fidelity(const StateSpec &a, const StateSpec &b);

struct MetricFlags {
    bool numeric = false;
    double step = 1e-3;
    long long measurements = 1;
};
nlohmann::ordered_json cmd_metric(const StateSpec &s, const MetricFlags &flags);

struct CurvatureFlags {
    std::string method = "closed";  ///< closed, pipeline, warped, all
    double x3 = -1.0;               ///< theta or 2r for the pipeline; < 0 picks a default
    double phi = 0.0;
};
nlohmann::ordered_json cmd_curvature(FamilyTag tag, double n1, double n2,
                                     const CurvatureFlags &flags);

/// Comma-separated table with a header row.
std::string cmd_surface(const std::string &figure, const GridSpec &grid);

struct VerifyOutcome {
    nlohmann::ordered_json report;
    bool passed = false;
};
VerifyOutcome cmd_verify(const std::string &suite, std::uint64_t seed, bool include_oracle);

nlohmann::ordered_json cmd_oracle(const StateSpec &a, const StateSpec &b, int truncation);

/// Entry point shared by the executable and the tests. Returns the exit
/// status: 0 success, 1 suite failure, 2 input error.
int run(int argc, char **argv);

} // namespace gaussfisher::cli
