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
#include <functional>
#include <string>
#include <vector>

namespace gaussfisher {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Runs `body` under a timer and turns exceptions into failures.
CheckResult run_check(const std::string &name, const std::function<CheckResult()> &body);

// Individual checks. Each is deterministic given its seed.
CheckResult check_closed_anchors();
CheckResult check_core_invariants(std::uint64_t seed, int draws = 200);
CheckResult check_family_constructors(std::uint64_t seed, int draws = 200);
CheckResult check_closed_vs_general(std::uint64_t seed, int pairs = 200);
CheckResult check_phase_monotonicity();
CheckResult check_fock_mts(std::uint64_t seed, int pairs = 10, int d = 25);
CheckResult check_fock_sts(std::uint64_t seed, int pairs = 10, int d = 40);
CheckResult check_fock_thermal(std::uint64_t seed, int pairs = 5, int d = 30);
CheckResult check_numeric_metric(std::uint64_t seed, int points = 20);
CheckResult check_metric_structure(std::uint64_t seed, int points = 50);
CheckResult check_curvature_agreement(std::uint64_t seed, int points = 10);
CheckResult check_curvature_grid_spread(std::uint64_t seed);
CheckResult check_curvature_calibration();
CheckResult check_fidelity_symmetry(std::uint64_t seed, int draws = 200);
CheckResult check_fidelity_saturation(std::uint64_t seed, int draws = 200);
CheckResult check_fidelity_overlap(std::uint64_t seed, int draws = 200);
CheckResult check_fidelity_chains(std::uint64_t seed, int draws = 200);
CheckResult check_fidelity_determinants(std::uint64_t seed, int draws = 200);
CheckResult check_jeffreys(std::uint64_t seed, int points = 50);

enum class Suite { Core, Appendix, Geometry, Oracle, All };
Suite parse_suite(const std::string &name);
std::string to_string(Suite s);

/// The oracle suite only runs when include_oracle is set, also under All.
SuiteReport run_suite(Suite suite, std::uint64_t seed, bool include_oracle);

} // namespace gaussfisher
