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

#include "gaussfisher/special_states.hpp"

namespace gaussfisher {

struct PairInvariants {
    double k_plus = 0.0;
    double k_minus = 0.0;
    FamilyTag tag = FamilyTag::TS;
};

/// sqrt((x+1)(y+1)) - sqrt(xy); >= 1 with equality iff x == y.
double q_affinity(double x, double y);

/// [Q(n1a, n1b) Q(n2a, n2b)]^-2.
double fidelity_ts(double n1a, double n2a, double n1b, double n2b);

PairInvariants pair_invariants_ts(const TsParams &a, const TsParams &b);
PairInvariants pair_invariants_mts(const MtsParams &a, const MtsParams &b);
PairInvariants pair_invariants_sts(const StsParams &a, const StsParams &b);

/// Dispatches on the tag; throws ValidationError for mixed families.
PairInvariants pair_invariants(const FamilyPoint &a, const FamilyPoint &b);

/// 2 (sqrt K+ - sqrt K-)^-2.
double fidelity_from_k(double k_plus, double k_minus);

/// Same-family fidelity from the closed-form K+-. Mixed families go through
/// fidelity_two_mode instead.
double fidelity_special(const FamilyPoint &a, const FamilyPoint &b);

/// Per-coordinate equality with absolute tolerance 1e-12.
bool same_parameters(const FamilyPoint &a, const FamilyPoint &b, double tol = 1e-12);

/// True when the device parameters (theta, phi) or (r, phi) of two
/// same-family points agree within tol. Always true for TS.
bool same_device(const FamilyPoint &a, const FamilyPoint &b, double tol = 1e-12);

/// The chain F(family pair) <= F(thermal pair) <= 1 for one same-family pair.
struct BoundChain {
    double f_family = 0.0;
    double f_thermal = 0.0;
    bool family_le_thermal = false;
    bool thermal_le_one = false;
    bool family_le_one = false;
    bool thermal_saturated = false;  ///< |F_family - F_thermal| <= slack
    bool unit_saturated = false;     ///< |F_family - 1| <= slack
    bool device_equal = false;
    bool parameters_equal = false;

    /// Inequalities hold and each saturation happens exactly when its
    /// condition does.
    bool consistent() const {
        return family_le_thermal && thermal_le_one && family_le_one &&
               thermal_saturated == device_equal && unit_saturated == parameters_equal;
    }
};

BoundChain bound_chain(const FamilyPoint &a, const FamilyPoint &b, double slack = 1e-9);

} // namespace gaussfisher
