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
#include <numbers>

#include <gtest/gtest.h>

#include "gaussfisher/closed_form.hpp"
#include "gaussfisher/errors.hpp"
#include "gaussfisher/gaussian_core.hpp"
#include "gaussfisher/sampling.hpp"
#include "gaussfisher/special_states.hpp"

namespace gf = gaussfisher;
using std::numbers::pi;

namespace {

double general_fidelity(const gf::FamilyPoint &a, const gf::FamilyPoint &b) {
    return gf::fidelity_two_mode(gf::family_state(a), gf::family_state(b)).fidelity;
}

} // namespace

TEST(QAffinity, Anchors) {
    for (double x : {0.0, 0.3, 1.0, 7.0}) EXPECT_NEAR(gf::q_affinity(x, x), 1.0, 1e-15);
    EXPECT_NEAR(gf::q_affinity(0, 1), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(gf::q_affinity(0.2, 3.1), gf::q_affinity(3.1, 0.2), 1e-15);
    EXPECT_GT(gf::q_affinity(0.2, 3.1), 1.0);
}

TEST(QAffinity, StableForLargeOccupancies) {
    // 1/Q^2 is the one-mode fidelity; it must stay in (0, 1] without cancellation
    const double q = gf::q_affinity(1e8, 1e8 * (1 + 1e-6));
    EXPECT_GE(q, 1.0);
    EXPECT_LT(q - 1.0, 1e-12);
}

TEST(FidelityTs, Anchors) {
    EXPECT_NEAR(gf::fidelity_ts(0.4, 1.3, 0.4, 1.3), 1.0, 1e-15);
    EXPECT_NEAR(gf::fidelity_ts(0, 0, 1, 1), 0.25, 1e-15);
}

TEST(PairInvariants, MtsEqualDeviceReducesToThermal) {
    const gf::MtsParams a{1.2, 0.3, 0.8, 0.5}, b{0.4, 2.0, 0.8, 0.5};
    const gf::PairInvariants m = gf::pair_invariants_mts(a, b);
    const gf::PairInvariants t = gf::pair_invariants_ts({1.2, 0.3}, {0.4, 2.0});
    EXPECT_NEAR(m.k_plus, t.k_plus, 1e-13);
    EXPECT_NEAR(m.k_minus, t.k_minus, 1e-13);
}

TEST(PairInvariants, StsEqualDeviceReducesToThermal) {
    const gf::StsParams a{1.2, 0.3, 0.6, -1.0}, b{0.4, 2.0, 0.6, -1.0};
    const gf::PairInvariants s = gf::pair_invariants_sts(a, b);
    const gf::PairInvariants t = gf::pair_invariants_ts({1.2, 0.3}, {0.4, 2.0});
    EXPECT_NEAR(s.k_plus, t.k_plus, 1e-12);
    EXPECT_NEAR(s.k_minus, t.k_minus, 1e-12);
}

TEST(PairInvariants, MatchGeneralPath) {
    gf::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        for (gf::FamilyTag tag : {gf::FamilyTag::MTS, gf::FamilyTag::STS}) {
            const gf::FamilyPoint a = gf::random_point(rng, tag, {});
            const gf::FamilyPoint b = gf::random_point(rng, tag, {});
            const gf::PairInvariants k = gf::pair_invariants(a, b);
            const gf::FidelityBreakdown g =
                gf::compute_invariants(gf::family_cov(a), gf::family_cov(b));
            EXPECT_NEAR(k.k_plus / g.k_plus, 1.0, 1e-10);
            EXPECT_NEAR(gf::fidelity_special(a, b) / general_fidelity(a, b), 1.0, 1e-10);
        }
    }
}

TEST(PairInvariants, MixedFamiliesRejected) {
    EXPECT_THROW(gf::pair_invariants(gf::MtsParams{1, 0, 1, 0}, gf::StsParams{1, 0, 1, 0}),
                 gf::ValidationError);
}

TEST(FidelitySpecial, IdenticalPointsGiveOne) {
    EXPECT_NEAR(gf::fidelity_special(gf::StsParams{0.7, 0.2, 0.9, 1.0},
                                     gf::StsParams{0.7, 0.2, 0.9, 1.0}),
                1.0, 1e-14);
    EXPECT_NEAR(gf::fidelity_special(gf::MtsParams{0.7, 0.2, 0.9, 1.0},
                                     gf::MtsParams{0.7, 0.2, 0.9, 1.0}),
                1.0, 1e-14);
}

TEST(FidelitySpecial, FamilyBelowThermal) {
    gf::Rng rng(37);
    gf::DrawBox box;
    box.ordered = true;
    for (int i = 0; i < 200; ++i) {
        for (gf::FamilyTag tag : {gf::FamilyTag::MTS, gf::FamilyTag::STS}) {
            const gf::BoundChain c =
                gf::bound_chain(gf::random_point(rng, tag, box), gf::random_point(rng, tag, box));
            EXPECT_TRUE(c.family_le_thermal);
            EXPECT_TRUE(c.thermal_le_one);
        }
    }
}

TEST(FidelitySpecial, PhaseDifferenceLowersFidelity) {
    // moving phi away from the reference decreases F monotonically up to pi
    double prev = 1.0;
    for (double phi = 0.25; phi < pi; phi += 0.25) {
        const double f = gf::fidelity_special(gf::StsParams{0.5, 0.2, 0.4, 0},
                                              gf::StsParams{0.5, 0.2, 0.4, phi});
        EXPECT_LT(f, prev);
        prev = f;
    }
}

TEST(BoundChain, SaturationConditions) {
    const gf::BoundChain same_device =
        gf::bound_chain(gf::MtsParams{1.0, 0.2, 1.0, 0.3}, gf::MtsParams{0.8, 0.1, 1.0, 0.3});
    EXPECT_TRUE(same_device.device_equal);
    EXPECT_TRUE(same_device.thermal_saturated);
    EXPECT_FALSE(same_device.unit_saturated);
    EXPECT_TRUE(same_device.consistent());

    const gf::BoundChain other =
        gf::bound_chain(gf::StsParams{1.0, 0.2, 0.5, 0.3}, gf::StsParams{1.0, 0.2, 0.6, 0.3});
    EXPECT_FALSE(other.device_equal);
    EXPECT_FALSE(other.thermal_saturated);
    EXPECT_TRUE(other.consistent());

    const gf::BoundChain equal =
        gf::bound_chain(gf::StsParams{1.0, 0.2, 0.5, 0.3}, gf::StsParams{1.0, 0.2, 0.5, 0.3});
    EXPECT_TRUE(equal.unit_saturated);
    EXPECT_TRUE(equal.parameters_equal);
    EXPECT_TRUE(equal.consistent());
}
