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
#include <complex>

#include <gtest/gtest.h>

#include "gaussfisher/closed_form.hpp"
#include "gaussfisher/errors.hpp"
#include "gaussfisher/fock_oracle.hpp"

namespace gf = gaussfisher;

TEST(ThermalDm, VacuumProjector) {
    const gf::FockDensity v = gf::thermal_dm(0, 0, 5);
    EXPECT_NEAR(v.rho(0, 0).real(), 1.0, 1e-15);
    EXPECT_NEAR(v.rho.cwiseAbs().sum(), 1.0, 1e-15);
    EXPECT_NEAR(v.trace_deficit, 0.0, 1e-15);
}

TEST(ThermalDm, GeometricWeights) {
    const gf::FockDensity t = gf::thermal_dm(1, 0, 30);
    for (int n = 0; n < 30; ++n) EXPECT_NEAR(t.rho(n * 30, n * 30).real(), std::pow(0.5, n + 1), 1e-15);
    EXPECT_LT(t.trace_deficit, 1e-9);
}

TEST(ThermalDm, DeficitShrinksWithCutoff) {
    double prev = 1.0;
    for (int d : {10, 20, 40, 80}) {
        const double deficit = gf::thermal_dm(2, 1, d, 1.0).trace_deficit;
        EXPECT_LT(deficit, prev);
        prev = deficit;
    }
    EXPECT_THROW(gf::thermal_dm(2, 1, 10), gf::TruncationError);
}

TEST(BsUnitary, IdentityAndUnitarity) {
    const int d = 8;
    const gf::FockUnitary id = gf::bs_unitary(0, 0.3, d);
    for (int a = 0; a < d; ++a)
        for (int c = 0; a + c < d; ++c) {
            const int k = a * d + c;
            EXPECT_NEAR(std::abs(id.u(k, k) - 1.0), 0.0, 1e-14);
        }
    EXPECT_LT(gf::bs_unitary(1.1, -0.7, d).defect, 1e-12);
}

TEST(SqUnitary, IdentityAndDefect) {
    const int d = 12;
    const gf::FockUnitary id = gf::sq_unitary(0, 0.4, d);
    EXPECT_LT(id.defect, 1e-14);
    EXPECT_NEAR(std::abs(id.u(0, 0) - 1.0), 0.0, 1e-14);
    EXPECT_LT(gf::sq_unitary(0.3, 0.2, 40).defect, 1e-8);
    EXPECT_THROW(gf::sq_unitary(1.5, 0.0, 6), gf::TruncationError);
}

TEST(Uhlmann, IdenticalInputs) {
    const gf::FockDensity a = gf::family_dm(gf::MtsParams{0.4, 0.1, 0.9, 0.2}, 20);
    EXPECT_NEAR(gf::uhlmann_fidelity(a, a), 1.0, 10 * a.trace_deficit + 1e-10);
}

TEST(Uhlmann, PureVersusMixed) {
    const gf::FockDensity vac = gf::thermal_dm(0, 0, 20);
    const gf::FockDensity mixed = gf::family_dm(gf::MtsParams{0.4, 0.1, 0.9, 0.2}, 20);
    EXPECT_NEAR(gf::uhlmann_fidelity(vac, mixed), mixed.rho(0, 0).real(), 1e-10);
    EXPECT_NEAR(gf::fock_overlap(vac, mixed), mixed.rho(0, 0).real(), 1e-12);
}

TEST(Uhlmann, MtsMatchesClosedForm) {
    const gf::FamilyPoint a = gf::MtsParams{0.5, 0.1, 1.0, 0.3};
    const gf::FamilyPoint b = gf::MtsParams{0.2, 0.4, 2.0, -1.0};
    const double f = gf::uhlmann_fidelity(gf::family_dm(a, 25), gf::family_dm(b, 25));
    EXPECT_NEAR(f, gf::fidelity_special(a, b), 1e-6);
}

TEST(Uhlmann, StsMatchesClosedForm) {
    const gf::FamilyPoint a = gf::StsParams{0.3, 0.1, 0.3, 0.3};
    const gf::FamilyPoint b = gf::StsParams{0.1, 0.2, 0.2, -0.5};
    const double f = gf::uhlmann_fidelity(gf::family_dm(a, 30), gf::family_dm(b, 30));
    EXPECT_NEAR(f, gf::fidelity_special(a, b), 1e-4);
}

TEST(SpectralFidelity, Anchors) {
    EXPECT_NEAR(gf::spectral_fidelity_ts(0, 0, 1, 1, 200), 0.25, 1e-10);
    EXPECT_NEAR(gf::spectral_fidelity_ts(0.6, 1.3, 0.6, 1.3, 400), 1.0, 1e-10);
    EXPECT_NEAR(gf::spectral_fidelity_ts(0.6, 1.3, 0.2, 2.0, 400), gf::fidelity_ts(0.6, 1.3, 0.2, 2.0),
                1e-10);
}
