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

#include "gaussfisher/errors.hpp"
#include "gaussfisher/info_geometry.hpp"
#include "gaussfisher/special_states.hpp"

namespace gf = gaussfisher;
using std::numbers::pi;

TEST(QfiClosed, MtsAnchor) {
    const gf::QfiDiagonal h = gf::qfi_closed(gf::MtsParams{2, 1, pi / 2, 0});
    EXPECT_NEAR(h.h[0], 1.0 / 6.0, 1e-14);
    EXPECT_NEAR(h.h[1], 1.0 / 2.0, 1e-14);
    EXPECT_NEAR(h.h[2], 1.0 / 7.0, 1e-14);
    EXPECT_NEAR(h.h[3], 1.0 / 7.0, 1e-14);
    EXPECT_EQ(h.names[2], "theta");
}

TEST(QfiClosed, MtsDegenerateAngles) {
    const gf::QfiDiagonal h = gf::qfi_closed(gf::MtsParams{0.8, 0.8, 1.1, 0.2});
    EXPECT_EQ(h.h[2], 0.0);
    EXPECT_EQ(h.h[3], 0.0);
}

TEST(QfiClosed, StsVacuumAnchor) {
    for (double r : {0.1, 0.5, 1.2}) {
        const gf::QfiDiagonal h = gf::qfi_closed(gf::StsParams{0, 0, r, 0});
        EXPECT_NEAR(h.h[2], 1.0, 1e-14);
        EXPECT_NEAR(h.h[3], std::pow(std::sinh(2 * r), 2), 1e-13);
    }
}

TEST(QfiClosed, StsSymmetricUnderModeSwap) {
    const gf::QfiDiagonal a = gf::qfi_closed(gf::StsParams{1.3, 0.4, 0.7, 0});
    const gf::QfiDiagonal b = gf::qfi_closed(gf::StsParams{0.4, 1.3, 0.7, 0});
    EXPECT_NEAR(a.h[0], b.h[1], 1e-14);
    EXPECT_NEAR(a.h[2], b.h[2], 1e-14);
    EXPECT_NEAR(a.h[3], b.h[3], 1e-14);
}

TEST(TsMetric, AnchorsAndBoundary) {
    const gf::MetricMatrix g = gf::ts_metric(1, 1);
    EXPECT_NEAR(g.g(0, 0), 0.125, 1e-15);
    EXPECT_NEAR(g.g(1, 1), 0.125, 1e-15);
    EXPECT_EQ(g.g(0, 1), 0.0);
    EXPECT_NEAR(g.to_qfi().g(0, 0), 0.5, 1e-15);
    EXPECT_THROW(gf::ts_metric(0, 1), gf::BoundaryError);
    EXPECT_TRUE(gf::ts_metric_flat(0.3, 2.0).g.isApprox(Eigen::Matrix2d::Identity()));
}

TEST(WarpedMetric, ThermalBlockMatchesTsMetric) {
    const gf::MetricMatrix w = gf::warped_metric(gf::MtsParams{2, 1, 0.9, 0.3});
    const gf::MetricMatrix t = gf::ts_metric(2, 1);
    EXPECT_NEAR(w.g(0, 0), t.g(0, 0), 1e-15);
    EXPECT_NEAR(w.g(1, 1), t.g(1, 1), 1e-15);
    EXPECT_EQ(gf::warping_function(gf::FamilyTag::MTS, 0.8, 0.8), 0.0);
}

TEST(NumericMetric, MtsMatchesClosedForm) {
    const gf::FamilyPoint p = gf::MtsParams{2, 1, pi / 2, 0.3};
    const gf::MetricMatrix g = gf::numeric_metric(p);
    const gf::QfiDiagonal h = gf::qfi_closed(p);
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(g.g(i, i) / (0.25 * h.h[i]), 1.0, 1e-5) << i;
        for (int j = 0; j < 4; ++j)
            if (i != j) EXPECT_LT(std::abs(g.g(i, j)), 1e-6);
    }
}

TEST(NumericMetric, StsMatchesClosedForm) {
    const gf::FamilyPoint p = gf::StsParams{1, 0.5, 0.8, -0.4};
    const gf::MetricMatrix g = gf::numeric_metric(p);
    const gf::QfiDiagonal h = gf::qfi_closed(p);
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(g.g(i, i) / (0.25 * h.h[i]), 1.0, 1e-5) << i;
        for (int j = 0; j < 4; ++j)
            if (i != j) EXPECT_LT(std::abs(g.g(i, j)), 1e-6);
    }
}

TEST(NumericMetric, RefusesDegenerateOrBoundary) {
    EXPECT_THROW(gf::numeric_metric(gf::MtsParams{1, 1, 1, 0}), gf::DegeneracyError);
    EXPECT_THROW(gf::numeric_metric(gf::StsParams{1e-5, 0.5, 0.5, 0}), gf::DomainError);
}

TEST(Jeffreys, AnchorsAndThreshold) {
    EXPECT_EQ(gf::jeffreys_prior(gf::MtsParams{0.5, 0.5, 1.0, 0}), 0.0);
    EXPECT_THROW(gf::jeffreys_prior(gf::StsParams{0, 0.5, 1.0, 0}), gf::BoundaryError);
    const double n1 = 0.7, n2 = 1.4;
    const double rs = gf::separability_threshold(n1, n2);
    EXPECT_NEAR(gf::jeffreys_prior(gf::StsParams{n1, n2, rs, 0}) / (2.0 / std::cosh(2 * rs)), 1.0,
                1e-12);
    const gf::FamilyPoint p = gf::StsParams{n1, n2, 0.9, 0};
    EXPECT_NEAR(gf::jeffreys_prior(p) / gf::jeffreys_sts_threshold_form(n1, n2, 0.9), 1.0, 1e-12);
    EXPECT_NEAR(gf::volume_density(p), gf::jeffreys_prior(p) / 16.0, 1e-15);
}

TEST(CramerRao, Scaling) {
    const gf::QfiDiagonal h = gf::qfi_closed(gf::MtsParams{2, 1, pi / 2, 0});
    const auto one = gf::cramer_rao(h, 1), hundred = gf::cramer_rao(h, 100),
               twice = gf::cramer_rao(h, 200);
    EXPECT_NEAR(one[2], 7.0, 1e-12);
    EXPECT_NEAR(hundred[0], 0.06, 1e-14);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(twice[i], 0.5 * hundred[i], 1e-15);
    EXPECT_THROW(gf::cramer_rao(h, 0), gf::ValidationError);
    EXPECT_THROW(gf::cramer_rao(gf::qfi_closed(gf::MtsParams{1, 1, 1, 0}), 1),
                 gf::DegeneracyError);
}

TEST(BallVolume, Expansion) {
    EXPECT_NEAR(gf::unit_ball_volume(4), pi * pi / 2, 1e-14);
    EXPECT_NEAR(gf::unit_ball_volume(2), pi, 1e-14);
    EXPECT_NEAR(gf::ball_volume_expansion(4, 0.01, 0.0), gf::unit_ball_volume(4) * 1e-8, 1e-22);
    EXPECT_LT(gf::ball_volume_expansion(4, 0.01, 5.0), gf::ball_volume_expansion(4, 0.01, -5.0));
}
