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

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gaussfisher/special_states.hpp"

namespace gaussfisher {

enum class MetricConvention { Bures, QFI };

/// Diagonal QFI components on the MTS chart (n1, n2, theta, phi) or the STS
/// chart (n1, n2, 2r, phi).
struct QfiDiagonal {
    FamilyTag chart = FamilyTag::MTS;
    std::array<double, 4> h{};
    std::array<std::string, 4> names{};
};

struct MetricMatrix {
    Eigen::MatrixXd g;
    MetricConvention convention = MetricConvention::Bures;
    std::vector<std::string> coordinates;

    MetricMatrix to_qfi() const;
    MetricMatrix to_bures() const;
};

std::array<std::string, 4> chart_names(FamilyTag tag);

QfiDiagonal qfi_closed(const FamilyPoint &p);
MetricMatrix qfi_metric(const QfiDiagonal &h, MetricConvention convention);

/// Bures metric of the thermal base: diag(1/(4 n1(n1+1)), 1/(4 n2(n2+1))).
MetricMatrix ts_metric(double n1, double n2);

/// The thermal metric pulled back through n = sinh^2(x); the identity.
MetricMatrix ts_metric_flat(double x1, double x2);

/// Warping function 1/2 sqrt(H_theta) (MTS) or 1/2 sqrt(H_2r) (STS).
double warping_function(FamilyTag tag, double n1, double n2);

/// g_B (+) f^2 g_F with the round sphere (MTS) or the unit hyperboloid (STS)
/// as fibre. Bures convention.
MetricMatrix warped_metric(const FamilyPoint &p);

struct NumericMetricOptions {
    double step = 1e-3;
    double derivative_tol = 1e-6;
};

/// Bures metric from second derivatives of sqrt(F) along rays, with cross
/// terms by polarization. Uses the general CM fidelity.
MetricMatrix numeric_metric(const FamilyPoint &p, const NumericMetricOptions &opt = {});

/// sqrt of the product of the QFI components (2 components for TS).
double jeffreys_prior(const FamilyPoint &p);
/// Bures volume density, Jeffreys / 16 on the four-parameter charts.
double volume_density(const FamilyPoint &p);
/// 4 sinh(2r) / sinh(4 r_s).
double jeffreys_sts_threshold_form(double n1, double n2, double r);

/// 1 / (N H) per coordinate.
std::array<double, 4> cramer_rao(const QfiDiagonal &h, long long n_measurements);

double unit_ball_volume(int n);
/// V_n(1) eps^n - V_n(1) R eps^(n+2) / (n + 2).
double ball_volume_expansion(int n, double eps, double r_scalar);

} // namespace gaussfisher
