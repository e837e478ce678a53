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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gaussfisher/special_states.hpp"

namespace gaussfisher {

using Point = Eigen::VectorXd;
/// d1[m] = d g / d x^m
using MetricGradient = std::vector<Eigen::MatrixXd>;
/// d2[m][n] = d^2 g / d x^m d x^n
using MetricHessian = std::vector<std::vector<Eigen::MatrixXd>>;

struct MetricField {
    int dim = 0;
    std::vector<std::string> names;
    std::function<Eigen::MatrixXd(const Point &)> metric;
    std::function<MetricGradient(const Point &)> d1;  ///< optional
    std::function<MetricHessian(const Point &)> d2;   ///< optional
    std::function<void(const Point &)> domain_check;  ///< optional, throws DomainError
    double step = 1e-3;

    /// Same metric with the analytic partials removed, so every derivative
    /// is taken by finite differences.
    MetricField numeric() const;
};

MetricField euclidean_field(int dim);
/// d theta^2 + sin^2 theta d phi^2
MetricField sphere_field();
/// d tau^2 + sinh^2 tau d phi^2
MetricField hyperboloid_field();
/// Bures metric of the thermal base on (n1, n2).
MetricField ts_field();
/// Bures metric of the MTS chart (n1, n2, theta, phi) or STS chart
/// (n1, n2, 2r, phi), with hand-differentiated partials.
MetricField family_field(FamilyTag tag);
/// Block-diagonal product metric A x B.
MetricField product_field(const MetricField &a, const MetricField &b);

/// gamma[i](j, k) = Gamma^i_{jk}
using Christoffel = std::vector<Eigen::MatrixXd>;

Christoffel christoffel(const MetricField &field, const Point &x);

enum class CurvatureMethod { Closed, Pipeline, Warped };
std::string to_string(CurvatureMethod m);

struct CurvatureReport {
    Point point;
    double scalar_r = 0.0;
    CurvatureMethod method = CurvatureMethod::Closed;
    std::map<std::string, double> residuals;
};

CurvatureReport scalar_curvature_pipeline(const MetricField &field, const Point &x);

/// Closed-form scalar curvature of the MTS or STS manifold (0 for TS).
/// Returns +inf for MTS at n1 = n2 = 0.
double scalar_closed(FamilyTag tag, double n1, double n2);

enum class SectionKind { Symmetric, Perpendicular, Edge };
std::string to_string(SectionKind k);
SectionKind parse_section(const std::string &name);

/// The one-variable restrictions of the closed form:
///   symmetric      n1 = n2 = s
///   perpendicular  MTS: n1 = s, n2 = 1 - s;  STS: n1 = s, n2 = 2 n_s - s
///   edge           n1 = s, n2 = 0
double section_curve(FamilyTag tag, SectionKind kind, double s);
/// (n1, n2) on the curve at parameter s.
Eigen::Vector2d section_locus(FamilyTag tag, SectionKind kind, double s);
std::pair<double, double> section_domain(FamilyTag tag, SectionKind kind);

/// sqrt(1.15) - 1/2, the saddle point of the STS curvature.
double sts_saddle_occupancy();

/// Warped-product formula with analytic log-derivatives of H_theta or H_2r.
double scalar_warped(FamilyTag tag, double n1, double n2);

/// (1 / sqrt det g) d_j (sqrt det g g^{jk} d_k v), by finite differences.
double laplace_beltrami(const MetricField &field, const std::function<double(const Point &)> &v,
                        const Point &x);

/// -(8/3) Lap_B(u) / u +- 8/H with u = f^(3/2), the Laplacian taken
/// numerically on the thermal base.
double scalar_warped_laplacian(FamilyTag tag, double n1, double n2);

} // namespace gaussfisher
