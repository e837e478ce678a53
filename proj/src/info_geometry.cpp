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

#include "gaussfisher/info_geometry.hpp"

#include <cmath>
#include <numbers>

#include "gaussfisher/errors.hpp"

namespace gaussfisher {

namespace {

constexpr double kPi = std::numbers::pi;

double thermal_qfi(double n) { return 1.0 / (n * (n + 1.0)); }

double angular_qfi(FamilyTag tag, double n1, double n2) {
    const double d = 2.0 * n1 * n2 + n1 + n2;
    if (tag == FamilyTag::MTS) {
        const double num = (n1 - n2) * (n1 - n2);
        return num == 0.0 ? 0.0 : num / d;
    }
    const double s = n1 + n2 + 1.0;
    return s * s / (d + 1.0);
}

std::vector<std::string> names_vector(FamilyTag tag) {
    if (tag == FamilyTag::TS) return {"n1", "n2"};
    const auto a = chart_names(tag);
    return {a.begin(), a.end()};
}

void require_positive_occupancy(double n1, double n2, const char *what) {
    if (!(n1 > 0.0) || !(n2 > 0.0)) {
        throw BoundaryError(std::string(what) + " diverges at zero occupancy (n1 = " +
                            std::to_string(n1) + ", n2 = " + std::to_string(n2) + ")");
    }
}

bool chart_in_domain(FamilyTag tag, const Eigen::VectorXd &x) {
    if (x[0] < 0.0 || x[1] < 0.0) return false;
    if (tag == FamilyTag::TS) return true;
    if (x[3] <= -kPi || x[3] > kPi) return false;
    if (tag == FamilyTag::MTS) return x[2] >= 0.0 && x[2] < kPi;
    return x[2] >= 0.0;
}

} // namespace

MetricMatrix MetricMatrix::to_qfi() const {
    if (convention == MetricConvention::QFI) return *this;
    return {4.0 * g, MetricConvention::QFI, coordinates};
}

MetricMatrix MetricMatrix::to_bures() const {
    if (convention == MetricConvention::Bures) return *this;
    return {0.25 * g, MetricConvention::Bures, coordinates};
}

std::array<std::string, 4> chart_names(FamilyTag tag) {
    switch (tag) {
    case FamilyTag::MTS:
        return {"n1", "n2", "theta", "phi"};
    case FamilyTag::STS:
        return {"n1", "n2", "2r", "phi"};
    case FamilyTag::TS:
        break;
    }
    throw ValidationError("the TS chart is two-dimensional; use ts_metric");
}

QfiDiagonal qfi_closed(const FamilyPoint &p) {
    const FamilyTag tag = p.tag();
    if (tag == FamilyTag::TS) {
        throw ValidationError("qfi_closed covers the four-parameter MTS and STS charts; "
                              "use ts_metric for TS");
    }
    const Eigen::VectorXd x = p.chart();
    const double ha = angular_qfi(tag, x[0], x[1]);
    const double w = tag == FamilyTag::MTS ? std::sin(x[2]) : std::sinh(x[2]);
    QfiDiagonal out;
    out.chart = tag;
    out.names = chart_names(tag);
    out.h = {thermal_qfi(x[0]), thermal_qfi(x[1]), ha, ha * w * w};
    return out;
}

MetricMatrix qfi_metric(const QfiDiagonal &h, MetricConvention convention) {
    Eigen::Vector4d d(h.h[0], h.h[1], h.h[2], h.h[3]);
    if (convention == MetricConvention::Bures) d *= 0.25;
    return {Eigen::MatrixXd(d.asDiagonal()), convention, {h.names.begin(), h.names.end()}};
}

MetricMatrix ts_metric(double n1, double n2) {
    require_positive_occupancy(n1, n2, "thermal metric");
    Eigen::Vector2d d(0.25 * thermal_qfi(n1), 0.25 * thermal_qfi(n2));
    return {Eigen::MatrixXd(d.asDiagonal()), MetricConvention::Bures, {"n1", "n2"}};
}

MetricMatrix ts_metric_flat(double x1, double x2) {
    const double s1 = std::sinh(x1), s2 = std::sinh(x2);
    MetricMatrix g = ts_metric(s1 * s1, s2 * s2);
    // dn/dx = sinh(2x)
    Eigen::Matrix2d jac = Eigen::Vector2d(std::sinh(2.0 * x1), std::sinh(2.0 * x2)).asDiagonal();
    g.g = jac.transpose() * g.g * jac;
    g.coordinates = {"x1", "x2"};
    return g;
}

double warping_function(FamilyTag tag, double n1, double n2) {
    if (tag == FamilyTag::TS) {
        throw ValidationError("the TS manifold is not warped");
    }
    return 0.5 * std::sqrt(angular_qfi(tag, n1, n2));
}

MetricMatrix warped_metric(const FamilyPoint &p) {
    const FamilyTag tag = p.tag();
    const Eigen::VectorXd x = p.chart();
    const MetricMatrix base = ts_metric(x[0], x[1]);
    const double f = warping_function(tag, x[0], x[1]);
    const double w = tag == FamilyTag::MTS ? std::sin(x[2]) : std::sinh(x[2]);

    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(4, 4);
    g.topLeftCorner(2, 2) = base.g;
    g(2, 2) = f * f;
    g(3, 3) = f * f * w * w;
    return {g, MetricConvention::Bures, names_vector(tag)};
}

MetricMatrix numeric_metric(const FamilyPoint &p, const NumericMetricOptions &opt) {
    const FamilyTag tag = p.tag();
    const Eigen::VectorXd x0 = p.chart();
    const int dim = static_cast<int>(x0.size());

    if (tag == FamilyTag::MTS && std::abs(x0[0] - x0[1]) < 1e-3) {
        throw DegeneracyError("MTS point with |n1 - n2| < 1e-3: the theta and phi directions "
                              "carry no Fisher information, numeric metric refused");
    }

    Eigen::VectorXd h(dim);
    for (int a = 0; a < dim; ++a) h[a] = opt.step * std::max(1.0, std::abs(x0[a]));

    const TwoModeGaussian ref = family_state(p);
    auto root_fidelity = [&](const Eigen::VectorXd &x) {
        if (!chart_in_domain(tag, x)) {
            throw DomainError("finite-difference stencil leaves the " + to_string(tag) +
                              " chart domain; move the point inward or reduce the step");
        }
        const TwoModeGaussian s = family_state(FamilyPoint::from_chart(tag, x));
        return std::sqrt(fidelity_two_mode(ref, s).fidelity);
    };

    const double f0 = root_fidelity(x0);
    if (std::abs(f0 - 1.0) > 1e-12) {
        throw NumericalConsistencyError("F(xi, xi) = " + std::to_string(f0 * f0) + " != 1");
    }

    // -d^2/dt^2 sqrt F(x0 + t w) at t = 0, five-point stencil with unit t-step
    auto quad = [&](const Eigen::VectorXd &w) {
        const double fp1 = root_fidelity(x0 + w), fm1 = root_fidelity(x0 - w);
        const double fp2 = root_fidelity(x0 + 2.0 * w), fm2 = root_fidelity(x0 - 2.0 * w);
        const double slope = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * w.norm());
        if (std::abs(slope) > opt.derivative_tol) {
            throw NumericalConsistencyError("first derivative of sqrt F at the reference point "
                                            "is " + std::to_string(slope) + ", expected 0");
        }
        return -(-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / 12.0;
    };

    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
    for (int a = 0; a < dim; ++a) {
        Eigen::VectorXd ea = Eigen::VectorXd::Zero(dim);
        ea[a] = h[a];
        g(a, a) = quad(ea) / (h[a] * h[a]);
        for (int b = 0; b < a; ++b) {
            Eigen::VectorXd eb = Eigen::VectorXd::Zero(dim);
            eb[b] = h[b];
            g(a, b) = g(b, a) = (quad(ea + eb) - quad(ea - eb)) / (4.0 * h[a] * h[b]);
        }
    }
    return {g, MetricConvention::Bures, names_vector(tag)};
}

double jeffreys_prior(const FamilyPoint &p) {
    require_positive_occupancy(p.n1(), p.n2(), "Jeffreys prior");
    if (p.tag() == FamilyTag::TS) {
        return std::sqrt(thermal_qfi(p.n1()) * thermal_qfi(p.n2()));
    }
    if (p.degenerate()) return 0.0;
    const QfiDiagonal q = qfi_closed(p);
    return std::sqrt(q.h[0] * q.h[1] * q.h[2] * q.h[3]);
}

double volume_density(const FamilyPoint &p) {
    return jeffreys_prior(p) / std::pow(2.0, chart_dimension(p.tag()));
}

double jeffreys_sts_threshold_form(double n1, double n2, double r) {
    require_positive_occupancy(n1, n2, "Jeffreys prior");
    return 4.0 * std::sinh(2.0 * r) / std::sinh(4.0 * separability_threshold(n1, n2));
}

std::array<double, 4> cramer_rao(const QfiDiagonal &h, long long n_measurements) {
    if (n_measurements < 1) {
        throw ValidationError("the number of measurements must be a positive integer");
    }
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(h.h[i] > 0.0)) {
            throw DegeneracyError("QFI component H_" + h.names[i] +
                                  " vanishes: parameter is not identifiable here");
        }
        out[i] = 1.0 / (static_cast<double>(n_measurements) * h.h[i]);
    }
    return out;
}

double unit_ball_volume(int n) {
    if (n < 1) throw ValidationError("ball dimension must be >= 1");
    return std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double ball_volume_expansion(int n, double eps, double r_scalar) {
    if (!(eps > 0.0)) throw ValidationError("ball radius must be positive");
    const double v = unit_ball_volume(n);
    return v * std::pow(eps, n) - v * r_scalar * std::pow(eps, n + 2) / (n + 2);
}

} // namespace gaussfisher
