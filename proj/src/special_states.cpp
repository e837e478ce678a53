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

#include "gaussfisher/special_states.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "gaussfisher/errors.hpp"

namespace gaussfisher {

namespace {

constexpr double kPi = std::numbers::pi;

void check_occupancy(double n, const char *name) {
    if (!std::isfinite(n) || n < 0.0) {
        throw ValidationError(std::string(name) + " must be a finite number >= 0, got " +
                              std::to_string(n));
    }
}

void check_phi(double phi) {
    if (!std::isfinite(phi) || phi <= -kPi || phi > kPi) {
        throw ValidationError("phi must lie in (-pi, pi], got " + std::to_string(phi));
    }
}

Mat2 sigma3() { return Mat2{{1.0, 0.0}, {0.0, -1.0}}; }
Mat2 sigma1() { return Mat2{{0.0, 1.0}, {1.0, 0.0}}; }

} // namespace

std::string to_string(FamilyTag tag) {
    switch (tag) {
    case FamilyTag::TS:
        return "TS";
    case FamilyTag::MTS:
        return "MTS";
    case FamilyTag::STS:
        return "STS";
    }
    return "?";
}

FamilyTag parse_family(const std::string &name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (up == "TS") return FamilyTag::TS;
    if (up == "MTS") return FamilyTag::MTS;
    if (up == "STS") return FamilyTag::STS;
    throw ValidationError("unknown family '" + name + "' (expected TS, MTS or STS)");
}

void validate(const TsParams &p) {
    check_occupancy(p.n1, "n1");
    check_occupancy(p.n2, "n2");
}

void validate(const MtsParams &p) {
    check_occupancy(p.n1, "n1");
    check_occupancy(p.n2, "n2");
    if (!std::isfinite(p.theta) || p.theta < 0.0 || p.theta >= kPi) {
        throw ValidationError("theta must lie in [0, pi), got " + std::to_string(p.theta));
    }
    check_phi(p.phi);
}

void validate(const StsParams &p) {
    check_occupancy(p.n1, "n1");
    check_occupancy(p.n2, "n2");
    if (!std::isfinite(p.r) || p.r < 0.0) {
        throw ValidationError("r must be a finite number >= 0, got " + std::to_string(p.r));
    }
    check_phi(p.phi);
}

double FamilyPoint::n1() const {
    return std::visit([](const auto &p) { return p.n1; }, params_);
}

double FamilyPoint::n2() const {
    return std::visit([](const auto &p) { return p.n2; }, params_);
}

Eigen::VectorXd FamilyPoint::chart() const {
    switch (tag()) {
    case FamilyTag::TS: {
        const auto &p = std::get<TsParams>(params_);
        return Eigen::Vector2d(p.n1, p.n2);
    }
    case FamilyTag::MTS: {
        const auto &p = std::get<MtsParams>(params_);
        return Eigen::Vector4d(p.n1, p.n2, p.theta, p.phi);
    }
    case FamilyTag::STS: {
        const auto &p = std::get<StsParams>(params_);
        return Eigen::Vector4d(p.n1, p.n2, 2.0 * p.r, p.phi);
    }
    }
    return {};
}

FamilyPoint FamilyPoint::from_chart(FamilyTag tag, const Eigen::VectorXd &x) {
    if (x.size() != chart_dimension(tag)) {
        throw ValidationError("chart vector has dimension " + std::to_string(x.size()) +
                              ", " + to_string(tag) + " needs " +
                              std::to_string(chart_dimension(tag)));
    }
    switch (tag) {
    case FamilyTag::TS:
        return TsParams{x[0], x[1]};
    case FamilyTag::MTS:
        return MtsParams{x[0], x[1], x[2], x[3]};
    case FamilyTag::STS:
        return StsParams{x[0], x[1], 0.5 * x[2], x[3]};
    }
    throw ValidationError("unknown family tag");
}

bool FamilyPoint::degenerate() const {
    return tag() == FamilyTag::MTS && n1() == n2();
}

bool operator==(const FamilyPoint &a, const FamilyPoint &b) {
    return a.tag() == b.tag() && a.chart() == b.chart();
}

int chart_dimension(FamilyTag tag) { return tag == FamilyTag::TS ? 2 : 4; }

double occupancy_from_eta(double eta) {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw ValidationError("eta must be positive, got " + std::to_string(eta));
    }
    return 1.0 / std::expm1(eta);
}

double eta_from_occupancy(double n) {
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw ValidationError("mean occupancy must be positive, got " + std::to_string(n));
    }
    return std::log1p(1.0 / n);
}

double mean_occupancy_conversion(double x, OccupancyDirection dir) {
    return dir == OccupancyDirection::EtaToOccupancy ? occupancy_from_eta(x)
                                                     : eta_from_occupancy(x);
}

CovMatrix thermal_cov(const TsParams &p) {
    validate(p);
    Vec4 diag(p.n1 + 0.5, p.n1 + 0.5, p.n2 + 0.5, p.n2 + 0.5);
    return CovMatrix(Mat4(diag.asDiagonal()));
}

Mat2 rotation2(double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    return Mat2{{c, -s}, {s, c}};
}

Mat4 bs_symplectic(double theta, double phi) {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    Mat4 m;
    m.topLeftCorner<2, 2>() = c * Mat2::Identity();
    m.topRightCorner<2, 2>() = -s * rotation2(-phi);
    m.bottomLeftCorner<2, 2>() = s * rotation2(phi);
    m.bottomRightCorner<2, 2>() = c * Mat2::Identity();
    return m;
}

Mat4 sq_symplectic(double r, double phi) {
    const Mat2 sa = std::cosh(r) * Mat2::Identity();
    const Mat2 sb = std::sinh(r) * (std::cos(phi) * sigma3() + std::sin(phi) * sigma1());
    Mat4 m;
    m << sa, sb, sb, sa;
    return m;
}

CovMatrix family_cov(const FamilyPoint &p) {
    const Mat4 vt = thermal_cov(TsParams{p.n1(), p.n2()}).matrix();
    Mat4 s = Mat4::Identity();
    if (const auto *m = std::get_if<MtsParams>(&p.params())) {
        s = bs_symplectic(m->theta, m->phi);
    } else if (const auto *q = std::get_if<StsParams>(&p.params())) {
        s = sq_symplectic(q->r, q->phi);
    }
    Mat4 v = s * vt * s.transpose();
    return CovMatrix(0.5 * (v + v.transpose()));
}

TwoModeGaussian family_state(const FamilyPoint &p) {
    return TwoModeGaussian{QuadratureVector{}, family_cov(p)};
}

StandardForm standard_form(const CovMatrix &cov, FamilyTag tag) {
    const Mat2 v1 = cov.mode1(), v2 = cov.mode2(), c = cov.correlation();
    StandardForm sf;
    sf.b1 = 0.5 * v1.trace();
    sf.b2 = 0.5 * v2.trace();

    double residue = std::max((v1 - sf.b1 * Mat2::Identity()).cwiseAbs().maxCoeff(),
                              (v2 - sf.b2 * Mat2::Identity()).cwiseAbs().maxCoeff());
    switch (tag) {
    case FamilyTag::TS:
        residue = std::max(residue, c.cwiseAbs().maxCoeff());
        break;
    case FamilyTag::MTS:
        // c R(-phi): equal diagonal, antisymmetric off-diagonal
        residue = std::max({residue, std::abs(c(0, 0) - c(1, 1)), std::abs(c(0, 1) + c(1, 0))});
        sf.c = std::hypot(c(0, 0), c(0, 1));
        sf.d = sf.c;
        break;
    case FamilyTag::STS:
        // c (cos phi sigma3 + sin phi sigma1): traceless and symmetric
        residue = std::max({residue, std::abs(c(0, 0) + c(1, 1)), std::abs(c(0, 1) - c(1, 0))});
        sf.c = std::hypot(c(0, 0), c(0, 1));
        sf.d = -sf.c;
        break;
    }
    if (residue > 1e-9) {
        throw ValidationError("CM does not have the " + to_string(tag) +
                              " block shape (residue " + std::to_string(residue) + ")");
    }
    return sf;
}

double separability_threshold(double n1, double n2) {
    check_occupancy(n1, "n1");
    check_occupancy(n2, "n2");
    return std::asinh(std::sqrt(n1 * n2 / (n1 + n2 + 1.0)));
}

} // namespace gaussfisher
