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

#include "gaussfisher/sampling.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace gaussfisher {

double uniform(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

namespace {

Mat4 local(Rng &rng, double max_squeeze) {
    Mat4 s = Mat4::Zero();
    for (int m = 0; m < 2; ++m) {
        const double z = uniform(rng, -max_squeeze, max_squeeze);
        const Mat2 sq = Eigen::Vector2d(std::exp(z), std::exp(-z)).asDiagonal();
        const double a = uniform(rng, -std::numbers::pi, std::numbers::pi);
        const double b = uniform(rng, -std::numbers::pi, std::numbers::pi);
        s.block<2, 2>(2 * m, 2 * m) = rotation2(a) * sq * rotation2(b);
    }
    return s;
}

void draw_occupancies(Rng &rng, const DrawBox &box, double &n1, double &n2) {
    do {
        n1 = uniform(rng, box.n_lo, box.n_hi);
        n2 = uniform(rng, box.n_lo, box.n_hi);
    } while (std::abs(n1 - n2) < box.min_gap);
    if (box.ordered && n1 < n2) std::swap(n1, n2);
}

} // namespace

Mat4 random_symplectic(Rng &rng, double max_squeeze) {
    const double pi = std::numbers::pi;
    return local(rng, max_squeeze) * bs_symplectic(uniform(rng, 0.0, pi), uniform(rng, -pi, pi)) *
           sq_symplectic(uniform(rng, 0.0, max_squeeze), uniform(rng, -pi, pi)) *
           local(rng, max_squeeze);
}

CovMatrix random_physical_cov(Rng &rng, double n_max, double pure_fraction) {
    const bool pure = uniform(rng, 0.0, 1.0) < pure_fraction;
    const double n1 = pure ? 0.0 : uniform(rng, 0.0, n_max);
    const double n2 = pure ? 0.0 : uniform(rng, 0.0, n_max);
    const Mat4 s = random_symplectic(rng);
    const Mat4 v = s * thermal_cov(TsParams{n1, n2}).matrix() * s.transpose();
    return CovMatrix(0.5 * (v + v.transpose()));
}

TwoModeGaussian random_state(Rng &rng, double n_max, double mean_scale) {
    std::normal_distribution<double> normal(0.0, mean_scale);
    QuadratureVector mean(normal(rng), normal(rng), normal(rng), normal(rng));
    return TwoModeGaussian{mean, random_physical_cov(rng, n_max)};
}

MtsParams random_mts(Rng &rng, const DrawBox &box) {
    MtsParams p;
    draw_occupancies(rng, box, p.n1, p.n2);
    p.theta = uniform(rng, box.x_lo, std::min(box.x_hi, std::nextafter(std::numbers::pi, 0.0)));
    p.phi = uniform(rng, -box.phi_abs, box.phi_abs);
    return p;
}

StsParams random_sts(Rng &rng, const DrawBox &box) {
    StsParams p;
    draw_occupancies(rng, box, p.n1, p.n2);
    p.r = uniform(rng, box.x_lo, box.x_hi);
    p.phi = uniform(rng, -box.phi_abs, box.phi_abs);
    return p;
}

FamilyPoint random_point(Rng &rng, FamilyTag tag, const DrawBox &box) {
    switch (tag) {
    case FamilyTag::MTS:
        return random_mts(rng, box);
    case FamilyTag::STS:
        return random_sts(rng, box);
    case FamilyTag::TS:
        break;
    }
    double n1, n2;
    draw_occupancies(rng, box, n1, n2);
    return TsParams{n1, n2};
}

} // namespace gaussfisher
