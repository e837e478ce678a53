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

#include "gaussfisher/closed_form.hpp"

#include <cmath>

#include "gaussfisher/errors.hpp"

namespace gaussfisher {

namespace {

double sq(double x) { return x * x; }

double k_plus_thermal(double a1, double a2, double b1, double b2) {
    return 2.0 * sq(std::sqrt(a1 * a2 * b1 * b2) +
                    std::sqrt((a1 + 1) * (a2 + 1) * (b1 + 1) * (b2 + 1)));
}

double k_minus_thermal(double a1, double a2, double b1, double b2) {
    return 2.0 * sq(std::sqrt(a1 * (a2 + 1) * b1 * (b2 + 1)) +
                    std::sqrt((a1 + 1) * a2 * (b1 + 1) * b2));
}

} // namespace

double q_affinity(double x, double y) {
    if (!(x >= 0.0) || !(y >= 0.0)) {
        throw ValidationError("Q(x, y) needs x, y >= 0");
    }
    // Equal to (x + y + 1) / (sqrt((x+1)(y+1)) + sqrt(xy)), free of cancellation.
    return (x + y + 1.0) / (std::sqrt((x + 1.0) * (y + 1.0)) + std::sqrt(x * y));
}

double fidelity_ts(double n1a, double n2a, double n1b, double n2b) {
    return 1.0 / sq(q_affinity(n1a, n1b) * q_affinity(n2a, n2b));
}

PairInvariants pair_invariants_ts(const TsParams &a, const TsParams &b) {
    validate(a);
    validate(b);
    return {k_plus_thermal(a.n1, a.n2, b.n1, b.n2), k_minus_thermal(a.n1, a.n2, b.n1, b.n2),
            FamilyTag::TS};
}

PairInvariants pair_invariants_mts(const MtsParams &a, const MtsParams &b) {
    validate(a);
    validate(b);
    const double angular = 1.0 - std::cos(a.theta - b.theta) +
                           std::sin(a.theta) * std::sin(b.theta) * (1.0 - std::cos(a.phi - b.phi));
    PairInvariants out;
    out.tag = FamilyTag::MTS;
    out.k_plus = k_plus_thermal(a.n1, a.n2, b.n1, b.n2);
    out.k_minus = k_minus_thermal(a.n1, a.n2, b.n1, b.n2) -
                  (a.n1 - a.n2) * (b.n1 - b.n2) * angular;
    out.k_minus = std::max(out.k_minus, 0.0);
    return out;
}

PairInvariants pair_invariants_sts(const StsParams &a, const StsParams &b) {
    validate(a);
    validate(b);
    const double dr = 2.0 * (a.r - b.r);
    // cosh(x) - 1 = 2 sinh^2(x/2) keeps small squeeze differences accurate
    const double device = 2.0 * sq(std::sinh(0.5 * dr)) +
                          std::sinh(2.0 * a.r) * std::sinh(2.0 * b.r) *
                              (1.0 - std::cos(a.phi - b.phi));
    PairInvariants out;
    out.tag = FamilyTag::STS;
    out.k_plus = k_plus_thermal(a.n1, a.n2, b.n1, b.n2) +
                 (a.n1 + a.n2 + 1.0) * (b.n1 + b.n2 + 1.0) * device;
    out.k_minus = k_minus_thermal(a.n1, a.n2, b.n1, b.n2);
    return out;
}

PairInvariants pair_invariants(const FamilyPoint &a, const FamilyPoint &b) {
    if (a.tag() != b.tag()) {
        throw ValidationError("closed-form invariants need two states of the same family (got " +
                              to_string(a.tag()) + " and " + to_string(b.tag()) + ")");
    }
    switch (a.tag()) {
    case FamilyTag::TS:
        return pair_invariants_ts(std::get<TsParams>(a.params()), std::get<TsParams>(b.params()));
    case FamilyTag::MTS:
        return pair_invariants_mts(std::get<MtsParams>(a.params()),
                                   std::get<MtsParams>(b.params()));
    case FamilyTag::STS:
        return pair_invariants_sts(std::get<StsParams>(a.params()),
                                   std::get<StsParams>(b.params()));
    }
    throw ValidationError("unknown family tag");
}

double fidelity_from_k(double k_plus, double k_minus) {
    const double sum = std::sqrt(k_plus) + std::sqrt(std::max(k_minus, 0.0));
    const double diff = k_plus - std::max(k_minus, 0.0);
    return 2.0 * sq(sum / diff);
}

double fidelity_special(const FamilyPoint &a, const FamilyPoint &b) {
    if (a.tag() == FamilyTag::TS && b.tag() == FamilyTag::TS) {
        return fidelity_ts(a.n1(), a.n2(), b.n1(), b.n2());
    }
    const PairInvariants k = pair_invariants(a, b);
    return fidelity_from_k(k.k_plus, k.k_minus);
}

bool same_parameters(const FamilyPoint &a, const FamilyPoint &b, double tol) {
    if (a.tag() != b.tag()) return false;
    return ((a.chart() - b.chart()).cwiseAbs().array() <= tol).all();
}

bool same_device(const FamilyPoint &a, const FamilyPoint &b, double tol) {
    if (a.tag() != b.tag()) return false;
    if (a.tag() == FamilyTag::TS) return true;
    const Eigen::VectorXd d = (a.chart() - b.chart()).tail<2>().cwiseAbs();
    return (d.array() <= tol).all();
}

BoundChain bound_chain(const FamilyPoint &a, const FamilyPoint &b, double slack) {
    BoundChain c;
    c.f_family = fidelity_special(a, b);
    c.f_thermal = fidelity_ts(a.n1(), a.n2(), b.n1(), b.n2());
    c.family_le_thermal = c.f_family <= c.f_thermal + slack;
    c.thermal_le_one = c.f_thermal <= 1.0 + slack;
    c.family_le_one = c.f_family <= 1.0 + slack;
    c.thermal_saturated = std::abs(c.f_family - c.f_thermal) <= slack;
    c.unit_saturated = std::abs(c.f_family - 1.0) <= slack;
    c.device_equal = same_device(a, b);
    c.parameters_equal = same_parameters(a, b);
    return c;
}

} // namespace gaussfisher
