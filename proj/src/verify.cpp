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

#include "gaussfisher/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gaussfisher/closed_form.hpp"
#include "gaussfisher/curvature.hpp"
#include "gaussfisher/errors.hpp"
#include "gaussfisher/fock_oracle.hpp"
#include "gaussfisher/info_geometry.hpp"
#include "gaussfisher/sampling.hpp"

namespace gaussfisher {

namespace {

constexpr double kPi = std::numbers::pi;

// Collects the worst deviation and the first failure of a check.
class Tally {
  public:
    void expect(bool ok, const std::string &what) {
        ++count_;
        if (!ok) {
            ++failures_;
            if (first_.empty()) first_ = what;
        }
    }
    void deviation(double value, double tol, const std::string &what) {
        worst_ = std::max(worst_, value);
        std::ostringstream os;
        os << what << ": " << value << " > " << tol;
        expect(value <= tol, os.str());
    }
    CheckResult result(const std::string &name, const std::string &summary) const {
        std::ostringstream os;
        os << summary << "; " << count_ << " assertions";
        if (worst_ > 0.0) os << ", worst " << worst_;
        if (failures_ > 0) os << "; " << failures_ << " failed, first: " << first_;
        return {name, failures_ == 0, os.str(), 0.0};
    }

  private:
    int count_ = 0;
    int failures_ = 0;
    double worst_ = 0.0;
    std::string first_;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string point_text(const FamilyPoint &p) {
    std::ostringstream os;
    os.precision(6);
    os << to_string(p.tag()) << "(";
    const Eigen::VectorXd x = p.chart();
    for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << ")";
    return os.str();
}

double general_fidelity(const FamilyPoint &a, const FamilyPoint &b) {
    return fidelity_two_mode(family_state(a), family_state(b)).fidelity;
}

// STS symmetric-section second derivative, fourth-order stencil.
double sts_symmetric_curvature2(double n) {
    const double h = 1e-3;
    auto f = [](double x) { return section_curve(FamilyTag::STS, SectionKind::Symmetric, x); };
    return (-f(n + 2 * h) + 16 * f(n + h) - 30 * f(n) + 16 * f(n - h) - f(n - 2 * h)) /
           (12 * h * h);
}

// Moves one coordinate of a family point by delta, staying inside the chart.
FamilyPoint perturb(const FamilyPoint &p, int coord, double delta) {
    Eigen::VectorXd x = p.chart();
    const bool bounded = coord == 3 || (coord == 2 && p.tag() == FamilyTag::MTS);
    if (bounded && x[coord] + delta >= kPi) delta = -delta;
    x[coord] += delta;
    return FamilyPoint::from_chart(p.tag(), x);
}

} // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

CheckResult run_check(const std::string &name, const std::function<CheckResult()> &body) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = body();
    } catch (const std::exception &e) {
        r = {name, false, std::string("exception: ") + e.what(), 0.0};
    }
    r.name = name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

CheckResult check_closed_anchors() {
    Tally t;
    const double ns = sts_saddle_occupancy();
    t.deviation(std::abs(scalar_closed(FamilyTag::MTS, 0.5, 0.5)), 1e-9, "R_MT(1/2,1/2)");
    t.deviation(std::abs(scalar_closed(FamilyTag::MTS, 0.0, 1.0) - 20.0), 1e-9, "R_MT(0,1)");
    for (double n : {1.0, 2.0, 9.0}) {
        t.deviation(std::abs(scalar_closed(FamilyTag::MTS, n, 0.0) - (2.0 + 18.0 / n)), 1e-9,
                    "R_MT(n,0)");
    }
    t.deviation(std::abs(scalar_closed(FamilyTag::STS, 0.0, 0.0) + 16.0), 1e-9, "R_ST(0,0)");
    t.deviation(std::abs(scalar_closed(FamilyTag::STS, 8.0, 0.0)), 1e-9, "R_ST(8,0)");
    t.deviation(std::abs(scalar_closed(FamilyTag::STS, ns, ns) + 143.0 / 14.0), 1e-9,
                "R_ST(n_s,n_s)");
    t.expect(std::abs(scalar_closed(FamilyTag::MTS, 100, 100) + 12.0) < 1e-2, "MTS asymptote");
    t.expect(std::abs(scalar_closed(FamilyTag::STS, 100, 100) + 12.0) < 1e-2, "STS asymptote");
    t.expect(std::isinf(scalar_closed(FamilyTag::MTS, 0.0, 0.0)), "R_MT(0,0) divergence");

    // one concavity change of R_ST(n, n) on [0.05, 5]
    int changes = 0;
    double prev = 0.0, bracket_lo = 0.0;
    for (int i = 0; i <= 990; ++i) {
        const double n = 0.05 + 0.005 * i;
        const double c2 = sts_symmetric_curvature2(n);
        if (i > 0 && (c2 > 0) != (prev > 0)) {
            ++changes;
            bracket_lo = n - 0.005;
        }
        prev = c2;
    }
    t.expect(changes == 1, "expected exactly one inflection, found " + std::to_string(changes));
    double lo = bracket_lo, hi = bracket_lo + 0.005;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((sts_symmetric_curvature2(mid) > 0) == (sts_symmetric_curvature2(lo) > 0)) lo = mid;
        else hi = mid;
    }
    const double n_inf = 0.5 * (lo + hi);
    const double r_inf = section_curve(FamilyTag::STS, SectionKind::Symmetric, n_inf);
    t.deviation(std::abs(n_inf - 0.9565), 1e-3, "inflection abscissa");
    t.deviation(std::abs(r_inf + 10.5140), 1e-3, "inflection value");

    // saddle: vanishing gradient at (n_s, n_s)
    const double h = 1e-3;
    auto d = [&](int k) {
        auto f = [&](double s) {
            return k == 0 ? scalar_closed(FamilyTag::STS, ns + s, ns)
                          : scalar_closed(FamilyTag::STS, ns, ns + s);
        };
        return (f(-2 * h) - 8 * f(-h) + 8 * f(h) - f(2 * h)) / (12 * h);
    };
    t.deviation(std::hypot(d(0), d(1)), 1e-8, "saddle gradient norm");

    std::ostringstream os;
    os << "anchors exact; inflection at n = " << n_inf << ", R = " << r_inf;
    return t.result("closed_anchors", os.str());
}

CheckResult check_core_invariants(std::uint64_t seed, int draws) {
    Rng rng(seed);
    Tally t;
    for (int i = 0; i < draws; ++i) {
        const TwoModeGaussian a = random_state(rng), b = random_state(rng);
        const FidelityBreakdown ab = fidelity_two_mode(a, b), ba = fidelity_two_mode(b, a);
        t.deviation(rel(ab.fidelity, ba.fidelity), 1e-12, "symmetry");
        t.expect(ab.fidelity <= 1.0 + 1e-10, "F <= 1");
        t.expect(ab.fidelity >= ab.overlap - 1e-12, "F >= overlap");
        const double fo2 = (1.0 + std::sqrt(ab.k_minus / ab.delta) *
                                      (std::sqrt(ab.k_plus) + std::sqrt(ab.k_minus))) *
                           ab.overlap;
        t.deviation(rel(fo2, ab.fidelity), 1e-10, "overlap identity");

        // pure first state
        const Mat4 s = random_symplectic(rng);
        const TwoModeGaussian pure{a.mean, CovMatrix(0.5 * s * s.transpose())};
        const FidelityBreakdown pb = fidelity_two_mode(pure, b);
        t.deviation(std::abs(pb.fidelity - pb.overlap), 1e-9, "pure-state reduction");
        t.expect(fidelity_two_mode(a, a).fidelity > 1.0 - 1e-10, "F(a, a) = 1");
    }
    return t.result("core_invariants", std::to_string(draws) + " random physical pairs");
}

CheckResult check_family_constructors(std::uint64_t seed, int draws) {
    Rng rng(seed);
    Tally t;
    const Mat4 j = symplectic_form();
    DrawBox box;
    for (int i = 0; i < draws; ++i) {
        box.x_lo = 0.0;
        box.x_hi = kPi;
        const MtsParams m = random_mts(rng, box);
        box.x_hi = 1.5;
        const StsParams q = random_sts(rng, box);

        const Mat4 sb = bs_symplectic(m.theta, m.phi), ss = sq_symplectic(q.r, q.phi);
        t.deviation((sb * j * sb.transpose() - j).cwiseAbs().maxCoeff(), 1e-12, "BS symplectic");
        t.deviation((ss * j * ss.transpose() - j).cwiseAbs().maxCoeff(), 1e-12, "SQ symplectic");
        t.deviation((sb * sb.transpose() - Mat4::Identity()).cwiseAbs().maxCoeff(), 1e-12,
                    "BS orthogonal");

        const CovMatrix vm = family_cov(m), vs = family_cov(q);
        t.expect(check_physical(vm).physical && check_physical(vs).physical, "physicality");

        // block entries against the standard-form parameters
        const double c2 = std::cos(0.5 * m.theta), s2 = std::sin(0.5 * m.theta);
        const double b1 = (m.n1 + 0.5) * c2 * c2 + (m.n2 + 0.5) * s2 * s2;
        const double b2 = (m.n2 + 0.5) * c2 * c2 + (m.n1 + 0.5) * s2 * s2;
        const double cm = (m.n1 - m.n2) * c2 * s2;
        Mat4 ref;
        ref << b1 * Mat2::Identity(), cm * rotation2(-m.phi), cm * rotation2(m.phi),
            b2 * Mat2::Identity();
        t.deviation((vm.matrix() - ref).cwiseAbs().maxCoeff(), 1e-12, "MTS blocks");

        const double ch = std::cosh(q.r), sh = std::sinh(q.r);
        const double sb1 = (q.n1 + 0.5) * ch * ch + (q.n2 + 0.5) * sh * sh;
        const double sb2 = (q.n2 + 0.5) * ch * ch + (q.n1 + 0.5) * sh * sh;
        const double cs = (q.n1 + q.n2 + 1.0) * ch * sh;
        const Mat2 pauli{{std::cos(q.phi), std::sin(q.phi)}, {std::sin(q.phi), -std::cos(q.phi)}};
        ref << sb1 * Mat2::Identity(), cs * pauli, cs * pauli, sb2 * Mat2::Identity();
        t.deviation((vs.matrix() - ref).cwiseAbs().maxCoeff(), 1e-12 * std::max(1.0, sb1),
                    "STS blocks");

        const StandardForm fm = standard_form(vm, FamilyTag::MTS);
        const StandardForm fs = standard_form(vs, FamilyTag::STS);
        t.expect(fm.b1 >= 0.5 && fm.b2 >= 0.5 && fm.c >= std::abs(fm.d) - 1e-15, "MTS standard form");
        t.expect(fs.b1 >= 0.5 && fs.b2 >= 0.5 && fs.c >= std::abs(fs.d) - 1e-15, "STS standard form");

        const MtsParams deg{m.n1, m.n1, m.theta, m.phi};
        t.deviation((family_cov(deg).matrix() - thermal_cov({m.n1, m.n1}).matrix())
                        .cwiseAbs()
                        .maxCoeff(),
                    1e-12, "MTS degenerate limit");
    }
    return t.result("family_constructors", std::to_string(draws) + " draws per family");
}

CheckResult check_closed_vs_general(std::uint64_t seed, int pairs) {
    Rng rng(seed);
    Tally t;
    DrawBox box;
    for (FamilyTag tag : {FamilyTag::MTS, FamilyTag::STS}) {
        box.x_lo = 0.0;
        box.x_hi = tag == FamilyTag::MTS ? kPi : 1.2;
        for (int i = 0; i < pairs; ++i) {
            const FamilyPoint a = random_point(rng, tag, box), b = random_point(rng, tag, box);
            const FidelityBreakdown g = fidelity_two_mode(family_state(a), family_state(b));
            const PairInvariants k = pair_invariants(a, b);
            const double f = fidelity_special(a, b);
            t.deviation(rel(f, g.fidelity), 1e-10, "fidelity " + point_text(a) + " vs " + point_text(b));
            t.deviation(std::abs(k.k_plus - g.k_plus) / std::max(1.0, g.k_plus), 1e-10, "K+");
            t.deviation(std::abs(k.k_minus - g.k_minus) / std::max(1.0, g.k_plus), 1e-10, "K-");
        }
    }
    return t.result("closed_vs_general", std::to_string(pairs) + " pairs per family");
}

CheckResult check_phase_monotonicity() {
    Tally t;
    for (FamilyTag tag : {FamilyTag::MTS, FamilyTag::STS}) {
        auto at = [&](double s) {
            if (tag == FamilyTag::MTS) {
                return fidelity_special(MtsParams{1.3, 0.4, 1.1, 0.5 * s},
                                        MtsParams{0.9, 0.2, 0.7, -0.5 * s});
            }
            return fidelity_special(StsParams{1.3, 0.4, 0.6, 0.5 * s},
                                    StsParams{0.9, 0.2, 0.3, -0.5 * s});
        };
        double prev = 2.0;
        for (int k = 0; k <= 8; ++k) {
            const double s = kPi * k / 8.0;
            const double f = at(s);
            t.deviation(std::abs(f - at(-s)), 1e-14, "even in phase difference");
            t.expect(f < prev, to_string(tag) + " not strictly decreasing at s = " + std::to_string(s));
            prev = f;
        }
    }
    return t.result("phase_monotonicity", "grid s = k pi / 8");
}

CheckResult check_fock_mts(std::uint64_t seed, int pairs, int d) {
    Rng rng(seed);
    Tally t;
    DrawBox box{0.0, 0.5, 0.0, 0.0, kPi, 3.14};
    for (int i = 0; i < pairs; ++i) {
        const FamilyPoint a = random_point(rng, FamilyTag::MTS, box);
        const FamilyPoint b = random_point(rng, FamilyTag::MTS, box);
        const FockDensity ra = family_dm(a, d), rb = family_dm(b, d);
        t.deviation(std::abs(uhlmann_fidelity(ra, rb) - fidelity_special(a, b)), 1e-6,
                    "Fock fidelity " + point_text(a) + " vs " + point_text(b));
        const double ov = fidelity_two_mode(family_state(a), family_state(b)).overlap;
        t.deviation(std::abs(fock_overlap(ra, rb) - ov), 1e-6, "Fock overlap");
    }
    return t.result("fock_mts", std::to_string(pairs) + " pairs, d = " + std::to_string(d));
}

CheckResult check_fock_sts(std::uint64_t seed, int pairs, int d) {
    Rng rng(seed);
    Tally t;
    DrawBox box{0.0, 0.3, 0.0, 0.0, 0.4, 3.14};
    for (int i = 0; i < pairs; ++i) {
        const StsParams pa = random_sts(rng, box), pb = random_sts(rng, box);
        t.deviation(sq_unitary(pa.r, pa.phi, d).defect, 1e-8, "unitarity defect");
        const FockDensity ra = family_dm(pa, d), rb = family_dm(pb, d);
        t.deviation(std::abs(uhlmann_fidelity(ra, rb) - fidelity_special(pa, pb)), 1e-4,
                    "Fock fidelity " + point_text(pa) + " vs " + point_text(pb));
        const double ov = fidelity_two_mode(family_state(pa), family_state(pb)).overlap;
        t.deviation(std::abs(fock_overlap(ra, rb) - ov), 1e-6, "Fock overlap");
    }
    return t.result("fock_sts", std::to_string(pairs) + " pairs, d = " + std::to_string(d));
}

CheckResult check_fock_thermal(std::uint64_t seed, int pairs, int d) {
    Rng rng(seed);
    Tally t;
    for (int i = 0; i < pairs; ++i) {
        const double a1 = uniform(rng, 0, 0.5), a2 = uniform(rng, 0, 0.5);
        const double b1 = uniform(rng, 0, 0.5), b2 = uniform(rng, 0, 0.5);
        const double spec = spectral_fidelity_ts(a1, a2, b1, b2, d);
        t.deviation(std::abs(spec - uhlmann_fidelity(thermal_dm(a1, a2, d), thermal_dm(b1, b2, d))),
                    1e-8, "commuting case");
        t.deviation(std::abs(spectral_fidelity_ts(a1, a2, b1, b2, 200) - fidelity_ts(a1, a2, b1, b2)),
                    1e-10, "spectral vs affinity");
    }
    return t.result("fock_thermal", std::to_string(pairs) + " thermal pairs");
}

CheckResult check_numeric_metric(std::uint64_t seed, int points) {
    Rng rng(seed);
    Tally t;
    for (FamilyTag tag : {FamilyTag::MTS, FamilyTag::STS}) {
        DrawBox box{0.2, 3.0, 0.2, 0.3, kPi - 0.3, 2.5};
        if (tag == FamilyTag::STS) {
            box.min_gap = 0.0;
            box.x_lo = 0.1;
            box.x_hi = 1.0;
        }
        for (int i = 0; i < points; ++i) {
            const FamilyPoint p = random_point(rng, tag, box);
            const MetricMatrix num = numeric_metric(p);
            const MetricMatrix ref = qfi_metric(qfi_closed(p), MetricConvention::Bures);
            for (int a = 0; a < 4; ++a) {
                t.deviation(rel(num.g(a, a), ref.g(a, a)), 1e-4,
                            "diagonal " + std::to_string(a) + " at " + point_text(p));
                for (int b = 0; b < a; ++b) {
                    t.deviation(std::abs(num.g(a, b)), 1e-6, "off-diagonal at " + point_text(p));
                }
            }
        }
    }
    return t.result("numeric_metric", std::to_string(points) + " interior points per family");
}

CheckResult check_metric_structure(std::uint64_t seed, int points) {
    Rng rng(seed);
    Tally t;
    DrawBox box{0.05, 3.0, 0.05, 0.1, kPi - 0.1, 3.0};
    for (int i = 0; i < points; ++i) {
        for (FamilyTag tag : {FamilyTag::MTS, FamilyTag::STS}) {
            const FamilyPoint p = random_point(rng, tag, box);
            const MetricMatrix closed = qfi_metric(qfi_closed(p), MetricConvention::Bures);
            const MetricMatrix warped = warped_metric(p);
            t.deviation(((warped.g - closed.g).cwiseAbs().array() /
                         closed.g.cwiseAbs().array().max(1e-300))
                            .maxCoeff(),
                        1e-12, "warped recombination");
            t.deviation((closed.to_qfi().g - 4.0 * closed.g).cwiseAbs().maxCoeff(), 0.0, "QFI = 4 Bures");
        }
        const double x1 = uniform(rng, 0.05, 3.0), x2 = uniform(rng, 0.05, 3.0);
        t.deviation((ts_metric_flat(x1, x2).g - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(),
                    1e-12, "thermal flatness");
    }
    // thermal directions of the numeric metric and phi-independence
    const MetricMatrix ts_num = numeric_metric(TsParams{1.2, 0.4});
    const MetricMatrix ts_ref = ts_metric(1.2, 0.4);
    t.deviation(((ts_num.g - ts_ref.g).cwiseAbs().array() / ts_ref.g.cwiseAbs().array().max(1e-3)).maxCoeff(),
                1e-4, "thermal numeric metric");
    const MetricMatrix g0 = numeric_metric(MtsParams{2.0, 1.0, 1.2, -2.0});
    for (double phi : {-1.0, 0.0, 1.0, 2.0}) {
        t.deviation((numeric_metric(MtsParams{2.0, 1.0, 1.2, phi}).g - g0.g).cwiseAbs().maxCoeff(),
                    1e-6, "phi independence");
    }
    return t.result("metric_structure", std::to_string(points) + " draws");
}

CheckResult check_curvature_agreement(std::uint64_t seed, int points) {
    Rng rng(seed);
    Tally t;
    for (FamilyTag tag : {FamilyTag::MTS, FamilyTag::STS}) {
        DrawBox box{0.1, 3.0, 0.1, 0.3, kPi - 0.3, 2.5};
        if (tag == FamilyTag::STS) {
            box.x_lo = 0.1;
            box.x_hi = 1.0;
        }
        const MetricField analytic = family_field(tag);
        const MetricField nested = analytic.numeric();
        int accepted = 0;
        while (accepted < points) {
            const FamilyPoint p = random_point(rng, tag, box);
            const double closed = scalar_closed(tag, p.n1(), p.n2());
            if (std::abs(closed) <= 0.5) continue;
            ++accepted;
            const std::string where = point_text(p);
            const CurvatureReport ra = scalar_curvature_pipeline(analytic, p.chart());
            const CurvatureReport rn = scalar_curvature_pipeline(nested, p.chart());
            t.deviation(rel(ra.scalar_r, closed), 1e-3, "pipeline (analytic) at " + where);
            t.deviation(rel(rn.scalar_r, closed), 1e-3, "pipeline (nested numeric) at " + where);
            t.deviation(rel(scalar_warped(tag, p.n1(), p.n2()), closed), 1e-9, "warped at " + where);
            t.deviation(rel(scalar_warped_laplacian(tag, p.n1(), p.n2()), closed), 1e-6,
                        "warped via Laplacian at " + where);
            t.deviation(rn.residuals.at("riemann_antisymmetry"), 1e-8, "Riemann antisymmetry");
        }
    }
    return t.result("curvature_agreement", std::to_string(points) + " points per family");
}

CheckResult check_curvature_grid_spread(std::uint64_t seed) {
    Rng rng(seed);
    Tally t;
    std::ostringstream summary;
    for (FamilyTag tag : {FamilyTag::MTS, FamilyTag::STS}) {
        const MetricField field = family_field(tag).numeric();
        const double n1 = uniform(rng, 0.3, 2.5);
        const double n2 = n1 + uniform(rng, 0.3, 1.0);
        std::vector<double> values;
        for (int i = 0; i < 5; ++i) {
            for (int k = 0; k < 5; ++k) {
                const double x = tag == FamilyTag::MTS ? 0.3 + i * (kPi - 0.6) / 4.0 : 0.2 + i * 0.45;
                const double phi = -2.5 + k * 1.25;
                values.push_back(
                    scalar_curvature_pipeline(field, Eigen::Vector4d(n1, n2, x, phi)).scalar_r);
            }
        }
        const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        double mean = 0.0;
        for (double v : values) mean += v / values.size();
        t.deviation((*hi - *lo) / std::abs(mean), 1e-3, to_string(tag) + " grid spread");
        summary << to_string(tag) << " R = " << mean << " at (" << n1 << ", " << n2 << ") ";
    }
    return t.result("curvature_grid_spread", summary.str() + "on 5x5 device grids");
}

CheckResult check_curvature_calibration() {
    Tally t;
    for (double th : {0.4, 1.2, 2.5}) {
        t.deviation(std::abs(scalar_curvature_pipeline(sphere_field(), Eigen::Vector2d(th, 0.3)).scalar_r - 2.0),
                    1e-6, "sphere");
    }
    for (double tau : {0.3, 1.0, 2.0}) {
        t.deviation(std::abs(scalar_curvature_pipeline(hyperboloid_field(), Eigen::Vector2d(tau, -1.0)).scalar_r + 2.0),
                    1e-6, "hyperboloid");
    }
    for (const Eigen::Vector2d &x : {Eigen::Vector2d(0.5, 2.0), Eigen::Vector2d(0.05, 0.3), Eigen::Vector2d(4.0, 1.0)}) {
        t.deviation(std::abs(scalar_curvature_pipeline(ts_field(), x).scalar_r), 1e-6, "thermal base");
    }
    const MetricField prod = product_field(euclidean_field(2), sphere_field());
    t.deviation(std::abs(scalar_curvature_pipeline(prod, Eigen::Vector4d(0.1, -0.4, 1.0, 0.2)).scalar_r - 2.0),
                1e-6, "R^2 x S^2 addition law");
    t.deviation(std::abs(scalar_curvature_pipeline(euclidean_field(3), Eigen::Vector3d(1, 2, 3)).scalar_r),
                1e-12, "Euclidean");
    return t.result("curvature_calibration", "analytic partials");
}

CheckResult check_fidelity_symmetry(std::uint64_t seed, int draws) {
    Rng rng(seed);
    Tally t;
    DrawBox box;
    for (int i = 0; i < draws; ++i) {
        const TwoModeGaussian a = random_state(rng), b = random_state(rng);
        const double fab = fidelity_two_mode(a, b).fidelity, fba = fidelity_two_mode(b, a).fidelity;
        t.deviation(std::abs(fab - fba), 1e-9, "general symmetry");
        for (FamilyTag tag : {FamilyTag::MTS, FamilyTag::STS}) {
            box.x_hi = tag == FamilyTag::MTS ? kPi : 1.0;
            const FamilyPoint p = random_point(rng, tag, box), q = random_point(rng, tag, box);
            t.deviation(std::abs(fidelity_special(p, q) - fidelity_special(q, p)), 1e-9, "closed symmetry");
        }
    }
    return t.result("fidelity_symmetry", std::to_string(draws) + " draws");
}

CheckResult check_fidelity_saturation(std::uint64_t seed, int draws) {
    Rng rng(seed);
    Tally t;
    for (FamilyTag tag : {FamilyTag::MTS, FamilyTag::STS}) {
        DrawBox box{0.05, 1.0, 0.5, 0.5, kPi - 0.5, 2.5};
        if (tag == FamilyTag::STS) {
            box.min_gap = 0.0;
            box.x_lo = 0.2;
            box.x_hi = 1.0;
        }
        for (int i = 0; i < draws; ++i) {
            const FamilyPoint p = random_point(rng, tag, box);
            const int coord = static_cast<int>(uniform(rng, 0.0, 4.0)) % 4;
            const double delta = uniform(rng, 1e-3, 0.3);
            const FamilyPoint q = perturb(p, coord, delta);
            t.deviation(std::abs(fidelity_special(p, p) - 1.0), 1e-9, "closed F(p, p)");
            t.deviation(std::abs(general_fidelity(p, p) - 1.0), 1e-9, "general F(p, p)");
            const double fc = fidelity_special(p, q), fg = general_fidelity(p, q);
            t.expect(fc < 1.0 - 1e-9 && fg < 1.0 - 1e-9,
                     "no strict drop below 1 for " + point_text(p) + " vs " + point_text(q));
            t.expect(fc <= 1.0 + 1e-9 && fg <= 1.0 + 1e-9, "F <= 1");
        }
    }
    for (int i = 0; i < draws; ++i) {
        const double a1 = uniform(rng, 0, 3), a2 = uniform(rng, 0, 3);
        const double b1 = a1 + uniform(rng, 1e-3, 1.0), b2 = uniform(rng, 0, 3);
        t.expect(q_affinity(a1, b1) > 1.0 && std::abs(q_affinity(a2, a2) - 1.0) <= 1e-12, "Q >= 1");
        t.expect(fidelity_ts(a1, a2, b1, b2) < 1.0 - 1e-9, "thermal F < 1");
        t.deviation(std::abs(fidelity_ts(a1, a2, a1, a2) - 1.0), 1e-12, "thermal F = 1");
    }
    return t.result("fidelity_saturation", std::to_string(draws) + " draws per family");
}

CheckResult check_fidelity_overlap(std::uint64_t seed, int draws) {
    Rng rng(seed);
    Tally t;
    for (int i = 0; i < draws; ++i) {
        const FidelityBreakdown f = fidelity_two_mode(random_state(rng), random_state(rng));
        t.expect(f.fidelity >= f.overlap - 1e-9, "F >= overlap");
    }
    return t.result("fidelity_overlap", std::to_string(draws) + " random pairs");
}

CheckResult check_fidelity_chains(std::uint64_t seed, int draws) {
    Rng rng(seed);
    Tally t;
    for (FamilyTag tag : {FamilyTag::MTS, FamilyTag::STS}) {
        DrawBox box{0.05, 2.0, 0.3, 0.5, kPi - 0.5, 2.5, true};
        if (tag == FamilyTag::STS) {
            box.min_gap = 0.0;
            box.x_lo = 0.2;
            box.x_hi = 1.0;
        }
        for (int i = 0; i < draws; ++i) {
            const FamilyPoint a = random_point(rng, tag, box);
            FamilyPoint b = random_point(rng, tag, box);
            if (i % 2 == 0) {
                // same device, different occupancies
                Eigen::VectorXd x = b.chart();
                x.tail<2>() = a.chart().tail<2>();
                b = FamilyPoint::from_chart(tag, x);
            } else if (same_device(a, b, 1e-2)) {
                continue;
            }
            const BoundChain c = bound_chain(a, b);
            t.expect(c.consistent(), "chain broken for " + point_text(a) + " vs " + point_text(b));
            t.expect(bound_chain(a, a).consistent() && bound_chain(a, a).unit_saturated, "self chain");
        }
    }
    return t.result("fidelity_chains", std::to_string(draws) + " pairs per family");
}

CheckResult check_fidelity_determinants(std::uint64_t seed, int draws) {
    Rng rng(seed);
    Tally t;
    for (int i = 0; i < draws; ++i) {
        const FidelityBreakdown f =
            compute_invariants(random_physical_cov(rng), random_physical_cov(rng));
        const double slack = 1e-9 * std::max(1.0, f.gamma);
        t.expect(f.delta >= 1.0 - 1e-9, "Delta >= 1");
        t.expect(f.gamma >= f.delta - slack, "Gamma >= Delta");
        t.expect(f.lambda >= -1e-9, "Lambda >= 0");
        t.expect(f.k_minus >= -1e-9, "K- >= 0");
        t.expect(f.k_plus - f.k_minus >= 2.0 - 1e-9, "K+ - K- >= 2");
    }
    return t.result("fidelity_determinants", std::to_string(draws) + " random CM pairs");
}

CheckResult check_jeffreys(std::uint64_t seed, int points) {
    Rng rng(seed);
    Tally t;
    DrawBox box{0.05, 3.0, 0.0, 0.01, 2.0, 3.0};
    for (int i = 0; i < points; ++i) {
        const StsParams p = random_sts(rng, box);
        const double prod = jeffreys_prior(p);
        t.deviation(rel(prod, jeffreys_sts_threshold_form(p.n1, p.n2, p.r)), 1e-10,
                    "Jeffreys identity at " + point_text(p));
        t.deviation(rel(volume_density(p), prod / 16.0), 1e-15, "volume density");
        const double rs = separability_threshold(p.n1, p.n2);
        t.deviation(rel(jeffreys_prior(StsParams{p.n1, p.n2, rs, p.phi}), 2.0 / std::cosh(2.0 * rs)),
                    1e-10, "threshold value");
    }
    return t.result("jeffreys", std::to_string(points) + " STS points");
}

Suite parse_suite(const std::string &name) {
    if (name == "core") return Suite::Core;
    if (name == "appendix") return Suite::Appendix;
    if (name == "geometry") return Suite::Geometry;
    if (name == "oracle") return Suite::Oracle;
    if (name == "all") return Suite::All;
    throw ValidationError("unknown suite '" + name + "' (core, appendix, geometry, oracle, all)");
}

std::string to_string(Suite s) {
    switch (s) {
    case Suite::Core:
        return "core";
    case Suite::Appendix:
        return "appendix";
    case Suite::Geometry:
        return "geometry";
    case Suite::Oracle:
        return "oracle";
    case Suite::All:
        return "all";
    }
    return "?";
}

SuiteReport run_suite(Suite suite, std::uint64_t seed, bool include_oracle) {
    SuiteReport rep;
    rep.suite = to_string(suite);
    rep.seed = seed;
    auto add = [&](const std::string &name, std::function<CheckResult()> fn) {
        rep.checks.push_back(run_check(name, fn));
    };
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Core) {
        add("closed_anchors", [] { return check_closed_anchors(); });
        add("core_invariants", [&] { return check_core_invariants(seed + 1); });
        add("family_constructors", [&] { return check_family_constructors(seed + 2); });
        add("closed_vs_general", [&] { return check_closed_vs_general(seed + 3); });
        add("phase_monotonicity", [] { return check_phase_monotonicity(); });
    }
    if (all || suite == Suite::Appendix) {
        add("fidelity_symmetry", [&] { return check_fidelity_symmetry(seed + 11); });
        add("fidelity_saturation", [&] { return check_fidelity_saturation(seed + 12); });
        add("fidelity_overlap", [&] { return check_fidelity_overlap(seed + 13); });
        add("fidelity_chains", [&] { return check_fidelity_chains(seed + 14); });
        add("fidelity_determinants", [&] { return check_fidelity_determinants(seed + 15); });
    }
    if (all || suite == Suite::Geometry) {
        add("numeric_metric", [&] { return check_numeric_metric(seed + 21); });
        add("metric_structure", [&] { return check_metric_structure(seed + 22); });
        add("curvature_agreement", [&] { return check_curvature_agreement(seed + 23); });
        add("curvature_grid_spread", [&] { return check_curvature_grid_spread(seed + 24); });
        add("curvature_calibration", [] { return check_curvature_calibration(); });
        add("jeffreys", [&] { return check_jeffreys(seed + 25); });
    }
    if (suite == Suite::Oracle || (all && include_oracle)) {
        add("fock_mts", [&] { return check_fock_mts(seed + 31); });
        add("fock_sts", [&] { return check_fock_sts(seed + 32); });
        add("fock_thermal", [&] { return check_fock_thermal(seed + 33); });
    }
    return rep;
}

} // namespace gaussfisher
