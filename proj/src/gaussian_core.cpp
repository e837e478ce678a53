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

#include "gaussfisher/gaussian_core.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <string>

#include "gaussfisher/errors.hpp"

namespace gaussfisher {

namespace {

using Mat4c = Eigen::Matrix4cd;
using cplx = std::complex<double>;

void override_from_env(const char *name, double &value) {
    if (const char *raw = std::getenv(name); raw != nullptr && *raw != '\0') {
        try {
            value = std::stod(raw);
        } catch (const std::exception &) {
            throw ValidationError(std::string("cannot parse ") + name + "='" + raw + "'");
        }
    }
}

Mat4c plus_half_iJ(const Mat4 &v) {
    Mat4c h = v.cast<cplx>();
    h += cplx(0.0, 0.5) * symplectic_form().cast<cplx>();
    return h;
}

// Real part of a determinant that is real in exact arithmetic; clamps small
// negative residue to zero.
double real_nonnegative_det(const Mat4c &m, const Tolerances &tol, const char *what) {
    const cplx det = m.determinant();
    if (std::abs(det.imag()) > tol.imag * (1.0 + std::abs(det.real()))) {
        throw NumericalConsistencyError(std::string(what) + ": imaginary residue " +
                                        std::to_string(det.imag()) + " on a real determinant");
    }
    double re = det.real();
    if (re < 0.0) {
        if (re < -tol.imag) {
            throw NumericalConsistencyError(std::string(what) + ": det(V + iJ/2) = " +
                                            std::to_string(re) + " < 0 (unphysical CM)");
        }
        re = 0.0;
    }
    return re;
}

bool finite(const Mat4 &m) { return m.allFinite(); }

} // namespace

Tolerances Tolerances::from_env() {
    Tolerances t;
    override_from_env("GAUSSFISHER_TOL_PSD", t.psd);
    override_from_env("GAUSSFISHER_TOL_EDGE", t.edge);
    override_from_env("GAUSSFISHER_TOL_IMAG", t.imag);
    override_from_env("GAUSSFISHER_TOL_CLAMP", t.clamp);
    override_from_env("GAUSSFISHER_TOL_SYMMETRY", t.symmetry);
    override_from_env("GAUSSFISHER_TOL_INEQUALITY", t.inequality);
    override_from_env("GAUSSFISHER_TOL_OVERSHOOT", t.overshoot);
    return t;
}

QuadratureVector::QuadratureVector(const Vec4 &v) : v_(v) {
    if (!v_.allFinite()) {
        throw ValidationError("quadrature means must be finite");
    }
}

CovMatrix::CovMatrix(const Mat4 &m, double symmetry_tol) : m_(m) {
    if (!finite(m_)) {
        throw ValidationError("covariance matrix has non-finite entries");
    }
    const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
    if (asym > symmetry_tol) {
        throw ValidationError("covariance matrix is not symmetric (max |V - V^T| = " +
                              std::to_string(asym) + ")");
    }
    m_ = 0.5 * (m_ + m_.transpose()).eval();
}

TwoModeGaussian TwoModeGaussian::make(const QuadratureVector &mean, const CovMatrix &cov,
                                      const Tolerances &tol) {
    const PhysicalityReport rep = check_physical(cov, tol);
    if (!rep.physical) {
        throw ValidationError("covariance matrix violates the uncertainty relation "
                              "(min eigenvalue of V + iJ/2 = " +
                              std::to_string(rep.min_eigenvalue) + ")");
    }
    return TwoModeGaussian{mean, cov};
}

Mat2 symplectic_form_1() {
    Mat2 j;
    j << 0.0, 1.0, -1.0, 0.0;
    return j;
}

Mat4 symplectic_form() {
    Mat4 j = Mat4::Zero();
    j.topLeftCorner<2, 2>() = symplectic_form_1();
    j.bottomRightCorner<2, 2>() = symplectic_form_1();
    return j;
}

PhysicalityReport check_physical(const CovMatrix &cov, const Tolerances &tol) {
    const Mat4c h = plus_half_iJ(cov.matrix());
    Eigen::SelfAdjointEigenSolver<Mat4c> es(h, Eigen::EigenvaluesOnly);
    PhysicalityReport rep;
    rep.min_eigenvalue = es.eigenvalues().minCoeff();
    rep.edge_determinant = h.determinant().real();
    rep.physical = rep.min_eigenvalue >= -tol.psd;
    rep.edge = std::abs(rep.edge_determinant) <= tol.edge;
    return rep;
}

FidelityBreakdown compute_invariants(const CovMatrix &a, const CovMatrix &b,
                                     const Tolerances &tol) {
    const Mat4 &va = a.matrix();
    const Mat4 &vb = b.matrix();
    const Mat4 j = symplectic_form();

    FidelityBreakdown out;
    out.delta = (va + vb).determinant();
    // det(XY - I/4) = det(YX - I/4); the mean makes the result exactly
    // symmetric in the two arguments.
    const Mat4 ja = j * va, jb = j * vb;
    out.gamma = 8.0 * ((ja * jb - 0.25 * Mat4::Identity()).determinant() +
                       (jb * ja - 0.25 * Mat4::Identity()).determinant());
    const double edge_a = real_nonnegative_det(plus_half_iJ(va), tol, "first state");
    const double edge_b = real_nonnegative_det(plus_half_iJ(vb), tol, "second state");
    // A state on the physicality edge is pure: then Lambda = 0 and Gamma = Delta.
    const bool pure = edge_a <= tol.edge || edge_b <= tol.edge;
    out.lambda = pure ? 0.0 : 16.0 * edge_a * edge_b;

    const double scale = std::max(1.0, std::abs(out.delta));
    if (out.delta < 1.0 - tol.inequality * scale) {
        throw NumericalConsistencyError("Delta = " + std::to_string(out.delta) + " < 1");
    }
    if (out.gamma < out.delta - tol.inequality * std::max(scale, std::abs(out.gamma))) {
        throw NumericalConsistencyError("Gamma = " + std::to_string(out.gamma) +
                                        " < Delta = " + std::to_string(out.delta));
    }

    if (pure) {
        out.k_plus = 2.0 * std::sqrt(out.delta);
        out.k_minus = 0.0;
        return out;
    }

    const double sg = std::sqrt(std::max(out.gamma, 0.0));
    const double sl = std::sqrt(out.lambda);
    const double sd = std::sqrt(out.delta);
    out.k_plus = sg + sl + sd;
    out.k_minus = sg + sl - sd;
    if (out.k_minus < 0.0) {
        if (out.k_minus < -tol.clamp * std::max(1.0, sd)) {
            throw NumericalConsistencyError("K- = " + std::to_string(out.k_minus) + " < 0");
        }
        out.k_minus = 0.0;
    }
    return out;
}

double displacement_factor(const QuadratureVector &a, const QuadratureVector &b,
                           const Mat4 &cov_sum) {
    const Vec4 dv = a.vector() - b.vector();
    if (dv.isZero(0.0)) {
        return 1.0;
    }
    Eigen::PartialPivLU<Mat4> lu(cov_sum);
    const double rcond = lu.rcond();
    if (!(rcond > 0.0) || !std::isfinite(rcond)) {
        throw NumericalConsistencyError("V' + V'' is singular");
    }
    if (1.0 / rcond > 1e8) {
        std::clog << "gaussfisher: ill-conditioned V' + V'' (condition estimate "
                  << 1.0 / rcond << ")\n";
    }
    const Vec4 x = lu.solve(dv);
    return std::exp(-0.5 * dv.dot(x));
}

FidelityBreakdown fidelity_two_mode(const TwoModeGaussian &a, const TwoModeGaussian &b,
                                    const Tolerances &tol) {
    FidelityBreakdown out = compute_invariants(a.cov, b.cov, tol);
    const double disp = displacement_factor(a.mean, b.mean, a.cov.matrix() + b.cov.matrix());
    // sqrt K+ - sqrt K- = 2 sqrt(Delta) / (sqrt K+ + sqrt K-), which avoids the
    // cancellation between two nearly equal roots.
    const double sum_roots = std::sqrt(out.k_plus) + std::sqrt(out.k_minus);
    out.fidelity = sum_roots * sum_roots / (2.0 * out.delta) * disp;
    out.overlap = disp / std::sqrt(out.delta);
    return out;
}

double fidelity_one_mode(const Vec2 &mean_a, const Mat2 &cov_a, const Vec2 &mean_b,
                         const Mat2 &cov_b, const Tolerances &tol) {
    auto check = [&](const Mat2 &v, const char *which) {
        if (!v.allFinite() || std::abs(v(0, 1) - v(1, 0)) > tol.symmetry) {
            throw ValidationError(std::string(which) + " one-mode CM is not symmetric");
        }
        if (v.trace() <= 0.0 || v.determinant() - 0.25 < -tol.psd) {
            throw ValidationError(std::string(which) +
                                  " one-mode CM violates det V >= 1/4");
        }
        if (!mean_a.allFinite() || !mean_b.allFinite()) {
            throw ValidationError("one-mode means must be finite");
        }
    };
    check(cov_a, "first");
    check(cov_b, "second");

    const Mat2 sum = cov_a + cov_b;
    const double delta = sum.determinant();
    const double lambda = 4.0 * std::max(cov_a.determinant() - 0.25, 0.0) *
                          std::max(cov_b.determinant() - 0.25, 0.0);
    const Vec2 dv = mean_a - mean_b;
    const double disp = std::exp(-0.5 * dv.dot(sum.inverse() * dv));
    // (sqrt(D + L) - sqrt(L))^-1 rewritten without cancellation.
    return (std::sqrt(delta + lambda) + std::sqrt(lambda)) / delta * disp;
}

BuresDistances distances(double fidelity, const Tolerances &tol) {
    if (!std::isfinite(fidelity) || fidelity > 1.0 + tol.overshoot ||
        fidelity < -tol.overshoot) {
        throw ValidationError("fidelity " + std::to_string(fidelity) + " outside [0, 1]");
    }
    const double root = std::sqrt(std::clamp(fidelity, 0.0, 1.0));
    return {std::sqrt(std::max(0.0, 2.0 - 2.0 * root)), std::acos(root)};
}

ClassicalFidelity classical_fidelity(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size() || p.empty()) {
        throw ValidationError("probability lists must be non-empty and of equal length");
    }
    double sp = 0.0, sq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] >= 0.0) || !(q[i] >= 0.0) || !std::isfinite(p[i]) || !std::isfinite(q[i])) {
            throw ValidationError("probabilities must be finite and non-negative");
        }
        sp += p[i];
        sq += q[i];
    }
    if (std::abs(sp - 1.0) > 1e-9 || std::abs(sq - 1.0) > 1e-9) {
        throw ValidationError("probability lists must sum to 1");
    }

    double affinity = 0.0, hell2 = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        affinity += std::sqrt(p[i] * q[i]);
        const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
        hell2 += d * d;
    }
    affinity = std::min(affinity, 1.0);

    ClassicalFidelity out;
    out.f_cl = affinity * affinity;
    out.d_bw = std::acos(affinity);
    out.d_h = std::sqrt(std::max(0.0, 2.0 - 2.0 * affinity));
    out.d_h_direct = std::sqrt(hell2);
    return out;
}

} // namespace gaussfisher
