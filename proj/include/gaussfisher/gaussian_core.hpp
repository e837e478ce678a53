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

#include <span>

#include <Eigen/Dense>

#include "gaussfisher/tolerances.hpp"

namespace gaussfisher {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Vec2 = Eigen::Vector2d;
using Vec4 = Eigen::Vector4d;

/// Mean quadratures (q1, p1, q2, p2) of a two-mode state.
class QuadratureVector {
  public:
    QuadratureVector() : v_(Vec4::Zero()) {}
    explicit QuadratureVector(const Vec4 &v);
    QuadratureVector(double q1, double p1, double q2, double p2)
        : QuadratureVector(Vec4(q1, p1, q2, p2)) {}

    const Vec4 &vector() const { return v_; }
    double operator[](int i) const { return v_[i]; }

    friend bool operator==(const QuadratureVector &a, const QuadratureVector &b) {
        return a.v_ == b.v_;
    }

  private:
    Vec4 v_;
};

/// Symmetric 4x4 covariance matrix, partitioned as [[V1, C], [C^T, V2]].
/// Construction rejects non-finite or non-symmetric input; physicality is
/// checked separately by check_physical().
class CovMatrix {
  public:
    explicit CovMatrix(const Mat4 &m, double symmetry_tol = Tolerances{}.symmetry);

    const Mat4 &matrix() const { return m_; }
    double operator()(int i, int j) const { return m_(i, j); }

    Mat2 mode1() const { return m_.topLeftCorner<2, 2>(); }
    Mat2 mode2() const { return m_.bottomRightCorner<2, 2>(); }
    Mat2 correlation() const { return m_.topRightCorner<2, 2>(); }

    friend bool operator==(const CovMatrix &a, const CovMatrix &b) { return a.m_ == b.m_; }

  private:
    Mat4 m_;
};

struct PhysicalityReport {
    bool physical = false;
    bool edge = false;
    double min_eigenvalue = 0.0;    ///< smallest eigenvalue of V + iJ/2
    double edge_determinant = 0.0;  ///< Re det(V + iJ/2)
};

/// A Gaussian state represented by its first and second moments.
struct TwoModeGaussian {
    QuadratureVector mean;
    CovMatrix cov;

    /// Throws ValidationError unless `cov` satisfies the uncertainty relation.
    static TwoModeGaussian make(const QuadratureVector &mean, const CovMatrix &cov,
                                const Tolerances &tol = {});
};

/// Standard-form parameters: V1 = b1*I, V2 = b2*I, C = diag(c, d).
struct StandardForm {
    double b1 = 0.5;
    double b2 = 0.5;
    double c = 0.0;
    double d = 0.0;
};

/// The determinant invariants of a CM pair together with the overlap
/// Tr(rho' rho'') and the Uhlmann fidelity.
struct FidelityBreakdown {
    double delta = 0.0;
    double gamma = 0.0;
    double lambda = 0.0;
    double k_plus = 0.0;
    double k_minus = 0.0;
    double overlap = 0.0;
    double fidelity = 0.0;
};

/// Block-diagonal J = J1 (+) J2 with J1 = J2 = [[0, 1], [-1, 0]].
Mat4 symplectic_form();

/// One-mode block [[0, 1], [-1, 0]].
Mat2 symplectic_form_1();

/// physical <=> V + iJ/2 is positive semidefinite (within tol.psd);
/// edge <=> |det(V + iJ/2)| <= tol.edge.
PhysicalityReport check_physical(const CovMatrix &cov, const Tolerances &tol = {});

/// Delta, Gamma, Lambda and K+-; the overlap and fidelity fields are left at 0.
/// Throws NumericalConsistencyError when the determinant inequalities fail.
FidelityBreakdown compute_invariants(const CovMatrix &a, const CovMatrix &b,
                                     const Tolerances &tol = {});

/// Exponential of -1/2 dv^T (V' + V'')^{-1} dv.
double displacement_factor(const QuadratureVector &a, const QuadratureVector &b,
                           const Mat4 &cov_sum);

/// Uhlmann fidelity of two two-mode Gaussian states, F = 2 (sqrt K+ - sqrt K-)^-2
/// times the displacement factor, together with all intermediate invariants.
FidelityBreakdown fidelity_two_mode(const TwoModeGaussian &a, const TwoModeGaussian &b,
                                    const Tolerances &tol = {});

/// Single-mode fidelity (sqrt(Delta + Lambda) - sqrt(Lambda))^-1 times the
/// displacement factor. Throws ValidationError for unphysical CMs.
double fidelity_one_mode(const Vec2 &mean_a, const Mat2 &cov_a, const Vec2 &mean_b,
                         const Mat2 &cov_b, const Tolerances &tol = {});

struct BuresDistances {
    double bures = 0.0;  ///< sqrt(2 - 2 sqrt F)
    double angle = 0.0;  ///< arccos sqrt F
};

BuresDistances distances(double fidelity, const Tolerances &tol = {});

struct ClassicalFidelity {
    double f_cl = 0.0;
    double d_bw = 0.0;  ///< Bhattacharyya-Wootters angle
    double d_h = 0.0;   ///< Hellinger distance via the fidelity
    double d_h_direct = 0.0;  ///< Hellinger distance from the sum over outcomes
};

ClassicalFidelity classical_fidelity(std::span<const double> p, std::span<const double> q);

} // namespace gaussfisher
