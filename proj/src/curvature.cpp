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

#include "gaussfisher/curvature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gaussfisher/errors.hpp"
#include "gaussfisher/info_geometry.hpp"

namespace gaussfisher {

namespace {

constexpr double kPi = std::numbers::pi;

double step_for(const MetricField &f, const Point &x, int m) {
    return f.step * std::max(1.0, std::abs(x[m]));
}

void check_stencil(const MetricField &f, const Point &x) {
    if (f.domain_check) f.domain_check(x);
}

// Central difference with one Richardson level, applied to a matrix-valued map.
template <class Fn>
Eigen::MatrixXd richardson(const Fn &fn, const MetricField &f, const Point &x, int m) {
    const double h = step_for(f, x, m);
    auto central = [&](double hh) {
        Point xp = x, xm = x;
        xp[m] += hh;
        xm[m] -= hh;
        check_stencil(f, xp);
        check_stencil(f, xm);
        return Eigen::MatrixXd((fn(xp) - fn(xm)) / (2.0 * hh));
    };
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

MetricGradient gradient_at(const MetricField &f, const Point &x) {
    if (f.d1) return f.d1(x);
    MetricGradient out(f.dim);
    for (int m = 0; m < f.dim; ++m) out[m] = richardson(f.metric, f, x, m);
    return out;
}

MetricHessian hessian_at(const MetricField &f, const Point &x) {
    if (f.d2) return f.d2(x);
    MetricHessian out(f.dim, std::vector<Eigen::MatrixXd>(f.dim));
    for (int n = 0; n < f.dim; ++n) {
        auto component = [&](const Point &y) { return gradient_at(f, y); };
        Point xp = x, xm = x;
        const double h = step_for(f, x, n);
        auto central = [&](double hh) {
            xp = x;
            xm = x;
            xp[n] += hh;
            xm[n] -= hh;
            check_stencil(f, xp);
            check_stencil(f, xm);
            const MetricGradient gp = component(xp), gm = component(xm);
            MetricGradient d(f.dim);
            for (int m = 0; m < f.dim; ++m) d[m] = (gp[m] - gm[m]) / (2.0 * hh);
            return d;
        };
        const MetricGradient coarse = central(h), fine = central(0.5 * h);
        for (int m = 0; m < f.dim; ++m) out[m][n] = (4.0 * fine[m] - coarse[m]) / 3.0;
    }
    // symmetrize in (m, n)
    for (int m = 0; m < f.dim; ++m) {
        for (int n = 0; n < m; ++n) {
            const Eigen::MatrixXd avg = 0.5 * (out[m][n] + out[n][m]);
            out[m][n] = out[n][m] = avg;
        }
    }
    return out;
}

Eigen::MatrixXd checked_inverse(const Eigen::MatrixXd &g) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > 1e10) {
        throw DegeneracyError("metric is singular or ill-conditioned (eigenvalues " +
                              std::to_string(lo) + " .. " + std::to_string(hi) + ")");
    }
    return g.inverse();
}

// h = N / D with gradients and Hessians of N and D supplied.
struct Quotient {
    double h;
    Eigen::Vector2d grad;
    Eigen::Matrix2d hess;
};

Quotient quotient(double n, const Eigen::Vector2d &dn, const Eigen::Matrix2d &ddn, double d,
                  const Eigen::Vector2d &dd, const Eigen::Matrix2d &ddd) {
    Quotient q;
    q.h = n / d;
    q.grad = dn / d - n * dd / (d * d);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            q.hess(i, j) = ddn(i, j) / d - (dn[i] * dd[j] + dn[j] * dd[i]) / (d * d) -
                           n * ddd(i, j) / (d * d) + 2.0 * n * dd[i] * dd[j] / (d * d * d);
        }
    }
    return q;
}

// Angular QFI component and its n-derivatives, QFI convention.
Quotient angular_quotient(FamilyTag tag, double n1, double n2) {
    const double d = 2.0 * n1 * n2 + n1 + n2;
    const Eigen::Vector2d dd(2.0 * n2 + 1.0, 2.0 * n1 + 1.0);
    const Eigen::Matrix2d ddd{{0.0, 2.0}, {2.0, 0.0}};
    if (tag == FamilyTag::MTS) {
        const double u = n1 - n2;
        return quotient(u * u, Eigen::Vector2d(2.0 * u, -2.0 * u),
                        Eigen::Matrix2d{{2.0, -2.0}, {-2.0, 2.0}}, d, dd, ddd);
    }
    const double s = n1 + n2 + 1.0;
    return quotient(s * s, Eigen::Vector2d(2.0 * s, 2.0 * s),
                    Eigen::Matrix2d{{2.0, 2.0}, {2.0, 2.0}}, d + 1.0, dd, ddd);
}

// Bures thermal component a(n) = 1 / (4 n (n + 1)) and its derivatives.
Eigen::Vector3d thermal_component(double n) {
    const double p = n * n + n, dp = 2.0 * n + 1.0;
    return {1.0 / (4.0 * p), -dp / (4.0 * p * p), (2.0 * dp * dp - 2.0 * p) / (4.0 * p * p * p)};
}

// Fibre weight sin^2 or sinh^2 and its derivatives.
Eigen::Vector3d fibre_weight(bool sphere, double t) {
    if (sphere) {
        const double s = std::sin(t);
        return {s * s, std::sin(2.0 * t), 2.0 * std::cos(2.0 * t)};
    }
    const double s = std::sinh(t);
    return {s * s, std::sinh(2.0 * t), 2.0 * std::cosh(2.0 * t)};
}

MetricField two_dim_fibre(bool sphere) {
    MetricField f;
    f.dim = 2;
    f.names = sphere ? std::vector<std::string>{"theta", "phi"}
                     : std::vector<std::string>{"tau", "phi"};
    f.metric = [sphere](const Point &x) {
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2, 2);
        g(0, 0) = 1.0;
        g(1, 1) = fibre_weight(sphere, x[0])[0];
        return g;
    };
    f.d1 = [sphere](const Point &x) {
        MetricGradient d(2, Eigen::MatrixXd::Zero(2, 2));
        d[0](1, 1) = fibre_weight(sphere, x[0])[1];
        return d;
    };
    f.d2 = [sphere](const Point &x) {
        MetricHessian d(2, std::vector<Eigen::MatrixXd>(2, Eigen::MatrixXd::Zero(2, 2)));
        d[0][0](1, 1) = fibre_weight(sphere, x[0])[2];
        return d;
    };
    return f;
}

} // namespace

MetricField MetricField::numeric() const {
    MetricField out = *this;
    out.d1 = nullptr;
    out.d2 = nullptr;
    return out;
}

MetricField euclidean_field(int dim) {
    MetricField f;
    f.dim = dim;
    for (int i = 0; i < dim; ++i) f.names.push_back("x" + std::to_string(i + 1));
    f.metric = [dim](const Point &) { return Eigen::MatrixXd::Identity(dim, dim).eval(); };
    f.d1 = [dim](const Point &) { return MetricGradient(dim, Eigen::MatrixXd::Zero(dim, dim)); };
    f.d2 = [dim](const Point &) {
        return MetricHessian(dim, std::vector<Eigen::MatrixXd>(dim, Eigen::MatrixXd::Zero(dim, dim)));
    };
    return f;
}

MetricField sphere_field() { return two_dim_fibre(true); }
MetricField hyperboloid_field() { return two_dim_fibre(false); }

MetricField ts_field() {
    MetricField f;
    f.dim = 2;
    f.names = {"n1", "n2"};
    f.domain_check = [](const Point &x) {
        if (!(x[0] > 0.0) || !(x[1] > 0.0)) {
            throw DomainError("thermal metric needs n1, n2 > 0");
        }
    };
    f.metric = [](const Point &x) {
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2, 2);
        g(0, 0) = thermal_component(x[0])[0];
        g(1, 1) = thermal_component(x[1])[0];
        return g;
    };
    f.d1 = [](const Point &x) {
        MetricGradient d(2, Eigen::MatrixXd::Zero(2, 2));
        d[0](0, 0) = thermal_component(x[0])[1];
        d[1](1, 1) = thermal_component(x[1])[1];
        return d;
    };
    f.d2 = [](const Point &x) {
        MetricHessian d(2, std::vector<Eigen::MatrixXd>(2, Eigen::MatrixXd::Zero(2, 2)));
        d[0][0](0, 0) = thermal_component(x[0])[2];
        d[1][1](1, 1) = thermal_component(x[1])[2];
        return d;
    };
    return f;
}

MetricField family_field(FamilyTag tag) {
    if (tag == FamilyTag::TS) return ts_field();
    const bool mts = tag == FamilyTag::MTS;
    MetricField f;
    f.dim = 4;
    const auto names = chart_names(tag);
    f.names.assign(names.begin(), names.end());
    f.domain_check = [tag, mts](const Point &x) {
        if (x[0] < 1e-3 || x[1] < 1e-3) {
            throw DomainError("curvature pipeline needs n1, n2 >= 1e-3");
        }
        if (mts) {
            if (std::abs(x[0] - x[1]) < 1e-3) {
                throw DomainError("curvature pipeline needs |n1 - n2| >= 1e-3 on the MTS chart");
            }
            if (x[2] < 0.05 || x[2] > kPi - 0.05) {
                throw DomainError("curvature pipeline needs theta in [0.05, pi - 0.05]");
            }
        } else if (x[2] < 0.05) {
            throw DomainError("curvature pipeline needs 2r >= 0.05");
        }
        (void)tag;
    };
    f.metric = [tag, mts](const Point &x) {
        const double ha = angular_quotient(tag, x[0], x[1]).h;
        const double w = fibre_weight(mts, x[2])[0];
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(4, 4);
        g(0, 0) = thermal_component(x[0])[0];
        g(1, 1) = thermal_component(x[1])[0];
        g(2, 2) = 0.25 * ha;
        g(3, 3) = 0.25 * ha * w;
        return g;
    };
    f.d1 = [tag, mts](const Point &x) {
        const Quotient q = angular_quotient(tag, x[0], x[1]);
        const Eigen::Vector3d w = fibre_weight(mts, x[2]);
        MetricGradient d(4, Eigen::MatrixXd::Zero(4, 4));
        d[0](0, 0) = thermal_component(x[0])[1];
        d[1](1, 1) = thermal_component(x[1])[1];
        for (int i = 0; i < 2; ++i) {
            d[i](2, 2) = 0.25 * q.grad[i];
            d[i](3, 3) = 0.25 * q.grad[i] * w[0];
        }
        d[2](3, 3) = 0.25 * q.h * w[1];
        return d;
    };
    f.d2 = [tag, mts](const Point &x) {
        const Quotient q = angular_quotient(tag, x[0], x[1]);
        const Eigen::Vector3d w = fibre_weight(mts, x[2]);
        MetricHessian d(4, std::vector<Eigen::MatrixXd>(4, Eigen::MatrixXd::Zero(4, 4)));
        d[0][0](0, 0) = thermal_component(x[0])[2];
        d[1][1](1, 1) = thermal_component(x[1])[2];
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                d[i][j](2, 2) = 0.25 * q.hess(i, j);
                d[i][j](3, 3) = 0.25 * q.hess(i, j) * w[0];
            }
            d[i][2](3, 3) = d[2][i](3, 3) = 0.25 * q.grad[i] * w[1];
        }
        d[2][2](3, 3) = 0.25 * q.h * w[2];
        return d;
    };
    return f;
}

MetricField product_field(const MetricField &a, const MetricField &b) {
    MetricField f;
    f.dim = a.dim + b.dim;
    f.names = a.names;
    f.names.insert(f.names.end(), b.names.begin(), b.names.end());
    const int na = a.dim, nb = b.dim, n = f.dim;
    f.domain_check = [a, b, na, nb](const Point &x) {
        if (a.domain_check) a.domain_check(x.head(na));
        if (b.domain_check) b.domain_check(x.tail(nb));
    };
    f.metric = [a, b, na, nb, n](const Point &x) {
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
        g.topLeftCorner(na, na) = a.metric(x.head(na));
        g.bottomRightCorner(nb, nb) = b.metric(x.tail(nb));
        return g;
    };
    if (a.d1 && b.d1) {
        f.d1 = [a, b, na, nb, n](const Point &x) {
            MetricGradient d(n, Eigen::MatrixXd::Zero(n, n));
            const MetricGradient da = a.d1(x.head(na)), db = b.d1(x.tail(nb));
            for (int m = 0; m < na; ++m) d[m].topLeftCorner(na, na) = da[m];
            for (int m = 0; m < nb; ++m) d[na + m].bottomRightCorner(nb, nb) = db[m];
            return d;
        };
    }
    if (a.d2 && b.d2) {
        f.d2 = [a, b, na, nb, n](const Point &x) {
            MetricHessian d(n, std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n)));
            const MetricHessian da = a.d2(x.head(na)), db = b.d2(x.tail(nb));
            for (int m = 0; m < na; ++m)
                for (int k = 0; k < na; ++k) d[m][k].topLeftCorner(na, na) = da[m][k];
            for (int m = 0; m < nb; ++m)
                for (int k = 0; k < nb; ++k) d[na + m][na + k].bottomRightCorner(nb, nb) = db[m][k];
            return d;
        };
    }
    return f;
}

Christoffel christoffel(const MetricField &field, const Point &x) {
    if (field.domain_check) field.domain_check(x);
    const int n = field.dim;
    const Eigen::MatrixXd ginv = checked_inverse(field.metric(x));
    const MetricGradient dg = gradient_at(field, x);
    Christoffel gam(n, Eigen::MatrixXd::Zero(n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                double acc = 0.0;
                for (int l = 0; l < n; ++l)
                    acc += ginv(i, l) * (dg[j](l, k) + dg[k](l, j) - dg[l](j, k));
                gam[i](j, k) = 0.5 * acc;
            }
    return gam;
}

std::string to_string(CurvatureMethod m) {
    switch (m) {
    case CurvatureMethod::Closed:
        return "closed";
    case CurvatureMethod::Pipeline:
        return "pipeline";
    case CurvatureMethod::Warped:
        return "warped";
    }
    return "?";
}

CurvatureReport scalar_curvature_pipeline(const MetricField &field, const Point &x) {
    const int n = field.dim;
    const Christoffel gam = christoffel(field, x);
    const Eigen::MatrixXd ginv = checked_inverse(field.metric(x));
    const MetricGradient dg = gradient_at(field, x);
    const MetricHessian ddg = hessian_at(field, x);

    // dgam[m][i](j, k) = d_m Gamma^i_{jk}
    std::vector<Christoffel> dgam(n, Christoffel(n, Eigen::MatrixXd::Zero(n, n)));
    for (int m = 0; m < n; ++m) {
        const Eigen::MatrixXd dginv = -ginv * dg[m] * ginv;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    double acc = 0.0;
                    for (int l = 0; l < n; ++l) {
                        const double s = dg[j](l, k) + dg[k](l, j) - dg[l](j, k);
                        const double ds = ddg[m][j](l, k) + ddg[m][k](l, j) - ddg[m][l](j, k);
                        acc += dginv(i, l) * s + ginv(i, l) * ds;
                    }
                    dgam[m][i](j, k) = 0.5 * acc;
                }
    }

    auto riemann = [&](int i, int j, int k, int l) {
        double r = dgam[k][i](l, j) - dgam[l][i](k, j);
        for (int m = 0; m < n; ++m) r += gam[i](k, m) * gam[m](l, j) - gam[i](l, m) * gam[m](k, j);
        return r;
    };

    Eigen::MatrixXd ricci = Eigen::MatrixXd::Zero(n, n);
    double antisym = 0.0;
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
            for (int i = 0; i < n; ++i) {
                ricci(j, l) += riemann(i, j, i, l);
                for (int k = 0; k < n; ++k)
                    antisym = std::max(antisym, std::abs(riemann(i, j, k, l) + riemann(i, j, l, k)));
            }

    double gsym = 0.0;
    for (int i = 0; i < n; ++i) gsym = std::max(gsym, (gam[i] - gam[i].transpose()).cwiseAbs().maxCoeff());

    CurvatureReport rep;
    rep.point = x;
    rep.method = CurvatureMethod::Pipeline;
    rep.scalar_r = (ginv.cwiseProduct(ricci)).sum();
    rep.residuals["riemann_antisymmetry"] = antisym;
    rep.residuals["christoffel_symmetry"] = gsym;
    rep.residuals["ricci_symmetry"] = (ricci - ricci.transpose()).cwiseAbs().maxCoeff();
    return rep;
}

double scalar_closed(FamilyTag tag, double n1, double n2) {
    if (!(n1 >= 0.0) || !(n2 >= 0.0)) {
        throw ValidationError("scalar curvature needs n1, n2 >= 0");
    }
    if (tag == FamilyTag::TS) return 0.0;
    const double d = 2.0 * (n1 * n2) + (n1 + n2);
    const double prod = 24.0 * ((n1 * (n1 + 1.0)) * (n2 * (n2 + 1.0)));
    if (tag == FamilyTag::MTS) {
        if (d == 0.0) return std::numeric_limits<double>::infinity();
        const double u = n1 - n2;
        return 2.0 / (d * d) * (u * u - prod + 9.0 * d);
    }
    const double e = d + 1.0, s = n1 + n2 + 1.0;
    return 2.0 / (e * e) * (s * s - prod - 9.0 * e);
}

std::string to_string(SectionKind k) {
    switch (k) {
    case SectionKind::Symmetric:
        return "symmetric";
    case SectionKind::Perpendicular:
        return "perpendicular";
    case SectionKind::Edge:
        return "edge";
    }
    return "?";
}

SectionKind parse_section(const std::string &name) {
    if (name == "symmetric") return SectionKind::Symmetric;
    if (name == "perpendicular") return SectionKind::Perpendicular;
    if (name == "edge") return SectionKind::Edge;
    throw ValidationError("unknown section '" + name + "' (symmetric, perpendicular, edge)");
}

double sts_saddle_occupancy() { return std::sqrt(1.15) - 0.5; }

std::pair<double, double> section_domain(FamilyTag tag, SectionKind kind) {
    if (tag == FamilyTag::TS) throw ValidationError("section curves exist for MTS and STS only");
    if (kind == SectionKind::Perpendicular) {
        return {0.0, tag == FamilyTag::MTS ? 1.0 : 2.0 * sts_saddle_occupancy()};
    }
    return {0.0, std::numeric_limits<double>::infinity()};
}

Eigen::Vector2d section_locus(FamilyTag tag, SectionKind kind, double s) {
    const auto [lo, hi] = section_domain(tag, kind);
    if (!(s >= lo) || !(s <= hi) || std::isinf(s)) {
        throw ValidationError(to_string(kind) + " section parameter " + std::to_string(s) +
                              " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    switch (kind) {
    case SectionKind::Symmetric:
        return {s, s};
    case SectionKind::Edge:
        return {s, 0.0};
    case SectionKind::Perpendicular:
        return {s, hi - s};
    }
    return {};
}

double section_curve(FamilyTag tag, SectionKind kind, double s) {
    section_locus(tag, kind, s);
    const bool mts = tag == FamilyTag::MTS;
    switch (kind) {
    case SectionKind::Symmetric: {
        if (mts) {
            if (s == 0.0) return std::numeric_limits<double>::infinity();
            return 9.0 / (s * (s + 1.0)) - 12.0;
        }
        const double b = s * (s + 1.0);
        return -4.0 * (12.0 * b * b + 7.0 * b + 4.0) / ((2.0 * b + 1.0) * (2.0 * b + 1.0));
    }
    case SectionKind::Perpendicular: {
        if (mts) {
            const double a = s * (1.0 - s);
            return -4.0 * (12.0 * a * a + 17.0 * a - 5.0) / ((2.0 * a + 1.0) * (2.0 * a + 1.0));
        }
        const double ns = sts_saddle_occupancy();
        const double g = s * (2.0 * ns - s) + ns;
        const double den = 2.0 * g + 1.0;
        return -4.0 / (den * den) * (12.0 * g * g + 21.0 * g + (4.0 - 14.0 * ns * (ns + 1.0)));
    }
    case SectionKind::Edge:
        if (mts) {
            if (s == 0.0) return std::numeric_limits<double>::infinity();
            return 2.0 + 18.0 / s;
        }
        return 2.0 - 18.0 / (s + 1.0);
    }
    return 0.0;
}

double scalar_warped(FamilyTag tag, double n1, double n2) {
    if (tag == FamilyTag::TS) throw ValidationError("the TS manifold is not warped");
    if (!(n1 > 0.0) || !(n2 > 0.0)) {
        throw DegeneracyError("warped-product route needs n1, n2 > 0 (base metric diverges)");
    }
    const bool mts = tag == FamilyTag::MTS;
    if (mts && n1 == n2) {
        throw DegeneracyError("warped-product route is undefined on the MTS diagonal n1 = n2");
    }
    const double d = 2.0 * n1 * n2 + n1 + n2 + (mts ? 0.0 : 1.0);
    const double u = mts ? n1 - n2 : n1 + n2 + 1.0;
    const double hval = u * u / d;

    // d_j ln H and d_j^2 ln H
    const double l1 = 2.0 / u - (2.0 * n2 + 1.0) / d;
    const double l2 = (mts ? -2.0 : 2.0) / u - (2.0 * n1 + 1.0) / d;
    const double l11 = -2.0 / (u * u) + (2.0 * n2 + 1.0) * (2.0 * n2 + 1.0) / (d * d);
    const double l22 = -2.0 / (u * u) + (2.0 * n1 + 1.0) * (2.0 * n1 + 1.0) / (d * d);

    const double fibre = (mts ? 8.0 : -8.0) / hval;
    const double second = n1 * (n1 + 1.0) * (4.0 * l11 + 3.0 * l1 * l1) +
                          n2 * (n2 + 1.0) * (4.0 * l22 + 3.0 * l2 * l2);
    const double first = (2.0 * n1 + 1.0) * l1 + (2.0 * n2 + 1.0) * l2;
    return fibre - 2.0 * second - 4.0 * first;
}

double laplace_beltrami(const MetricField &field, const std::function<double(const Point &)> &v,
                        const Point &x) {
    if (field.domain_check) field.domain_check(x);
    const int n = field.dim;

    // fourth-order central first derivative
    auto deriv = [&](const auto &fn, const Point &y, int k) {
        const double h = step_for(field, y, k);
        auto at = [&](double t) {
            Point z = y;
            z[k] += t;
            check_stencil(field, z);
            return fn(z);
        };
        return (at(-2.0 * h) - 8.0 * at(-h) + 8.0 * at(h) - at(2.0 * h)) / (12.0 * h);
    };

    auto flux = [&](const Point &y, int j) {
        const Eigen::MatrixXd g = field.metric(y);
        const Eigen::MatrixXd ginv = checked_inverse(g);
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += ginv(j, k) * deriv(v, y, k);
        return std::sqrt(g.determinant()) * acc;
    };

    double div = 0.0;
    for (int j = 0; j < n; ++j) {
        div += deriv([&](const Point &y) { return flux(y, j); }, x, j);
    }
    return div / std::sqrt(field.metric(x).determinant());
}

double scalar_warped_laplacian(FamilyTag tag, double n1, double n2) {
    if (tag == FamilyTag::TS) throw ValidationError("the TS manifold is not warped");
    if (tag == FamilyTag::MTS && n1 == n2) {
        throw DegeneracyError("warped-product route is undefined on the MTS diagonal n1 = n2");
    }
    auto u = [tag](const Point &y) { return std::pow(warping_function(tag, y[0], y[1]), 1.5); };
    const Point x = Eigen::Vector2d(n1, n2);
    const double f = warping_function(tag, n1, n2);
    const double fibre = (tag == FamilyTag::MTS ? 2.0 : -2.0) / (f * f);
    MetricField base = ts_field();
    base.step = 2.5e-4;
    return -(8.0 / 3.0) * laplace_beltrami(base, u, x) / u(x) + fibre;
}

} // namespace gaussfisher
