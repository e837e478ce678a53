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

#include "gaussfisher/fock_oracle.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "gaussfisher/errors.hpp"

namespace gaussfisher {

namespace {

using cplx = std::complex<double>;

struct State {
    int n1;
    int n2;
};

// One invariant subspace of a generator, exponentiated.
struct Block {
    std::vector<State> states;
    Eigen::MatrixXcd u;
};

void check_cutoff(int d) {
    if (d < 2) throw ValidationError("Fock cutoff must be >= 2");
}

// Total photon number N, per-mode cap pad - 1.
Block bs_block(double theta, double phi, int total, int pad) {
    Block b;
    for (int k = std::max(0, total - pad + 1); k <= std::min(total, pad - 1); ++k) {
        b.states.push_back({k, total - k});
    }
    const int m = static_cast<int>(b.states.size());
    const cplx e = std::polar(1.0, phi);
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(m, m);
    // a1 a2^dag |k, N-k> = sqrt(k (N-k+1)) |k-1, N-k+1>
    for (int j = 0; j < m; ++j) {
        const int k = b.states[j].n1;
        if (j > 0) {
            const double amp = std::sqrt(double(k) * (total - k + 1));
            g(j - 1, j) += 0.5 * theta * e * amp;
            g(j, j - 1) -= 0.5 * theta * std::conj(e) * amp;
        }
    }
    b.u = g.exp();
    return b;
}

// Mode difference M = n1 - n2, per-mode cap pad - 1.
Block sq_block(double r, double phi, int diff, int pad) {
    Block b;
    for (int k = std::max(0, -diff); k + diff < pad && k < pad; ++k) {
        b.states.push_back({k + diff, k});
    }
    const int m = static_cast<int>(b.states.size());
    const cplx e = std::polar(1.0, phi);
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(m, m);
    // a1^dag a2^dag |n1, n2> = sqrt((n1+1)(n2+1)) |n1+1, n2+1>
    for (int j = 0; j + 1 < m; ++j) {
        const double amp = std::sqrt(double(b.states[j].n1 + 1) * (b.states[j].n2 + 1));
        g(j + 1, j) += r * e * amp;
        g(j, j + 1) -= r * std::conj(e) * amp;
    }
    b.u = g.exp();
    return b;
}

std::vector<Block> bs_blocks(double theta, double phi, int d) {
    std::vector<Block> out;
    const int pad = 2 * d;
    for (int n = 0; n <= 2 * (d - 1); ++n) out.push_back(bs_block(theta, phi, n, pad));
    return out;
}

std::vector<Block> sq_blocks(double r, double phi, int d) {
    std::vector<Block> out;
    const int pad = 2 * d;
    for (int m = -(d - 1); m <= d - 1; ++m) out.push_back(sq_block(r, phi, m, pad));
    return out;
}

FockUnitary assemble_unitary(const std::vector<Block> &blocks, int d,
                             bool (*retained)(const State &, int)) {
    const int dim = d * d;
    FockUnitary out;
    out.d = d;
    out.u = Eigen::MatrixXcd::Zero(dim, dim);
    for (const Block &b : blocks) {
        for (std::size_t i = 0; i < b.states.size(); ++i) {
            const State &si = b.states[i];
            if (si.n1 >= d || si.n2 >= d) continue;
            for (std::size_t j = 0; j < b.states.size(); ++j) {
                const State &sj = b.states[j];
                if (sj.n1 >= d || sj.n2 >= d) continue;
                out.u(si.n1 * d + si.n2, sj.n1 * d + sj.n2) = b.u(i, j);
            }
        }
    }
    std::vector<int> cols;
    for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c)
            if (retained({a, c}, d)) cols.push_back(a * d + c);
    Eigen::MatrixXcd sub(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) sub.col(j) = out.u.col(cols[j]);
    const Eigen::MatrixXcd gram = sub.adjoint() * sub;
    out.defect = (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    return out;
}

bool bs_retained(const State &s, int d) { return s.n1 + s.n2 <= d - 1; }
bool sq_retained(const State &s, int d) {
    const int cut = (d + 3) / 4;
    return s.n1 < cut && s.n2 < cut;
}

FockDensity density_from_blocks(const std::vector<Block> &blocks, double n1, double n2, int d) {
    FockDensity out;
    out.d = d;
    out.rho = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (const Block &b : blocks) {
        const int m = static_cast<int>(b.states.size());
        Eigen::VectorXd w(m);
        for (int j = 0; j < m; ++j) {
            w[j] = bose_einstein_weight(n1, b.states[j].n1) * bose_einstein_weight(n2, b.states[j].n2);
        }
        const Eigen::MatrixXcd rb = b.u * w.asDiagonal() * b.u.adjoint();
        for (int i = 0; i < m; ++i) {
            const State &si = b.states[i];
            if (si.n1 >= d || si.n2 >= d) continue;
            for (int j = 0; j < m; ++j) {
                const State &sj = b.states[j];
                if (sj.n1 >= d || sj.n2 >= d) continue;
                out.rho(si.n1 * d + si.n2, sj.n1 * d + sj.n2) = rb(i, j);
            }
        }
    }
    out.rho = 0.5 * (out.rho + out.rho.adjoint()).eval();
    out.trace_deficit = 1.0 - out.rho.trace().real();
    return out;
}

void check_deficit(const FockDensity &f, double bound) {
    if (f.trace_deficit > bound) {
        throw TruncationError("trace deficit " + std::to_string(f.trace_deficit) +
                              " exceeds " + std::to_string(bound) + " at cutoff d = " +
                              std::to_string(f.d) + "; raise the truncation");
    }
}

// Connected components of the union of the nonzero patterns.
std::vector<std::vector<int>> joint_blocks(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    const int n = static_cast<int>(a.rows());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a(i, j) != cplx(0.0) || b(i, j) != cplx(0.0)) parent[find(i)] = find(j);
    std::vector<std::vector<int>> groups(n);
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto &g : groups)
        if (!g.empty()) out.push_back(std::move(g));
    return out;
}

Eigen::VectorXd clamped_spectrum(const Eigen::VectorXd &ev) {
    Eigen::VectorXd out = ev;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] < -1e-8) {
            throw NumericalConsistencyError("density-matrix eigenvalue " + std::to_string(ev[i]) +
                                            " below -1e-8");
        }
        out[i] = std::max(ev[i], 0.0);
    }
    return out;
}

} // namespace

double bose_einstein_weight(double n, int k) {
    return std::pow(n, k) / std::pow(n + 1.0, k + 1);
}

FockDensity thermal_dm(double n1, double n2, int d, double deficit_bound) {
    check_cutoff(d);
    validate(TsParams{n1, n2});
    FockDensity out;
    out.d = d;
    out.rho = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c)
            out.rho(a * d + c, a * d + c) = bose_einstein_weight(n1, a) * bose_einstein_weight(n2, c);
    out.trace_deficit = 1.0 - out.rho.trace().real();
    check_deficit(out, deficit_bound);
    return out;
}

FockUnitary bs_unitary(double theta, double phi, int d) {
    check_cutoff(d);
    return assemble_unitary(bs_blocks(theta, phi, d), d, bs_retained);
}

FockUnitary sq_unitary(double r, double phi, int d, double defect_bound) {
    check_cutoff(d);
    if (!(r >= 0.0)) throw ValidationError("squeeze parameter must be >= 0");
    FockUnitary u = assemble_unitary(sq_blocks(r, phi, d), d, sq_retained);
    if (u.defect > defect_bound) {
        throw TruncationError("squeezer unitarity defect " + std::to_string(u.defect) +
                              " exceeds " + std::to_string(defect_bound) + " at d = " +
                              std::to_string(d));
    }
    return u;
}

FockDensity family_dm(const FamilyPoint &p, int d, double deficit_bound) {
    check_cutoff(d);
    FockDensity out;
    if (const auto *m = std::get_if<MtsParams>(&p.params())) {
        out = density_from_blocks(bs_blocks(m->theta, m->phi, d), m->n1, m->n2, d);
    } else if (const auto *s = std::get_if<StsParams>(&p.params())) {
        out = density_from_blocks(sq_blocks(s->r, s->phi, d), s->n1, s->n2, d);
    } else {
        return thermal_dm(p.n1(), p.n2(), d, deficit_bound);
    }
    check_deficit(out, deficit_bound);
    return out;
}

double uhlmann_fidelity(const FockDensity &a, const FockDensity &b) {
    if (a.d != b.d || a.rho.rows() != b.rho.rows()) {
        throw ValidationError("density matrices have different truncations");
    }
    double root = 0.0;
    for (const auto &idx : joint_blocks(a.rho, b.rho)) {
        const int m = static_cast<int>(idx.size());
        Eigen::MatrixXcd ba(m, m), bb(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                ba(i, j) = a.rho(idx[i], idx[j]);
                bb(i, j) = b.rho(idx[i], idx[j]);
            }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eb(bb);
        const Eigen::VectorXd sb = clamped_spectrum(eb.eigenvalues()).cwiseSqrt();
        const Eigen::MatrixXcd sqrt_b = eb.eigenvectors() * sb.asDiagonal() * eb.eigenvectors().adjoint();
        Eigen::MatrixXcd inner = sqrt_b * ba * sqrt_b;
        inner = 0.5 * (inner + inner.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ei(inner, Eigen::EigenvaluesOnly);
        root += clamped_spectrum(ei.eigenvalues()).cwiseSqrt().sum();
    }
    return root * root;
}

double fock_overlap(const FockDensity &a, const FockDensity &b) {
    if (a.rho.rows() != b.rho.rows()) {
        throw ValidationError("density matrices have different truncations");
    }
    return (a.rho.cwiseProduct(b.rho.transpose())).sum().real();
}

double spectral_fidelity_ts(double n1a, double n2a, double n1b, double n2b, int n_terms) {
    validate(TsParams{n1a, n2a});
    validate(TsParams{n1b, n2b});
    if (n_terms < 1) throw ValidationError("n_terms must be >= 1");
    double s1 = 0.0, s2 = 0.0;
    for (int k = 0; k < n_terms; ++k) {
        s1 += std::sqrt(bose_einstein_weight(n1a, k) * bose_einstein_weight(n1b, k));
        s2 += std::sqrt(bose_einstein_weight(n2a, k) * bose_einstein_weight(n2b, k));
    }
    return s1 * s1 * s2 * s2;
}

} // namespace gaussfisher
