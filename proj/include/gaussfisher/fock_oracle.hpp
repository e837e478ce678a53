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

#include <Eigen/Dense>

#include "gaussfisher/special_states.hpp"

namespace gaussfisher {

/// Two-mode density matrix on the truncated Fock space with per-mode cutoff
/// d; basis index n1 * d + n2.
struct FockDensity {
    int d = 0;
    Eigen::MatrixXcd rho;
    double trace_deficit = 0.0;
};

struct FockUnitary {
    int d = 0;
    Eigen::MatrixXcd u;
    /// max |U^dag U - I| over the retained columns
    double defect = 0.0;
};

/// n^k / (n + 1)^(k + 1)
double bose_einstein_weight(double n, int k);

FockDensity thermal_dm(double n1, double n2, int d, double deficit_bound = 1e-6);

/// exp((theta/2)(e^{i phi} a1 a2^dag - e^{-i phi} a1^dag a2)). The retained
/// columns are those with total photon number <= d - 1.
FockUnitary bs_unitary(double theta, double phi, int d);

/// exp(r (e^{i phi} a1^dag a2^dag - e^{-i phi} a1 a2)). The retained columns
/// are those with n1, n2 < ceil(d / 4). Throws TruncationError when the
/// defect exceeds defect_bound.
FockUnitary sq_unitary(double r, double phi, int d, double defect_bound = 1e-8);

/// U rho_T U^dag for the family point, cut to d photons per mode.
FockDensity family_dm(const FamilyPoint &p, int d, double deficit_bound = 1e-6);

/// [Tr sqrt(sqrt(b) a sqrt(b))]^2, evaluated on the connected blocks of the
/// joint sparsity pattern.
double uhlmann_fidelity(const FockDensity &a, const FockDensity &b);

/// Tr(a b)
double fock_overlap(const FockDensity &a, const FockDensity &b);

/// (sum_k sqrt(p'_k p''_k))^2 over the product Bose-Einstein spectra with
/// n_terms levels per mode.
double spectral_fidelity_ts(double n1a, double n2a, double n1b, double n2b, int n_terms);

} // namespace gaussfisher
