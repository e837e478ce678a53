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

#include <random>

#include "gaussfisher/special_states.hpp"

namespace gaussfisher {

using Rng = std::mt19937_64;

double uniform(Rng &rng, double lo, double hi);

/// Random symplectic matrix: local rotations and squeezers composed with a
/// beam splitter and a two-mode squeezer.
Mat4 random_symplectic(Rng &rng, double max_squeeze = 0.8);

/// S V_T S^T with random thermal occupancies in [0, n_max]; pure with
/// probability pure_fraction.
CovMatrix random_physical_cov(Rng &rng, double n_max = 2.0, double pure_fraction = 0.1);

TwoModeGaussian random_state(Rng &rng, double n_max = 2.0, double mean_scale = 0.5);

struct DrawBox {
    double n_lo = 0.0;
    double n_hi = 3.0;
    double min_gap = 0.0;   ///< minimum |n1 - n2|
    double x_lo = 0.0;      ///< theta (MTS) or r (STS)
    double x_hi = 1.0;
    double phi_abs = 3.14;  ///< phi drawn in [-phi_abs, phi_abs]
    bool ordered = false;   ///< force n1 >= n2
};

MtsParams random_mts(Rng &rng, const DrawBox &box);
StsParams random_sts(Rng &rng, const DrawBox &box);
FamilyPoint random_point(Rng &rng, FamilyTag tag, const DrawBox &box);

} // namespace gaussfisher
