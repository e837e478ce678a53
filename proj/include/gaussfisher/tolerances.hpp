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

namespace gaussfisher {

/// Numerical slack used across the library. Defaults are tuned for O(1)
/// covariance entries in double precision.
struct Tolerances {
    double psd = 1e-10;        ///< min eigenvalue of V + iJ/2 may dip this far below 0
    double edge = 1e-9;        ///< |det(V + iJ/2)| below this counts as the physicality edge
    double imag = 1e-9;        ///< relative imaginary residue allowed on real determinants
    double clamp = 1e-10;      ///< negative radicands down to -clamp are treated as 0
    double symmetry = 1e-12;   ///< absolute asymmetry allowed in a CM
    double inequality = 1e-9;  ///< slack on the determinant inequalities
    double overshoot = 1e-10;  ///< fidelity may exceed 1 by this much before it is rejected

    /// Defaults overridden by GAUSSFISHER_TOL_{PSD,EDGE,IMAG,CLAMP,SYMMETRY,INEQUALITY,OVERSHOOT}.
    static Tolerances from_env();
};

} // namespace gaussfisher
