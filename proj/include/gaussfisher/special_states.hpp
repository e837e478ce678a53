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

#include <string>
#include <variant>

#include "gaussfisher/gaussian_core.hpp"

namespace gaussfisher {

enum class FamilyTag { TS, MTS, STS };

std::string to_string(FamilyTag tag);
/// Accepts "TS", "MTS", "STS" in any letter case.
FamilyTag parse_family(const std::string &name);

struct TsParams {
    double n1 = 0.0;
    double n2 = 0.0;
};

/// Beam-splitter image of a thermal pair. theta in [0, pi), phi in (-pi, pi].
struct MtsParams {
    double n1 = 0.0;
    double n2 = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

/// Two-mode squeezer image of a thermal pair. r >= 0, phi in (-pi, pi].
struct StsParams {
    double n1 = 0.0;
    double n2 = 0.0;
    double r = 0.0;
    double phi = 0.0;
};

void validate(const TsParams &p);
void validate(const MtsParams &p);
void validate(const StsParams &p);

class FamilyPoint {
  public:
    using Params = std::variant<TsParams, MtsParams, StsParams>;

    FamilyPoint(const TsParams &p) : params_(p) { validate(p); }
    FamilyPoint(const MtsParams &p) : params_(p) { validate(p); }
    FamilyPoint(const StsParams &p) : params_(p) { validate(p); }

    FamilyTag tag() const { return static_cast<FamilyTag>(params_.index()); }
    const Params &params() const { return params_; }

    double n1() const;
    double n2() const;

    /// Chart coordinates: (n1, n2) for TS, (n1, n2, theta, phi) for MTS and
    /// (n1, n2, 2r, phi) for STS.
    Eigen::VectorXd chart() const;
    static FamilyPoint from_chart(FamilyTag tag, const Eigen::VectorXd &x);

    /// True on the MTS locus n1 = n2, where the angular directions carry no
    /// information.
    bool degenerate() const;

    friend bool operator==(const FamilyPoint &a, const FamilyPoint &b);

  private:
    Params params_;
};

int chart_dimension(FamilyTag tag);

/// Bose-Einstein occupancy 1/(e^eta - 1).
double occupancy_from_eta(double eta);
/// Inverse of occupancy_from_eta: ln((n + 1)/n).
double eta_from_occupancy(double n);

enum class OccupancyDirection { EtaToOccupancy, OccupancyToEta };
double mean_occupancy_conversion(double x, OccupancyDirection dir);

CovMatrix thermal_cov(const TsParams &p);
Mat2 rotation2(double phi);
Mat4 bs_symplectic(double theta, double phi);
Mat4 sq_symplectic(double r, double phi);

CovMatrix family_cov(const FamilyPoint &p);
TwoModeGaussian family_state(const FamilyPoint &p);

/// Reads (b1, b2, c, d) off a family CM, with c >= 0 and d = c (MTS),
/// d = -c (STS) or c = d = 0 (TS). Throws ValidationError when the CM does
/// not have the block shape of the given family.
StandardForm standard_form(const CovMatrix &cov, FamilyTag tag);

/// arcsinh sqrt(n1 n2 / (n1 + n2 + 1)).
double separability_threshold(double n1, double n2);

} // namespace gaussfisher
