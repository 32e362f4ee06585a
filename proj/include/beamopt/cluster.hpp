// SPDX-License-Identifier: Apache-2.0
//
// beamopt - received-power-optimal antenna beamwidths for clustered mmWave links
// Copyright (C) 2026 the beamopt contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "beamopt/antenna.hpp"

#include <cstddef>
#include <vector>

namespace beamopt::cluster {

using antenna::BeamSpec;
using antenna::Shape;

// Continuous cluster model: angular power density is Gaussian with the given
// standard deviation around the mean angle of arrival, carrying total_power
// (linear scale) when integrated over all angles. Operations require
// total_power > 0 and sigma_deg > 0.
struct GaussianCluster {
    double total_power = 1.0; // linear power, e.g. mW
    double sigma_deg = 5.0;   // angular standard deviation, degrees
    double center_deg = 90.0; // mean angle of arrival, degrees
};

// Measurement-backed angular spreads for two indoor scenario classes.
inline constexpr double conference_room_sigma_deg = 5.0;
inline constexpr double living_room_sigma_deg = 10.0;

GaussianCluster conference_room_cluster(double total_power, double center_deg);
GaussianCluster living_room_cluster(double total_power, double center_deg);

// Cluster model fitted from ray data: density u * exp(-((phi - x)/v)^2).
// The decay width v relates to the Gaussian standard deviation as
// sigma = v / sqrt(2), and the density integrates to u * v * sqrt(pi).
// Operations require u > 0 and v > 0.
struct FittedGaussianCluster {
    double u = 0.0; // peak density, linear power per degree
    double v = 0.0; // decay width, degrees
    double x = 0.0; // peak angle, degrees

    double total_power() const;
    double sigma_deg() const;
};

// Discrete intra-cluster ray set: one optional specular ray plus a ladder of
// uniformly spaced diffuse rays. Diffuse powers are density samples; the
// ladder spacing supplies the integration measure.
class ClusterProfile {
  public:
    // offsets_deg are diffuse-ray angles relative to the specular AoA, strictly
    // increasing with uniform spacing (each gap within 1e-6 deg of the mean,
    // matching the profile-file ingestion tolerance). Requires at least 2
    // diffuse rays and non-negative powers; set specular_power to 0 for a
    // purely diffuse cluster.
    ClusterProfile(double specular_aoa_deg, double specular_power,
                   std::vector<double> offsets_deg, std::vector<double> diffuse_power);

    double specular_aoa_deg() const { return specular_aoa_deg_; }
    double specular_power() const { return specular_power_; }
    const std::vector<double> &offsets_deg() const { return offsets_deg_; }
    const std::vector<double> &diffuse_power() const { return diffuse_power_; }

    std::size_t n_diffuse() const { return offsets_deg_.size(); }
    double delta_alpha_deg() const { return delta_alpha_deg_; }
    // Angular spread of the diffuse ladder: (n_diffuse - 1) * delta_alpha.
    double span_deg() const { return span_deg_; }
    // Absolute angle of diffuse ray k.
    double ray_angle_deg(std::size_t k) const { return specular_aoa_deg_ + offsets_deg_[k]; }

  private:
    double specular_aoa_deg_;
    double specular_power_;
    std::vector<double> offsets_deg_;
    std::vector<double> diffuse_power_;
    double delta_alpha_deg_;
    double span_deg_;
};

// Total cluster power implied by a discrete profile: the specular power plus
// the diffuse density samples integrated with weight span / n_diffuse.
double total_power_discrete(const ClusterProfile &profile);

// Fraction of a unit-power Gaussian cluster captured by a beam of the given
// width whose center is misaligned from the cluster mean by delta degrees
// (symmetric in the sign of delta). The rectangular window admits everything
// inside the beam; the triangular window tapers toward the edges, so
// rho_tri <= rho_rect pointwise.
double rho_rect(double sigma_deg, double delta_deg, double beamwidth_deg);
double rho_tri(double sigma_deg, double delta_deg, double beamwidth_deg);

// Power captured (before array gain) from a Gaussian cluster by the beam;
// the misalignment is |beam.scan_angle - cluster.center|.
double extracted_power_standard(const GaussianCluster &cl, const BeamSpec &beam);

// Same for a fitted cluster. The rectangular form is evaluated directly in
// the (u, v) parameterization; the triangular form goes through sigma = v/sqrt(2).
double extracted_power_fitted(const FittedGaussianCluster &cl, const BeamSpec &beam);

struct DiscreteExtraction {
    double power = 0.0;
    // Set when the beam is narrower than the diffuse ray spacing, so no
    // diffuse ray budget fits inside the beam and only a specular ray (if
    // present and inside the beam) contributes.
    bool beam_narrower_than_spacing = false;
};

// Power captured from a discrete profile by a rectangular beam. The beam
// admits floor(beamwidth / delta_alpha) diffuse rays starting at the first
// ray inside [scan - bw/2, scan + bw/2), each weighted by
// beamwidth / floor(beamwidth / delta_alpha); the specular ray counts when
// its angle lies within the closed beam interval. Triangular beams are
// rejected: the in-beam ray selection is defined for the flat window only.
DiscreteExtraction extracted_power_discrete(const ClusterProfile &profile, const BeamSpec &beam);

// Gaussian density fit over the diffuse rays of a profile.
FittedGaussianCluster profile_to_fitted(const ClusterProfile &profile);

} // namespace beamopt::cluster
