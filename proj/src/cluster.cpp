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

#include "beamopt/cluster.hpp"
#include "beamopt/errors.hpp"
#include "beamopt/numerics.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace beamopt::cluster {

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;

void check_sigma(double sigma_deg)
{
    if (!(sigma_deg > 0.0) || !std::isfinite(sigma_deg))
        throw DomainError("cluster sigma must be positive and finite, got " +
                          std::to_string(sigma_deg));
}

void check_beamwidth(double beamwidth_deg)
{
    if (!(beamwidth_deg >= 0.0) || !std::isfinite(beamwidth_deg))
        throw DomainError("beamwidth must be non-negative and finite, got " +
                          std::to_string(beamwidth_deg));
}

void check_gaussian(const GaussianCluster &cl)
{
    if (!(cl.total_power > 0.0) || !std::isfinite(cl.total_power))
        throw DomainError("cluster total power must be positive and finite, got " +
                          std::to_string(cl.total_power));
    check_sigma(cl.sigma_deg);
}

void check_fitted(const FittedGaussianCluster &cl)
{
    if (!(cl.u > 0.0) || !std::isfinite(cl.u))
        throw DomainError("fitted cluster peak u must be positive and finite, got " +
                          std::to_string(cl.u));
    if (!(cl.v > 0.0) || !std::isfinite(cl.v))
        throw DomainError("fitted cluster width v must be positive and finite, got " +
                          std::to_string(cl.v));
}

} // namespace

GaussianCluster conference_room_cluster(double total_power, double center_deg)
{
    return GaussianCluster{total_power, conference_room_sigma_deg, center_deg};
}

GaussianCluster living_room_cluster(double total_power, double center_deg)
{
    return GaussianCluster{total_power, living_room_sigma_deg, center_deg};
}

double FittedGaussianCluster::total_power() const { return u * v * std::sqrt(std::numbers::pi); }

double FittedGaussianCluster::sigma_deg() const { return v / sqrt2; }

ClusterProfile::ClusterProfile(double specular_aoa_deg, double specular_power,
                               std::vector<double> offsets_deg, std::vector<double> diffuse_power)
    : specular_aoa_deg_(specular_aoa_deg), specular_power_(specular_power),
      offsets_deg_(std::move(offsets_deg)), diffuse_power_(std::move(diffuse_power))
{
    if (!std::isfinite(specular_aoa_deg_))
        throw DomainError("specular AoA must be finite");
    if (!(specular_power_ >= 0.0) || !std::isfinite(specular_power_))
        throw DomainError("specular power must be non-negative and finite");
    if (offsets_deg_.size() != diffuse_power_.size())
        throw DomainError("offset and power arrays must have equal length (" +
                          std::to_string(offsets_deg_.size()) + " vs " +
                          std::to_string(diffuse_power_.size()) + ")");
    const std::size_t n = offsets_deg_.size();
    if (n < 2)
        throw DomainError("a diffuse ladder needs at least 2 rays, got " + std::to_string(n));

    for (std::size_t k = 0; k < n; ++k) {
        if (!std::isfinite(offsets_deg_[k]))
            throw DomainError("diffuse offset " + std::to_string(k) + " is not finite");
        if (!(diffuse_power_[k] >= 0.0) || !std::isfinite(diffuse_power_[k]))
            throw DomainError("diffuse power " + std::to_string(k) +
                              " must be non-negative and finite");
    }

    span_deg_ = offsets_deg_.back() - offsets_deg_.front();
    if (!(span_deg_ > 0.0))
        throw DomainError("diffuse offsets must be strictly increasing");
    delta_alpha_deg_ = span_deg_ / static_cast<double>(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double gap = offsets_deg_[k + 1] - offsets_deg_[k];
        if (std::abs(gap - delta_alpha_deg_) > 1e-6)
            throw DomainError("diffuse offsets must be uniformly spaced; gap " +
                              std::to_string(k) + " deviates by " +
                              std::to_string(gap - delta_alpha_deg_) + " deg");
    }
}

double total_power_discrete(const ClusterProfile &profile)
{
    double diffuse_sum = 0.0;
    for (double p : profile.diffuse_power())
        diffuse_sum += p;
    const double weight = profile.span_deg() / static_cast<double>(profile.n_diffuse());
    return profile.specular_power() + weight * diffuse_sum;
}

double rho_rect(double sigma_deg, double delta_deg, double beamwidth_deg)
{
    check_sigma(sigma_deg);
    check_beamwidth(beamwidth_deg);
    const double d = std::abs(delta_deg);
    const double denom = 2.0 * sqrt2 * sigma_deg;
    return 0.5 * (numerics::erf((beamwidth_deg + 2.0 * d) / denom) +
                  numerics::erf((beamwidth_deg - 2.0 * d) / denom));
}

double rho_tri(double sigma_deg, double delta_deg, double beamwidth_deg)
{
    check_sigma(sigma_deg);
    check_beamwidth(beamwidth_deg);
    if (beamwidth_deg == 0.0)
        return 0.0;

    const double d = std::abs(delta_deg);
    if (d == 0.0) {
        // Aligned beam: the taper integral reduces to a closed form.
        const double z = beamwidth_deg / (2.0 * sqrt2 * sigma_deg);
        const double decay = -std::expm1(-beamwidth_deg * beamwidth_deg /
                                         (8.0 * sigma_deg * sigma_deg));
        return numerics::erf(z) -
               sqrt2 * sigma_deg * decay / (std::sqrt(std::numbers::pi) * beamwidth_deg);
    }

    // Misaligned beam: integrate the tapered window against the density,
    // splitting at the window apex where the integrand has a kink.
    const auto integrand = [&](double phi) {
        const double w = antenna::window_shape(Shape::tri, phi - d, beamwidth_deg);
        const double t = phi / sigma_deg;
        return w * std::exp(-0.5 * t * t) / (sigma_deg * std::sqrt(2.0 * std::numbers::pi));
    };
    const double lo = d - 0.5 * beamwidth_deg;
    const double hi = d + 0.5 * beamwidth_deg;
    return numerics::integrate(integrand, lo, d, 1e-12) +
           numerics::integrate(integrand, d, hi, 1e-12);
}

double extracted_power_standard(const GaussianCluster &cl, const BeamSpec &beam)
{
    check_gaussian(cl);
    const double delta = beam.scan_angle_deg() - cl.center_deg;
    const double rho = (beam.shape() == Shape::rect)
                           ? rho_rect(cl.sigma_deg, delta, beam.beamwidth_deg())
                           : rho_tri(cl.sigma_deg, delta, beam.beamwidth_deg());
    return cl.total_power * rho;
}

double extracted_power_fitted(const FittedGaussianCluster &cl, const BeamSpec &beam)
{
    check_fitted(cl);
    const double d = std::abs(beam.scan_angle_deg() - cl.x);
    const double bw = beam.beamwidth_deg();
    if (beam.shape() == Shape::rect) {
        // Native (u, v) form of the captured power; equals total_power() times
        // the rectangular capture fraction at sigma = v / sqrt(2).
        const double denom = 2.0 * cl.v;
        const double sum =
            numerics::erf((bw + 2.0 * d) / denom) + numerics::erf((bw - 2.0 * d) / denom);
        return 0.5 * cl.u * cl.v * std::sqrt(std::numbers::pi) * sum;
    }
    return cl.total_power() * rho_tri(cl.sigma_deg(), d, bw);
}

DiscreteExtraction extracted_power_discrete(const ClusterProfile &profile, const BeamSpec &beam)
{
    if (beam.shape() != Shape::rect)
        throw DomainError("discrete extraction is defined for rectangular beams only");

    DiscreteExtraction out;
    const double bw = beam.beamwidth_deg();
    const double lo = beam.scan_angle_deg() - 0.5 * bw;
    const double hi = beam.scan_angle_deg() + 0.5 * bw;

    if (std::abs(profile.specular_aoa_deg() - beam.scan_angle_deg()) <= 0.5 * bw)
        out.power += profile.specular_power();

    const auto n_beam = static_cast<long>(std::floor(bw / profile.delta_alpha_deg()));
    if (n_beam < 1) {
        out.beam_narrower_than_spacing = true;
        return out;
    }

    // Diffuse membership is half-open: [scan - bw/2, scan + bw/2).
    double diffuse_sum = 0.0;
    long taken = 0;
    for (std::size_t k = 0; k < profile.n_diffuse() && taken < n_beam; ++k) {
        const double angle = profile.ray_angle_deg(k);
        if (angle < lo || angle >= hi)
            continue;
        diffuse_sum += profile.diffuse_power()[k];
        ++taken;
    }
    out.power += bw / static_cast<double>(n_beam) * diffuse_sum;
    return out;
}

FittedGaussianCluster profile_to_fitted(const ClusterProfile &profile)
{
    std::vector<numerics::PowerSample> samples;
    samples.reserve(profile.n_diffuse());
    for (std::size_t k = 0; k < profile.n_diffuse(); ++k)
        samples.push_back({profile.ray_angle_deg(k), profile.diffuse_power()[k]});
    const numerics::FitResult fit = numerics::fit_gaussian(samples);
    return FittedGaussianCluster{fit.u, fit.v, fit.x};
}

} // namespace beamopt::cluster
