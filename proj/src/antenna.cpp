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

#include "beamopt/antenna.hpp"
#include "beamopt/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace beamopt::antenna {

namespace {

constexpr double deg_to_rad = std::numbers::pi / 180.0;

void check_scan_angle(double scan_angle_deg)
{
    if (!(scan_angle_deg >= 0.0 && scan_angle_deg <= 180.0))
        throw DomainError("scan angle must lie in [0, 180] degrees, got " +
                          std::to_string(scan_angle_deg));
}

void check_positive_beamwidth(double beamwidth_deg)
{
    if (!(beamwidth_deg > 0.0) || !std::isfinite(beamwidth_deg))
        throw DomainError("beamwidth must be positive and finite, got " +
                          std::to_string(beamwidth_deg));
}

} // namespace

ULAGeometry::ULAGeometry(int n_elements, double spacing_ratio)
    : n_elements_(n_elements), spacing_ratio_(spacing_ratio)
{
    if (n_elements_ < 2)
        throw DomainError("a ULA needs at least 2 elements, got " + std::to_string(n_elements_));
    if (spacing_ratio_ != half_wavelength_ratio)
        throw DomainError("element spacing is fixed at half a wavelength; got ratio " +
                          std::to_string(spacing_ratio_));
}

BeamSpec::BeamSpec(Shape shape, double beamwidth_deg, double scan_angle_deg)
    : shape_(shape), beamwidth_deg_(beamwidth_deg), scan_angle_deg_(scan_angle_deg)
{
    if (!(beamwidth_deg_ >= 0.0) || !std::isfinite(beamwidth_deg_))
        throw DomainError("beamwidth must be non-negative and finite, got " +
                          std::to_string(beamwidth_deg_));
    check_scan_angle(scan_angle_deg_);
}

bool is_endfire(double scan_angle_deg)
{
    check_scan_angle(scan_angle_deg);
    return scan_angle_deg == 0.0 || scan_angle_deg == 180.0;
}

double gain_from_elements(const ULAGeometry &ula)
{
    return static_cast<double>(ula.n_elements());
}

double beamwidth_from_elements(const ULAGeometry &ula, double scan_angle_deg)
{
    const auto n = static_cast<double>(ula.n_elements());
    if (is_endfire(scan_angle_deg))
        return endfire_coeff_deg / std::sqrt(n);
    return broadside_coeff_deg / (n * std::sin(scan_angle_deg * deg_to_rad));
}

double elements_from_beamwidth_exact(double beamwidth_deg, double scan_angle_deg)
{
    check_positive_beamwidth(beamwidth_deg);
    if (is_endfire(scan_angle_deg)) {
        const double r = endfire_coeff_deg / beamwidth_deg;
        return r * r;
    }
    return broadside_coeff_deg / (beamwidth_deg * std::sin(scan_angle_deg * deg_to_rad));
}

int elements_from_beamwidth(double beamwidth_deg, double scan_angle_deg)
{
    const double x = elements_from_beamwidth_exact(beamwidth_deg, scan_angle_deg);
    // The 1e-9 guard absorbs round-trip error when x is an exact integer in
    // real arithmetic but lands a few ulp above it in doubles.
    const double n = std::ceil(x - 1e-9);
    if (n < 2.0)
        return 2;
    return static_cast<int>(n);
}

double gain_from_beamwidth(double beamwidth_deg, double scan_angle_deg)
{
    return elements_from_beamwidth_exact(beamwidth_deg, scan_angle_deg);
}

double window_value(const BeamSpec &beam, double angle_deg)
{
    return window_shape(beam.shape(), angle_deg - beam.scan_angle_deg(), beam.beamwidth_deg());
}

double window_shape(Shape shape, double offset_deg, double beamwidth_deg)
{
    if (!(beamwidth_deg >= 0.0) || !std::isfinite(beamwidth_deg))
        throw DomainError("beamwidth must be non-negative and finite, got " +
                          std::to_string(beamwidth_deg));
    if (beamwidth_deg == 0.0)
        return 0.0;
    const double off = std::abs(offset_deg);
    if (off > 0.5 * beamwidth_deg)
        return 0.0;
    if (shape == Shape::rect)
        return 1.0;
    return 1.0 - off / beamwidth_deg;
}

} // namespace beamopt::antenna
