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

namespace beamopt::antenna {

// Idealized main-lobe window of the array pattern, normalized to 1 at the
// beam center. The rectangular window bounds the real pattern from above,
// the triangular window (which tapers to 0.5 at the beam edges) from below.
enum class Shape { rect, tri };

// Half-power beamwidth coefficient of a uniform linear array steered off the
// array axis: beamwidth_deg = 101.5 / (n * sin(scan_angle)).
inline constexpr double broadside_coeff_deg = 101.5;

// Endfire coefficient: beamwidth_deg = 152.53 / sqrt(n) when the beam points
// along the array axis (scan angle of exactly 0 or 180 degrees).
inline constexpr double endfire_coeff_deg = 152.53;

// The beamwidth coefficients assume half-wavelength element spacing.
inline constexpr double half_wavelength_ratio = 0.5;

// Uniform linear array geometry. Spacing other than half-wavelength is
// rejected because the beamwidth laws above are specific to d = lambda/2.
class ULAGeometry {
  public:
    explicit ULAGeometry(int n_elements, double spacing_ratio = half_wavelength_ratio);

    int n_elements() const { return n_elements_; }
    double spacing_ratio() const { return spacing_ratio_; }

  private:
    int n_elements_;
    double spacing_ratio_;
};

// A beam: window shape, half-power beamwidth, and the scan angle the main
// lobe is steered to. A zero beamwidth is a valid degenerate beam (captures
// nothing); scan angles must lie in [0, 180] degrees.
class BeamSpec {
  public:
    BeamSpec(Shape shape, double beamwidth_deg, double scan_angle_deg);

    Shape shape() const { return shape_; }
    double beamwidth_deg() const { return beamwidth_deg_; }
    double scan_angle_deg() const { return scan_angle_deg_; }

  private:
    Shape shape_;
    double beamwidth_deg_;
    double scan_angle_deg_;
};

// True iff the scan angle hits the array axis exactly. The endfire beamwidth
// law applies only at the exact axis directions; everything in (0, 180) uses
// the scanned-broadside law, which widens without bound toward the axis.
bool is_endfire(double scan_angle_deg);

// Array gain (linear). The aperture model gives gain equal to the element
// count, independent of scan angle.
double gain_from_elements(const ULAGeometry &ula);

// Half-power beamwidth in degrees of the array steered to scan_angle_deg.
double beamwidth_from_elements(const ULAGeometry &ula, double scan_angle_deg);

// Exact (real-valued) element count that realizes the given beamwidth at the
// given scan angle; inverse of beamwidth_from_elements over the reals.
double elements_from_beamwidth_exact(double beamwidth_deg, double scan_angle_deg);

// Smallest integer element count whose beamwidth does not exceed the target,
// guarded against round-trip floating-point dust and clamped to >= 2.
int elements_from_beamwidth(double beamwidth_deg, double scan_angle_deg);

// Gain of the (real-valued) array realizing the given beamwidth:
// 101.5 / (bw * sin(scan)) off the axis, (152.53 / bw)^2 on the axis.
double gain_from_beamwidth(double beamwidth_deg, double scan_angle_deg);

// Normalized window amplitude of the beam at an absolute angle. Beam edges
// (|angle - scan| == beamwidth/2) are inside the window: the rectangular
// window returns 1 there, the triangular window 0.5.
double window_value(const BeamSpec &beam, double angle_deg);

// Same window evaluated at an offset from the beam center; the coordinate-
// free primitive behind window_value, handy for capture-fraction integrals.
double window_shape(Shape shape, double offset_deg, double beamwidth_deg);

} // namespace beamopt::antenna
