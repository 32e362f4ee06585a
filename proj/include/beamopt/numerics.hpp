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

#include <functional>
#include <vector>

namespace beamopt::numerics {

// Gauss error function. Thin wrapper so every call site in the library goes
// through one seam; the implementation delegates to the C++ standard library.
double erf(double z);

// Degree-7 Maclaurin polynomial of erf. Only meaningful near the origin;
// |z| > 1 raises DomainError rather than returning a silently bad value.
double erf_taylor(double z);

// Closed root bracket for find_root. Requires lo < hi and a sign change of
// the objective between the endpoints.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

// Brent-style bracketing root solve, converging to |x_err| <= x_tol.
// Throws NoRootError when f(lo) and f(hi) share a sign, NumericError when the
// objective returns a non-finite value.
double find_root(const std::function<double(double)> &f, Bracket bracket, double x_tol = 1e-9);

// Adaptive Simpson quadrature of f over [a, b] to the given absolute
// tolerance. Throws NumericError on non-finite integrand values or when the
// recursion depth cap is hit before the tolerance is met.
double integrate(const std::function<double(double)> &f, double a, double b,
                 double abs_tol = 1e-10);

// One angular power sample: a linear-scale power density observed at an angle.
struct PowerSample {
    double angle_deg = 0.0;
    double power = 0.0;
};

// Result of fit_gaussian: p(phi) ~= u * exp(-((phi - x) / v)^2).
struct FitResult {
    double u = 0.0;         // peak density, linear scale
    double v = 0.0;         // decay width, degrees
    double x = 0.0;         // peak angle, degrees
    double rss = 0.0;       // residual sum of squares in the linear power domain
    std::size_t n_used = 0; // samples with power > 0 that entered the fit
};

// Weighted least-squares fit of a Gaussian density to power samples, done as
// a parabola fit in the log-power domain with weights p^2 so that small
// (noisy) samples do not dominate. Samples with power <= 0 are skipped.
// Throws InsufficientDataError with fewer than 3 usable samples and
// FitFailedError when the best parabola opens upward or is flat.
FitResult fit_gaussian(const std::vector<PowerSample> &samples);

} // namespace beamopt::numerics
