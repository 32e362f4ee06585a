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
#include "beamopt/cluster.hpp"

#include <optional>

namespace beamopt::optimizer {

using antenna::BeamSpec;
using antenna::Shape;
using cluster::FittedGaussianCluster;
using cluster::GaussianCluster;

// Misalignment regime relative to the cluster spread. The optimal beamwidth
// is 0 (supremum, no finite array) when delta <= sigma, finite and positive
// otherwise; for delta > sqrt(2)*sigma the optimal beam covers the cluster
// center (beamwidth > 2*delta).
enum class Regime { zero_optimum, interior, covers_center };

Regime classify_regime(double sigma_deg, double delta_deg);

struct OptimizationResult {
    double beamwidth_opt_deg = 0.0;
    double p_max = 0.0; // linear power
    // Element count realizing beamwidth_opt_deg at the scan angle; 0 when
    // regime == zero_optimum, where no finite array attains the supremum and
    // a percentile plan is the realizable alternative.
    int n_elements = 0;
    Regime regime = Regime::zero_optimum;
    // Concavity of the objective at the returned beamwidth (trivially true
    // for the zero-beamwidth supremum, where the objective is decreasing).
    bool second_derivative_ok = false;
    // Set when the optimum came from a grid scan instead of the stationarity
    // root (no usable sign change was found, or the window is triangular).
    bool grid_fallback = false;
};

struct PercentileResult {
    double eta = 0.0;
    double beamwidth_exact_deg = 0.0;
    // Closed-form approximation; absent outside its support region.
    std::optional<double> beamwidth_approx_deg;
    int n_elements = 0;
    double p_eta = 0.0; // linear power
};

// Closed-form percentile-beamwidth approximation plus its validity flag.
// The approximation is derived for eta >= 2/3; below that bound the value is
// still returned but flagged out of support.
struct ApproxBeamwidth {
    double beamwidth_deg = 0.0;
    bool in_support = false;
};

inline constexpr double approx_support_min_eta = 2.0 / 3.0;

// Received power: array gain at the beam's width and scan angle times the
// power the beam captures from the cluster. The misalignment is
// |scan_angle - cluster center|. Requires beamwidth > 0; the zero-width
// limit is available as p_max_theoretical.
double received_power(const GaussianCluster &cl, const BeamSpec &beam);
double received_power(const FittedGaussianCluster &cl, const BeamSpec &beam);

// Stationarity residual of the rectangular-window objective at fixed
// (sigma, delta):
//   f(bw) = bw*(e^{-A+^2} + e^{-A-^2}) - sigma*sqrt(2*pi)*(erf(A+) + erf(A-))
// with A+- = (bw +- 2*delta) / (2*sqrt(2)*sigma). Interior maxima of the
// received power are exactly the positive zeros of f.
double optimality_residual(double beamwidth_deg, double sigma_deg, double delta_deg);

// True iff the rectangular objective is concave at the given beamwidth,
// judged by a centered finite-difference second derivative of
// q(bw) = (erf(A+) + erf(A-)) / bw, which carries the objective's sign.
bool second_derivative_test(double beamwidth_deg, double sigma_deg, double delta_deg);

// Both concavity routes side by side: the authoritative finite-difference
// estimate and the analytic inequality
//   bw*(bw*(bw+2d)+8s^2)*e^{-(bw+2d)^2/8s^2}
//   + bw*(bw*(bw-2d)+8s^2)*e^{-(bw-2d)^2/8s^2}
//   > 8*sqrt(2*pi)*s^3*(erf(A+)+erf(A-))
// whose truth is equivalent to q'' < 0.
struct ConcavityReport {
    bool fd_concave = false;
    double fd_second_derivative = 0.0;
    bool closed_form_concave = false;
    double closed_form_margin = 0.0; // condition LHS - RHS
};

ConcavityReport concavity_report(double beamwidth_deg, double sigma_deg, double delta_deg);

// Optimal rectangular beamwidth under misalignment delta (degrees, >= 0).
// delta <= sigma returns the zero-beamwidth supremum; otherwise the unique
// positive zero of optimality_residual is bracketed by a coarse scan over
// (0, 8*(sigma+delta)] and polished by the root solver. If the scan finds no
// positive residual, the interior band degrades to a grid argmax (flagged),
// while the covers-center band treats it as a failure.
OptimizationResult optimize_misaligned(const GaussianCluster &cl, double scan_angle_deg,
                                       double delta_deg);
OptimizationResult optimize_misaligned(const FittedGaussianCluster &cl, double scan_angle_deg,
                                       double delta_deg);

// Brute-force optimum of the received-power objective for either window
// shape: argmax over a uniform beamwidth grid, refined by a golden-section
// pass around the best cell. Serves triangular-window optimization and the
// interior-band fallback.
OptimizationResult optimize_grid(const GaussianCluster &cl, double scan_angle_deg,
                                 double delta_deg, Shape shape, double grid_step_deg = 0.01);

// Small-beamwidth limit of the received power for a perfectly aligned beam;
// the supremum of the objective in the delta <= sigma regime. Rejected at
// endfire scan angles, where the gain law changes and no finite limit exists.
double p_max_theoretical(const GaussianCluster &cl, double scan_angle_deg, Shape shape);
double p_max_theoretical(const FittedGaussianCluster &cl, double scan_angle_deg, Shape shape);

// Smallest beamwidth whose aligned received power reaches the fraction eta
// of p_max_theoretical (rectangular window): the unique positive root of
//   bw / erf(bw / (2*sqrt(2)*sigma)) = sigma*sqrt(2*pi) / eta
// (equivalently bw / erf(bw / (2v)) = v*sqrt(pi) / eta in the fitted form).
double percentile_beamwidth_exact(const GaussianCluster &cl, double eta);
double percentile_beamwidth_exact(const FittedGaussianCluster &cl, double eta);

// Taylor-expansion closed form of the same beamwidth:
// sqrt(24)*sigma*sqrt(1-eta), i.e. 2*sqrt(3)*v*sqrt(1-eta) in the fitted
// form; valid for eta >= 2/3, where it stays within a few percent of the
// exact root (the bound corresponds to beamwidth sqrt(8)*sigma).
ApproxBeamwidth percentile_beamwidth_approx(const GaussianCluster &cl, double eta);
ApproxBeamwidth percentile_beamwidth_approx(const FittedGaussianCluster &cl, double eta);

// Bundle of exact and approximate percentile beamwidths, the power target
// p_eta = eta * p_max_theoretical (rectangular), and the element count
// realizing the exact (unrounded) beamwidth at the scan angle.
PercentileResult percentile_plan(const GaussianCluster &cl, double scan_angle_deg, double eta);
PercentileResult percentile_plan(const FittedGaussianCluster &cl, double scan_angle_deg,
                                 double eta);

} // namespace beamopt::optimizer
