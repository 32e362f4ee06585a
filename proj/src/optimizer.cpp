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

#include "beamopt/optimizer.hpp"
#include "beamopt/errors.hpp"
#include "beamopt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace beamopt::optimizer {

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;
const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
constexpr double deg_to_rad = std::numbers::pi / 180.0;

void check_sigma_delta(double sigma_deg, double delta_deg)
{
    if (!(sigma_deg > 0.0) || !std::isfinite(sigma_deg))
        throw DomainError("sigma must be positive and finite, got " + std::to_string(sigma_deg));
    if (!(delta_deg >= 0.0) || !std::isfinite(delta_deg))
        throw DomainError("misalignment must be non-negative and finite, got " +
                          std::to_string(delta_deg));
}

void check_interior_scan(double scan_angle_deg)
{
    if (antenna::is_endfire(scan_angle_deg))
        throw DomainError("this operation assumes the off-axis gain law; the small-beam limit "
                          "does not exist at endfire scan angles");
}

void check_eta_open(double eta)
{
    if (!(eta > 0.0 && eta < 1.0))
        throw DomainError("eta must lie in (0, 1), got " + std::to_string(eta));
}

GaussianCluster as_gaussian(const FittedGaussianCluster &cl)
{
    return GaussianCluster{cl.total_power(), cl.sigma_deg(), cl.x};
}

// Shape factor of the window area: the triangular taper (edge value 1/2)
// encloses 3/4 of the rectangular window's area at equal beamwidth, which is
// exactly the small-beamwidth power penalty.
double shape_area_factor(Shape shape) { return shape == Shape::rect ? 1.0 : 0.75; }

// Received power at fixed (sigma, delta) as a function of beamwidth, with
// the misalignment decoupled from beam geometry.
double objective(const GaussianCluster &cl, double scan_angle_deg, double delta_deg, Shape shape,
                 double beamwidth_deg)
{
    const double rho = (shape == Shape::rect)
                           ? cluster::rho_rect(cl.sigma_deg, delta_deg, beamwidth_deg)
                           : cluster::rho_tri(cl.sigma_deg, delta_deg, beamwidth_deg);
    return antenna::gain_from_beamwidth(beamwidth_deg, scan_angle_deg) * cl.total_power * rho;
}

// Beamwidth-to-zero limit of the objective: the aligned asymptote attenuated
// by the Gaussian density at the misalignment offset.
double zero_width_limit(const GaussianCluster &cl, double scan_angle_deg, double delta_deg,
                        Shape shape)
{
    const double t = delta_deg / cl.sigma_deg;
    return p_max_theoretical(cl, scan_angle_deg, shape) * std::exp(-0.5 * t * t);
}

// Sign-carrying shape of the objective for concavity probes: rho / beamwidth
// (scaled by 2 so the rectangular case is (erf(A+) + erf(A-)) / bw).
double q_shape(const GaussianCluster &cl, double delta_deg, Shape shape, double beamwidth_deg)
{
    const double rho = (shape == Shape::rect)
                           ? cluster::rho_rect(cl.sigma_deg, delta_deg, beamwidth_deg)
                           : cluster::rho_tri(cl.sigma_deg, delta_deg, beamwidth_deg);
    return 2.0 * rho / beamwidth_deg;
}

double fd_second_derivative_of_q(const GaussianCluster &cl, double delta_deg, Shape shape,
                                 double beamwidth_deg)
{
    double h = std::max(1e-4, 1e-3 * beamwidth_deg);
    h = std::min(h, 0.5 * beamwidth_deg);
    const double qm = q_shape(cl, delta_deg, shape, beamwidth_deg - h);
    const double q0 = q_shape(cl, delta_deg, shape, beamwidth_deg);
    const double qp = q_shape(cl, delta_deg, shape, beamwidth_deg + h);
    return (qp + qm - 2.0 * q0) / (h * h);
}

// Golden-section maximization of a unimodal function on [a, b].
double golden_max(const std::function<double(double)> &f, double a, double b, double x_tol)
{
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > x_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

Regime classify_regime(double sigma_deg, double delta_deg)
{
    check_sigma_delta(sigma_deg, delta_deg);
    if (delta_deg <= sigma_deg)
        return Regime::zero_optimum;
    if (delta_deg <= std::sqrt(2.0) * sigma_deg)
        return Regime::interior;
    return Regime::covers_center;
}

double received_power(const GaussianCluster &cl, const BeamSpec &beam)
{
    if (!(beam.beamwidth_deg() > 0.0))
        throw DomainError("received power needs beamwidth > 0; the zero-width limit is "
                          "p_max_theoretical");
    return antenna::gain_from_beamwidth(beam.beamwidth_deg(), beam.scan_angle_deg()) *
           cluster::extracted_power_standard(cl, beam);
}

double received_power(const FittedGaussianCluster &cl, const BeamSpec &beam)
{
    if (!(beam.beamwidth_deg() > 0.0))
        throw DomainError("received power needs beamwidth > 0; the zero-width limit is "
                          "p_max_theoretical");
    return antenna::gain_from_beamwidth(beam.beamwidth_deg(), beam.scan_angle_deg()) *
           cluster::extracted_power_fitted(cl, beam);
}

double optimality_residual(double beamwidth_deg, double sigma_deg, double delta_deg)
{
    check_sigma_delta(sigma_deg, delta_deg);
    if (!(beamwidth_deg > 0.0) || !std::isfinite(beamwidth_deg))
        throw DomainError("beamwidth must be positive and finite, got " +
                          std::to_string(beamwidth_deg));

    const double denom = 2.0 * sqrt2 * sigma_deg;
    const double ap = (beamwidth_deg + 2.0 * delta_deg) / denom;
    const double am = (beamwidth_deg - 2.0 * delta_deg) / denom;
    return beamwidth_deg * (std::exp(-ap * ap) + std::exp(-am * am)) -
           sigma_deg * sqrt_2pi * (numerics::erf(ap) + numerics::erf(am));
}

bool second_derivative_test(double beamwidth_deg, double sigma_deg, double delta_deg)
{
    return concavity_report(beamwidth_deg, sigma_deg, delta_deg).fd_concave;
}

ConcavityReport concavity_report(double beamwidth_deg, double sigma_deg, double delta_deg)
{
    check_sigma_delta(sigma_deg, delta_deg);
    if (!(beamwidth_deg > 0.0) || !std::isfinite(beamwidth_deg))
        throw DomainError("beamwidth must be positive and finite, got " +
                          std::to_string(beamwidth_deg));

    ConcavityReport out;

    const GaussianCluster unit{1.0, sigma_deg, 0.0};
    out.fd_second_derivative =
        fd_second_derivative_of_q(unit, delta_deg, Shape::rect, beamwidth_deg);
    out.fd_concave = out.fd_second_derivative < 0.0;

    const double s2 = sigma_deg * sigma_deg;
    const double denom = 2.0 * sqrt2 * sigma_deg;
    const double ap = (beamwidth_deg + 2.0 * delta_deg) / denom;
    const double am = (beamwidth_deg - 2.0 * delta_deg) / denom;
    const double lhs =
        beamwidth_deg *
        ((beamwidth_deg * (beamwidth_deg + 2.0 * delta_deg) + 8.0 * s2) * std::exp(-ap * ap) +
         (beamwidth_deg * (beamwidth_deg - 2.0 * delta_deg) + 8.0 * s2) * std::exp(-am * am));
    const double rhs =
        8.0 * sqrt_2pi * s2 * sigma_deg * (numerics::erf(ap) + numerics::erf(am));
    out.closed_form_margin = lhs - rhs;
    out.closed_form_concave = out.closed_form_margin > 0.0;
    return out;
}

OptimizationResult optimize_misaligned(const GaussianCluster &cl, double scan_angle_deg,
                                       double delta_deg)
{
    check_sigma_delta(cl.sigma_deg, delta_deg);
    check_interior_scan(scan_angle_deg);

    const double sigma = cl.sigma_deg;
    const Regime regime = classify_regime(sigma, delta_deg);

    if (regime == Regime::zero_optimum) {
        OptimizationResult out;
        out.beamwidth_opt_deg = 0.0;
        out.p_max = zero_width_limit(cl, scan_angle_deg, delta_deg, Shape::rect);
        out.n_elements = 0;
        out.regime = regime;
        // The objective is strictly decreasing here; the boundary supremum
        // needs no stationary-point concavity check.
        out.second_derivative_ok = true;
        out.grid_fallback = false;
        return out;
    }

    // Coarse scan of the stationarity residual: it rises from 0 into a
    // positive bump ending at the sought root, then stays negative.
    const auto f = [&](double bw) { return optimality_residual(bw, sigma, delta_deg); };
    const int n_scan = 1024;
    const double hi = 8.0 * (sigma + delta_deg);
    std::vector<double> xs(n_scan), fs(n_scan);
    int best = 0;
    for (int i = 0; i < n_scan; ++i) {
        xs[i] = hi * static_cast<double>(i + 1) / n_scan;
        fs[i] = f(xs[i]);
        if (fs[i] > fs[best])
            best = i;
    }

    int first_negative = -1;
    if (fs[best] > 0.0) {
        for (int i = best + 1; i < n_scan; ++i) {
            if (fs[i] < 0.0) {
                first_negative = i;
                break;
            }
        }
    }

    if (first_negative < 0) {
        if (regime == Regime::interior) {
            // The positive bump can be too narrow for the scan when delta
            // barely exceeds sigma; the objective still has its maximum, so
            // fall back to direct search.
            return optimize_grid(cl, scan_angle_deg, delta_deg, Shape::rect);
        }
        std::ostringstream dump;
        dump << "no sign change in the stationarity residual over (0, " << hi
             << "]; best residual " << fs[best] << " at beamwidth " << xs[best]
             << "; samples:";
        for (int i = 0; i < n_scan; i += n_scan / 8)
            dump << " f(" << xs[i] << ")=" << fs[i];
        throw OptimizationFailedError(dump.str());
    }

    const double root =
        numerics::find_root(f, {xs[best], xs[first_negative]}, 1e-9);

    OptimizationResult out;
    out.beamwidth_opt_deg = root;
    out.p_max = objective(cl, scan_angle_deg, delta_deg, Shape::rect, root);
    out.n_elements = antenna::elements_from_beamwidth(root, scan_angle_deg);
    out.regime = regime;
    out.second_derivative_ok = second_derivative_test(root, sigma, delta_deg);
    out.grid_fallback = false;
    return out;
}

OptimizationResult optimize_misaligned(const FittedGaussianCluster &cl, double scan_angle_deg,
                                       double delta_deg)
{
    return optimize_misaligned(as_gaussian(cl), scan_angle_deg, delta_deg);
}

OptimizationResult optimize_grid(const GaussianCluster &cl, double scan_angle_deg,
                                 double delta_deg, Shape shape, double grid_step_deg)
{
    check_sigma_delta(cl.sigma_deg, delta_deg);
    check_interior_scan(scan_angle_deg);
    if (!(grid_step_deg > 0.0) || !std::isfinite(grid_step_deg))
        throw DomainError("grid step must be positive and finite, got " +
                          std::to_string(grid_step_deg));

    const auto p = [&](double bw) {
        return objective(cl, scan_angle_deg, delta_deg, shape, bw);
    };

    double hi = 8.0 * (cl.sigma_deg + delta_deg);
    long count = std::max(1L, static_cast<long>(std::floor(hi / grid_step_deg)));
    long best = 0;
    double best_p = p(grid_step_deg);
    // Extend the window if the maximum sits on the far edge, which means the
    // optimum was not yet inside the scanned range.
    for (int pass = 0; pass < 4; ++pass) {
        for (long i = best + 1; i < count; ++i) {
            const double value = p(grid_step_deg * static_cast<double>(i + 1));
            if (value > best_p) {
                best = i;
                best_p = value;
            }
        }
        if (best < count - 1)
            break;
        hi *= 2.0;
        count = static_cast<long>(std::floor(hi / grid_step_deg));
    }

    OptimizationResult out;
    out.regime = classify_regime(cl.sigma_deg, delta_deg);
    out.grid_fallback = true;

    if (best == 0) {
        // Maximum at the smallest scanned beamwidth: the optimum is the
        // zero-width boundary supremum.
        out.beamwidth_opt_deg = 0.0;
        out.p_max = zero_width_limit(cl, scan_angle_deg, delta_deg, shape);
        out.n_elements = 0;
        out.second_derivative_ok = true;
        return out;
    }

    const double lo_bw = grid_step_deg * static_cast<double>(best);
    const double hi_bw = grid_step_deg * static_cast<double>(best + 2);
    const double bw = golden_max(p, lo_bw, hi_bw, 1e-7);

    out.beamwidth_opt_deg = bw;
    out.p_max = p(bw);
    out.n_elements = antenna::elements_from_beamwidth(bw, scan_angle_deg);
    out.second_derivative_ok = fd_second_derivative_of_q(cl, delta_deg, shape, bw) < 0.0;
    return out;
}

double p_max_theoretical(const GaussianCluster &cl, double scan_angle_deg, Shape shape)
{
    if (!(cl.total_power > 0.0) || !std::isfinite(cl.total_power))
        throw DomainError("cluster total power must be positive and finite");
    if (!(cl.sigma_deg > 0.0) || !std::isfinite(cl.sigma_deg))
        throw DomainError("cluster sigma must be positive and finite");
    check_interior_scan(scan_angle_deg);
    const double base = antenna::broadside_coeff_deg / sqrt_2pi * cl.total_power /
                        (cl.sigma_deg * std::sin(scan_angle_deg * deg_to_rad));
    return shape_area_factor(shape) * base;
}

double p_max_theoretical(const FittedGaussianCluster &cl, double scan_angle_deg, Shape shape)
{
    if (!(cl.u > 0.0) || !(cl.v > 0.0))
        throw DomainError("fitted cluster needs u > 0 and v > 0");
    check_interior_scan(scan_angle_deg);
    const double base =
        antenna::broadside_coeff_deg * cl.u / std::sin(scan_angle_deg * deg_to_rad);
    return shape_area_factor(shape) * base;
}

double percentile_beamwidth_exact(const GaussianCluster &cl, double eta)
{
    check_eta_open(eta);
    if (!(cl.sigma_deg > 0.0))
        throw DomainError("cluster sigma must be positive");
    const double sigma = cl.sigma_deg;
    const double target = sigma * sqrt_2pi / eta;
    const auto g = [&](double bw) {
        return bw / numerics::erf(bw / (2.0 * sqrt2 * sigma)) - target;
    };
    const double lo = 1e-9 * sigma;
    const double hi = 50.0 * sigma;
    if (!(g(hi) > 0.0))
        throw NumericError("percentile beamwidth root is not bracketed below 50*sigma (eta = " +
                           std::to_string(eta) + ")");
    return numerics::find_root(g, {lo, hi}, 1e-9);
}

double percentile_beamwidth_exact(const FittedGaussianCluster &cl, double eta)
{
    check_eta_open(eta);
    if (!(cl.v > 0.0))
        throw DomainError("fitted cluster width v must be positive");
    const double v = cl.v;
    const double target = v * std::sqrt(std::numbers::pi) / eta;
    const auto g = [&](double bw) { return bw / numerics::erf(bw / (2.0 * v)) - target; };
    const double lo = 1e-9 * v;
    const double hi = 50.0 * cl.sigma_deg();
    if (!(g(hi) > 0.0))
        throw NumericError("percentile beamwidth root is not bracketed below 50*sigma (eta = " +
                           std::to_string(eta) + ")");
    return numerics::find_root(g, {lo, hi}, 1e-9);
}

namespace {

ApproxBeamwidth approx_from_sigma(double sigma_deg, double eta)
{
    if (!(eta > 0.0 && eta <= 1.0))
        throw DomainError("eta must lie in (0, 1], got " + std::to_string(eta));
    ApproxBeamwidth out;
    out.beamwidth_deg = std::sqrt(24.0) * sigma_deg * std::sqrt(1.0 - eta);
    out.in_support = eta >= approx_support_min_eta;
    return out;
}

} // namespace

ApproxBeamwidth percentile_beamwidth_approx(const GaussianCluster &cl, double eta)
{
    if (!(cl.sigma_deg > 0.0))
        throw DomainError("cluster sigma must be positive");
    return approx_from_sigma(cl.sigma_deg, eta);
}

ApproxBeamwidth percentile_beamwidth_approx(const FittedGaussianCluster &cl, double eta)
{
    if (!(cl.v > 0.0))
        throw DomainError("fitted cluster width v must be positive");
    if (!(eta > 0.0 && eta <= 1.0))
        throw DomainError("eta must lie in (0, 1], got " + std::to_string(eta));
    ApproxBeamwidth out;
    out.beamwidth_deg = 2.0 * std::sqrt(3.0) * cl.v * std::sqrt(1.0 - eta);
    out.in_support = eta >= approx_support_min_eta;
    return out;
}

namespace {

template <typename Cluster>
PercentileResult plan_impl(const Cluster &cl, double scan_angle_deg, double eta)
{
    PercentileResult out;
    out.eta = eta;
    out.beamwidth_exact_deg = percentile_beamwidth_exact(cl, eta);
    const ApproxBeamwidth approx = percentile_beamwidth_approx(cl, eta);
    if (approx.in_support)
        out.beamwidth_approx_deg = approx.beamwidth_deg;
    out.n_elements = antenna::elements_from_beamwidth(out.beamwidth_exact_deg, scan_angle_deg);
    out.p_eta = eta * p_max_theoretical(cl, scan_angle_deg, Shape::rect);
    return out;
}

} // namespace

PercentileResult percentile_plan(const GaussianCluster &cl, double scan_angle_deg, double eta)
{
    return plan_impl(cl, scan_angle_deg, eta);
}

PercentileResult percentile_plan(const FittedGaussianCluster &cl, double scan_angle_deg,
                                 double eta)
{
    return plan_impl(cl, scan_angle_deg, eta);
}

} // namespace beamopt::optimizer
