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
//
// Release acceptance gate: every shipped claim about the library, checked at
// its stated tolerance. One [PASS]/[FAIL] line per criterion; --criterion N
// restricts the run. The exit code is the number of failed criteria.

#include "beamopt/antenna.hpp"
#include "beamopt/cli.hpp"
#include "beamopt/cluster.hpp"
#include "beamopt/errors.hpp"
#include "beamopt/optimizer.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

using namespace beamopt;
using antenna::BeamSpec;
using antenna::Shape;
using cluster::FittedGaussianCluster;
using cluster::GaussianCluster;

namespace {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform(double lo, double hi)
    {
        const double t = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + t * (hi - lo);
    }
};

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(double x, int digits = 6)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return {buf};
}

// Criterion 1: the published design table (sigma 5, v 9.23, scan 53 degrees)
// is reproduced within 0.1 degree per beamwidth and one element per count,
// in under a second.
Outcome criterion1()
{
    const auto t0 = std::chrono::steady_clock::now();

    const double etas[] = {0.999, 0.99, 0.95, 0.9, 0.75, 0.5};
    const double bw_std[] = {0.8, 2.5, 5.6, 8.1, 14.0, 24.7};
    const int n_std[] = {166, 52, 23, 16, 10, 6};
    const double bw_rt[] = {1.0, 3.2, 7.3, 10.6, 18.3, 32.3};
    const int n_rt[] = {126, 40, 18, 12, 7, 4};

    const GaussianCluster std_cl{1.0, 5.0, 53.0};
    const FittedGaussianCluster rt_cl{1.0, 9.23, 53.0};

    Outcome out;
    double worst_bw = 0.0;
    for (int i = 0; i < 6; ++i) {
        const auto ps = optimizer::percentile_plan(std_cl, 53.0, etas[i]);
        const auto pr = optimizer::percentile_plan(rt_cl, 53.0, etas[i]);
        const double ds = std::abs(ps.beamwidth_exact_deg - bw_std[i]);
        const double dr = std::abs(pr.beamwidth_exact_deg - bw_rt[i]);
        worst_bw = std::max({worst_bw, ds, dr});
        if (ds > 0.1 || dr > 0.1)
            out.pass = false;
        if (std::abs(ps.n_elements - n_std[i]) > 1 || std::abs(pr.n_elements - n_rt[i]) > 1)
            out.pass = false;
    }

    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms >= 1000.0)
        out.pass = false;
    out.detail = "worst beamwidth deviation " + fmt(worst_bw, 3) + " deg (limit 0.1), " +
                 fmt(ms, 3) + " ms";
    return out;
}

// Criterion 2: case-study power maxima. Standard model at P_tot -29.09 dBm,
// sigma 5, scan 53: pinned -19.15 +- 0.02 dBm. Fitted model at
// u 6.43e-5 mW/deg, scan 53: pinned -20.87 +- 0.02 dBm.
Outcome criterion2()
{
    const GaussianCluster std_cl{cli::from_dbm(-29.09), 5.0, 53.0};
    const double p_std =
        10.0 * std::log10(optimizer::p_max_theoretical(std_cl, 53.0, Shape::rect));

    const FittedGaussianCluster rt_cl{6.43e-5, 9.23, 53.0};
    const double p_rt =
        10.0 * std::log10(optimizer::p_max_theoretical(rt_cl, 53.0, Shape::rect));

    Outcome out;
    out.pass = std::abs(p_std - (-19.15)) <= 0.02 && std::abs(p_rt - (-20.87)) <= 0.02;
    out.detail = "std " + fmt(p_std, 7) + " dBm (pinned -19.15 +- 0.02), rt " + fmt(p_rt, 7) +
                 " dBm (pinned -20.87 +- 0.02)";
    return out;
}

// Criterion 3: the rectangular-over-triangular supremum offset is pinned at
// 1.23 +- 0.01 dB, independent of sigma, total power, and scan angle.
Outcome criterion3()
{
    Rng rng(3003);
    Outcome out;
    double measured = 0.0;
    for (int i = 0; i < 100; ++i) {
        const GaussianCluster cl{rng.uniform(1e-5, 10.0), rng.uniform(1.0, 15.0), 90.0};
        const double phi0 = rng.uniform(5.0, 175.0);
        const double ratio_db =
            10.0 * std::log10(optimizer::p_max_theoretical(cl, phi0, Shape::rect) /
                              optimizer::p_max_theoretical(cl, phi0, Shape::tri));
        measured = ratio_db;
        if (std::abs(ratio_db - 1.23) > 0.01)
            out.pass = false;
    }
    out.detail = "measured offset " + fmt(measured, 7) + " dB on every draw (pinned 1.23 +- 0.01)";
    return out;
}

// Criterion 4: misalignment regime properties over sigma 3..10 degrees and
// delta in {0, 0.5, 1, 1.1, sqrt(2), 2, 3} sigma. Aligned band: brute-force
// argmax at the smallest scanned beamwidth. Far band: optimum covers the
// cluster center (beamwidth > 2 delta). Zero violations allowed.
//
// The scan compares received power directly, bypassing the optimizer. At
// delta == sigma the first two cells differ by ~1e-15 relative, below the
// ~1e-13 cancellation noise of the erf difference, so a cell only counts as
// beating the smallest beamwidth when it wins by more than 1e-9 relative;
// a genuine interior maximum wins by ~1e-2.
Outcome criterion4()
{
    const double ratios[] = {0.0, 0.5, 1.0, 1.1, std::sqrt(2.0), 2.0, 3.0};
    int violations = 0, cases = 0;
    for (int s = 3; s <= 10; ++s) {
        const double sigma = s;
        for (const double r : ratios) {
            const double delta = r * sigma;
            ++cases;
            if (delta <= sigma) {
                const GaussianCluster off_center{1.0, sigma, 90.0 + delta};
                const auto power = [&](double bw) {
                    return optimizer::received_power(off_center, BeamSpec(Shape::rect, bw, 90.0));
                };
                const double step = 0.01;
                const long count = static_cast<long>(8.0 * (sigma + delta) / step);
                const double first = power(step);
                double best = first;
                for (long i = 2; i <= count; ++i)
                    best = std::max(best, power(step * static_cast<double>(i)));
                if (best > first * (1.0 + 1e-9))
                    ++violations;
            } else if (delta > std::sqrt(2.0) * sigma) {
                const GaussianCluster cl{1.0, sigma, 90.0};
                const auto res = optimizer::optimize_misaligned(cl, 90.0, delta);
                if (!(res.beamwidth_opt_deg > 2.0 * delta))
                    ++violations;
            } else {
                const GaussianCluster cl{1.0, sigma, 90.0};
                optimizer::optimize_misaligned(cl, 90.0, delta); // must not throw
            }
        }
    }
    Outcome out;
    out.pass = violations == 0;
    out.detail = std::to_string(violations) + " violations over " + std::to_string(cases) +
                 " (sigma, delta) cases";
    return out;
}

// Criterion 5: the stationarity root solve agrees with a 0.01 degree grid
// search within 0.05 degree and 0.1 percent power on the criterion-4 grid.
Outcome criterion5()
{
    const double ratios[] = {0.0, 0.5, 1.0, 1.1, std::sqrt(2.0), 2.0, 3.0};
    Outcome out;
    double worst_bw = 0.0, worst_p = 0.0;
    for (int s = 3; s <= 10; ++s) {
        const GaussianCluster cl{1.0, static_cast<double>(s), 90.0};
        for (const double r : ratios) {
            const double delta = r * s;
            const auto direct = optimizer::optimize_misaligned(cl, 90.0, delta);
            const auto grid = optimizer::optimize_grid(cl, 90.0, delta, Shape::rect, 0.01);
            const double dbw = std::abs(direct.beamwidth_opt_deg - grid.beamwidth_opt_deg);
            const double dp = std::abs(direct.p_max - grid.p_max) / grid.p_max;
            worst_bw = std::max(worst_bw, dbw);
            worst_p = std::max(worst_p, dp);
            if (dbw > 0.05 || dp > 0.001)
                out.pass = false;
        }
    }
    out.detail = "worst beamwidth gap " + fmt(worst_bw, 3) + " deg (limit 0.05), worst power gap " +
                 fmt(100.0 * worst_p, 3) + "% (limit 0.1%)";
    return out;
}

// Criterion 6: closed-form percentile beamwidth within 3 percent of the
// exact root for eta in [0.9, 0.999], and the support flag flips exactly at
// the sqrt(8) sigma beamwidth (eta 0.667).
Outcome criterion6()
{
    const GaussianCluster cl{1.0, 5.0, 90.0};
    Outcome out;
    double worst = 0.0, worst_eta = 0.0;
    for (const double eta : {0.9, 0.925, 0.95, 0.975, 0.99, 0.999}) {
        const double exact = optimizer::percentile_beamwidth_exact(cl, eta);
        const double approx = optimizer::percentile_beamwidth_approx(cl, eta).beamwidth_deg;
        const double rel = std::abs(approx - exact) / exact;
        if (rel > worst) {
            worst = rel;
            worst_eta = eta;
        }
        if (rel >= 0.03)
            out.pass = false;
    }

    const auto edge = optimizer::percentile_beamwidth_approx(cl, 2.0 / 3.0);
    const bool support_ok = edge.in_support &&
                            std::abs(edge.beamwidth_deg - std::sqrt(8.0) * 5.0) <= 1e-9 &&
                            !optimizer::percentile_beamwidth_approx(cl, 0.666).in_support &&
                            optimizer::percentile_beamwidth_approx(cl, 0.667).in_support;
    if (!support_ok)
        out.pass = false;

    out.detail = "worst relative error " + fmt(100.0 * worst, 4) + "% at eta " +
                 fmt(worst_eta, 4) + " (limit 3%); support boundary at sqrt(8) sigma " +
                 (support_ok ? "ok" : "WRONG");
    return out;
}

// Criterion 7: received power at a 1e-4 degree beam matches the theoretical
// small-beam supremum to 1e-6 relative, for both models and both windows.
Outcome criterion7()
{
    const GaussianCluster std_cl{cli::from_dbm(-29.09), 5.0, 53.0};
    const FittedGaussianCluster rt_cl{6.43e-5, 9.23, 53.0};

    Outcome out;
    double worst = 0.0;
    for (const Shape shape : {Shape::rect, Shape::tri}) {
        const BeamSpec beam(shape, 1e-4, 53.0);
        const double a = optimizer::received_power(std_cl, beam) /
                         optimizer::p_max_theoretical(std_cl, 53.0, shape);
        const double b = optimizer::received_power(rt_cl, beam) /
                         optimizer::p_max_theoretical(rt_cl, 53.0, shape);
        worst = std::max({worst, std::abs(a - 1.0), std::abs(b - 1.0)});
        if (std::abs(a - 1.0) > 1e-6 || std::abs(b - 1.0) > 1e-6)
            out.pass = false;
    }
    out.detail = "worst |ratio - 1| = " + fmt(worst, 3) + " (limit 1e-6)";
    return out;
}

// Criterion 8: model bridges. Fitted extraction equals standard extraction
// at matched parameters to 1e-10 relative over 1000 draws; 500-ray discrete
// profiles track the continuous extraction within 2 percent.
Outcome criterion8()
{
    Outcome out;

    Rng rng(8008);
    double worst_rel = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform(1e-6, 5.0);
        const double v = rng.uniform(0.5, 25.0);
        const double x = rng.uniform(20.0, 160.0);
        const double scan =
            std::min(180.0, std::max(0.0, x + rng.uniform(-2.0 * v, 2.0 * v)));
        const double bw = rng.uniform(0.05, 5.0 * v);
        const FittedGaussianCluster fitted{u, v, x};
        const GaussianCluster standard{fitted.total_power(), fitted.sigma_deg(), x};
        const BeamSpec beam(i % 2 ? Shape::tri : Shape::rect, bw, scan);
        const double a = cluster::extracted_power_fitted(fitted, beam);
        const double b = cluster::extracted_power_standard(standard, beam);
        const double rel = std::abs(a - b) / std::max(b, 1e-300);
        worst_rel = std::max(worst_rel, rel);
        if (rel > 1e-10)
            out.pass = false;
    }

    // Discrete-to-continuous convergence at 500 rays.
    const double u = 2e-4, v = 9.0, x = 50.0;
    std::vector<double> offsets, powers;
    for (int k = 0; k < 500; ++k) {
        const double off = -3.0 * v + 6.0 * v * k / 499.0;
        offsets.push_back(off);
        powers.push_back(u * std::exp(-(off / v) * (off / v)));
    }
    const cluster::ClusterProfile profile(x, 0.0, offsets, powers);
    const FittedGaussianCluster fitted = cluster::profile_to_fitted(profile);
    double worst_pct = 0.0;
    for (const double bw : {5.0, 10.0, 20.0, 36.0}) {
        const BeamSpec beam(Shape::rect, bw, x);
        const double discrete = cluster::extracted_power_discrete(profile, beam).power;
        const double continuous = cluster::extracted_power_fitted(fitted, beam);
        const double pct = 100.0 * std::abs(discrete - continuous) / continuous;
        worst_pct = std::max(worst_pct, pct);
        if (pct > 2.0)
            out.pass = false;
    }

    out.detail = "worst bridge error " + fmt(worst_rel, 3) +
                 " (limit 1e-10); worst 500-ray error " + fmt(worst_pct, 3) + "% (limit 2%)";
    return out;
}

// Criterion 9: with the case-study parameters, the 95-percent power level is
// first reached at exactly 18 elements (fitted model) and 23 (standard).
Outcome criterion9()
{
    const auto minimal_n = [](auto &&received_fraction) {
        for (int n = 2; n <= 400; ++n)
            if (received_fraction(n) >= 0.95)
                return n;
        return -1;
    };

    const GaussianCluster std_cl{1.0, 5.0, 53.0};
    const double p_std = optimizer::p_max_theoretical(std_cl, 53.0, Shape::rect);
    const int n_std = minimal_n([&](int n) {
        const double bw = antenna::beamwidth_from_elements(antenna::ULAGeometry(n), 53.0);
        return optimizer::received_power(std_cl, BeamSpec(Shape::rect, bw, 53.0)) / p_std;
    });

    const FittedGaussianCluster rt_cl{6.43e-5, 9.23, 53.0};
    const double p_rt = optimizer::p_max_theoretical(rt_cl, 53.0, Shape::rect);
    const int n_rt = minimal_n([&](int n) {
        const double bw = antenna::beamwidth_from_elements(antenna::ULAGeometry(n), 53.0);
        return optimizer::received_power(rt_cl, BeamSpec(Shape::rect, bw, 53.0)) / p_rt;
    });

    Outcome out;
    out.pass = n_rt == 18 && n_std == 23;
    out.detail = "fitted model reaches 95% at N=" + std::to_string(n_rt) +
                 " (expected 18), standard at N=" + std::to_string(n_std) + " (expected 23)";
    return out;
}

const char *names[] = {
    "design-table reproduction",          "case-study power maxima",
    "window-shape supremum offset",       "misalignment regime properties",
    "root solve vs grid search",          "percentile approximation validity",
    "small-beamwidth asymptote",          "model-bridge identities",
    "element-count crossing points",
};

} // namespace

int main(int argc, char **argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[i + 1]);
            if (only < 1 || only > 9) {
                std::fprintf(stderr, "criterion must be 1..9\n");
                return 64;
            }
            ++i;
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
            return 64;
        }
    }

    Outcome (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                               criterion6, criterion7, criterion8, criterion9};

    int failures = 0;
    for (int i = 1; i <= 9; ++i) {
        if (only != 0 && i != only)
            continue;
        Outcome r;
        try {
            r = criteria[i - 1]();
        } catch (const std::exception &e) {
            r.pass = false;
            r.detail = std::string("unexpected exception: ") + e.what();
        }
        std::printf("[%s] criterion %d: %s; %s\n", r.pass ? "PASS" : "FAIL", i, names[i - 1],
                    r.detail.c_str());
        if (!r.pass)
            ++failures;
    }
    return failures;
}
