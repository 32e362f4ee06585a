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

#include "beamopt/numerics.hpp"
#include "beamopt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace beamopt::numerics {

double erf(double z) { return std::erf(z); }

double erf_taylor(double z)
{
    if (std::abs(z) > 1.0)
        throw DomainError("erf_taylor requires |z| <= 1, got z = " + std::to_string(z));

    const double z2 = z * z;
    // 2/sqrt(pi) * (z - z^3/3 + z^5/10 - z^7/42)
    const double poly = z * (1.0 + z2 * (-1.0 / 3.0 + z2 * (1.0 / 10.0 - z2 / 42.0)));
    return 2.0 * std::numbers::inv_sqrtpi * poly;
}

double find_root(const std::function<double(double)> &f, Bracket bracket, double x_tol)
{
    double a = bracket.lo;
    double b = bracket.hi;
    if (!(a < b))
        throw DomainError("find_root requires bracket.lo < bracket.hi");
    if (!(x_tol > 0.0))
        throw DomainError("find_root requires x_tol > 0");

    double fa = f(a);
    double fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fb))
        throw NumericError("find_root: objective is not finite at a bracket endpoint");
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw NoRootError("find_root: no sign change over [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");

    // Brent's method: inverse quadratic / secant steps guarded by bisection.
    double c = a, fc = fa;
    double d = b - a, e = d;

    for (int iter = 0; iter < 200; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }

        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * x_tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            return b;

        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }

        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if (!std::isfinite(fb))
            throw NumericError("find_root: objective is not finite at x = " + std::to_string(b));
    }
    throw NumericError("find_root: iteration cap reached without convergence");
}

namespace {

double simpson(double fa, double fm, double fb, double h)
{
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double integrate_rec(const std::function<double(double)> &f, double a, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth)
{
    if (depth > 60)
        throw NumericError("integrate: recursion depth cap reached before tolerance");

    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    if (!std::isfinite(flm) || !std::isfinite(frm))
        throw NumericError("integrate: integrand is not finite inside the interval");

    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    // Richardson error estimate for composite Simpson refinement.
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;

    return integrate_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           integrate_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

} // namespace

double integrate(const std::function<double(double)> &f, double a, double b, double abs_tol)
{
    if (!(abs_tol > 0.0))
        throw DomainError("integrate requires abs_tol > 0");
    if (a == b)
        return 0.0;

    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb))
        throw NumericError("integrate: integrand is not finite at an evaluation point");

    const double whole = simpson(fa, fm, fb, b - a);
    return sign * integrate_rec(f, a, b, fa, fm, fb, whole, abs_tol, 0);
}

FitResult fit_gaussian(const std::vector<PowerSample> &samples)
{
    // Fit ln p = a + b*(phi - phi_ref) + c*(phi - phi_ref)^2 by weighted least
    // squares with weights w = p^2. Centering at the weighted mean angle keeps
    // the 3x3 normal equations well conditioned for narrow angular spans.
    double w_sum = 0.0, phi_w_sum = 0.0;
    std::size_t n_used = 0;
    for (const auto &s : samples) {
        if (!(s.power > 0.0))
            continue;
        const double w = s.power * s.power;
        w_sum += w;
        phi_w_sum += w * s.angle_deg;
        ++n_used;
    }
    if (n_used < 3)
        throw InsufficientDataError("fit_gaussian needs at least 3 samples with power > 0, got " +
                                    std::to_string(n_used));

    const double phi_ref = phi_w_sum / w_sum;

    // Normal-equation moments: S[k] = sum w * t^k, R[k] = sum w * t^k * ln p.
    double S[5] = {0, 0, 0, 0, 0};
    double R[3] = {0, 0, 0};
    for (const auto &s : samples) {
        if (!(s.power > 0.0))
            continue;
        const double w = s.power * s.power;
        const double t = s.angle_deg - phi_ref;
        const double lp = std::log(s.power);
        double tk = 1.0;
        for (int k = 0; k < 5; ++k) {
            S[k] += w * tk;
            if (k < 3)
                R[k] += w * tk * lp;
            tk *= t;
        }
    }

    // Solve the symmetric 3x3 system [S0 S1 S2; S1 S2 S3; S2 S3 S4] * [a b c]' = R
    // by Gaussian elimination with partial pivoting.
    double M[3][4] = {{S[0], S[1], S[2], R[0]}, {S[1], S[2], S[3], R[1]}, {S[2], S[3], S[4], R[2]}};
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(M[r][col]) > std::abs(M[piv][col]))
                piv = r;
        if (M[piv][col] == 0.0)
            throw FitFailedError("fit_gaussian: singular normal equations");
        if (piv != col)
            for (int k = 0; k < 4; ++k)
                std::swap(M[piv][k], M[col][k]);
        for (int r = col + 1; r < 3; ++r) {
            const double factor = M[r][col] / M[col][col];
            for (int k = col; k < 4; ++k)
                M[r][k] -= factor * M[col][k];
        }
    }
    double coef[3]; // a, b, c
    for (int r = 2; r >= 0; --r) {
        double acc = M[r][3];
        for (int k = r + 1; k < 3; ++k)
            acc -= M[r][k] * coef[k];
        coef[r] = acc / M[r][r];
    }
    const double a = coef[0], b = coef[1], c = coef[2];

    if (!(c < 0.0) || !std::isfinite(c))
        throw FitFailedError("fit_gaussian: log-domain parabola does not open downward (c = " +
                             std::to_string(c) + ")");

    FitResult out;
    out.v = std::sqrt(-1.0 / c);
    out.x = phi_ref - b / (2.0 * c);
    out.u = std::exp(a - b * b / (4.0 * c));
    out.n_used = n_used;
    if (!std::isfinite(out.u) || !std::isfinite(out.v) || !std::isfinite(out.x))
        throw FitFailedError("fit_gaussian: non-finite fitted parameters");

    double rss = 0.0;
    for (const auto &s : samples) {
        const double dt = (s.angle_deg - out.x) / out.v;
        const double model = out.u * std::exp(-dt * dt);
        const double resid = s.power - model;
        rss += resid * resid;
    }
    out.rss = rss;
    return out;
}

} // namespace beamopt::numerics
