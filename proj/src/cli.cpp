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

#include "beamopt/cli.hpp"
#include "beamopt/errors.hpp"
#include "beamopt/numerics.hpp"
#include "beamopt/optimizer.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace beamopt::cli {

namespace {

using antenna::Shape;
using cluster::FittedGaussianCluster;
using cluster::GaussianCluster;

std::string fmt_g6(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return {buf};
}

std::string fmt_g10(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return {buf};
}

std::string fmt_f1(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f", x);
    return {buf};
}

std::string trimmed(const std::string &s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(trimmed(s.substr(pos)));
            return out;
        }
        out.push_back(trimmed(s.substr(pos, next - pos)));
        pos = next + 1;
    }
}

bool try_parse_double(const std::string &s, double &value)
{
    const char *begin = s.data();
    const char *end = begin + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    return ec == std::errc{} && ptr == end && !s.empty();
}

double parse_double_field(const std::string &s, const std::string &what)
{
    double value = 0.0;
    if (!try_parse_double(s, value))
        throw FormatError("cannot parse " + what + " '" + s + "' as a number");
    return value;
}

std::string join_csv(const std::vector<std::string> &cells)
{
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0)
            line += ',';
        line += cells[i];
    }
    line += '\n';
    return line;
}

double resolve_phi0(const RunConfig &config)
{
    if (config.phi0_deg)
        return *config.phi0_deg;
    return config.command == "table1" ? 53.0 : 90.0;
}

const char *regime_name(optimizer::Regime regime)
{
    switch (regime) {
    case optimizer::Regime::zero_optimum:
        return "zero_optimum";
    case optimizer::Regime::interior:
        return "interior";
    default:
        return "covers_center";
    }
}

// One resolved cluster parameterization; exactly one member is active per
// the chosen model.
struct ResolvedModel {
    bool rt = false;
    GaussianCluster std_cl{};
    FittedGaussianCluster rt_cl{};

    double sigma_deg() const { return rt ? rt_cl.sigma_deg() : std_cl.sigma_deg; }
    double total_power_mw() const { return rt ? rt_cl.total_power() : std_cl.total_power; }
    GaussianCluster as_gaussian() const
    {
        return rt ? GaussianCluster{rt_cl.total_power(), rt_cl.sigma_deg(), rt_cl.x} : std_cl;
    }
};

ResolvedModel resolve_model(const RunConfig &config, double center_deg)
{
    ResolvedModel out;
    if (config.model == "std11ad") {
        if (config.v_deg || config.u || config.profile_path)
            throw DomainError("--v, --u and --profile belong to the rticm model");
        if (!config.sigma_deg)
            throw DomainError("the std11ad model needs --sigma");
        out.rt = false;
        out.std_cl = GaussianCluster{from_dbm(config.ptot_dbm.value_or(0.0)), *config.sigma_deg,
                                     config.x_deg.value_or(center_deg)};
        return out;
    }
    if (config.model == "rticm") {
        if (config.sigma_deg)
            throw DomainError("--sigma belongs to the std11ad model; use --v or --profile");
        if (config.ptot_dbm)
            throw DomainError("total power is implied by u and v for the rticm model");
        out.rt = true;
        if (config.profile_path) {
            if (config.v_deg || config.u)
                throw DomainError("give either --v/--u or --profile, not both");
            out.rt_cl = cluster::profile_to_fitted(ingest_profile(*config.profile_path));
            return out;
        }
        if (!config.v_deg)
            throw DomainError("the rticm model needs --v or --profile");
        out.rt_cl = FittedGaussianCluster{config.u.value_or(1.0), *config.v_deg,
                                          config.x_deg.value_or(center_deg)};
        return out;
    }
    throw DomainError("unknown model: " + config.model);
}

double rho_of(Shape shape, double sigma_deg, double delta_deg, double beamwidth_deg)
{
    return shape == Shape::rect ? cluster::rho_rect(sigma_deg, delta_deg, beamwidth_deg)
                                : cluster::rho_tri(sigma_deg, delta_deg, beamwidth_deg);
}

CommandOutput cmd_gain(const RunConfig &config)
{
    const double phi0 = resolve_phi0(config);
    if (config.n_elements.has_value() == config.beamwidth_deg.has_value())
        throw DomainError("gain needs exactly one of --n or --beamwidth");

    int n = 0;
    double bw = 0.0, gain = 0.0;
    if (config.n_elements) {
        const antenna::ULAGeometry ula(*config.n_elements);
        n = ula.n_elements();
        gain = antenna::gain_from_elements(ula);
        bw = antenna::beamwidth_from_elements(ula, phi0);
    } else {
        bw = *config.beamwidth_deg;
        gain = antenna::gain_from_beamwidth(bw, phi0);
        n = antenna::elements_from_beamwidth(bw, phi0);
    }
    const double gain_dbi = 10.0 * std::log10(gain);

    CommandOutput out;
    out.csv = "n_elements,scan_angle_deg,beamwidth_deg,gain_linear,gain_dbi\n" +
              join_csv({std::to_string(n), fmt_g6(phi0), fmt_g6(bw), fmt_g6(gain),
                        fmt_g6(gain_dbi)});
    std::ostringstream rep;
    rep << "n_elements: " << n << "\n"
        << "scan_angle_deg: " << fmt_g10(phi0) << "\n"
        << "beamwidth_deg: " << fmt_g10(bw) << "\n"
        << "gain_linear: " << fmt_g10(gain) << "\n"
        << "gain_dbi: " << fmt_g10(gain_dbi) << "\n";
    out.report = rep.str();
    return out;
}

CommandOutput cmd_rho(const RunConfig &config)
{
    if (!config.beamwidth_deg)
        throw DomainError("rho needs --beamwidth");
    const ResolvedModel m = resolve_model(config, resolve_phi0(config));
    const double sigma = m.sigma_deg();
    const double rho = rho_of(config.shape, sigma, config.delta_deg, *config.beamwidth_deg);
    const char *shape = config.shape == Shape::rect ? "rect" : "tri";

    CommandOutput out;
    out.csv = "model,shape,sigma_deg,delta_deg,beamwidth_deg,rho\n" +
              join_csv({config.model, shape, fmt_g6(sigma), fmt_g6(config.delta_deg),
                        fmt_g6(*config.beamwidth_deg), fmt_g6(rho)});
    std::ostringstream rep;
    rep << "model: " << config.model << "\n"
        << "shape: " << shape << "\n"
        << "sigma_deg: " << fmt_g10(sigma) << "\n"
        << "delta_deg: " << fmt_g10(config.delta_deg) << "\n"
        << "beamwidth_deg: " << fmt_g10(*config.beamwidth_deg) << "\n"
        << "rho: " << fmt_g10(rho) << "\n";
    out.report = rep.str();
    return out;
}

CommandOutput cmd_optimize(const RunConfig &config)
{
    const double phi0 = resolve_phi0(config);
    const ResolvedModel m = resolve_model(config, phi0);

    optimizer::OptimizationResult res;
    if (config.shape == Shape::rect) {
        res = m.rt ? optimizer::optimize_misaligned(m.rt_cl, phi0, config.delta_deg)
                   : optimizer::optimize_misaligned(m.std_cl, phi0, config.delta_deg);
    } else {
        res = optimizer::optimize_grid(m.as_gaussian(), phi0, config.delta_deg, Shape::tri,
                                       config.grid_step_deg);
    }

    CommandOutput out;
    out.csv =
        "regime,beamwidth_opt_deg,p_max_mw,p_max_dbm,n_elements,second_derivative_ok,"
        "grid_fallback\n" +
        join_csv({regime_name(res.regime), fmt_g6(res.beamwidth_opt_deg), fmt_g6(res.p_max),
                  fmt_g6(to_dbm(res.p_max)), std::to_string(res.n_elements),
                  res.second_derivative_ok ? "1" : "0", res.grid_fallback ? "1" : "0"});
    std::ostringstream rep;
    rep << "regime: " << regime_name(res.regime) << "\n"
        << "beamwidth_opt_deg: " << fmt_g10(res.beamwidth_opt_deg) << "\n"
        << "p_max_mw: " << fmt_g10(res.p_max) << "\n"
        << "p_max_dbm: " << fmt_g10(to_dbm(res.p_max)) << "\n"
        << "n_elements: " << res.n_elements << "\n"
        << "second_derivative_ok: " << (res.second_derivative_ok ? 1 : 0) << "\n"
        << "grid_fallback: " << (res.grid_fallback ? 1 : 0) << "\n";
    if (res.regime == optimizer::Regime::zero_optimum)
        rep << "note: the supremum sits at zero beamwidth and no finite array reaches it; "
               "use the percentile command for a realizable target\n";
    out.report = rep.str();
    return out;
}

CommandOutput cmd_percentile(const RunConfig &config)
{
    if (config.etas.empty())
        throw DomainError("percentile needs at least one --eta");
    const double phi0 = resolve_phi0(config);
    const ResolvedModel m = resolve_model(config, phi0);

    CommandOutput out;
    out.csv = "eta,beamwidth_exact_deg,beamwidth_approx_deg,approx_in_support,n_elements,"
              "p_eta_mw,p_eta_dbm\n";
    for (const double eta : config.etas) {
        const optimizer::PercentileResult plan =
            m.rt ? optimizer::percentile_plan(m.rt_cl, phi0, eta)
                 : optimizer::percentile_plan(m.std_cl, phi0, eta);
        const std::string approx =
            plan.beamwidth_approx_deg ? fmt_g6(*plan.beamwidth_approx_deg) : std::string{};
        out.csv += join_csv({fmt_g6(plan.eta), fmt_g6(plan.beamwidth_exact_deg), approx,
                             plan.beamwidth_approx_deg ? "1" : "0",
                             std::to_string(plan.n_elements), fmt_g6(plan.p_eta),
                             fmt_g6(to_dbm(plan.p_eta))});
    }
    return out;
}

CommandOutput cmd_table1(const RunConfig &config)
{
    if (config.profile_path || config.u || config.ptot_dbm)
        throw DomainError("table1 takes --sigma, --v, --phi0, --eta and --output only");
    const double phi0 = resolve_phi0(config);
    const double sigma = config.sigma_deg.value_or(5.0);
    const double v = config.v_deg.value_or(9.23);
    const std::vector<double> etas =
        config.etas.empty() ? std::vector<double>{0.999, 0.99, 0.95, 0.9, 0.75, 0.5}
                            : config.etas;

    const GaussianCluster std_cl{1.0, sigma, phi0};
    const FittedGaussianCluster rt_cl{1.0, v, phi0};

    CommandOutput out;
    out.csv = "eta,beamwidth_std_deg,n_std,beamwidth_rt_deg,n_rt\n";
    for (const double eta : etas) {
        const auto plan_std = optimizer::percentile_plan(std_cl, phi0, eta);
        const auto plan_rt = optimizer::percentile_plan(rt_cl, phi0, eta);
        out.csv += join_csv({fmt_g6(eta), fmt_f1(plan_std.beamwidth_exact_deg),
                             std::to_string(plan_std.n_elements),
                             fmt_f1(plan_rt.beamwidth_exact_deg),
                             std::to_string(plan_rt.n_elements)});
    }
    return out;
}

CommandOutput cmd_sweep(const RunConfig &config)
{
    if (!config.range)
        throw DomainError("sweep needs --range lo:hi:step");
    const auto parts = split(*config.range, ':');
    if (parts.size() != 3)
        throw DomainError("--range must be lo:hi:step, got '" + *config.range + "'");
    double lo = 0.0, hi = 0.0, step = 0.0;
    if (!try_parse_double(parts[0], lo) || !try_parse_double(parts[1], hi) ||
        !try_parse_double(parts[2], step))
        throw DomainError("--range must be numeric lo:hi:step, got '" + *config.range + "'");
    if (!(step > 0.0))
        throw DomainError("--range step must be positive");
    if (!(lo > 0.0))
        throw DomainError("--range must start above zero beamwidth");

    const double phi0 = resolve_phi0(config);
    const ResolvedModel m = resolve_model(config, phi0);
    const double sigma = m.sigma_deg();
    const double p_tot = m.total_power_mw();

    CommandOutput out;
    out.csv = "beamwidth_deg,gain_db,rho,received_power_dbm,n_elements\n";
    if (lo <= hi) {
        const auto rows = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (long i = 0; i < rows; ++i) {
            const double bw = lo + step * static_cast<double>(i);
            const double gain = antenna::gain_from_beamwidth(bw, phi0);
            const double rho = rho_of(config.shape, sigma, config.delta_deg, bw);
            const double received = gain * p_tot * rho;
            out.csv += join_csv({fmt_g6(bw), fmt_g6(10.0 * std::log10(gain)), fmt_g6(rho),
                                 fmt_g6(to_dbm(received)),
                                 std::to_string(antenna::elements_from_beamwidth(bw, phi0))});
        }
    }
    return out;
}

CommandOutput cmd_fit(const RunConfig &config)
{
    if (!config.profile_path)
        throw DomainError("fit needs --profile");
    const cluster::ClusterProfile profile = ingest_profile(*config.profile_path);

    std::vector<numerics::PowerSample> samples;
    samples.reserve(profile.n_diffuse());
    for (std::size_t k = 0; k < profile.n_diffuse(); ++k)
        samples.push_back({profile.ray_angle_deg(k), profile.diffuse_power()[k]});
    const numerics::FitResult fit = numerics::fit_gaussian(samples);

    const double sigma = fit.v / std::numbers::sqrt2;
    const double p_implied = fit.u * fit.v * std::sqrt(std::numbers::pi);
    const double p_profile = cluster::total_power_discrete(profile);

    CommandOutput out;
    out.csv = "u,v_deg,x_deg,sigma_deg,rss,n_used,p_implied_mw,profile_total_mw\n" +
              join_csv({fmt_g6(fit.u), fmt_g6(fit.v), fmt_g6(fit.x), fmt_g6(sigma),
                        fmt_g6(fit.rss), std::to_string(fit.n_used), fmt_g6(p_implied),
                        fmt_g6(p_profile)});
    std::ostringstream rep;
    rep << "u: " << fmt_g10(fit.u) << "\n"
        << "v_deg: " << fmt_g10(fit.v) << "\n"
        << "x_deg: " << fmt_g10(fit.x) << "\n"
        << "sigma_deg: " << fmt_g10(sigma) << "\n"
        << "rss: " << fmt_g10(fit.rss) << "\n"
        << "n_used: " << fit.n_used << "\n"
        << "p_implied_mw: " << fmt_g10(p_implied) << "\n"
        << "p_implied_dbm: " << fmt_g10(to_dbm(p_implied)) << "\n"
        << "profile_total_mw: " << fmt_g10(p_profile) << "\n"
        << "profile_total_dbm: " << fmt_g10(to_dbm(p_profile)) << "\n"
        << "n_diffuse: " << profile.n_diffuse() << "\n"
        << "delta_alpha_deg: " << fmt_g10(profile.delta_alpha_deg()) << "\n"
        << "span_deg: " << fmt_g10(profile.span_deg()) << "\n"
        << "specular_power_mw: " << fmt_g10(profile.specular_power()) << "\n";
    out.report = rep.str();
    return out;
}

} // namespace

double to_dbm(double linear_mw)
{
    if (!(linear_mw > 0.0))
        return -400.0;
    return std::max(10.0 * std::log10(linear_mw), -400.0);
}

double from_dbm(double dbm) { return std::pow(10.0, dbm / 10.0); }

cluster::ClusterProfile ingest_profile(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open profile file: " + path);

    struct Row {
        double angle = 0.0;
        double power = 0.0;
        bool specular = false;
    };
    std::vector<Row> rows;
    std::string line;
    bool first_content_line = true;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trimmed(line);
        if (content.empty())
            continue;
        const auto fields = split(content, ',');

        if (first_content_line) {
            first_content_line = false;
            double probe = 0.0;
            if (!try_parse_double(fields[0], probe))
                continue; // header row
        }

        if (fields.size() != 2 && fields.size() != 3)
            throw FormatError("line " + std::to_string(line_no) +
                              ": expected angle,power[,specular]");
        Row row;
        row.angle = parse_double_field(fields[0], "angle at line " + std::to_string(line_no));
        row.power = parse_double_field(fields[1], "power at line " + std::to_string(line_no));
        if (!std::isfinite(row.angle) || !std::isfinite(row.power))
            throw FormatError("line " + std::to_string(line_no) + ": non-finite value");
        if (row.power < 0.0)
            throw FormatError("line " + std::to_string(line_no) + ": negative power");
        if (fields.size() == 3) {
            if (fields[2] == "1")
                row.specular = true;
            else if (fields[2] != "0")
                throw FormatError("line " + std::to_string(line_no) +
                                  ": specular flag must be 0 or 1");
        }
        rows.push_back(row);
    }

    if (rows.size() < 4)
        throw InsufficientDataError("profile needs at least 4 data rows, got " +
                                    std::to_string(rows.size()));

    std::size_t n_specular = 0;
    for (const Row &row : rows)
        if (row.specular)
            ++n_specular;
    if (n_specular > 1)
        throw FormatError("at most one row may be flagged specular");
    if (n_specular == 1 && !rows.front().specular)
        throw FormatError("the specular row must be the first data row");

    double specular_aoa = 0.0;
    double specular_power = 0.0;
    std::size_t start = 0;
    if (n_specular == 1) {
        specular_aoa = rows.front().angle;
        specular_power = rows.front().power;
        start = 1;
    }

    std::vector<double> angles, powers;
    angles.reserve(rows.size() - start);
    powers.reserve(rows.size() - start);
    for (std::size_t k = start; k < rows.size(); ++k) {
        angles.push_back(rows[k].angle);
        powers.push_back(rows[k].power);
    }

    const double span = angles.back() - angles.front();
    if (!(span > 0.0))
        throw FormatError("diffuse angles must be strictly increasing");
    const double delta_alpha = span / static_cast<double>(angles.size() - 1);
    for (std::size_t k = 0; k + 1 < angles.size(); ++k) {
        const double gap = angles[k + 1] - angles[k];
        if (!(gap > 0.0))
            throw FormatError("diffuse angles must be strictly increasing");
        if (std::abs(gap - delta_alpha) > 1e-6)
            throw FormatError("non-uniform ray spacing: gap " + std::to_string(k) +
                              " deviates from the mean by " +
                              std::to_string(gap - delta_alpha) + " deg");
    }

    if (n_specular == 0) {
        specular_aoa = 0.5 * (angles.front() + angles.back());
        specular_power = 0.0;
    }

    std::vector<double> offsets;
    offsets.reserve(angles.size());
    for (const double a : angles)
        offsets.push_back(a - specular_aoa);

    return cluster::ClusterProfile(specular_aoa, specular_power, std::move(offsets),
                                   std::move(powers));
}

CommandOutput run_command(const RunConfig &config)
{
    if (config.command == "gain")
        return cmd_gain(config);
    if (config.command == "rho")
        return cmd_rho(config);
    if (config.command == "optimize")
        return cmd_optimize(config);
    if (config.command == "percentile")
        return cmd_percentile(config);
    if (config.command == "table1")
        return cmd_table1(config);
    if (config.command == "sweep")
        return cmd_sweep(config);
    if (config.command == "fit")
        return cmd_fit(config);
    throw DomainError("unknown command: " + config.command);
}

int execute(const RunConfig &config)
{
    const CommandOutput out = run_command(config);
    const bool row_oriented =
        config.command == "percentile" || config.command == "table1" || config.command == "sweep";

    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
        if (!file)
            throw FormatError("cannot open output file: " + *config.output_path);
        file << out.csv;
        file.flush();
        if (!file)
            throw FormatError("failed while writing output file: " + *config.output_path);
        if (!out.report.empty())
            std::cout << out.report;
        std::cout << "wrote " << *config.output_path << "\n";
        return 0;
    }

    std::cout << (row_oriented ? out.csv : out.report);
    return 0;
}

int exit_code_for(const std::string &category)
{
    if (category == "domain")
        return 2;
    if (category == "format")
        return 3;
    if (category == "insufficient-data")
        return 4;
    if (category == "no-root")
        return 5;
    if (category == "numeric")
        return 6;
    if (category == "fit-failed")
        return 7;
    if (category == "optimization-failed")
        return 8;
    return 9;
}

} // namespace beamopt::cli
