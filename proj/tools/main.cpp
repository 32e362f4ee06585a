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

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

// Flags shared by every command that touches a cluster model.
void add_model_flags(CLI::App *cmd, beamopt::cli::RunConfig &cfg, std::string &model,
                     std::string &shape)
{
    cmd->add_option("--model", model, "Cluster model: std11ad or rticm")
        ->check(CLI::IsMember({"std11ad", "rticm"}));
    cmd->add_option("--shape", shape, "Beam window shape: rect or tri")
        ->check(CLI::IsMember({"rect", "tri"}));
    cmd->add_option("--sigma", cfg.sigma_deg, "Cluster angular spread in degrees (std11ad)");
    cmd->add_option("--v", cfg.v_deg, "Fitted decay width in degrees (rticm)");
    cmd->add_option("--u", cfg.u, "Fitted peak density (rticm, default 1)");
    cmd->add_option("--ptot-dbm", cfg.ptot_dbm, "Total cluster power in dBm (std11ad, default 0)");
    cmd->add_option("--delta", cfg.delta_deg, "Beam-center misalignment in degrees");
    cmd->add_option("--phi0", cfg.phi0_deg, "Scan angle in degrees (default 90; table1: 53)");
    cmd->add_option("--profile", cfg.profile_path, "Cluster profile CSV to fit (rticm)");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Received-power-optimal ULA beamwidths for clustered mmWave links"};
    app.require_subcommand(1);

    beamopt::cli::RunConfig cfg;
    std::string model = "std11ad";
    std::string shape = "rect";

    CLI::App *gain = app.add_subcommand("gain", "Array gain and beamwidth for a ULA");
    gain->add_option("--n", cfg.n_elements, "Element count");
    gain->add_option("--beamwidth", cfg.beamwidth_deg, "Half-power beamwidth in degrees");
    gain->add_option("--phi0", cfg.phi0_deg, "Scan angle in degrees (default 90)");
    gain->add_option("--output", cfg.output_path, "Write the CSV row to this file");

    CLI::App *rho = app.add_subcommand("rho", "Capture fraction of a misaligned beam");
    add_model_flags(rho, cfg, model, shape);
    rho->add_option("--beamwidth", cfg.beamwidth_deg, "Half-power beamwidth in degrees");
    rho->add_option("--output", cfg.output_path, "Write the CSV row to this file");

    CLI::App *optimize = app.add_subcommand("optimize", "Received-power-optimal beamwidth");
    add_model_flags(optimize, cfg, model, shape);
    optimize->add_option("--grid-step", cfg.grid_step_deg,
                         "Grid resolution in degrees for triangular windows");
    optimize->add_option("--output", cfg.output_path, "Write the CSV row to this file");

    CLI::App *percentile =
        app.add_subcommand("percentile", "Beamwidth reaching a fraction of the power supremum");
    add_model_flags(percentile, cfg, model, shape);
    percentile->add_option("--eta", cfg.etas, "Target power fraction in (0,1); repeatable");
    percentile->add_option("--output", cfg.output_path, "Write the CSV table to this file");

    CLI::App *table1 = app.add_subcommand(
        "table1", "Percentile design table for both cluster models side by side");
    table1->add_option("--sigma", cfg.sigma_deg, "std11ad spread in degrees (default 5)");
    table1->add_option("--v", cfg.v_deg, "rticm decay width in degrees (default 9.23)");
    table1->add_option("--phi0", cfg.phi0_deg, "Scan angle in degrees (default 53)");
    table1->add_option("--eta", cfg.etas,
                       "Power fractions; default 0.999 0.99 0.95 0.9 0.75 0.5");
    table1->add_option("--output", cfg.output_path, "Write the CSV table to this file");

    CLI::App *sweep = app.add_subcommand("sweep", "Received power over a beamwidth range");
    add_model_flags(sweep, cfg, model, shape);
    sweep->add_option("--range", cfg.range, "Beamwidth range lo:hi:step in degrees");
    sweep->add_option("--output", cfg.output_path, "Write the CSV table to this file");

    CLI::App *fit = app.add_subcommand("fit", "Gaussian density fit of a cluster profile");
    fit->add_option("--profile", cfg.profile_path, "Cluster profile CSV")->required();
    fit->add_option("--output", cfg.output_path, "Write the CSV row to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    for (CLI::App *cmd : {gain, rho, optimize, percentile, table1, sweep, fit})
        if (app.got_subcommand(cmd))
            cfg.command = cmd->get_name();
    cfg.model = model;
    cfg.shape = shape == "tri" ? beamopt::antenna::Shape::tri : beamopt::antenna::Shape::rect;

    try {
        return beamopt::cli::execute(cfg);
    } catch (const beamopt::Error &e) {
        std::cerr << "error: " << e.category() << ": " << e.what() << "\n";
        return beamopt::cli::exit_code_for(e.category());
    } catch (const std::exception &e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 9;
    }
}
