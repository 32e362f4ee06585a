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
#include <string>
#include <vector>

namespace beamopt::cli {

// Parsed command-line request. Cross-field rules are enforced when the
// command runs: the std11ad model takes --sigma (plus optional --ptot-dbm,
// default 0 dBm), the rticm model takes --v/--u or --profile, and the two
// parameter families are mutually exclusive. The table1 command is the one
// exception: it uses both models side by side with its own defaults
// (sigma 5, v 9.23, phi0 53).
struct RunConfig {
    std::string command;           // gain|rho|optimize|percentile|table1|sweep|fit
    std::string model = "std11ad"; // std11ad | rticm
    antenna::Shape shape = antenna::Shape::rect;

    std::optional<double> sigma_deg; // std11ad spread
    std::optional<double> v_deg;     // rticm decay width
    std::optional<double> u;         // rticm peak density (default 1 when absent)
    std::optional<double> x_deg;     // cluster center; filled from a profile fit

    double delta_deg = 0.0;
    std::optional<double> phi0_deg; // default 90, except table1 which uses 53
    std::vector<double> etas;
    std::optional<double> ptot_dbm;

    std::optional<std::string> profile_path;
    std::optional<std::string> output_path;
    double grid_step_deg = 0.01;

    std::optional<double> beamwidth_deg; // operand for gain and rho
    std::optional<int> n_elements;       // operand for gain
    std::optional<std::string> range;    // sweep range "lo:hi:step"
};

// Everything a command produces, assembled fully in memory so failures never
// leave partial output behind.
struct CommandOutput {
    std::string report; // key: value lines for scalar commands, empty otherwise
    std::string csv;    // header plus data rows, deterministic formatting
};

// dBm <-> linear milliwatt conversion. Linear powers at or below zero clamp
// to -400 dBm so CSV columns stay finite when a capture fraction underflows.
double to_dbm(double linear_mw);
double from_dbm(double dbm);

// Reads a cluster profile file: CSV rows `angle_deg,power_linear` with an
// optional header and an optional third column `specular` (0/1; at most one
// row flagged, and it must be the first data row). Angles of the diffuse
// rays must be uniformly spaced within 1e-6 degrees. Files with fewer than
// 4 data rows are rejected.
cluster::ClusterProfile ingest_profile(const std::string &path);

// Executes the configured command without writing to stdout or creating
// files (the only I/O is reading --profile). Throws beamopt errors.
CommandOutput run_command(const RunConfig &config);

// run_command plus emission: row-oriented commands (percentile, table1,
// sweep) print their CSV to stdout unless --output redirects it to a file;
// scalar commands print the report. Returns the process exit code.
int execute(const RunConfig &config);

// Stable mapping from error categories to nonzero process exit codes.
int exit_code_for(const std::string &category);

} // namespace beamopt::cli
