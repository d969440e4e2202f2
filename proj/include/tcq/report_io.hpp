// Copyright 2026 The tcq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "tcq/simulator.hpp"

namespace tcq {

inline constexpr const char *kSchema = "tcq/1";

std::string report_to_json(const GateReport &r);

/// Sweep rows with the full per-segment sub-report of every row.
std::string sweep_to_json(const std::string &gate, const std::vector<SweepRow> &rows);

void write_sweep_csv(const std::string &path, const std::vector<SweepRow> &rows);

/// Reads h_over_g, fidelity, leakage, gate_time back; report fields stay empty.
std::vector<SweepRow> read_sweep_csv(const std::string &path);

struct RunManifest {
    std::string command;
    std::string config_json = "{}";  // echo of the effective configuration
    std::string version;
    double wall_seconds = 0;
    std::vector<std::string> outputs;
};

std::string manifest_to_json(const RunManifest &m);

/// Writes text to path, throwing ConfigError when the file cannot be opened.
void write_text(const std::string &path, const std::string &text);
std::string read_text(const std::string &path);

}  // namespace tcq
