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

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcq/errors.hpp"
#include "tcq/pulse_design.hpp"
#include "tcq/report_io.hpp"
#include "tcq/simulator.hpp"
#include "tcq/verification.hpp"
#include "tcq/version.hpp"

namespace {

using nlohmann::json;
using namespace tcq;

struct Flags {
    double h1 = 0.01;
    double g = 1;
    double omega = 1;
    int nmax = 40;
    int buffer = 8;
    double step = 1e-2;
    std::string out = ".";
    uint64_t seed = 20260101;
};

// Thrown when a check or the integrator fails after the config was accepted.
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string path_in(const Flags &f, const std::string &name) {
    std::filesystem::create_directories(f.out);
    return (std::filesystem::path(f.out) / name).string();
}

json flags_json(const Flags &f) {
    return {{"h1", f.h1}, {"g", f.g},         {"omega", f.omega}, {"nmax", f.nmax},
            {"buffer", f.buffer}, {"step", f.step}, {"out", f.out}, {"seed", f.seed}};
}

SimulationConfig sim_config(const Flags &f) {
    SimulationConfig cfg;
    cfg.params.g = f.g;
    cfg.params.omega = f.omega;
    cfg.params.delta = f.omega;
    cfg.tr = {f.nmax, f.buffer};
    cfg.step = f.step;
    cfg.validate();
    return cfg;
}

std::vector<std::string> cmd_verify(const Flags &f, const std::string &scope_str, json &cfg) {
    VerifyScope scope = parse_scope(scope_str);
    VerifyOptions opt;
    opt.tr = {f.nmax, f.buffer};
    opt.seed = f.seed;
    cfg["scope"] = scope_str;
    VerifyReport r = run_verification(scope, opt);
    for (const Check &c : r.checks) {
        std::printf("%-4s %-14s %-40s max_dev=%.3e tol=%.1e\n", c.pass ? "ok" : "FAIL", c.scope.c_str(),
                    c.name.c_str(), c.max_dev, c.tol);
    }
    std::string path = path_in(f, "verify_" + scope_str + ".json");
    write_text(path, verify_report_to_json(r));
    if (!r.all_pass()) throw CheckFailure("verification failed; see " + path);
    return {path};
}

std::vector<std::string> cmd_design(const Flags &f, const std::string &gate_str, json &cfg) {
    GateKind gate = parse_gate(gate_str);
    cfg["gate"] = gate_str;
    PulseSchedule s = design(gate, DesignParams{f.h1, f.g, f.omega, f.omega});
    std::printf("%-4s %-8s %-6s %-22s %-12s %-10s %s\n", "seg", "kind", "drive", "primitive/gate", "Omega", "phi",
                "duration");
    for (size_t i = 0; i < s.segments.size(); i++) {
        const Segment &seg = s.segments[i];
        if (seg.is_drive()) {
            double kappa = primitive_resonance(parse_gate(seg.primitive)).kappa();
            std::printf("%-4zu %-8s %-6d %-22s %-12.6f %-10.6f %.6f  (kappa=%.6f)\n", i, "drive", seg.drive,
                        seg.primitive.c_str(), seg.Omega, seg.phi, seg.duration, kappa);
        } else {
            std::string label = frame_gate_name(seg.gate) + "(" + std::to_string(seg.qubit) + ")";
            std::printf("%-4zu %-8s %-6s %-22s\n", i, "frame", "-", label.c_str());
        }
    }
    std::string path = path_in(f, "schedule_" + gate_str + ".json");
    write_text(path, schedule_to_json(s));
    return {path};
}

std::vector<std::string> cmd_simulate(const Flags &f, const std::string &file, json &cfg) {
    cfg["schedule"] = file;
    PulseSchedule s = schedule_from_json(read_text(file));
    SimulationConfig sc = sim_config(f);
    sc.params = s.params;
    GateReport rep = simulate(s, sc);
    std::printf("target=%s fidelity=%.12f leakage=%.6e subspace_nonunitarity=%.3e unitarity_defect=%.3e gate_time=%.6f\n",
                rep.target.c_str(), rep.fidelity, rep.leakage, rep.subspace_nonunitarity, rep.unitarity_defect,
                rep.gate_time);
    std::string path = path_in(f, "report_" + rep.target + ".json");
    write_text(path, report_to_json(rep));
    if (rep.unitarity_defect > 1e-8) {
        throw CheckFailure("propagator unitarity defect " + std::to_string(rep.unitarity_defect) + " exceeds 1e-8");
    }
    return {path};
}

std::vector<std::string> cmd_sweep(const Flags &f, const std::string &gate_str, const std::vector<double> &hs,
                                   json &cfg) {
    GateKind gate = parse_gate(gate_str);
    if (hs.size() < 2) throw ConfigError("sweep needs at least two --h-list values");
    cfg["gate"] = gate_str;
    cfg["h_list"] = hs;
    std::vector<SweepRow> rows = fidelity_sweep(gate, hs, sim_config(f));
    std::printf("h_over_g,fidelity,leakage,gate_time\n");
    for (const SweepRow &r : rows) std::printf("%g,%.12f,%.6e,%.6f\n", r.h_over_g, r.fidelity, r.leakage, r.gate_time);
    std::printf("fidelity improves as h decreases: %s\n", fidelity_improves_as_h_decreases(rows) ? "yes" : "no");
    std::string csv = path_in(f, "sweep_" + gate_str + ".csv");
    std::string js = path_in(f, "sweep_" + gate_str + ".json");
    write_sweep_csv(csv, rows);
    write_text(js, sweep_to_json(gate_str, rows));
    for (const SweepRow &r : rows) {
        if (r.report.unitarity_defect > 1e-8) throw CheckFailure("propagator unitarity defect exceeds 1e-8");
    }
    return {csv, js};
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"tcq: driven Tavis-Cummings gate design and simulation"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Flags f;
    auto common = [&](CLI::App *sub) {
        sub->add_option("--h1", f.h1, "drive amplitude h1 (units of g)");
        sub->add_option("--g", f.g, "atom-cavity coupling");
        sub->add_option("--omega", f.omega, "cavity frequency; the atomic splitting is set equal");
        sub->add_option("--nmax", f.nmax, "photon cutoff");
        sub->add_option("--buffer", f.buffer, "photon levels below the cutoff excluded from checks");
        sub->add_option("--step", f.step, "integration step (units 1/g)");
        sub->add_option("--out", f.out, "output directory");
        sub->add_option("--seed", f.seed, "seed for randomized checks");
    };

    std::string scope = "all", gate, schedule_file;
    std::vector<double> hs;
    CLI::App *verify = app.add_subcommand("verify", "run oracle-equivalence checks");
    verify->add_option("scope", scope, "expm|decomposition|keylemma|reduced|gates|appendix|all");
    CLI::App *design_cmd = app.add_subcommand("design", "write a pulse schedule for a gate");
    design_cmd->add_option("gate", gate, "CZ2|CNOT2|A|B|C|CNOT3A|CNOT3B|CNOT3C|CCNOT")->required();
    CLI::App *simulate_cmd = app.add_subcommand("simulate", "integrate a schedule and report the gate");
    simulate_cmd->add_option("schedule", schedule_file, "schedule JSON")->required();
    CLI::App *sweep = app.add_subcommand("sweep", "fidelity versus drive amplitude");
    sweep->add_option("gate", gate, "gate to design at each h")->required();
    sweep->add_option("--h-list", hs, "drive amplitudes, comma separated")->delimiter(',')->required();
    for (CLI::App *sub : {verify, design_cmd, simulate_cmd, sweep}) common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    CLI::App *sub = app.get_subcommands().front();
    json cfg = flags_json(f);
    RunManifest m;
    m.command = sub->get_name();
    int rc = 0;
    try {
        if (sub == verify) m.outputs = cmd_verify(f, scope, cfg);
        if (sub == design_cmd) m.outputs = cmd_design(f, gate, cfg);
        if (sub == simulate_cmd) m.outputs = cmd_simulate(f, schedule_file, cfg);
        if (sub == sweep) m.outputs = cmd_sweep(f, gate, hs, cfg);
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CheckFailure &e) {
        std::cerr << "check failed: " << e.what() << "\n";
        rc = 1;
    } catch (const IntegrationError &e) {
        std::cerr << "integration failed: " << e.what() << "\n";
        rc = 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    m.config_json = cfg.dump();
    m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    try {
        std::string path = path_in(f, "manifest_" + m.command + ".json");
        write_text(path, manifest_to_json(m));
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
