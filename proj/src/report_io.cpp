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

#include "tcq/report_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "tcq/errors.hpp"
#include "tcq/version.hpp"

namespace tcq {

using nlohmann::json;

namespace {

json matrix_json(const Mat &m) {
    json re = json::array(), im = json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        json rr = json::array(), ri = json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            rr.push_back(m(r, c).real());
            ri.push_back(m(r, c).imag());
        }
        re.push_back(rr);
        im.push_back(ri);
    }
    return json{{"re", re}, {"im", im}};
}

json params_json(const ModelParams &p) {
    json drives = json::array();
    for (const Drive &d : p.drives) drives.push_back({{"h", d.h}, {"omega", d.Omega}, {"phi", d.phi}});
    return {{"omega", p.omega}, {"delta", p.delta}, {"g", p.g}, {"drives", drives}};
}

json segment_json(const SegmentReport &s) {
    json j = {{"index", s.index},
              {"primitive", s.primitive},
              {"duration", s.duration},
              {"steps", s.steps},
              {"fidelity", s.fidelity},
              {"leakage", s.leakage},
              {"subspace_nonunitarity", s.subspace_nonunitarity},
              {"unitarity_defect", s.unitarity_defect},
              {"manifolds_used", s.manifolds_used},
              {"dominant_pair", {s.dominant.first, s.dominant.second}},
              {"cached", s.cached}};
    if (!s.leakage_samples.empty()) {
        json samples = json::array();
        for (const auto &[t, l] : s.leakage_samples) samples.push_back({t, l});
        j["leakage_samples"] = samples;
    }
    return j;
}

json report_body(const GateReport &r) {
    json segs = json::array();
    for (const SegmentReport &s : r.segments) segs.push_back(segment_json(s));
    return {{"schema", kSchema},
            {"target", r.target},
            {"fidelity", r.fidelity},
            {"leakage", r.leakage},
            {"subspace_nonunitarity", r.subspace_nonunitarity},
            {"gate_time", r.gate_time},
            {"diagnostics",
             {{"n_atoms", r.n_atoms},
              {"unitarity_defect", r.unitarity_defect},
              {"dominant_pair", {r.dominant.first, r.dominant.second}},
              {"params", params_json(r.params)},
              {"nmax", r.tr.n_max},
              {"buffer", r.tr.buffer},
              {"step", r.step},
              {"achieved_phi", matrix_json(r.achieved)},
              {"achieved_computational", matrix_json(r.achieved_computational)},
              {"segments", segs}}}};
}

}  // namespace

std::string report_to_json(const GateReport &r) { return report_body(r).dump(2) + "\n"; }

std::string sweep_to_json(const std::string &gate, const std::vector<SweepRow> &rows) {
    json out = json::array();
    for (const SweepRow &row : rows) {
        out.push_back({{"h_over_g", row.h_over_g},
                       {"fidelity", row.fidelity},
                       {"leakage", row.leakage},
                       {"gate_time", row.gate_time},
                       {"report", report_body(row.report)}});
    }
    json j = {{"schema", kSchema}, {"gate", gate}, {"rows", out}};
    return j.dump(2) + "\n";
}

void write_sweep_csv(const std::string &path, const std::vector<SweepRow> &rows) {
    std::ostringstream os;
    os << "h_over_g,fidelity,leakage,gate_time\n" << std::setprecision(17);
    for (const SweepRow &r : rows) os << r.h_over_g << ',' << r.fidelity << ',' << r.leakage << ',' << r.gate_time << '\n';
    write_text(path, os.str());
}

std::vector<SweepRow> read_sweep_csv(const std::string &path) {
    std::istringstream in(read_text(path));
    std::string line;
    if (!std::getline(in, line) || line != "h_over_g,fidelity,leakage,gate_time") {
        throw ConfigError(path + ": missing sweep CSV header");
    }
    std::vector<SweepRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> v;
        while (std::getline(ls, cell, ',')) {
            try {
                size_t used = 0;
                v.push_back(std::stod(cell, &used));
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception &) {
                throw ConfigError(path + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
            }
        }
        if (v.size() != 4) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 4 columns");
        SweepRow r;
        r.h_over_g = v[0];
        r.fidelity = v[1];
        r.leakage = v[2];
        r.gate_time = v[3];
        rows.push_back(r);
    }
    return rows;
}

std::string manifest_to_json(const RunManifest &m) {
    json cfg = json::parse(m.config_json, nullptr, false);
    if (cfg.is_discarded()) cfg = m.config_json;
    json j = {{"schema", kSchema},
              {"command", m.command},
              {"config", cfg},
              {"version", m.version.empty() ? std::string(kVersion) : m.version},
              {"units", "g"},
              {"wall_seconds", m.wall_seconds},
              {"outputs", m.outputs}};
    return j.dump(2) + "\n";
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open " + path + " for writing");
    f << text;
    if (!f) throw ConfigError("failed writing " + path);
}

std::string read_text(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace tcq
