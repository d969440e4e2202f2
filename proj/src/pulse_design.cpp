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

#include "tcq/pulse_design.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"
#include "tcq/errors.hpp"

namespace tcq {

using nlohmann::json;

namespace {

constexpr const char *kSchema = "tcq/1";
constexpr double kFrequencyTol = 1e-9;  // times g

struct GateEntry {
    GateKind kind;
    const char *name;
    int atoms;
};

constexpr GateEntry kGates[] = {
    {GateKind::CZ2, "CZ2", 2},       {GateKind::CNOT2, "CNOT2", 2},   {GateKind::A, "A", 3},
    {GateKind::B, "B", 3},           {GateKind::C, "C", 3},           {GateKind::CNOT3A, "CNOT3A", 3},
    {GateKind::CNOT3B, "CNOT3B", 3}, {GateKind::CNOT3C, "CNOT3C", 3}, {GateKind::CCNOT, "CCNOT", 3},
};

void require_primitive(GateKind g) {
    if (!is_primitive(g)) {
        throw ConfigError("gate " + gate_name(g) + " is not a single drive pulse");
    }
}

}  // namespace

GateKind parse_gate(const std::string &name) {
    for (const GateEntry &e : kGates) {
        if (name == e.name) return e.kind;
    }
    throw ConfigError("unknown gate '" + name + "' (expected CZ2, CNOT2, A, B, C, CNOT3A, CNOT3B, CNOT3C or CCNOT)");
}

std::string gate_name(GateKind g) {
    for (const GateEntry &e : kGates) {
        if (g == e.kind) return e.name;
    }
    return "?";
}

int gate_atoms(GateKind g) {
    for (const GateEntry &e : kGates) {
        if (g == e.kind) return e.atoms;
    }
    return 0;
}

bool is_primitive(GateKind g) {
    return g == GateKind::CZ2 || g == GateKind::A || g == GateKind::B || g == GateKind::C;
}

double rabi_rate(GateKind primitive, double h1) {
    require_primitive(primitive);
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0), r30 = std::sqrt(30.0);
    const double r73 = std::sqrt(73.0);
    switch (primitive) {
        case GateKind::CZ2:
            return (r6 - r2) * h1 / 24;
        case GateKind::A:
            return r3 * (11 - r73) * h1 / (20 * r73);
        case GateKind::B:
            return r2 * (r3 - 1) * h1 / 12;
        case GateKind::C:
            return (r30 - 4) * h1 / 60;
        default:
            return 0;
    }
}

PulseFlavor primitive_flavor(GateKind primitive) {
    require_primitive(primitive);
    return primitive == GateKind::CZ2 ? PulseFlavor::Quarter : PulseFlavor::Half;
}

double gate_time(GateKind primitive, double h1, PulseFlavor flavor) {
    if (!(h1 > 0)) {
        throw ConfigError("gate_time needs h1 > 0");
    }
    double rate = rabi_rate(primitive, h1);
    return flavor == PulseFlavor::Quarter ? std::numbers::pi / (2 * rate) : std::numbers::pi / rate;
}

double gate_time(GateKind primitive, double h1) { return gate_time(primitive, h1, primitive_flavor(primitive)); }

double phase_rule(GateKind primitive) {
    require_primitive(primitive);
    return primitive == GateKind::CZ2 ? std::numbers::pi / 2 : 0.0;
}

ResonanceCondition primitive_resonance(GateKind primitive) {
    require_primitive(primitive);
    switch (primitive) {
        case GateKind::CZ2:
            return {1, Surd::Sqrt2PlusSqrt6};
        case GateKind::A:
            return {1, Surd::Sqrt10PlusSqrt73};
        case GateKind::B:
            return {1, Surd::OnePlusSqrt3};
        default:
            return {1, Surd::Sqrt3PlusSqrt10};
    }
}

std::string frame_gate_name(FrameGate g) {
    switch (g) {
        case FrameGate::H:
            return "H";
        case FrameGate::X:
            return "X";
        case FrameGate::T:
            return "T";
        case FrameGate::Tdg:
            return "Tdg";
        case FrameGate::SWAP:
            return "SWAP";
    }
    return "?";
}

FrameGate parse_frame_gate(const std::string &name) {
    for (FrameGate g : {FrameGate::H, FrameGate::X, FrameGate::T, FrameGate::Tdg, FrameGate::SWAP}) {
        if (frame_gate_name(g) == name) return g;
    }
    throw ConfigError("unknown frame gate '" + name + "'");
}

Segment Segment::frame(FrameGate g, int qubit) {
    Segment s;
    s.kind = Kind::Frame;
    s.drive = 0;
    s.gate = g;
    s.qubit = qubit;
    return s;
}

double PulseSchedule::drive_time() const {
    double total = 0;
    for (const Segment &s : segments) {
        if (s.is_drive()) total += s.duration;
    }
    return total;
}

void PulseSchedule::validate() const {
    if (n_atoms < 1 || n_atoms > kMaxDrives) {
        throw ConfigError("schedule atom count must be 1, 2 or 3");
    }
    params.validate(n_atoms);
    for (const Segment &s : segments) {
        if (s.is_drive()) {
            if (!(s.duration > 0) || !std::isfinite(s.duration)) {
                throw ConfigError("drive segment durations must be positive");
            }
            if (s.drive < 1 || s.drive > n_atoms) {
                throw ConfigError("drive index out of range");
            }
            if (!(s.h >= 0) || !std::isfinite(s.h) || !std::isfinite(s.Omega) || !std::isfinite(s.phi)) {
                throw ConfigError("drive segment fields must be finite with h >= 0");
            }
            if (!s.primitive.empty()) {
                GateKind kind = parse_gate(s.primitive);
                require_primitive(kind);
                primitive_resonance(kind).check(s.Omega, params.g, params.omega, kFrequencyTol * params.g);
            }
        } else {
            int last = s.gate == FrameGate::SWAP ? s.qubit + 1 : s.qubit;
            if (s.qubit < 1 || last > n_atoms) {
                throw ConfigError("frame gate qubit out of range");
            }
        }
    }
}

ModelParams PulseSchedule::segment_params(const Segment &seg) const {
    ModelParams p = params;
    p.drives.assign(static_cast<size_t>(n_atoms), Drive{});
    p.drives[static_cast<size_t>(seg.drive - 1)] = Drive{seg.h, seg.Omega, seg.phi};
    return p;
}

namespace {

Segment pulse(GateKind primitive, const DesignParams &p) {
    ResonanceCondition res = primitive_resonance(primitive);
    Segment s;
    s.drive = res.drive;
    s.Omega = res.drive_frequency(p.g, p.omega);
    s.phi = phase_rule(primitive);
    s.h = p.h1;
    s.duration = gate_time(primitive, p.h1);
    s.primitive = gate_name(primitive);
    return s;
}

void append(std::vector<Segment> &out, const std::vector<Segment> &more) {
    out.insert(out.end(), more.begin(), more.end());
}

std::vector<Segment> segments_for(GateKind gate, const DesignParams &p) {
    using F = FrameGate;
    auto fr = Segment::frame;
    switch (gate) {
        case GateKind::CZ2:
        case GateKind::A:
        case GateKind::B:
        case GateKind::C:
            return {pulse(gate, p)};
        case GateKind::CNOT2:
            return {fr(F::H, 2), fr(F::X, 2), pulse(GateKind::CZ2, p), fr(F::SWAP, 1), fr(F::X, 2), fr(F::H, 2)};
        case GateKind::CNOT3A:
            return {fr(F::H, 2), fr(F::X, 2), pulse(GateKind::A, p), fr(F::X, 2), fr(F::H, 2)};
        case GateKind::CNOT3B:
            return {fr(F::H, 3), fr(F::X, 3), pulse(GateKind::B, p), fr(F::X, 3), fr(F::H, 3)};
        case GateKind::CNOT3C:
            return {fr(F::H, 3), pulse(GateKind::C, p), fr(F::X, 2), pulse(GateKind::A, p), fr(F::X, 2), fr(F::H, 3)};
        case GateKind::CCNOT: {
            // Six-CNOT Toffoli network, controls 1 and 2, target 3.
            std::vector<Segment> out;
            auto cnot23 = segments_for(GateKind::CNOT3B, p);
            auto cnot13 = segments_for(GateKind::CNOT3C, p);
            auto cnot12 = segments_for(GateKind::CNOT3A, p);
            out.push_back(fr(F::H, 3));
            append(out, cnot23);
            out.push_back(fr(F::Tdg, 3));
            append(out, cnot13);
            out.push_back(fr(F::T, 3));
            append(out, cnot23);
            out.push_back(fr(F::Tdg, 3));
            append(out, cnot13);
            out.push_back(fr(F::T, 2));
            out.push_back(fr(F::T, 3));
            out.push_back(fr(F::H, 3));
            append(out, cnot12);
            out.push_back(fr(F::T, 1));
            out.push_back(fr(F::Tdg, 2));
            append(out, cnot12);
            return out;
        }
    }
    return {};
}

}  // namespace

PulseSchedule design(GateKind gate, const DesignParams &p) {
    if (!(p.h1 > 0) || !(p.g > 0)) {
        throw ConfigError("design needs h1 > 0 and g > 0");
    }
    PulseSchedule s;
    s.target = gate_name(gate);
    s.n_atoms = gate_atoms(gate);
    s.params.omega = p.omega;
    s.params.delta = p.delta;
    s.params.g = p.g;
    s.segments = segments_for(gate, p);
    s.validate();
    return s;
}

std::string schedule_to_json(const PulseSchedule &s) {
    json segs = json::array();
    for (const Segment &seg : s.segments) {
        json j;
        j["kind"] = seg.is_drive() ? "drive" : "frame";
        j["drive"] = seg.drive;
        j["omega"] = seg.Omega;
        j["phi"] = seg.phi;
        j["h"] = seg.h;
        j["duration"] = seg.duration;
        if (seg.is_drive()) {
            if (!seg.primitive.empty()) {
                j["primitive"] = seg.primitive;
                j["resonance"] = surd_label(primitive_resonance(parse_gate(seg.primitive)).surd);
            }
        } else {
            j["gate"] = frame_gate_name(seg.gate);
            j["qubit"] = seg.qubit;
        }
        segs.push_back(j);
    }
    json doc;
    doc["schema"] = kSchema;
    doc["target"] = s.target;
    doc["segments"] = segs;
    doc["params"] = {{"omega", s.params.omega}, {"delta", s.params.delta}, {"g", s.params.g}, {"n_atoms", s.n_atoms}};
    return doc.dump(2) + "\n";
}

PulseSchedule schedule_from_json(const std::string &text) {
    PulseSchedule s;
    try {
        json doc = json::parse(text);
        if (doc.at("schema").get<std::string>() != kSchema) {
            throw ConfigError("unsupported schedule schema '" + doc.at("schema").get<std::string>() + "'");
        }
        s.target = doc.at("target").get<std::string>();
        const json &params = doc.at("params");
        s.params.omega = params.at("omega").get<double>();
        s.params.delta = params.value("delta", s.params.omega);
        s.params.g = params.at("g").get<double>();
        s.n_atoms = params.value("n_atoms", 0);
        for (const json &j : doc.at("segments")) {
            Segment seg;
            std::string kind = j.value("kind", "drive");
            if (kind == "frame") {
                seg = Segment::frame(parse_frame_gate(j.at("gate").get<std::string>()), j.at("qubit").get<int>());
            } else if (kind == "drive") {
                seg.drive = j.at("drive").get<int>();
                seg.Omega = j.at("omega").get<double>();
                seg.phi = j.at("phi").get<double>();
                seg.h = j.at("h").get<double>();
                seg.duration = j.at("duration").get<double>();
                seg.primitive = j.value("primitive", "");
            } else {
                throw ConfigError("unknown segment kind '" + kind + "'");
            }
            s.segments.push_back(seg);
        }
        if (s.n_atoms == 0) {
            s.n_atoms = gate_atoms(parse_gate(s.target));
        }
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed schedule: ") + e.what());
    }
    s.validate();
    return s;
}

}  // namespace tcq
