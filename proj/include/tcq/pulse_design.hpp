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

#include "tcq/interaction_picture.hpp"
#include "tcq/resonance.hpp"

namespace tcq {

/// Named targets. CZ2, A, B and C are single drive pulses; the others are
/// compositions of those with frame gates.
enum class GateKind { CZ2, CNOT2, A, B, C, CNOT3A, CNOT3B, CNOT3C, CCNOT };

GateKind parse_gate(const std::string &name);
std::string gate_name(GateKind g);
int gate_atoms(GateKind g);
bool is_primitive(GateKind g);

enum class PulseFlavor { Quarter, Half };

/// Rabi rate of the surviving secular pair; linear in h1.
double rabi_rate(GateKind primitive, double h1);
PulseFlavor primitive_flavor(GateKind primitive);
/// Smallest positive duration: pi/(2 rate) for a quarter pulse, pi/rate for a half pulse.
double gate_time(GateKind primitive, double h1, PulseFlavor flavor);
double gate_time(GateKind primitive, double h1);
double phase_rule(GateKind primitive);
ResonanceCondition primitive_resonance(GateKind primitive);

/// Ideal single- and two-qubit operations applied between drive pulses.
enum class FrameGate { H, X, T, Tdg, SWAP };

std::string frame_gate_name(FrameGate g);
FrameGate parse_frame_gate(const std::string &name);

struct Segment {
    enum class Kind { Drive, Frame };
    Kind kind = Kind::Drive;

    // Drive segments.
    int drive = 1;
    double Omega = 0;
    double phi = 0;
    double h = 0;
    double duration = 0;
    std::string primitive;  // CZ2, A, B or C

    // Frame segments. SWAP exchanges `qubit` and `qubit + 1`.
    FrameGate gate = FrameGate::H;
    int qubit = 1;

    static Segment frame(FrameGate g, int qubit);
    bool is_drive() const { return kind == Kind::Drive; }
};

struct PulseSchedule {
    std::string target;
    int n_atoms = 0;
    std::vector<Segment> segments;
    ModelParams params;  // omega, delta, g; per-segment drives live in the segments

    double drive_time() const;
    /// Positive durations, qubit indices in range, each drive on its resonance.
    void validate() const;
    /// Model parameters with drive `seg.drive` set from a drive segment.
    ModelParams segment_params(const Segment &seg) const;
};

struct DesignParams {
    double h1 = 0.01;
    double g = 1;
    double omega = 1;
    double delta = 1;
};

PulseSchedule design(GateKind gate, const DesignParams &p);

std::string schedule_to_json(const PulseSchedule &s);
PulseSchedule schedule_from_json(const std::string &text);

}  // namespace tcq
