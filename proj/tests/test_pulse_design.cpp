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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tcq/errors.hpp"
#include "tcq/gate_assembly.hpp"
#include "tcq/pulse_design.hpp"

using namespace tcq;

namespace {

const GateKind kAll[] = {GateKind::CZ2,    GateKind::CNOT2,  GateKind::A,      GateKind::B,    GateKind::C,
                         GateKind::CNOT3A, GateKind::CNOT3B, GateKind::CNOT3C, GateKind::CCNOT};

// Replays a schedule with every drive segment replaced by its ideal block.
Mat ideal_product(const PulseSchedule &s) {
    const int q = 1 << s.n_atoms;
    Mat g = Mat::Identity(q, q);
    for (const Segment &seg : s.segments) {
        Mat step = seg.is_drive() ? target_gate(parse_gate(seg.primitive)).matrix
                                  : frame_gate_matrix(seg.gate, seg.qubit, s.n_atoms);
        g = step * g;
    }
    return g;
}

}  // namespace

TEST_CASE("gate names round-trip") {
    for (GateKind g : kAll) CHECK(parse_gate(gate_name(g)) == g);
    CHECK_THROWS_AS(parse_gate("CNOT4"), ConfigError);
    CHECK_THROWS_AS(parse_gate(""), ConfigError);
}

TEST_CASE("CZ2 design values") {
    PulseSchedule s = design(GateKind::CZ2, DesignParams{});
    REQUIRE(s.segments.size() == 1);
    const Segment &seg = s.segments[0];
    CHECK(seg.Omega == doctest::Approx(std::sqrt(2.0) + std::sqrt(6.0) - 1));
    CHECK(seg.Omega == doctest::Approx(2.8637).epsilon(1e-4));
    double alpha = std::sqrt(2.0) * (std::sqrt(3.0) - 1) * 0.01 / 24;
    CHECK(seg.duration == doctest::Approx(std::numbers::pi / (2 * alpha)));
    CHECK(seg.phi == doctest::Approx(std::numbers::pi / 2));
    CHECK(s.n_atoms == 2);
}

TEST_CASE("variant A uses kappa = sqrt(10 + sqrt 73)") {
    CHECK(primitive_resonance(GateKind::A).kappa() == doctest::Approx(4.30627).epsilon(1e-5));
    PulseSchedule s = design(GateKind::A, DesignParams{});
    CHECK(s.segments[0].Omega == doctest::Approx(std::sqrt(10 + std::sqrt(73.0)) - 1));
}

TEST_CASE("gate time scales as 1/h") {
    for (GateKind g : {GateKind::CZ2, GateKind::A, GateKind::B, GateKind::C}) {
        CHECK(gate_time(g, 0.01) == doctest::Approx(10 * gate_time(g, 0.1)));
        CHECK(rabi_rate(g, 0.02) == doctest::Approx(2 * rabi_rate(g, 0.01)));
    }
    CHECK_THROWS_AS(gate_time(GateKind::CZ2, 0.0), ConfigError);
    CHECK_THROWS_AS(rabi_rate(GateKind::CNOT2, 0.01), ConfigError);
}

TEST_CASE("every design composes to its target with ideal blocks") {
    for (GateKind g : kAll) {
        PulseSchedule s = design(g, DesignParams{});
        CHECK_NOTHROW(s.validate());
        Mat target = target_gate(g).matrix;
        CHECK_MESSAGE(phase_invariant_fidelity(target, ideal_product(s)) == doctest::Approx(1.0).epsilon(1e-12),
                      gate_name(g));
    }
}

TEST_CASE("design follows the drive amplitude and frequencies") {
    DesignParams p;
    p.h1 = 0.05;
    p.g = 2;
    p.omega = 1.5;
    p.delta = 1.5;
    PulseSchedule s = design(GateKind::CNOT3C, p);
    for (const Segment &seg : s.segments) {
        if (!seg.is_drive()) continue;
        CHECK(seg.h == 0.05);
        ResonanceCondition r = primitive_resonance(parse_gate(seg.primitive));
        CHECK(seg.Omega + 1.5 == doctest::Approx(r.kappa() * 2));
    }
    CHECK(s.drive_time() > 0);
}

TEST_CASE("schedule validation") {
    PulseSchedule s = design(GateKind::B, DesignParams{});
    s.segments[0].Omega += 1e-3;
    CHECK_THROWS_AS(s.validate(), ResonanceError);
    PulseSchedule t = design(GateKind::B, DesignParams{});
    t.segments[0].duration = -1;
    CHECK_THROWS_AS(t.validate(), ConfigError);
    PulseSchedule u = design(GateKind::CNOT3A, DesignParams{});
    u.segments[0].qubit = 4;
    CHECK_THROWS_AS(u.validate(), ConfigError);
}

TEST_CASE("schedule JSON round-trip") {
    for (GateKind g : kAll) {
        PulseSchedule s = design(g, DesignParams{});
        std::string text = schedule_to_json(s);
        PulseSchedule back = schedule_from_json(text);
        CHECK(schedule_to_json(back) == text);
        REQUIRE(back.segments.size() == s.segments.size());
        for (size_t i = 0; i < s.segments.size(); i++) {
            CHECK(back.segments[i].Omega == s.segments[i].Omega);
            CHECK(back.segments[i].duration == s.segments[i].duration);
            CHECK(back.segments[i].kind == s.segments[i].kind);
        }
    }
}

TEST_CASE("corrupt schedules are config errors") {
    CHECK_THROWS_AS(schedule_from_json("{not json"), ConfigError);
    CHECK_THROWS_AS(schedule_from_json("{\"schema\":\"tcq/1\"}"), ConfigError);
    std::string text = schedule_to_json(design(GateKind::CZ2, DesignParams{}));
    std::string wrong = text;
    wrong.replace(wrong.find("tcq/1"), 5, "tcq/9");
    CHECK_THROWS_AS(schedule_from_json(wrong), ConfigError);
}
