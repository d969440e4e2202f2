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
#include <filesystem>

#include "doctest.h"
#include "tcq/errors.hpp"
#include "tcq/gate_assembly.hpp"
#include "tcq/interaction_picture.hpp"
#include "tcq/pulse_design.hpp"
#include "tcq/report_io.hpp"
#include "tcq/simulator.hpp"

using namespace tcq;

namespace {

ModelParams driven(double h, double Omega, double phi = 0.0) {
    ModelParams p;
    p.drives.push_back({h, Omega, phi});
    return p;
}

std::vector<int> ground_columns(int n, const FockTruncation &tr) {
    std::vector<int> c;
    for (int x = 0; x < (1 << n); x++) c.push_back(x * tr.dim());
    return c;
}

// Dense fixed-step RK4 on i dpsi/dt = H(t) psi in the lab frame.
Mat lab_frame_evolution(const Hamiltonian &h, const Mat &psi0, double t_end, int steps) {
    Mat psi = psi0;
    double dt = t_end / steps;
    const cplx mi(0, -1);
    for (int s = 0; s < steps; s++) {
        double t = s * dt;
        Mat h0 = h.at(t).data(), h1 = h.at(t + dt / 2).data(), h2 = h.at(t + dt).data();
        Mat k1 = mi * (h0 * psi);
        Mat k2 = mi * (h1 * (psi + dt / 2 * k1));
        Mat k3 = mi * (h1 * (psi + dt / 2 * k2));
        Mat k4 = mi * (h2 * (psi + dt * k3));
        psi += dt / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return psi;
}

}  // namespace

TEST_CASE("dressed frame partitions the space by excitation number") {
    FockTruncation tr{6, 2};
    DressedFrame f(2, tr, 1.0);
    CHECK(f.dim() == 28);
    CHECK(f.manifold_count() == 9);
    CHECK(f.manifold_size(0) == 1);
    CHECK(f.manifold_size(1) == 3);
    CHECK(f.manifold_size(3) == 4);
    // Both atoms excited, no photons.
    CHECK(f.manifold_of(0) == 2);
    CHECK(f.manifold_of(3 * tr.dim()) == 0);
    Mat psi = Mat::Random(f.dim(), 3);
    CHECK(max_abs_deviation(f.from_dressed(f.to_dressed(psi)), psi) < 1e-14);
    CHECK_THROWS_AS(DressedFrame(4, tr, 1.0), ConfigError);
}

TEST_CASE("zero drive gives the identity") {
    FockTruncation tr{8, 2};
    DressedFrame f(2, tr, 1.0);
    std::vector<int> cols = ground_columns(2, tr);
    Propagation p = propagate(f, ModelParams{}, 0.0, 25.0, 0.05, cols);
    Mat expect = Mat::Zero(f.dim(), 4);
    for (int c = 0; c < 4; c++) expect(cols[static_cast<size_t>(c)], c) = 1;
    CHECK(max_abs_deviation(p.columns, expect) == 0.0);
    ExtractedGate g = extract_qubit_gate(p.columns, 2, tr, 0);
    CHECK(max_abs_deviation(g.phi, Mat::Identity(4, 4)) < 1e-15);
    CHECK(g.leakage == 0.0);
}

TEST_CASE("extracting from the full identity") {
    FockTruncation tr{5, 1};
    Operator id(Mat::Identity(8 * tr.dim(), 8 * tr.dim()), 8, tr);
    ExtractedGate g = extract_qubit_gate(id, 3);
    CHECK(max_abs_deviation(g.computational, Mat::Identity(8, 8)) == 0.0);
    CHECK(g.leakage == 0.0);
    CHECK(g.subspace_nonunitarity == 0.0);
    CHECK_THROWS_AS(extract_qubit_gate(Mat::Identity(4, 4), 2, tr, 0), ConfigError);
}

TEST_CASE("stability guard and step validation") {
    FockTruncation tr{6, 2};
    DressedFrame f(1, tr, 1.0);
    CHECK_THROWS_AS(propagate(f, driven(0.5, 1.0), 0, 1, 0.5, {0}), IntegrationError);
    CHECK_THROWS_AS(propagate(f, driven(0.5, 1.0), 0, 1, 0.0, {0}), ConfigError);
    SimulationConfig cfg;
    cfg.step = -1;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("fourth-order convergence under step halving") {
    FockTruncation tr{10, 3};
    DressedFrame f(2, tr, 1.0);
    ModelParams p = driven(0.3, 1.7, 0.2);
    std::vector<int> cols = ground_columns(2, tr);
    Mat u1 = propagate(f, p, 0, 20, 0.05, cols).columns;
    Mat u2 = propagate(f, p, 0, 20, 0.025, cols).columns;
    Mat u3 = propagate(f, p, 0, 20, 0.0125, cols).columns;
    double ratio = (u1 - u2).norm() / (u2 - u3).norm();
    MESSAGE("Richardson ratio " << ratio);
    CHECK(ratio > 14);
    CHECK(ratio < 18);
}

TEST_CASE("dressed-manifold integration equals a dense RK4 on F(t)") {
    // Same RK4 on the dense generator e^{itgA} V~(t) e^{-itgA}; the two must
    // agree to rounding, including on the truncated top levels.
    FockTruncation tr{6, 2};
    const int n = 1;
    ModelParams p = driven(0.3, 0.1, 0.2);
    p.g = 0.05;
    p.omega = p.delta = 0.1;
    DressedFrame f(n, tr, p.g);
    Mat a = coupling_operator(n, tr).data();
    Mat c = Mat::Zero(f.dim(), 2);
    c(0, 0) = 1;
    c(tr.dim(), 1) = 1;
    const double t_end = 4.8, dt = 0.15;
    const cplx mi(0, -1);
    auto gen = [&](double t) {
        Mat u = oracle_expm(a, cplx(0, -t * p.g));
        return Mat(u.adjoint() * drive_frame(n, p, tr, t).data() * u);
    };
    for (int s = 0; s < 32; s++) {
        double t = s * dt;
        Mat f0 = gen(t), f1 = gen(t + dt / 2), f2 = gen(t + dt);
        Mat k1 = mi * (f0 * c), k2 = mi * (f1 * (c + dt / 2 * k1)), k3 = mi * (f1 * (c + dt / 2 * k2));
        Mat k4 = mi * (f2 * (c + dt * k3));
        c += dt / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    Mat ours = propagate(f, p, 0, t_end, dt, {0, tr.dim()}).columns;
    CHECK(max_abs_deviation(ours, c) < 1e-13);
}

TEST_CASE("propagator is unitary on all columns") {
    FockTruncation tr{8, 2};
    DressedFrame f(3, tr, 1.0);
    std::vector<int> all;
    for (int i = 0; i < f.dim(); i++) all.push_back(i);
    ModelParams p;
    p.drives = {{0.05, 2.0, 0.1}, {0.03, 1.0, -0.4}, {0.02, 3.1, 1.0}};
    Propagation r = propagate(f, p, 0, 40, 0.02, all);
    CHECK(r.unitarity_defect < 1e-8);
}

TEST_CASE("interaction frame agrees with the lab frame") {
    FockTruncation tr{10, 3};
    const int n = 2;
    ModelParams p = driven(0.3, 1.4, 0.5);
    const double t = 2.0;
    DressedFrame f(n, tr, p.g);
    std::vector<int> cols = ground_columns(n, tr);
    Mat psi0 = Mat::Zero(f.dim(), 4);
    for (int c = 0; c < 4; c++) psi0(cols[static_cast<size_t>(c)], c) = 1;

    Mat lab = lab_frame_evolution(build_hamiltonian(n, p, tr), psi0, t, 20000);
    // psi_I = e^{itgA} e^{it omega (N + S_3)} psi_lab
    Operator free = kron(collective(Pauli::Z, n), photon_identity(tr)) +
                    kron(Operator(Mat::Identity(4, 4), 4, std::nullopt), number_operator(tr));
    Mat to_frame = oracle_expm(coupling_operator(n, tr).data(), cplx(0, t * p.g)) *
                   oracle_expm(free.data(), cplx(0, t * p.omega));
    Mat ours = propagate(f, p, 0, t, 1e-3, cols).columns;
    CHECK(max_abs_deviation(to_frame * lab, ours) < 1e-6);
}

TEST_CASE("a drive-off interval evolves by the static exponential") {
    FockTruncation tr{10, 3};
    const int n = 2;
    DressedFrame f(n, tr, 1.0);
    std::vector<int> cols = ground_columns(n, tr);
    ModelParams on = driven(0.2, 2.0, 0.0);
    Propagation first = propagate(f, on, 0, 6.0, 0.01, cols);

    // With F = 0 the interaction-frame state does not move.
    PulseSchedule s;
    s.n_atoms = n;
    s.target = "CZ2";
    Segment off;
    off.drive = 1;
    off.h = 0;
    off.Omega = primitive_resonance(GateKind::CZ2).drive_frequency(1, 1);
    off.duration = 4.0;
    off.primitive = "CZ2";
    s.segments = {off};
    SimulationConfig cfg;
    cfg.tr = tr;
    cfg.step = 0.01;
    Propagation idle = integrate(cfg, s);
    Mat expect = Mat::Zero(f.dim(), 4);
    for (int c = 0; c < 4; c++) expect(cols[static_cast<size_t>(c)], c) = 1;
    CHECK(max_abs_deviation(idle.columns, expect) == 0.0);

    // Lab frame: U_lab(t2) = exp(-i H_static (t2 - t1)) U_lab(t1), and
    // U_lab(t) = e^{-it omega(N+S3)} e^{-itgA} U_I(t).
    Operator free = kron(collective(Pauli::Z, n), photon_identity(tr)) +
                    kron(Operator(Mat::Identity(4, 4), 4, std::nullopt), number_operator(tr));
    Mat a = coupling_operator(n, tr).data();
    auto lab = [&](double t, const Mat &ui) { return Mat(oracle_expm(free.data(), cplx(0, -t)) * oracle_expm(a, cplx(0, -t)) * ui); };
    Mat lab1 = lab(6.0, first.columns);
    Mat lab2 = lab(10.0, first.columns);
    Mat stat = oracle_expm(build_hamiltonian(n, on, tr).static_part().data(), cplx(0, -4.0));
    CHECK(max_abs_deviation(stat * lab1, lab2) < 1e-8);
}

TEST_CASE("integrate rejects frame gates") {
    PulseSchedule s = design(GateKind::CNOT2, DesignParams{});
    CHECK_THROWS_AS(integrate(SimulationConfig{}, s), ConfigError);
}

TEST_CASE("dominant transition follows the resonance") {
    // Short h = 0.1 pulses: enough for the secular pair to dominate.
    SimulationConfig cfg;
    cfg.tr = {12, 4};
    for (GateKind g : {GateKind::CZ2, GateKind::B}) {
        PulseSchedule s = design(g, DesignParams{0.1});
        GateReport r = simulate(s, cfg);
        CHECK_MESSAGE(r.dominant == secular_pair(g), gate_name(g));
        CHECK(r.unitarity_defect < 1e-8);
        CHECK(r.fidelity <= 1 + 1e-12);
        CHECK(r.leakage >= 0);
    }
}

TEST_CASE("identical segments are integrated once") {
    SimulationConfig cfg;
    cfg.tr = {10, 3};
    PulseSchedule s = design(GateKind::CZ2, DesignParams{0.1});
    s.target = "CZ2";
    s.segments.push_back(s.segments[0]);
    GateReport r = simulate(s, cfg);
    REQUIRE(r.segments.size() == 2);
    CHECK_FALSE(r.segments[0].cached);
    CHECK(r.segments[1].cached);
    CHECK(max_abs_deviation(r.achieved, r.segments[0].phi_block * r.segments[0].phi_block) < 1e-14);
}

TEST_CASE("sweep keeps input order and reports monotonicity") {
    SimulationConfig cfg;
    cfg.tr = {12, 4};
    std::vector<SweepRow> rows = fidelity_sweep(GateKind::CZ2, {0.2, 0.1}, cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].h_over_g == 0.2);
    CHECK(rows[1].gate_time == doctest::Approx(2 * rows[0].gate_time));
    CHECK_THROWS_AS(fidelity_sweep(GateKind::CZ2, {}, cfg), ConfigError);

    std::vector<SweepRow> fake(3);
    fake[0].h_over_g = 0.1, fake[0].fidelity = 0.5;
    fake[1].h_over_g = 0.01, fake[1].fidelity = 0.9;
    fake[2].h_over_g = 0.03, fake[2].fidelity = 0.7;
    CHECK(fidelity_improves_as_h_decreases(fake));
    fake[2].fidelity = 0.95;
    CHECK_FALSE(fidelity_improves_as_h_decreases(fake));
}

TEST_CASE("sweep CSV round-trip and deterministic JSON") {
    std::vector<SweepRow> rows(2);
    rows[0] = {0.1, 0.123456789012345678, 1e-3, 364.1, {}};
    rows[1] = {0.03, 0.9, 2.5e-7, 1213.8, {}};
    auto path = (std::filesystem::temp_directory_path() / "tcq_sweep_roundtrip.csv").string();
    write_sweep_csv(path, rows);
    std::vector<SweepRow> back = read_sweep_csv(path);
    REQUIRE(back.size() == 2);
    for (size_t i = 0; i < 2; i++) {
        CHECK(back[i].h_over_g == rows[i].h_over_g);
        CHECK(back[i].fidelity == rows[i].fidelity);
        CHECK(back[i].leakage == rows[i].leakage);
        CHECK(back[i].gate_time == rows[i].gate_time);
    }
    write_text(path, "h,f\n1,2\n");
    CHECK_THROWS_AS(read_sweep_csv(path), ConfigError);
    write_text(path, "h_over_g,fidelity,leakage,gate_time\n1,2,x,4\n");
    CHECK_THROWS_AS(read_sweep_csv(path), ConfigError);
    std::filesystem::remove(path);

    SimulationConfig cfg;
    cfg.tr = {8, 2};
    PulseSchedule s = design(GateKind::CZ2, DesignParams{0.2});
    std::string a = report_to_json(simulate(s, cfg));
    std::string b = report_to_json(simulate(s, cfg));
    CHECK(a == b);
    CHECK(a.find("\"schema\": \"tcq/1\"") != std::string::npos);
    CHECK(a.find("wall") == std::string::npos);
}
