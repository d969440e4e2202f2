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

#include "tcq/gate_assembly.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "tcq/errors.hpp"

namespace tcq {

namespace {

const cplx I1(0, 1);

Mat from_real(std::initializer_list<std::initializer_list<double>> rows) {
    Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    int i = 0;
    for (const auto &row : rows) {
        int j = 0;
        for (double v : row) m(i, j++) = v;
        i++;
    }
    return m;
}

int bit_of(int index, int qubit, int n) { return (index >> (n - qubit)) & 1; }

void check_qubit(int qubit, int n) {
    if (n < 1 || n > 8 || qubit < 1 || qubit > n) {
        throw ConfigError("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(n) + " qubits");
    }
}

}  // namespace

int QubitGate::n_qubits() const {
    int n = 0;
    while ((1 << n) < matrix.rows()) n++;
    return n;
}

Mat sigma1() { return from_real({{0, 1}, {1, 0}}); }
Mat sigma3() { return from_real({{1, 0}, {0, -1}}); }

Mat walsh_hadamard() {
    const double s = 1 / std::sqrt(2.0);
    return from_real({{s, s}, {s, -s}});
}

Mat t_gate() {
    Mat t = Mat::Identity(2, 2);
    t(1, 1) = std::polar(1.0, std::numbers::pi / 4);
    return t;
}

Mat swap_two() { return from_real({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}); }
Mat cnot_two() { return from_real({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}); }

Mat embed_single(const Mat &u, int qubit, int n) {
    check_qubit(qubit, n);
    Mat out = Mat::Identity(1, 1);
    for (int k = 1; k <= n; k++) {
        out = kron(out, k == qubit ? u : Mat::Identity(2, 2));
    }
    return out;
}

Mat controlled(int control, int target, const Mat &u, int n) {
    check_qubit(control, n);
    check_qubit(target, n);
    if (control == target) {
        throw ConfigError("control and target must differ");
    }
    int dim = 1 << n;
    Mat out = Mat::Zero(dim, dim);
    for (int b = 0; b < dim; b++) {
        if (bit_of(b, control, n) == 0) {
            out(b, b) = 1;
            continue;
        }
        int tb = bit_of(b, target, n);
        int mask = 1 << (n - target);
        for (int v = 0; v < 2; v++) {
            int row = v ? (b | mask) : (b & ~mask);
            out(row, b) += u(v, tb);
        }
    }
    return out;
}

Mat frame_gate_matrix(FrameGate g, int qubit, int n) {
    switch (g) {
        case FrameGate::H:
            return embed_single(walsh_hadamard(), qubit, n);
        case FrameGate::X:
            return embed_single(sigma1(), qubit, n);
        case FrameGate::T:
            return embed_single(t_gate(), qubit, n);
        case FrameGate::Tdg:
            return embed_single(t_gate().adjoint(), qubit, n);
        case FrameGate::SWAP: {
            check_qubit(qubit, n);
            check_qubit(qubit + 1, n);
            int dim = 1 << n;
            Mat out = Mat::Zero(dim, dim);
            for (int b = 0; b < dim; b++) {
                int x = bit_of(b, qubit, n), y = bit_of(b, qubit + 1, n);
                int swapped = b;
                if (x != y) swapped ^= (1 << (n - qubit)) | (1 << (n - qubit - 1));
                out(swapped, b) = 1;
            }
            return out;
        }
    }
    return {};
}

Mat rwa_pair_block(int dim, int i, int j, double c, double s, cplx eiphi) {
    if (i < 0 || j < 0 || i >= dim || j >= dim || i == j) {
        throw ConfigError("rwa_pair_block: bad index pair");
    }
    Mat u = Mat::Identity(dim, dim);
    u(i, i) = c;
    u(j, j) = c;
    u(i, j) = I1 * eiphi * s;
    u(j, i) = I1 * std::conj(eiphi) * s;
    return u;
}

QubitGate rwa_propagator_two(double t, double alpha, double phi1) {
    return {rwa_pair_block(4, 1, 2, std::cos(alpha * t), std::sin(alpha * t), std::polar(1.0, phi1)), "U(t)"};
}

std::pair<int, int> secular_pair(GateKind primitive) {
    switch (primitive) {
        case GateKind::CZ2:
            return {1, 2};
        case GateKind::A:
            return {4, 5};
        case GateKind::B:
            return {2, 6};
        case GateKind::C:
            return {5, 6};
        default:
            throw ConfigError("no secular pair for composite gate " + gate_name(primitive));
    }
}

QubitGate rwa_propagator_three(GateKind variant, double t, double rate, double phi1) {
    if (variant != GateKind::A && variant != GateKind::B && variant != GateKind::C) {
        throw ConfigError("three-atom variants are A, B and C");
    }
    auto [i, j] = secular_pair(variant);
    return {rwa_pair_block(8, i, j, std::cos(rate * t), std::sin(rate * t), std::polar(1.0, phi1)),
            "U_" + gate_name(variant) + "(t)"};
}

QubitGate basis_change_two() {
    const double s = 1 / std::sqrt(2.0);
    return {from_real({{0, 1, 0, 0}, {s, 0, s, 0}, {-s, 0, s, 0}, {0, 0, 0, 1}}), "T2"};
}

QubitGate basis_change_three() {
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
    return {from_real({{0, 0, 0, 0, 1, 0, 0, 0},
                       {1 / r2, 0, 1 / r6, 0, 0, 1 / r3, 0, 0},
                       {-1 / r2, 0, 1 / r6, 0, 0, 1 / r3, 0, 0},
                       {0, 0, 0, r2 / r3, 0, 0, 1 / r3, 0},
                       {0, 0, -r2 / r3, 0, 0, 1 / r3, 0, 0},
                       {0, 1 / r2, 0, -1 / r6, 0, 0, 1 / r3, 0},
                       {0, -1 / r2, 0, -1 / r6, 0, 0, 1 / r3, 0},
                       {0, 0, 0, 0, 0, 0, 0, 1}}),
            "T3"};
}

CnotTwoSteps assemble_cnot_two_steps() {
    CnotTwoSteps s;
    // cos(alpha t0) = 0, sin(alpha t0) = 1, e^{i phi1} = i.
    s.u_t0 = {rwa_pair_block(4, 1, 2, 0, 1, I1), "U(t0)"};
    s.p_u = {swap_two() * s.u_t0.matrix, "P U(t0)"};
    Mat x2 = embed_single(sigma1(), 2, 2);
    s.c_sigma_z = {x2 * s.p_u.matrix * x2, "C_sigma_z"};
    Mat w2 = embed_single(walsh_hadamard(), 2, 2);
    s.c_not = {w2 * s.c_sigma_z.matrix * w2, "C_NOT"};
    return s;
}

QubitGate assemble_cnot_two() { return assemble_cnot_two_steps().c_not; }

QubitGate sigma3_sigma3_branch() { return {rwa_pair_block(4, 1, 2, -1, 0, 1), "sigma3 x sigma3"}; }

ThreeSteps assemble_three_steps(GateKind variant) {
    ThreeSteps s;
    auto half_pulse = [](GateKind v) {
        auto [i, j] = secular_pair(v);
        return rwa_pair_block(8, i, j, -1, 0, 1);
    };
    switch (variant) {
        case GateKind::A: {
            Mat x = embed_single(sigma1(), 2, 3), w = embed_single(walsh_hadamard(), 2, 3);
            s.u_pulse = {half_pulse(GateKind::A), "U_A(t_A)"};
            s.u_tilde = {x * s.u_pulse.matrix * x, "U~_A(t_A)"};
            s.result = {w * s.u_tilde.matrix * w, "C_NOT x 1"};
            break;
        }
        case GateKind::B: {
            Mat x = embed_single(sigma1(), 3, 3), w = embed_single(walsh_hadamard(), 3, 3);
            s.u_pulse = {half_pulse(GateKind::B), "U_B(t_B)"};
            s.u_tilde = {x * s.u_pulse.matrix * x, "U~_B(t_B)"};
            s.result = {w * s.u_tilde.matrix * w, "1 x C_NOT"};
            break;
        }
        case GateKind::C: {
            Mat w = embed_single(walsh_hadamard(), 3, 3);
            Mat u_tilde_a = assemble_three_steps(GateKind::A).u_tilde.matrix;
            s.u_pulse = {half_pulse(GateKind::C), "U_C(t_C)"};
            s.u_tilde = {u_tilde_a * s.u_pulse.matrix, "U~_C(t_C)"};
            s.result = {w * s.u_tilde.matrix * w, "C~_NOT"};
            break;
        }
        default:
            throw ConfigError("three-atom variants are A, B and C");
    }
    return s;
}

QubitGate assemble_three(GateKind variant) { return assemble_three_steps(variant).result; }

QubitGate cnot_c_from_four() {
    Mat a = assemble_three(GateKind::A).matrix;
    Mat b = assemble_three(GateKind::B).matrix;
    return {b * a * b * a, "C~_NOT (four CNOTs)"};
}

QubitGate assemble_ccnot() {
    const Mat v = from_real({{0.5, 0.5}, {0.5, 0.5}}) + I1 * from_real({{0.5, -0.5}, {-0.5, 0.5}});
    const Mat vd = v.adjoint();
    const Mat x = sigma1();
    // Time order left to right: C_x V_z, C_y V_z, CNOT_xy, C_y V^dagger_z, CNOT_xy.
    std::vector<Mat> circuit = {controlled(1, 3, v, 3), controlled(2, 3, v, 3), controlled(1, 2, x, 3),
                                controlled(2, 3, vd, 3), controlled(1, 2, x, 3)};
    Mat u = Mat::Identity(8, 8);
    for (const Mat &g : circuit) u = g * u;
    return {u, "CC_NOT"};
}

Mat ccnot_matrix() {
    Mat m = Mat::Identity(8, 8);
    m.block(6, 6, 2, 2) = sigma1();
    return m;
}

Mat printed_fourth_root_v() {
    Mat v(2, 2);
    v << cplx(3, 1) / 4.0, cplx(1, -1) / 4.0, cplx(1, -1) / 4.0, cplx(3, 1) / 4.0;
    return v;
}

Mat fourth_root_v() {
    cplx w = std::polar(1.0, std::numbers::pi / 4);
    Mat v(2, 2);
    v << (1.0 + w) / 2.0, (1.0 - w) / 2.0, (1.0 - w) / 2.0, (1.0 + w) / 2.0;
    return v;
}

QubitGate cccnot_circuit(const Mat &v, CccnotOrder order) {
    const Mat vd = v.adjoint();
    const Mat x = sigma1();
    std::vector<Mat> circuit = {
        controlled(1, 4, v, 4),  controlled(1, 2, x, 4), controlled(2, 4, vd, 4), controlled(1, 2, x, 4),
        controlled(2, 4, v, 4),  controlled(2, 3, x, 4), controlled(3, 4, vd, 4), controlled(2, 3, x, 4),
        controlled(3, 4, v, 4),  controlled(1, 3, x, 4), controlled(3, 4, vd, 4), controlled(1, 3, x, 4),
        controlled(3, 4, v, 4),
    };
    if (order == CccnotOrder::Standard) {
        std::swap(circuit[7], circuit[9]);
    }
    Mat u = Mat::Identity(16, 16);
    for (const Mat &g : circuit) u = g * u;
    return {u, order == CccnotOrder::Standard ? "CCC_NOT" : "CCC_NOT (drawn order)"};
}

QubitGate cccnot_identity_check() { return cccnot_circuit(fourth_root_v(), CccnotOrder::Standard); }

Mat cccnot_matrix() {
    Mat m = Mat::Identity(16, 16);
    m.block(14, 14, 2, 2) = sigma1();
    return m;
}

QubitGate appendix_single_qubit(double theta, double h, double t) {
    double omega = std::sqrt(theta * theta / 4 + h * h);
    double c = std::cos(t * omega);
    double sinc = omega == 0 ? t : std::sin(t * omega) / omega;
    Mat u(2, 2);
    u(0, 0) = cplx(c, -theta / 2 * sinc);
    u(0, 1) = cplx(0, -h * sinc);
    u(1, 0) = u(0, 1);
    u(1, 1) = cplx(c, theta / 2 * sinc);
    return {u, "exp(-it[[theta/2,h],[h,-theta/2]])"};
}

QubitGate appendix_walsh_hadamard(double delta, double h) {
    if (!(delta > 0) || !(h > 0)) {
        throw ConfigError("appendix_walsh_hadamard needs delta > 0 and h > 0");
    }
    const double pi = std::numbers::pi;
    auto v0 = [&](double tau) {
        Mat m = Mat::Identity(2, 2);
        m(1, 1) = std::polar(1.0, -delta * tau);
        return m;
    };
    auto v = [&](double tau, double phi) {
        Mat frame = Mat::Identity(2, 2);
        frame(1, 1) = std::polar(1.0, -(delta * tau + phi));
        Mat rabi(2, 2);
        rabi << std::cos(h * tau), cplx(0, -std::sin(h * tau)), cplx(0, -std::sin(h * tau)), std::cos(h * tau);
        return Mat(frame * rabi);
    };
    double t1 = 3 * pi / (2 * delta);
    double pulse = pi / (4 * h);
    double phi = -delta * pulse;
    return {v0(t1) * v(pulse, phi) * v0(t1), "W"};
}

QubitGate target_gate(GateKind g) {
    switch (g) {
        case GateKind::CZ2:
            return assemble_cnot_two_steps().u_t0;
        case GateKind::CNOT2:
            return {cnot_two(), "C_NOT"};
        case GateKind::A:
        case GateKind::B:
        case GateKind::C:
            return assemble_three_steps(g).u_pulse;
        case GateKind::CNOT3A:
            return assemble_three(GateKind::A);
        case GateKind::CNOT3B:
            return assemble_three(GateKind::B);
        case GateKind::CNOT3C:
            return assemble_three(GateKind::C);
        case GateKind::CCNOT:
            return {ccnot_matrix(), "CC_NOT"};
    }
    return {};
}

double phase_invariant_fidelity(const Mat &target, const Mat &achieved) {
    if (target.rows() != achieved.rows() || target.cols() != achieved.cols()) {
        throw ConfigError("fidelity: shape mismatch");
    }
    return std::abs((target.adjoint() * achieved).trace()) / static_cast<double>(target.rows());
}

}  // namespace tcq
