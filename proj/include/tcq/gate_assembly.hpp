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

#include "tcq/operator_algebra.hpp"
#include "tcq/pulse_design.hpp"

namespace tcq {

struct QubitGate {
    Mat matrix;
    std::string label;

    int n_qubits() const;
};

// Qubit 1 is the leftmost tensor factor; basis index bit 1 of a qubit means |->.
Mat sigma1();
Mat sigma3();
Mat walsh_hadamard();
Mat t_gate();
Mat swap_two();
Mat cnot_two();

/// u acting on `qubit` (1-based) of an n-qubit register.
Mat embed_single(const Mat &u, int qubit, int n);
/// u on `target` when `control` is in basis state 1.
Mat controlled(int control, int target, const Mat &u, int n);
/// Matrix of a frame gate; SWAP exchanges qubit and qubit + 1.
Mat frame_gate_matrix(FrameGate g, int qubit, int n);

/// Identity except for the 2x2 block on (i, j):
/// [[c, i e^{i phi} s], [i e^{-i phi} s, c]], with e^{i phi} passed directly.
Mat rwa_pair_block(int dim, int i, int j, double c, double s, cplx eiphi);

/// exp(-i K t) for the CZ2 secular generator, phi basis.
QubitGate rwa_propagator_two(double t, double alpha, double phi1);
/// Same for variants A, B, C; the driven pair is (4,5), (2,6) or (5,6) (0-based).
QubitGate rwa_propagator_three(GateKind variant, double t, double rate, double phi1);
/// 0-based phi-basis pair coupled by a primitive.
std::pair<int, int> secular_pair(GateKind primitive);

QubitGate basis_change_two();
QubitGate basis_change_three();

struct CnotTwoSteps {
    QubitGate u_t0;       // quarter pulse, e^{i phi} = i
    QubitGate p_u;        // P U(t0)
    QubitGate c_sigma_z;  // (1 x sigma1) P U(t0) (1 x sigma1)
    QubitGate c_not;      // (1 x W) C_sigma_z (1 x W)
};

CnotTwoSteps assemble_cnot_two_steps();
QubitGate assemble_cnot_two();
/// Half pulse on the two-atom pair: U = sigma3 x sigma3.
QubitGate sigma3_sigma3_branch();

struct ThreeSteps {
    QubitGate u_pulse;  // U_X at the half pulse
    QubitGate u_tilde;  // after sigma1 conjugation (and the A product for C)
    QubitGate result;   // after Walsh-Hadamard conjugation
};

ThreeSteps assemble_three_steps(GateKind variant);
QubitGate assemble_three(GateKind variant);
/// C~_NOT from four CNOTs of types A and B (A, B, A, B in time order).
QubitGate cnot_c_from_four();

/// Five-gate controlled-V circuit with V^2 = sigma1.
QubitGate assemble_ccnot();
Mat ccnot_matrix();

/// The fourth root of sigma1 as printed, and the unitary one.
Mat printed_fourth_root_v();
Mat fourth_root_v();

enum class CccnotOrder { Drawn, Standard };
QubitGate cccnot_circuit(const Mat &v, CccnotOrder order);
/// Standard order with the unitary fourth root.
QubitGate cccnot_identity_check();
Mat cccnot_matrix();

/// exp(-i t [[theta/2, h], [h, -theta/2]]).
QubitGate appendix_single_qubit(double theta, double h, double t);
/// V0(t3,t2) V(t2,t1) V0(t1,0) with the phase chosen to cancel the frame factor.
QubitGate appendix_walsh_hadamard(double delta = 1, double h = 0.01);

/// Ideal phi-basis gate each named target should produce.
QubitGate target_gate(GateKind g);

/// |Tr(target^dagger achieved)| / dim.
double phase_invariant_fidelity(const Mat &target, const Mat &achieved);

}  // namespace tcq
