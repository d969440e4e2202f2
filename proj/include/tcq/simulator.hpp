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
#include <utility>
#include <vector>

#include "tcq/gate_assembly.hpp"
#include "tcq/interaction_picture.hpp"
#include "tcq/pulse_design.hpp"

namespace tcq {

struct SimulationConfig {
    ModelParams params;  // base model for sweeps; a schedule carries its own snapshot
    FockTruncation tr{40, 8};
    double step = 1e-2;  // units of 1/g
    int photon_init = 0;
    int report_grid = 0;       // leakage samples per drive segment
    bool all_columns = false;  // propagate every basis column, not just the qubit subspace

    void validate() const;
};

/// Eigenbasis of g A_n, grouped into excitation manifolds
/// E = (#atoms in |+>) + photons, which A_n conserves.
class DressedFrame {
   public:
    DressedFrame(int n, const FockTruncation &tr, double g);

    int n_atoms() const { return n_; }
    int dim() const { return dim_; }
    int manifold_count() const { return static_cast<int>(members_.size()); }
    int manifold_start(int e) const { return start_[static_cast<size_t>(e)]; }
    int manifold_size(int e) const { return static_cast<int>(members_[static_cast<size_t>(e)].size()); }
    int manifold_of(int computational_index) const;
    const Eigen::VectorXd &energies() const { return energies_; }  // eigenvalues of A_n (no g)
    double g() const { return g_; }

    /// Dressed-basis block of sigma_+^{(j)} (x) 1 from manifold e to e + 1.
    const Mat &raise_block(int j, int e) const;

    Mat to_dressed(const Mat &psi) const;
    Mat from_dressed(const Mat &c) const;

   private:
    int n_;
    int dim_;
    double g_;
    FockTruncation tr_;
    std::vector<std::vector<int>> members_;  // computational indices per manifold
    std::vector<Mat> vectors_;               // eigenvectors per manifold
    std::vector<int> start_;
    Eigen::VectorXd energies_;
    std::vector<std::vector<Mat>> raise_;  // [atom][manifold]
};

struct Propagation {
    Mat columns;               // interaction-picture states, computational full basis
    std::vector<int> initial;  // computational index each column started from
    double unitarity_defect = 0;
    long steps = 0;
    double duration = 0;
    int manifolds_used = 0;
};

/// Fixed-step RK4 for i dc/dt = F(t) c starting at t = t0. The columns start
/// as the computational basis states listed in `initial`.
Propagation propagate(const DressedFrame &frame, const ModelParams &params, double t0, double duration,
                      double step, const std::vector<int> &initial, int report_grid = 0,
                      std::vector<std::pair<double, double>> *leakage_samples = nullptr);

/// Full-space propagator of all drive segments played back to back.
Propagation integrate(const SimulationConfig &cfg, const PulseSchedule &schedule);

struct ExtractedGate {
    Mat computational;  // <x', photon_init | U | x, photon_init>
    Mat phi;            // T^dagger (computational) T
    double leakage = 0;
    double subspace_nonunitarity = 0;
};

/// columns: dim x 2^n images of |x, photon_init>, x in computational order.
ExtractedGate extract_qubit_gate(const Mat &columns, int n, const FockTruncation &tr, int photon_init = 0);
ExtractedGate extract_qubit_gate(const Operator &u_full, int n, int photon_init = 0);

/// Off-diagonal phi-basis pair (i < j) with the largest |G_ij| + |G_ji|.
std::pair<int, int> dominant_pair(const Mat &g);

struct SegmentReport {
    int index = 0;
    std::string primitive;
    double duration = 0;
    long steps = 0;
    double fidelity = 0;  // against the primitive's ideal block
    double leakage = 0;
    double subspace_nonunitarity = 0;
    double unitarity_defect = 0;
    int manifolds_used = 0;
    std::pair<int, int> dominant{0, 0};  // largest off-diagonal excursion along the pulse, 0-based
    bool cached = false;
    Mat phi_block;
    std::vector<std::pair<double, double>> leakage_samples;
};

struct GateReport {
    std::string target;
    int n_atoms = 0;
    Mat achieved;                // phi basis
    Mat achieved_computational;  // T achieved T^dagger
    double fidelity = 0;
    double leakage = 0;
    double subspace_nonunitarity = 0;
    double unitarity_defect = 0;
    double gate_time = 0;
    std::pair<int, int> dominant{0, 0};  // the segment's for one pulse, else from `achieved`
    ModelParams params;
    FockTruncation tr;
    double step = 0;
    std::vector<SegmentReport> segments;
    double wall_seconds = 0;
};

GateReport simulate(const PulseSchedule &schedule, const SimulationConfig &cfg);

struct SweepRow {
    double h_over_g = 0;
    double fidelity = 0;
    double leakage = 0;
    double gate_time = 0;
    GateReport report;
};

/// One design + simulation per h value; runs concurrently, rows kept in input order.
std::vector<SweepRow> fidelity_sweep(GateKind gate, const std::vector<double> &h_list, const SimulationConfig &cfg);

/// True when fidelity strictly increases as h decreases.
bool fidelity_improves_as_h_decreases(const std::vector<SweepRow> &rows);

}  // namespace tcq
