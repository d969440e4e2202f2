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

#include <vector>

#include "tcq/operator_algebra.hpp"
#include "tcq/resonance.hpp"
#include "tcq/term_sum.hpp"

namespace tcq {

/// Classical drive on one atom: h (e^{i(Omega t + phi)} sigma_+ + h.c.).
struct Drive {
    double h = 0;
    double Omega = 0;
    double phi = 0;
};

struct ModelParams {
    double omega = 1;  // cavity frequency
    double delta = 1;  // atomic splitting
    double g = 1;      // atom-cavity coupling
    std::vector<Drive> drives;

    /// Checks sizes and signs for an n-atom register.
    void validate(int n) const;
    /// omega == delta to 1e-12 relative; the interaction frame assumes it.
    void require_resonant_cavity() const;
    /// Drive at atom j (1-based); a missing entry is an undriven atom.
    Drive drive(int j) const;
    FrequencyFrame frame() const;
};

/// H(t) = omega N + delta S_3 + g A_n + V(t) on the truncated space.
class Hamiltonian {
   public:
    Hamiltonian(int n, ModelParams params, FockTruncation tr);

    Operator at(double t) const;
    const Operator &static_part() const { return static_part_; }

   private:
    int n_;
    ModelParams params_;
    FockTruncation tr_;
    Operator static_part_;
    std::vector<Operator> raise_;  // sigma_+^{(j)} (x) 1
};

Hamiltonian build_hamiltonian(int n, const ModelParams &params, const FockTruncation &tr);

/// Drive in the frame rotating with omega (S_3 + N): sum_j p_j sigma_+^{(j)} + h.c.
Operator drive_frame(int n, const ModelParams &params, const FockTruncation &tr, double t);

/// F(t) = e^{itgA} V~(t) e^{-itgA}, using the closed-form exponentials.
Operator interaction_generator(int n, const ModelParams &params, const FockTruncation &tr, double t);

enum class ExpmMethod { ClosedForm, Oracle };

/// <phi_i, 0| T^dagger F(t) T |phi_j, 0> computed numerically.
Mat ground_sector_projection(int n, const ModelParams &params, const FockTruncation &tr, double t,
                             ExpmMethod method = ExpmMethod::Oracle);

/// Ground-sector generator in the phi basis, each entry an exponential sum.
struct ReducedGenerator {
    int n_atoms = 0;
    std::vector<TermSum> entries;  // row-major, 2^n x 2^n
    ModelParams params;

    int dim() const { return 1 << n_atoms; }
    const TermSum &at(int i, int j) const { return entries[static_cast<size_t>(i * dim() + j)]; }
    Mat evaluate(double t) const;
};

ReducedGenerator reduced_generator_two(const ModelParams &params);
ReducedGenerator reduced_generator_three(const ModelParams &params);
ReducedGenerator reduced_generator(int n, const ModelParams &params);

struct RwaSurvivor {
    int row = 0;
    int col = 0;
    Term term;
    double frequency = 0;
};

struct RwaResult {
    Mat constant;                         // time-independent generator kept by the filter
    std::vector<RwaSurvivor> survivors;   // terms with |theta| < eps
    std::vector<RwaSurvivor> near_secular;  // eps <= |theta| < 100 eps
    bool empty = true;
};

/// Keeps only the terms that stop oscillating once drive j sits on the
/// resonance. Other drives keep the frequencies stored in the generator.
RwaResult rwa_filter(const ReducedGenerator &gen, const ResonanceCondition &res, double eps = 1e-9);

}  // namespace tcq
