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

namespace tcq {

enum class Spin { Zero, Half, One, ThreeHalves };

int multiplet_size(Spin s);
const char *spin_name(Spin s);

struct SpinBlock {
    Spin spin;
    int offset;  // first atomic basis column of T spanned by the block
    int size;
};

/// Orthogonal T with T^dagger A_n T block diagonal, blocks listed in order.
struct BlockDecomposition {
    int n_atoms = 0;
    Eigen::MatrixXd T;
    std::vector<SpinBlock> blocks;
};

BlockDecomposition decomposition(int n);

/// T (x) 1 on the truncated space.
Operator lift_basis_change(const BlockDecomposition &dec, const FockTruncation &tr);

/// Block generator B_S = J_+ (x) a + J_- (x) a^dagger in the slot-major ordering.
Operator spin_generator(Spin s, const FockTruncation &tr);

/// Analytic continuation of the trigonometric pieces to negative arguments.
double cos_sqrt(double lambda, double tg);
/// sin(tg sqrt(lambda)) / sqrt(lambda), equal to tg at lambda = 0.
double sin_sqrt_over(double lambda, double tg);
/// sqrt(lambda) sin(tg sqrt(lambda)).
double sqrt_sin(double lambda, double tg);

/// C(N) = cos(tg sqrt N), S(N) = sin(tg sqrt N) / sqrt N.
struct SpinHalfScalars {
    double tg;
    double C(double N) const { return cos_sqrt(N, tg); }
    double S(double N) const { return sin_sqrt_over(N, tg); }
};

/// f(N) = (cos(tg sqrt(2(2N+1))) - 1)/2, h(N) = sin(tg sqrt(2(2N+1))) / sqrt(2N+1).
struct SpinOneScalars {
    double tg;
    double f(double N) const;
    double h(double N) const;
};

/// Scalar functions of the spin-3/2 exponential and of the B_{3/2} power lemma.
struct SpinThreeHalfScalars {
    double tg;

    static double d(double N) { return 16 * N * N + 9; }
    static double lambda(double N, int sign);
    static double v(double N, int sign);
    static double w(double N, int sign);

    static double alpha(int n, double N);
    static double beta(int n, double N);
    static double gamma(int n, double N);
    static double delta(int n, double N);
    static double xi(int n, double N);

    double f2(double N) const;
    double f1(double N) const;
    double f0(double N) const;
    double fm1(double N) const;
    double h1(double N) const;
    double F1(double N) const;
    double F0(double N) const;
    double H1(double N) const;
    double H0(double N) const;
};

/// exp(-i t g B_S) from the closed forms.
Operator expm_spin_half(double t, double g, const FockTruncation &tr);
Operator expm_spin_one(double t, double g, const FockTruncation &tr);
Operator expm_spin_three_half(double t, double g, const FockTruncation &tr);

/// exp(-i t g A_n) = (T (x) 1) diag(block exponentials) (T (x) 1)^dagger.
Operator expm_full(int n, double t, double g, const FockTruncation &tr);

/// B_{3/2}^k from the closed-form power lemma.
Operator keylemma_power(int k, const FockTruncation &tr);

}  // namespace tcq
