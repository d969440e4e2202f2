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

#include "doctest.h"
#include "tcq/errors.hpp"
#include "tcq/spin_decomposition.hpp"

using namespace tcq;

TEST_CASE("block structure of T") {
    BlockDecomposition two = decomposition(2);
    REQUIRE(two.blocks.size() == 2);
    CHECK(two.blocks[0].spin == Spin::Zero);
    CHECK(two.blocks[1].spin == Spin::One);
    CHECK(two.blocks[1].offset == 1);
    BlockDecomposition three = decomposition(3);
    REQUIRE(three.blocks.size() == 3);
    CHECK(three.blocks[2].spin == Spin::ThreeHalves);
    CHECK(three.blocks[2].offset == 4);
    int total = 0;
    for (const SpinBlock &b : three.blocks) total += b.size;
    CHECK(total == 8);
    CHECK_THROWS_AS(decomposition(4), ConfigError);
}

TEST_CASE("T is orthogonal and block-diagonalizes A") {
    FockTruncation tr{10, 3};
    for (int n = 2; n <= 3; n++) {
        BlockDecomposition dec = decomposition(n);
        CHECK((dec.T.transpose() * dec.T - Eigen::MatrixXd::Identity(1 << n, 1 << n)).cwiseAbs().maxCoeff() < 1e-15);
        Operator lift = lift_basis_change(dec, tr);
        Mat rotated = (lift.adjoint() * coupling_operator(n, tr) * lift).data();
        // Each block reproduces the spin generator of its multiplet.
        const int D = tr.dim();
        for (const SpinBlock &b : dec.blocks) {
            if (b.spin == Spin::Zero) continue;
            Mat gen = spin_generator(b.spin, tr).data();
            Mat part = rotated.block(b.offset * D, b.offset * D, b.size * D, b.size * D);
            CHECK(max_abs_deviation(part, gen) < 1e-14);
        }
    }
}

TEST_CASE("analytic continuation of the scalar pieces") {
    CHECK(cos_sqrt(4.0, 0.5) == doctest::Approx(std::cos(1.0)));
    CHECK(cos_sqrt(-4.0, 0.5) == doctest::Approx(std::cosh(1.0)));
    CHECK(cos_sqrt(0.0, 0.5) == 1.0);
    CHECK(sin_sqrt_over(0.0, 0.7) == 0.7);
    CHECK(sin_sqrt_over(9.0, 0.7) == doctest::Approx(std::sin(2.1) / 3));
    CHECK(sin_sqrt_over(-9.0, 0.7) == doctest::Approx(std::sinh(2.1) / 3));
    CHECK(sqrt_sin(9.0, 0.7) == doctest::Approx(3 * std::sin(2.1)));
    CHECK(sqrt_sin(-9.0, 0.7) == doctest::Approx(-3 * std::sinh(2.1)));
    // Continuity through zero.
    CHECK(sin_sqrt_over(1e-14, 0.7) == doctest::Approx(0.7));
    CHECK(sin_sqrt_over(-1e-14, 0.7) == doctest::Approx(0.7));
}

TEST_CASE("closed-form exponentials against the oracle") {
    FockTruncation tr{40, 8};
    for (double tg : {0.3, 2.0, 9.2}) {
        CHECK(masked_max_deviation(expm_spin_half(tg, 1, tr), oracle_expm(spin_generator(Spin::Half, tr), cplx(0, -tg))) < 1e-9);
        CHECK(masked_max_deviation(expm_spin_one(tg, 1, tr), oracle_expm(spin_generator(Spin::One, tr), cplx(0, -tg))) < 1e-9);
        CHECK(masked_max_deviation(expm_spin_three_half(tg, 1, tr),
                                   oracle_expm(spin_generator(Spin::ThreeHalves, tr), cplx(0, -tg))) < 1e-9);
    }
}

TEST_CASE("t and g enter only through their product") {
    FockTruncation tr{20, 5};
    CHECK(masked_max_deviation(expm_full(3, 2.0, 0.5, tr), expm_full(3, 1.0, 1.0, tr)) < 1e-13);
}

TEST_CASE("closed-form exponentials are unitary and compose") {
    FockTruncation tr{30, 8};
    for (int n = 1; n <= 3; n++) {
        Operator u = expm_full(n, 1.7, 1, tr);
        CHECK(masked_unitarity_defect(u) < 1e-12);
        // exp(-i(s+t)A) = exp(-isA) exp(-itA); the product is exact only away from the cutoff.
        Operator prod = expm_full(n, 0.6, 1, tr) * expm_full(n, 1.1, 1, tr);
        CHECK(masked_max_deviation(prod, u) < 1e-6);
    }
}

TEST_CASE("spin-3/2 squared generator has eigenvalues lambda_pm") {
    FockTruncation tr{30, 8};
    Mat b = spin_generator(Spin::ThreeHalves, tr).data();
    Eigen::SelfAdjointEigenSolver<Mat> eig(b * b);
    Eigen::VectorXd ev = eig.eigenvalues();
    for (int N = 0; N <= 15; N++) {
        for (int sign : {-1, 1}) {
            double lam = SpinThreeHalfScalars::lambda(N, sign);
            if (lam < 0) continue;
            double best = (ev.array() - lam).abs().minCoeff();
            CHECK_MESSAGE(best < 1e-9, "N=" << N << " sign=" << sign);
        }
    }
}

TEST_CASE("key-lemma powers against repeated multiplication") {
    FockTruncation tr{40, 8};
    Operator b = spin_generator(Spin::ThreeHalves, tr);
    Operator p(Mat::Identity(b.dim(), b.dim()), b.factor_dim(), tr);
    for (int k = 0; k <= 11; k++) {
        CHECK_MESSAGE(masked_relative_deviation(keylemma_power(k, tr), p) < 1e-8, "k=" << k);
        p = p * b;
    }
    CHECK_THROWS_AS(keylemma_power(-1, tr), ConfigError);
}
