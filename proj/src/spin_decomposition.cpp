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

#include "tcq/spin_decomposition.hpp"

#include <cmath>
#include <functional>

#include "tcq/errors.hpp"

namespace tcq {

int multiplet_size(Spin s) {
    switch (s) {
        case Spin::Zero:
            return 1;
        case Spin::Half:
            return 2;
        case Spin::One:
            return 3;
        case Spin::ThreeHalves:
            return 4;
    }
    return 0;
}

const char *spin_name(Spin s) {
    switch (s) {
        case Spin::Zero:
            return "0";
        case Spin::Half:
            return "1/2";
        case Spin::One:
            return "1";
        case Spin::ThreeHalves:
            return "3/2";
    }
    return "?";
}

BlockDecomposition decomposition(int n) {
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
    BlockDecomposition dec;
    dec.n_atoms = n;
    switch (n) {
        case 1:
            dec.T = Eigen::MatrixXd::Identity(2, 2);
            dec.blocks = {{Spin::Half, 0, 2}};
            break;
        case 2:
            dec.T.resize(4, 4);
            dec.T << 0, 1, 0, 0,
                     1 / r2, 0, 1 / r2, 0,
                    -1 / r2, 0, 1 / r2, 0,
                     0, 0, 0, 1;
            dec.blocks = {{Spin::Zero, 0, 1}, {Spin::One, 1, 3}};
            break;
        case 3:
            dec.T.resize(8, 8);
            dec.T << 0, 0, 0, 0, 1, 0, 0, 0,
                     1 / r2, 0, 1 / r6, 0, 0, 1 / r3, 0, 0,
                    -1 / r2, 0, 1 / r6, 0, 0, 1 / r3, 0, 0,
                     0, 0, 0, r2 / r3, 0, 0, 1 / r3, 0,
                     0, 0, -r2 / r3, 0, 0, 1 / r3, 0, 0,
                     0, 1 / r2, 0, -1 / r6, 0, 0, 1 / r3, 0,
                     0, -1 / r2, 0, -1 / r6, 0, 0, 1 / r3, 0,
                     0, 0, 0, 0, 0, 0, 0, 1;
            dec.blocks = {{Spin::Half, 0, 2}, {Spin::Half, 2, 2}, {Spin::ThreeHalves, 4, 4}};
            break;
        default:
            throw ConfigError("decomposition: n must be 1, 2 or 3, got " + std::to_string(n));
    }
    return dec;
}

Operator lift_basis_change(const BlockDecomposition &dec, const FockTruncation &tr) {
    Mat t = dec.T.cast<cplx>();
    return Operator::on_atoms(kron(t, Mat::Identity(tr.dim(), tr.dim())), dec.n_atoms, tr);
}

namespace {

// Photon-space matrix f(N) a^k for k >= 0, or f(N) (a^dagger)^{-k} for k < 0,
// with the scalar evaluated at the row photon number.
Mat photon_term(const FockTruncation &tr, int k, const std::function<cplx(double)> &f) {
    int dim = tr.dim();
    Mat out = Mat::Zero(dim, dim);
    for (int m = 0; m < dim; m++) {
        int col = m + k;
        if (col < 0 || col >= dim) continue;
        double amp = 1;
        int lo = std::min(m, col), hi = std::max(m, col);
        for (int j = lo + 1; j <= hi; j++) {
            amp *= std::sqrt(static_cast<double>(j));
        }
        out(m, col) = f(m) * amp;
    }
    return out;
}

std::function<cplx(double)> constant(cplx c) {
    return [c](double) { return c; };
}

Operator assemble(const std::vector<std::vector<Mat>> &blocks, int size, const FockTruncation &tr) {
    int dim = tr.dim();
    Mat out = Mat::Zero(size * dim, size * dim);
    for (int i = 0; i < size; i++) {
        for (int j = 0; j < size; j++) {
            if (blocks[i][j].size() > 0) {
                out.block(i * dim, j * dim, dim, dim) = blocks[i][j];
            }
        }
    }
    return Operator(std::move(out), size, tr);
}

std::vector<std::vector<Mat>> empty_blocks(int size) {
    return std::vector<std::vector<Mat>>(size, std::vector<Mat>(size));
}

}  // namespace

Operator spin_generator(Spin s, const FockTruncation &tr) {
    tr.validate();
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
    int size = multiplet_size(s);
    auto b = empty_blocks(size);
    switch (s) {
        case Spin::Zero:
            return Operator(Mat::Zero(tr.dim(), tr.dim()), 1, tr);
        case Spin::Half:
            b[0][1] = photon_term(tr, 1, constant(1));
            b[1][0] = photon_term(tr, -1, constant(1));
            break;
        case Spin::One:
            b[0][1] = photon_term(tr, 1, constant(r2));
            b[1][0] = photon_term(tr, -1, constant(r2));
            b[1][2] = photon_term(tr, 1, constant(r2));
            b[2][1] = photon_term(tr, -1, constant(r2));
            break;
        case Spin::ThreeHalves:
            b[0][1] = photon_term(tr, 1, constant(r3));
            b[1][0] = photon_term(tr, -1, constant(r3));
            b[1][2] = photon_term(tr, 1, constant(2));
            b[2][1] = photon_term(tr, -1, constant(2));
            b[2][3] = photon_term(tr, 1, constant(r3));
            b[3][2] = photon_term(tr, -1, constant(r3));
            break;
    }
    return assemble(b, size, tr);
}

double cos_sqrt(double lambda, double tg) {
    if (lambda >= 0) return std::cos(tg * std::sqrt(lambda));
    return std::cosh(tg * std::sqrt(-lambda));
}

double sin_sqrt_over(double lambda, double tg) {
    if (lambda == 0) return tg;
    if (lambda > 0) {
        double r = std::sqrt(lambda);
        return std::sin(tg * r) / r;
    }
    double r = std::sqrt(-lambda);
    return std::sinh(tg * r) / r;
}

double sqrt_sin(double lambda, double tg) {
    if (lambda >= 0) {
        double r = std::sqrt(lambda);
        return r * std::sin(tg * r);
    }
    double r = std::sqrt(-lambda);
    return -r * std::sinh(tg * r);
}

double SpinOneScalars::f(double N) const { return (cos_sqrt(2 * (2 * N + 1), tg) - 1) / 2; }

double SpinOneScalars::h(double N) const { return std::sqrt(2.0) * sin_sqrt_over(2 * (2 * N + 1), tg); }

double SpinThreeHalfScalars::lambda(double N, int sign) { return 5 * N + sign * std::sqrt(d(N)); }
double SpinThreeHalfScalars::v(double N, int sign) { return -2 * N - 3 + sign * std::sqrt(d(N)); }
double SpinThreeHalfScalars::w(double N, int sign) { return 2 * N - 3 + sign * std::sqrt(d(N)); }

namespace {

double two_root_d(double N) { return 2 * std::sqrt(SpinThreeHalfScalars::d(N)); }

}  // namespace

double SpinThreeHalfScalars::alpha(int n, double N) {
    return (v(N, 1) * std::pow(lambda(N, 1), n) - v(N, -1) * std::pow(lambda(N, -1), n)) / two_root_d(N);
}
double SpinThreeHalfScalars::beta(int n, double N) {
    return (w(N, 1) * std::pow(lambda(N, 1), n) - w(N, -1) * std::pow(lambda(N, -1), n)) / two_root_d(N);
}
double SpinThreeHalfScalars::gamma(int n, double N) {
    return (v(N, 1) * std::pow(lambda(N, -1), n) - v(N, -1) * std::pow(lambda(N, 1), n)) / two_root_d(N);
}
double SpinThreeHalfScalars::delta(int n, double N) {
    return (w(N, 1) * std::pow(lambda(N, -1), n) - w(N, -1) * std::pow(lambda(N, 1), n)) / two_root_d(N);
}
double SpinThreeHalfScalars::xi(int n, double N) {
    return (std::pow(lambda(N, 1), n) - std::pow(lambda(N, -1), n)) / two_root_d(N);
}

double SpinThreeHalfScalars::f2(double N) const {
    return (v(N, 1) * cos_sqrt(lambda(N, 1), tg) - v(N, -1) * cos_sqrt(lambda(N, -1), tg)) / two_root_d(N);
}
double SpinThreeHalfScalars::f1(double N) const {
    return (w(N, 1) * cos_sqrt(lambda(N, 1), tg) - w(N, -1) * cos_sqrt(lambda(N, -1), tg)) / two_root_d(N);
}
double SpinThreeHalfScalars::f0(double N) const {
    return (v(N, 1) * cos_sqrt(lambda(N, -1), tg) - v(N, -1) * cos_sqrt(lambda(N, 1), tg)) / two_root_d(N);
}
double SpinThreeHalfScalars::fm1(double N) const {
    return (w(N, 1) * cos_sqrt(lambda(N, -1), tg) - w(N, -1) * cos_sqrt(lambda(N, 1), tg)) / two_root_d(N);
}
double SpinThreeHalfScalars::h1(double N) const {
    return (cos_sqrt(lambda(N, 1), tg) - cos_sqrt(lambda(N, -1), tg)) / two_root_d(N);
}
double SpinThreeHalfScalars::F1(double N) const {
    return (w(N, 1) * sin_sqrt_over(lambda(N, 1), tg) - w(N, -1) * sin_sqrt_over(lambda(N, -1), tg)) /
           two_root_d(N);
}
double SpinThreeHalfScalars::F0(double N) const {
    return (v(N, 1) * sin_sqrt_over(lambda(N, -1), tg) - v(N, -1) * sin_sqrt_over(lambda(N, 1), tg)) /
           two_root_d(N);
}
double SpinThreeHalfScalars::H1(double N) const {
    return (sqrt_sin(lambda(N, 1), tg) - sqrt_sin(lambda(N, -1), tg)) / two_root_d(N);
}
double SpinThreeHalfScalars::H0(double N) const {
    return (sin_sqrt_over(lambda(N, 1), tg) - sin_sqrt_over(lambda(N, -1), tg)) / two_root_d(N);
}

Operator expm_spin_half(double t, double g, const FockTruncation &tr) {
    tr.validate();
    SpinHalfScalars s{t * g};
    const cplx mi(0, -1);
    auto b = empty_blocks(2);
    b[0][0] = photon_term(tr, 0, [&](double N) { return s.C(N + 1); });
    b[0][1] = photon_term(tr, 1, [&](double N) { return mi * s.S(N + 1); });
    b[1][0] = photon_term(tr, -1, [&](double N) { return mi * s.S(N); });
    b[1][1] = photon_term(tr, 0, [&](double N) { return s.C(N); });
    return assemble(b, 2, tr);
}

Operator expm_spin_one(double t, double g, const FockTruncation &tr) {
    tr.validate();
    SpinOneScalars s{t * g};
    const cplx mi(0, -1);
    auto b = empty_blocks(3);
    b[0][0] = photon_term(tr, 0, [&](double N) { return 1 + (2 * N + 2) / (2 * N + 3) * s.f(N + 1); });
    b[0][1] = photon_term(tr, 1, [&](double N) { return mi * s.h(N + 1); });
    b[0][2] = photon_term(tr, 2, [&](double N) { return 2 / (2 * N + 3) * s.f(N + 1); });
    b[1][0] = photon_term(tr, -1, [&](double N) { return mi * s.h(N); });
    b[1][1] = photon_term(tr, 0, [&](double N) { return 1 + 2 * s.f(N); });
    b[1][2] = photon_term(tr, 1, [&](double N) { return mi * s.h(N); });
    // Rows with N < 2 meet a zero matrix element of (a^dagger)^2, and the
    // diagonal coefficient 2N/(2N-1) vanishes at N = 0.
    b[2][0] = photon_term(tr, -2, [&](double N) { return 2 / (2 * N - 1) * s.f(N - 1); });
    b[2][1] = photon_term(tr, -1, [&](double N) { return mi * s.h(N - 1); });
    b[2][2] = photon_term(tr, 0, [&](double N) { return N == 0 ? 1.0 : 1 + 2 * N / (2 * N - 1) * s.f(N - 1); });
    return assemble(b, 3, tr);
}

Operator expm_spin_three_half(double t, double g, const FockTruncation &tr) {
    tr.validate();
    SpinThreeHalfScalars s{t * g};
    const double r3 = std::sqrt(3.0);
    const cplx i(0, 1);
    auto b = empty_blocks(4);
    b[0][0] = photon_term(tr, 0, [&](double N) { return s.f2(N + 2); });
    b[0][1] = photon_term(tr, 1, [&](double N) { return -r3 * i * s.F1(N + 2); });
    b[0][2] = photon_term(tr, 2, [&](double N) { return 2 * r3 * s.h1(N + 2); });
    b[0][3] = photon_term(tr, 3, [&](double N) { return -6.0 * i * s.H0(N + 2); });
    b[1][0] = photon_term(tr, -1, [&](double N) { return -r3 * i * s.F1(N + 1); });
    b[1][1] = photon_term(tr, 0, [&](double N) { return s.f1(N + 1); });
    b[1][2] = photon_term(tr, 1, [&](double N) { return -2.0 * i * s.H1(N + 1); });
    b[1][3] = photon_term(tr, 2, [&](double N) { return 2 * r3 * s.h1(N + 1); });
    b[2][0] = photon_term(tr, -2, [&](double N) { return 2 * r3 * s.h1(N); });
    b[2][1] = photon_term(tr, -1, [&](double N) { return -2.0 * i * s.H1(N); });
    b[2][2] = photon_term(tr, 0, [&](double N) { return s.f0(N); });
    b[2][3] = photon_term(tr, 1, [&](double N) { return -r3 * i * s.F0(N); });
    b[3][0] = photon_term(tr, -3, [&](double N) { return -6.0 * i * s.H0(N - 1); });
    b[3][1] = photon_term(tr, -2, [&](double N) { return 2 * r3 * s.h1(N - 1); });
    b[3][2] = photon_term(tr, -1, [&](double N) { return -r3 * i * s.F0(N - 1); });
    b[3][3] = photon_term(tr, 0, [&](double N) { return s.fm1(N - 1); });
    return assemble(b, 4, tr);
}

Operator expm_full(int n, double t, double g, const FockTruncation &tr) {
    BlockDecomposition dec = decomposition(n);
    int dim = tr.dim();
    Mat inner = Mat::Zero((1 << n) * dim, (1 << n) * dim);
    for (const SpinBlock &blk : dec.blocks) {
        Mat e;
        switch (blk.spin) {
            case Spin::Zero:
                e = Mat::Identity(dim, dim);
                break;
            case Spin::Half:
                e = expm_spin_half(t, g, tr).data();
                break;
            case Spin::One:
                e = expm_spin_one(t, g, tr).data();
                break;
            case Spin::ThreeHalves:
                e = expm_spin_three_half(t, g, tr).data();
                break;
        }
        inner.block(blk.offset * dim, blk.offset * dim, blk.size * dim, blk.size * dim) = e;
    }
    Operator lift = lift_basis_change(dec, tr);
    return lift * Operator::on_atoms(std::move(inner), n, tr) * lift.adjoint();
}

Operator keylemma_power(int k, const FockTruncation &tr) {
    if (k < 0) {
        throw ConfigError("keylemma_power: exponent must be non-negative");
    }
    tr.validate();
    using S = SpinThreeHalfScalars;
    const double r3 = std::sqrt(3.0);
    int n = k / 2;
    auto b = empty_blocks(4);
    if (k % 2 == 0) {
        b[0][0] = photon_term(tr, 0, [&](double N) { return S::alpha(n, N + 2); });
        b[0][2] = photon_term(tr, 2, [&](double N) { return 2 * r3 * S::xi(n, N + 2); });
        b[1][1] = photon_term(tr, 0, [&](double N) { return S::beta(n, N + 1); });
        b[1][3] = photon_term(tr, 2, [&](double N) { return 2 * r3 * S::xi(n, N + 1); });
        b[2][0] = photon_term(tr, -2, [&](double N) { return 2 * r3 * S::xi(n, N); });
        b[2][2] = photon_term(tr, 0, [&](double N) { return S::gamma(n, N); });
        b[3][1] = photon_term(tr, -2, [&](double N) { return 2 * r3 * S::xi(n, N - 1); });
        b[3][3] = photon_term(tr, 0, [&](double N) { return S::delta(n, N - 1); });
    } else {
        b[0][1] = photon_term(tr, 1, [&](double N) { return r3 * S::beta(n, N + 2); });
        b[0][3] = photon_term(tr, 3, [&](double N) { return 6 * S::xi(n, N + 2); });
        b[1][0] = photon_term(tr, -1, [&](double N) { return r3 * S::beta(n, N + 1); });
        b[1][2] = photon_term(tr, 1, [&](double N) { return 2 * S::xi(n + 1, N + 1); });
        b[2][1] = photon_term(tr, -1, [&](double N) { return 2 * S::xi(n + 1, N); });
        b[2][3] = photon_term(tr, 1, [&](double N) { return r3 * S::gamma(n, N); });
        b[3][0] = photon_term(tr, -3, [&](double N) { return 6 * S::xi(n, N - 1); });
        b[3][2] = photon_term(tr, -1, [&](double N) { return r3 * S::gamma(n, N - 1); });
    }
    return assemble(b, 4, tr);
}

}  // namespace tcq
