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

#include "tcq/operator_algebra.hpp"

#include <cmath>

#include "tcq/errors.hpp"

namespace tcq {

void FockTruncation::validate() const {
    if (n_max < 1) {
        throw ConfigError("n_max must be at least 1, got " + std::to_string(n_max));
    }
    if (buffer < 0 || buffer > n_max) {
        throw ConfigError("buffer must lie in [0, n_max], got " + std::to_string(buffer));
    }
}

Operator::Operator(Mat data, int factor_dim, std::optional<FockTruncation> fock)
    : data_(std::move(data)), factor_dim_(factor_dim), fock_(fock) {
    if (data_.rows() != data_.cols()) {
        throw ConfigError("operator matrix must be square");
    }
    if (fock_) {
        fock_->validate();
    }
    int expected = factor_dim_ * (fock_ ? fock_->dim() : 1);
    if (expected != data_.rows()) {
        throw ConfigError("operator dimension " + std::to_string(data_.rows()) + " does not match factor " +
                          std::to_string(factor_dim_) + " times photon space");
    }
}

Operator Operator::on_atoms(Mat data, int n_atoms, std::optional<FockTruncation> fock) {
    if (n_atoms < 0 || n_atoms > 8) {
        throw ConfigError("atom count out of range: " + std::to_string(n_atoms));
    }
    return Operator(std::move(data), 1 << n_atoms, fock);
}

int Operator::photon_of(int i) const { return fock_ ? i % fock_->dim() : 0; }

int Operator::factor_of(int i) const { return fock_ ? i / fock_->dim() : i; }

Operator Operator::adjoint() const { return Operator(data_.adjoint(), factor_dim_, fock_); }

void Operator::check_compatible(const Operator &other, const char *op) const {
    bool same_fock = fock_.has_value() == other.fock_.has_value() &&
                     (!fock_ || (fock_->n_max == other.fock_->n_max));
    if (factor_dim_ != other.factor_dim_ || !same_fock) {
        throw ConfigError(std::string("incompatible operator spaces in ") + op);
    }
}

Operator operator*(const Operator &a, const Operator &b) {
    a.check_compatible(b, "product");
    return Operator(a.data_ * b.data_, a.factor_dim_, a.fock_);
}

Operator operator+(const Operator &a, const Operator &b) {
    a.check_compatible(b, "sum");
    return Operator(a.data_ + b.data_, a.factor_dim_, a.fock_);
}

Operator operator-(const Operator &a, const Operator &b) {
    a.check_compatible(b, "difference");
    return Operator(a.data_ - b.data_, a.factor_dim_, a.fock_);
}

Operator operator*(cplx s, const Operator &a) { return Operator(s * a.data_, a.factor_dim_, a.fock_); }

Operator annihilation(const FockTruncation &tr) {
    tr.validate();
    Mat a = Mat::Zero(tr.dim(), tr.dim());
    for (int m = 1; m <= tr.n_max; m++) {
        a(m - 1, m) = std::sqrt(static_cast<double>(m));
    }
    return Operator(std::move(a), 1, tr);
}

Operator number_operator(const FockTruncation &tr) {
    tr.validate();
    Mat n = Mat::Zero(tr.dim(), tr.dim());
    for (int m = 0; m <= tr.n_max; m++) {
        n(m, m) = m;
    }
    return Operator(std::move(n), 1, tr);
}

Operator photon_identity(const FockTruncation &tr) {
    tr.validate();
    return Operator(Mat::Identity(tr.dim(), tr.dim()), 1, tr);
}

namespace {

Mat single_site(Pauli which) {
    Mat m = Mat::Zero(2, 2);
    switch (which) {
        case Pauli::Plus:
            m(0, 1) = 1;
            break;
        case Pauli::Minus:
            m(1, 0) = 1;
            break;
        case Pauli::Z:
            m(0, 0) = 1;
            m(1, 1) = -1;
            break;
        case Pauli::X:
            m(0, 1) = 1;
            m(1, 0) = 1;
            break;
        case Pauli::Y:
            m(0, 1) = cplx(0, -1);
            m(1, 0) = cplx(0, 1);
            break;
        case Pauli::Id:
            m = Mat::Identity(2, 2);
            break;
    }
    return m;
}

}  // namespace

Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Operator kron(const Operator &a, const Operator &b) {
    if (a.fock()) {
        throw ConfigError("kron: the left factor must not carry a photon space");
    }
    return Operator(kron(a.data(), b.data()), a.factor_dim() * b.factor_dim(), b.fock());
}

Operator pauli_embed(Pauli which, int j, int n) {
    if (n < 1 || n > 8 || j < 1 || j > n) {
        throw ConfigError("pauli_embed: atom " + std::to_string(j) + " out of range for " + std::to_string(n) +
                          " atoms");
    }
    Mat out = Mat::Identity(1, 1);
    for (int k = 1; k <= n; k++) {
        out = kron(out, k == j ? single_site(which) : single_site(Pauli::Id));
    }
    return Operator::on_atoms(std::move(out), n);
}

Operator collective(Pauli which, int n) {
    if (which != Pauli::Plus && which != Pauli::Minus && which != Pauli::Z) {
        throw ConfigError("collective: only S_+, S_- and S_3 are defined");
    }
    Mat sum = Mat::Zero(1 << n, 1 << n);
    for (int j = 1; j <= n; j++) {
        sum += pauli_embed(which, j, n).data();
    }
    if (which == Pauli::Z) {
        sum *= 0.5;
    }
    return Operator::on_atoms(std::move(sum), n);
}

Operator coupling_operator(int n, const FockTruncation &tr) {
    if (n < 1 || n > 3) {
        throw ConfigError("coupling_operator: n must be 1, 2 or 3, got " + std::to_string(n));
    }
    Operator a = annihilation(tr);
    return kron(collective(Pauli::Plus, n), a) + kron(collective(Pauli::Minus, n), a.adjoint());
}

Mat oracle_expm(const Mat &x, cplx scale) {
    if (x.rows() != x.cols()) {
        throw ConfigError("oracle_expm: matrix must be square");
    }
    Mat a = scale * x;
    if (!a.allFinite()) {
        throw IntegrationError("oracle_expm: non-finite input");
    }
    double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    int s = 0;
    if (norm1 > 0.5) {
        s = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    }
    a /= std::ldexp(1.0, s);

    Mat result = Mat::Identity(a.rows(), a.cols());
    Mat term = Mat::Identity(a.rows(), a.cols());
    for (int k = 1; k <= 40; k++) {
        term = term * a / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-20) {
            break;
        }
    }
    for (int i = 0; i < s; i++) {
        result = result * result;
    }
    if (!result.allFinite()) {
        throw IntegrationError("oracle_expm: overflow");
    }
    return result;
}

Operator oracle_expm(const Operator &x, cplx scale) {
    return Operator(oracle_expm(x.data(), scale), x.factor_dim(), x.fock());
}

namespace {

bool trusted(const Operator &op, int i) {
    return !op.fock() || op.photon_of(i) <= op.fock()->trusted_max();
}

}  // namespace

double masked_max_deviation(const Operator &a, const Operator &b) {
    if (a.dim() != b.dim()) {
        throw ConfigError("masked_max_deviation: dimension mismatch");
    }
    double worst = 0;
    for (int j = 0; j < a.dim(); j++) {
        if (!trusted(a, j)) continue;
        for (int i = 0; i < a.dim(); i++) {
            if (!trusted(a, i)) continue;
            worst = std::max(worst, std::abs(a.data()(i, j) - b.data()(i, j)));
        }
    }
    return worst;
}

double masked_relative_deviation(const Operator &a, const Operator &b) {
    double scale = 0;
    for (int j = 0; j < b.dim(); j++) {
        if (!trusted(b, j)) continue;
        for (int i = 0; i < b.dim(); i++) {
            if (!trusted(b, i)) continue;
            scale = std::max(scale, std::abs(b.data()(i, j)));
        }
    }
    double dev = masked_max_deviation(a, b);
    return scale > 0 ? dev / scale : dev;
}

double masked_unitarity_defect(const Operator &u) {
    Mat g = u.data().adjoint() * u.data();
    double worst = 0;
    for (int j = 0; j < u.dim(); j++) {
        if (!trusted(u, j)) continue;
        for (int i = 0; i < u.dim(); i++) {
            if (!trusted(u, i)) continue;
            worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double max_abs_deviation(const Mat &a, const Mat &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ConfigError("max_abs_deviation: shape mismatch");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace tcq
