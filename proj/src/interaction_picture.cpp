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

#include "tcq/interaction_picture.hpp"

#include <cmath>

#include "tcq/errors.hpp"
#include "tcq/spin_decomposition.hpp"

namespace tcq {

void ModelParams::validate(int n) const {
    if (n < 1 || n > kMaxDrives) {
        throw ConfigError("atom count must be 1, 2 or 3, got " + std::to_string(n));
    }
    if (!(g > 0) || !std::isfinite(g)) {
        throw ConfigError("coupling g must be positive and finite");
    }
    if (!std::isfinite(omega) || !std::isfinite(delta)) {
        throw ConfigError("omega and delta must be finite");
    }
    if (static_cast<int>(drives.size()) > n) {
        throw ConfigError("more drives than atoms");
    }
    for (const Drive &d : drives) {
        if (!(d.h >= 0) || !std::isfinite(d.h) || !std::isfinite(d.Omega) || !std::isfinite(d.phi)) {
            throw ConfigError("drive amplitudes must be non-negative and all drive fields finite");
        }
    }
}

void ModelParams::require_resonant_cavity() const {
    if (std::abs(omega - delta) > 1e-12 * std::max(1.0, std::abs(omega))) {
        throw ConfigError("the interaction frame needs omega == delta");
    }
}

Drive ModelParams::drive(int j) const {
    if (j < 1) throw ConfigError("drive index is 1-based");
    if (j > static_cast<int>(drives.size())) return Drive{};
    return drives[static_cast<size_t>(j - 1)];
}

FrequencyFrame ModelParams::frame() const {
    FrequencyFrame f;
    f.g = g;
    for (int j = 1; j <= kMaxDrives; j++) {
        f.drive[static_cast<size_t>(j - 1)] = drive(j).Omega + omega;
    }
    return f;
}

Hamiltonian::Hamiltonian(int n, ModelParams params, FockTruncation tr)
    : n_(n), params_(std::move(params)), tr_(tr) {
    params_.validate(n_);
    tr_.validate();
    Operator photons = kron(Operator::on_atoms(Mat::Identity(1 << n_, 1 << n_), n_), number_operator(tr_));
    Operator spins = kron(collective(Pauli::Z, n_), photon_identity(tr_));
    static_part_ = cplx(params_.omega) * photons + cplx(params_.delta) * spins +
                   cplx(params_.g) * coupling_operator(n_, tr_);
    for (int j = 1; j <= n_; j++) {
        raise_.push_back(kron(pauli_embed(Pauli::Plus, j, n_), photon_identity(tr_)));
    }
}

Operator Hamiltonian::at(double t) const {
    Operator h = static_part_;
    for (int j = 1; j <= n_; j++) {
        Drive d = params_.drive(j);
        if (d.h == 0) continue;
        cplx z = d.h * std::polar(1.0, d.Omega * t + d.phi);
        const Mat &up = raise_[static_cast<size_t>(j - 1)].data();
        h.data() += z * up + std::conj(z) * up.adjoint();
    }
    return h;
}

Hamiltonian build_hamiltonian(int n, const ModelParams &params, const FockTruncation &tr) {
    return Hamiltonian(n, params, tr);
}

Operator drive_frame(int n, const ModelParams &params, const FockTruncation &tr, double t) {
    params.validate(n);
    Mat v = Mat::Zero(1 << n, 1 << n);
    for (int j = 1; j <= n; j++) {
        Drive d = params.drive(j);
        cplx p = d.h * std::polar(1.0, (d.Omega + params.omega) * t + d.phi);
        Mat up = pauli_embed(Pauli::Plus, j, n).data();
        v += p * up + std::conj(p) * up.adjoint();
    }
    return Operator::on_atoms(kron(v, Mat::Identity(tr.dim(), tr.dim())), n, tr);
}

Operator interaction_generator(int n, const ModelParams &params, const FockTruncation &tr, double t) {
    Operator u = expm_full(n, t, params.g, tr);
    return u.adjoint() * drive_frame(n, params, tr, t) * u;
}

Mat ground_sector_projection(int n, const ModelParams &params, const FockTruncation &tr, double t,
                             ExpmMethod method) {
    Operator u;
    if (method == ExpmMethod::ClosedForm) {
        u = expm_full(n, t, params.g, tr);
    } else {
        u = oracle_expm(coupling_operator(n, tr), cplx(0, -t * params.g));
    }
    Operator f = u.adjoint() * drive_frame(n, params, tr, t) * u;
    Operator lift = lift_basis_change(decomposition(n), tr);
    Mat rotated = (lift.adjoint() * f * lift).data();
    int dim = 1 << n;
    Mat out(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            out(i, j) = rotated(i * tr.dim(), j * tr.dim());
        }
    }
    return out;
}

Mat ReducedGenerator::evaluate(double t) const {
    FrequencyFrame frame = params.frame();
    Mat out(dim(), dim());
    for (int i = 0; i < dim(); i++) {
        for (int j = 0; j < dim(); j++) {
            out(i, j) = at(i, j).evaluate(t, frame);
        }
    }
    return out;
}

namespace {

TermSum drive_term(const ModelParams &params, int j) {
    Drive d = params.drive(j);
    return TermSum::drive(j, d.h, d.phi);
}

void fill_conjugates(ReducedGenerator &gen, std::initializer_list<std::pair<int, int>> upper) {
    int dim = gen.dim();
    for (auto [i, j] : upper) {
        gen.entries[static_cast<size_t>(j * dim + i)] = gen.entries[static_cast<size_t>(i * dim + j)].conj();
    }
}

}  // namespace

ReducedGenerator reduced_generator_two(const ModelParams &params) {
    params.validate(2);
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
    TermSum one = TermSum::constant(1);
    TermSum p = drive_term(params, 1), q = drive_term(params, 2);
    TermSum f0 = 0.5 * (TermSum::cos_rate(r2) - one);
    TermSum f1 = 0.5 * (TermSum::cos_rate(r6) - one);
    TermSum h0 = TermSum::sin_rate(r2);
    TermSum h1 = (1 / r3) * TermSum::sin_rate(r6);

    ReducedGenerator gen{2, std::vector<TermSum>(16), params};
    auto set = [&](int i, int j, const TermSum &v) { gen.entries[static_cast<size_t>(i * 4 + j)] = v; };
    set(0, 3, (1 / r2) * (p - q));
    set(1, 0, (1 / r2) * (q - p) * (one + (2.0 / 3) * f1));
    set(1, 2, (1 / r2) * (p + q) * (one + 2.0 * f0 + (2.0 / 3) * f1 + (4.0 / 3) * f0 * f1 + h0 * h1));
    set(2, 3, (1 / r2) * (p + q) * (one + 2.0 * f0));
    fill_conjugates(gen, {{0, 3}, {1, 0}, {1, 2}, {2, 3}});
    return gen;
}

ReducedGenerator reduced_generator_three(const ModelParams &params) {
    params.validate(3);
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0), r10 = std::sqrt(10.0);
    const double r73 = std::sqrt(73.0);
    const double kp = std::sqrt(10 + r73), km = std::sqrt(10 - r73);
    TermSum one = TermSum::constant(1);
    TermSum p = drive_term(params, 1), q = drive_term(params, 2), r = drive_term(params, 3);

    // Photon-ground values of the block scalars. C0 = f_{-1}(-1) = 1.
    TermSum C1 = TermSum::cos_rate(1);
    TermSum S1 = TermSum::sin_rate(1);
    TermSum f00 = TermSum::cos_rate(r3);
    TermSum f11 = (1 / 5.0) * (2.0 * TermSum::cos_rate(r10) + 3.0 * one);
    TermSum f22 = (1 / (2 * r73)) * ((-7 + r73) * TermSum::cos_rate(kp) + (7 + r73) * TermSum::cos_rate(km));
    TermSum F00 = (1 / r3) * TermSum::sin_rate(r3);
    TermSum F12 =
        (1 / (2 * r73)) * ((1 + r73) / kp * TermSum::sin_rate(kp) - (1 - r73) / km * TermSum::sin_rate(km));
    TermSum h11 = (1 / 10.0) * (TermSum::cos_rate(r10) - one);
    TermSum h12 = (1 / (2 * r73)) * (TermSum::cos_rate(kp) - TermSum::cos_rate(km));
    TermSum H11 = (1 / r10) * TermSum::sin_rate(r10);

    TermSum qr = q - r;
    TermSum a2 = 2.0 * p - q - r;
    TermSum sum = p + q + r;
    TermSum c1 = f00 * C1 + 3.0 * F00 * S1;
    TermSum c2 = C1 * f22 + S1 * F12;

    ReducedGenerator gen{3, std::vector<TermSum>(64), params};
    auto set = [&](int i, int j, const TermSum &v) { gen.entries[static_cast<size_t>((i - 1) * 8 + (j - 1))] = v; };
    set(1, 2, p * C1);
    set(1, 4, (1 / r3) * qr * C1);
    set(1, 7, (1 / r6) * qr * c1);
    set(2, 8, (1 / r2) * qr);
    set(3, 2, (1 / r3) * qr * C1);
    set(3, 4, (1 / 3.0) * (2.0 * q + 2.0 * r - p) * C1);
    set(3, 7, (1 / (3 * r2)) * a2 * c1);
    set(4, 8, (1 / r6) * a2);
    set(5, 1, (-1 / r2) * qr * c2);
    set(5, 3, (-1 / r6) * a2 * c2);
    set(5, 6, (1 / r3) * sum * (f11 * f22 + 4.0 * H11 * F12 + 24.0 * h11 * h12));
    set(6, 2, (-1 / r6) * qr * f11);
    set(6, 4, (-1 / (3 * r2)) * a2 * f11);
    set(6, 7, (2 / 3.0) * sum * (f00 * f11 + 3.0 * F00 * H11));
    set(7, 8, (1 / r3) * sum * f00);

    // Remaining entries are conjugates of the ones above (0-based pairs).
    fill_conjugates(gen, {{0, 1}, {0, 3}, {0, 6}, {1, 7}, {2, 1}, {2, 3}, {2, 6}, {3, 7}, {4, 0}, {4, 2}, {4, 5},
                          {5, 1}, {5, 3}, {5, 6}, {6, 7}});
    return gen;
}

ReducedGenerator reduced_generator(int n, const ModelParams &params) {
    switch (n) {
        case 2:
            return reduced_generator_two(params);
        case 3:
            return reduced_generator_three(params);
        default:
            throw ConfigError("reduced generators exist for n = 2 and 3 only");
    }
}

RwaResult rwa_filter(const ReducedGenerator &gen, const ResonanceCondition &res, double eps) {
    if (res.drive < 1 || res.drive > gen.n_atoms) {
        throw ConfigError("resonance drive index out of range");
    }
    FrequencyFrame frame = gen.params.frame();
    frame.drive[static_cast<size_t>(res.drive - 1)] = res.kappa() * gen.params.g;

    double hmax = 0;
    for (const Drive &d : gen.params.drives) hmax = std::max(hmax, d.h);
    // Cancellations in the symbolic products leave rounding-level residues.
    const double negligible = 1e-12 * std::max(hmax, 1e-300);

    RwaResult out;
    out.constant = Mat::Zero(gen.dim(), gen.dim());
    for (int i = 0; i < gen.dim(); i++) {
        for (int j = 0; j < gen.dim(); j++) {
            for (const Term &term : gen.at(i, j).terms()) {
                if (std::abs(term.amplitude) <= negligible) continue;
                double theta = term.frequency(frame);
                RwaSurvivor s{i, j, term, theta};
                if (std::abs(theta) < eps) {
                    out.constant(i, j) += term.amplitude * std::polar(1.0, term.phase);
                    out.survivors.push_back(s);
                } else if (std::abs(theta) < 100 * eps) {
                    out.near_secular.push_back(s);
                }
            }
        }
    }
    out.empty = out.survivors.empty();
    return out;
}

}  // namespace tcq
