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

#include "tcq/verification.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "json.hpp"
#include "tcq/errors.hpp"
#include "tcq/gate_assembly.hpp"
#include "tcq/interaction_picture.hpp"
#include "tcq/pulse_design.hpp"
#include "tcq/report_io.hpp"
#include "tcq/resonance.hpp"
#include "tcq/spin_decomposition.hpp"

namespace tcq {

namespace {

constexpr double kUlp = std::numeric_limits<double>::epsilon();
const double kTimes[] = {0.3, 1.1, 2.0, 9.2};

void add(VerifyReport &r, const char *scope, std::string name, double dev, double tol) {
    r.checks.push_back({scope, std::move(name), dev, tol, dev <= tol});
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

void verify_expm(VerifyReport &r, const VerifyOptions &o) {
    const Spin spins[] = {Spin::Half, Spin::One, Spin::ThreeHalves};
    for (Spin s : spins) {
        Operator b = spin_generator(s, o.tr);
        for (double tg : kTimes) {
            Operator closed;
            switch (s) {
                case Spin::Half:
                    closed = expm_spin_half(tg, 1.0, o.tr);
                    break;
                case Spin::One:
                    closed = expm_spin_one(tg, 1.0, o.tr);
                    break;
                default:
                    closed = expm_spin_three_half(tg, 1.0, o.tr);
                    break;
            }
            Operator oracle = oracle_expm(b, cplx(0, -tg));
            add(r, "expm", std::string("spin ") + spin_name(s) + " tg=" + fmt(tg), masked_max_deviation(closed, oracle),
                1e-9);
        }
    }
    for (int n = 2; n <= 3; n++) {
        Operator a = coupling_operator(n, o.tr);
        for (double tg : kTimes) {
            add(r, "expm", "full n=" + std::to_string(n) + " tg=" + fmt(tg),
                masked_max_deviation(expm_full(n, tg, 1.0, o.tr), oracle_expm(a, cplx(0, -tg))), 1e-9);
        }
    }
}

void verify_decomposition(VerifyReport &r, const VerifyOptions &o) {
    for (int n = 2; n <= 3; n++) {
        BlockDecomposition dec = decomposition(n);
        const int q = 1 << n;
        Eigen::MatrixXd gram = dec.T.transpose() * dec.T - Eigen::MatrixXd::Identity(q, q);
        add(r, "decomposition", "T orthogonal n=" + std::to_string(n), gram.cwiseAbs().maxCoeff(), 1e-15);

        Operator lift = lift_basis_change(dec, o.tr);
        Mat rotated = (lift.adjoint() * coupling_operator(n, o.tr) * lift).data();
        std::vector<int> block_of(static_cast<size_t>(q));
        for (size_t b = 0; b < dec.blocks.size(); b++) {
            for (int k = 0; k < dec.blocks[b].size; k++) block_of[static_cast<size_t>(dec.blocks[b].offset + k)] = static_cast<int>(b);
        }
        const int D = o.tr.dim();
        double off = 0;
        for (Eigen::Index i = 0; i < rotated.rows(); i++) {
            for (Eigen::Index j = 0; j < rotated.cols(); j++) {
                if (block_of[static_cast<size_t>(i / D)] != block_of[static_cast<size_t>(j / D)]) {
                    off = std::max(off, std::abs(rotated(i, j)));
                }
            }
        }
        add(r, "decomposition", "off-block T^dagger A T n=" + std::to_string(n), off, 1e-14);
    }
}

void verify_keylemma(VerifyReport &r, const VerifyOptions &o) {
    Operator b = spin_generator(Spin::ThreeHalves, o.tr);
    Operator power(Mat::Identity(b.dim(), b.dim()), b.factor_dim(), o.tr);
    for (int k = 0; k <= 11; k++) {
        add(r, "keylemma", "B^" + std::to_string(k), masked_relative_deviation(keylemma_power(k, o.tr), power), 1e-8);
        power = power * b;
    }
}

void verify_reduced(VerifyReport &r, const VerifyOptions &o) {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> h(0.001, 0.1), om(-1.0, 6.0), ph(-M_PI, M_PI), tt(0.0, 40.0);
    // Photon number stays within a few quanta of the ground sector here.
    FockTruncation tr{16, 8};
    for (int n = 2; n <= 3; n++) {
        ModelParams p;
        for (int j = 0; j < n; j++) p.drives.push_back({h(rng), om(rng), ph(rng)});
        ReducedGenerator gen = reduced_generator(n, p);
        double dev = 0;
        for (int s = 0; s < o.reduced_samples; s++) {
            double t = tt(rng);
            dev = std::max(dev, max_abs_deviation(gen.evaluate(t), ground_sector_projection(n, p, tr, t)));
        }
        add(r, "reduced", "x_ij table n=" + std::to_string(n), dev, 1e-10);
    }
}

double printed_rate(GateKind g, double h) {
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r73 = std::sqrt(73.0);
    switch (g) {
        case GateKind::CZ2:
            return -r2 * (r3 - 1) * h / 24;
        case GateKind::A:
            return r3 * (-11 + r73) * h / (20 * r73);
        case GateKind::B:
            return r2 * (1 - r3) * h / 12;
        default:
            return (4 - std::sqrt(30.0)) * h / 60;
    }
}

void verify_rwa(VerifyReport &r) {
    const double h = 0.01;
    for (GateKind g : {GateKind::CZ2, GateKind::A, GateKind::B, GateKind::C}) {
        ResonanceCondition res = primitive_resonance(g);
        ModelParams p;
        p.drives.push_back({h, res.drive_frequency(p.g, p.omega), 0.0});
        RwaResult rwa = rwa_filter(reduced_generator(gate_atoms(g), p), res);
        auto [i, j] = secular_pair(g);
        // Exactly the pair (i, j), (j, i) survives.
        Mat k = rwa.constant;
        double stray = 0;
        for (Eigen::Index a = 0; a < k.rows(); a++) {
            for (Eigen::Index b = 0; b < k.cols(); b++) {
                if ((a == i && b == j) || (a == j && b == i)) continue;
                stray = std::max(stray, std::abs(k(a, b)));
            }
        }
        if (rwa.survivors.size() != 2) stray = std::numeric_limits<double>::infinity();
        double expect = printed_rate(g, h);
        double rel = std::max(std::abs(k(i, j) - expect), std::abs(k(j, i) - expect)) / std::abs(expect);
        add(r, "reduced", "rwa " + gate_name(g) + " single pair", stray, 0.0);
        add(r, "reduced", "rwa " + gate_name(g) + " amplitude", rel, 1e-14);
    }
}

Mat from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index r = 0;
    for (const auto &row : rows) {
        Eigen::Index c = 0;
        for (cplx v : row) m(r, c++) = v;
        r++;
    }
    return m;
}

void verify_gates(VerifyReport &r) {
    auto gate = [&](const std::string &name, const Mat &got, const Mat &want) {
        add(r, "gates", name, max_abs_deviation(got, want), kUlp);
    };
    const Mat cnot = from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    const Mat i2 = Mat::Identity(2, 2);
    Mat ctilde = Mat::Identity(8, 8);
    ctilde.bottomRightCorner(4, 4) = kron(i2, sigma1());
    Mat ccnot = Mat::Identity(8, 8);
    ccnot.bottomRightCorner(2, 2) = sigma1();
    const double s = 1 / std::sqrt(2.0);
    const Mat w = from_rows({{s, s}, {s, -s}});

    CnotTwoSteps two = assemble_cnot_two_steps();
    gate("P U(t0) = diag(1,1,-1,1)", two.p_u.matrix, from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}}));
    gate("C_NOT", two.c_not.matrix, cnot);
    gate("C_NOT x 1", assemble_three(GateKind::A).matrix, kron(cnot, i2));
    gate("1 x C_NOT", assemble_three(GateKind::B).matrix, kron(i2, cnot));
    gate("C~_NOT", assemble_three(GateKind::C).matrix, ctilde);
    // Products of four assembled gates accumulate a few roundings.
    add(r, "gates", "C~_NOT from four CNOTs", max_abs_deviation(cnot_c_from_four().matrix, ctilde), 4 * kUlp);
    gate("CC_NOT", assemble_ccnot().matrix, ccnot);
    gate("sigma3 x sigma3", sigma3_sigma3_branch().matrix, kron(sigma3(), sigma3()));
    gate("W", walsh_hadamard(), w);

    const cplx p(0.5, 0.5), m(0.5, -0.5);
    Mat v2 = from_rows({{p, m}, {m, p}});
    gate("V^2 = sigma1", v2 * v2, sigma1());
    Mat pv = printed_fourth_root_v();
    gate("printed V^4 = sigma1", pv * pv * pv * pv, sigma1());
    Mat cv = fourth_root_v();
    add(r, "gates", "unitary V^4 = sigma1", max_abs_deviation(cv * cv * cv * cv, sigma1()), 1e-15);
    add(r, "gates", "CCC_NOT circuit", max_abs_deviation(cccnot_identity_check().matrix, cccnot_matrix()), 1e-14);
}

void verify_appendix(VerifyReport &r, const VerifyOptions &o) {
    const double s = 1 / std::sqrt(2.0);
    Mat w(2, 2);
    w << s, s, s, -s;
    add(r, "appendix", "appendix W", max_abs_deviation(appendix_walsh_hadamard().matrix, w), 4 * kUlp);
    std::mt19937_64 rng(o.seed ^ 0x5eedULL);
    std::uniform_real_distribution<double> th(-5, 5), hh(0, 2), tt(0, 20);
    double worst = 0;
    for (int k = 0; k < o.appendix_draws; k++) {
        Mat u = appendix_single_qubit(th(rng), hh(rng), tt(rng)).matrix;
        worst = std::max(worst, max_abs_deviation(u.adjoint() * u, Mat::Identity(2, 2)));
    }
    add(r, "appendix", "single-qubit unitarity", worst, 1e-15);
}

}  // namespace

VerifyScope parse_scope(const std::string &name) {
    if (name == "expm") return VerifyScope::Expm;
    if (name == "decomposition") return VerifyScope::Decomposition;
    if (name == "keylemma") return VerifyScope::KeyLemma;
    if (name == "reduced") return VerifyScope::Reduced;
    if (name == "gates") return VerifyScope::Gates;
    if (name == "appendix") return VerifyScope::Appendix;
    if (name == "all") return VerifyScope::All;
    throw ConfigError("unknown verify scope '" + name + "'");
}

std::string scope_name(VerifyScope s) {
    switch (s) {
        case VerifyScope::Expm:
            return "expm";
        case VerifyScope::Decomposition:
            return "decomposition";
        case VerifyScope::KeyLemma:
            return "keylemma";
        case VerifyScope::Reduced:
            return "reduced";
        case VerifyScope::Gates:
            return "gates";
        case VerifyScope::Appendix:
            return "appendix";
        default:
            return "all";
    }
}

bool VerifyReport::all_pass() const {
    for (const Check &c : checks) {
        if (!c.pass) return false;
    }
    return !checks.empty();
}

std::vector<Check> VerifyReport::in_scope(VerifyScope s) const {
    std::vector<Check> out;
    for (const Check &c : checks) {
        if (s == VerifyScope::All || c.scope == scope_name(s)) out.push_back(c);
    }
    return out;
}

VerifyReport run_verification(VerifyScope scope, const VerifyOptions &opt) {
    opt.tr.validate();
    VerifyReport r;
    auto want = [&](VerifyScope s) { return scope == VerifyScope::All || scope == s; };
    if (want(VerifyScope::Expm)) verify_expm(r, opt);
    if (want(VerifyScope::Decomposition)) verify_decomposition(r, opt);
    if (want(VerifyScope::KeyLemma)) verify_keylemma(r, opt);
    if (want(VerifyScope::Reduced)) {
        verify_reduced(r, opt);
        verify_rwa(r);
    }
    if (want(VerifyScope::Gates)) verify_gates(r);
    if (want(VerifyScope::Appendix)) verify_appendix(r, opt);
    return r;
}

std::string verify_report_to_json(const VerifyReport &r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const Check &c : r.checks) {
        checks.push_back({{"scope", c.scope}, {"name", c.name}, {"max_dev", c.max_dev}, {"tol", c.tol}, {"pass", c.pass}});
    }
    nlohmann::json j = {{"schema", kSchema}, {"pass", r.all_pass()}, {"checks", checks}};
    return j.dump(2) + "\n";
}

}  // namespace tcq
