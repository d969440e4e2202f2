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

#include "tcq/simulator.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <thread>
#include <tuple>

#include "tcq/errors.hpp"
#include "tcq/spin_decomposition.hpp"

namespace tcq {

namespace {

// Manifolds whose amplitudes all stay below this are left out of the step.
// One RK4 step reaches at most four manifolds above the occupied ones.
constexpr double kWindowThreshold = 1e-20;
constexpr int kWindowMargin = 4;
constexpr int kResyncEvery = 1024;
constexpr double kStabilityLimit = 0.1;
constexpr int kPairSamples = 256;

Mat basis_change(int n) {
    switch (n) {
        case 2:
            return basis_change_two().matrix;
        case 3:
            return basis_change_three().matrix;
        default:
            return Mat::Identity(1 << n, 1 << n);
    }
}

std::vector<int> subspace_indices(int n, const FockTruncation &tr, int photon_init) {
    std::vector<int> idx;
    for (int x = 0; x < (1 << n); x++) idx.push_back(x * tr.dim() + photon_init);
    return idx;
}

}  // namespace

void SimulationConfig::validate() const {
    tr.validate();
    if (!(step > 0) || !std::isfinite(step)) {
        throw ConfigError("integration step must be positive");
    }
    if (photon_init < 0 || photon_init > tr.trusted_max()) {
        throw ConfigError("photon_init must lie inside the trusted photon range");
    }
    if (report_grid < 0) {
        throw ConfigError("report_grid must be non-negative");
    }
}

DressedFrame::DressedFrame(int n, const FockTruncation &tr, double g) : n_(n), g_(g), tr_(tr) {
    if (n < 1 || n > 3) {
        throw ConfigError("DressedFrame: n must be 1, 2 or 3");
    }
    tr_.validate();
    const int D = tr_.dim();
    dim_ = (1 << n) * D;
    members_.assign(static_cast<size_t>(n + D), {});
    for (int idx = 0; idx < dim_; idx++) {
        members_[static_cast<size_t>(manifold_of(idx))].push_back(idx);
    }

    Mat a = coupling_operator(n, tr_).data();
    energies_.resize(dim_);
    int offset = 0;
    for (const auto &mem : members_) {
        int s = static_cast<int>(mem.size());
        Mat block(s, s);
        for (int r = 0; r < s; r++) {
            for (int c = 0; c < s; c++) block(r, c) = a(mem[static_cast<size_t>(r)], mem[static_cast<size_t>(c)]);
        }
        Eigen::SelfAdjointEigenSolver<Mat> eig(block);
        vectors_.push_back(eig.eigenvectors());
        energies_.segment(offset, s) = eig.eigenvalues();
        start_.push_back(offset);
        offset += s;
    }
    start_.push_back(offset);

    for (int j = 1; j <= n; j++) {
        Mat up = kron(pauli_embed(Pauli::Plus, j, n).data(), Mat::Identity(D, D));
        std::vector<Mat> blocks;
        for (int e = 0; e + 1 < manifold_count(); e++) {
            const auto &lo = members_[static_cast<size_t>(e)];
            const auto &hi = members_[static_cast<size_t>(e + 1)];
            Mat s(hi.size(), lo.size());
            for (size_t r = 0; r < hi.size(); r++) {
                for (size_t c = 0; c < lo.size(); c++) s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = up(hi[r], lo[c]);
            }
            blocks.push_back(vectors_[static_cast<size_t>(e + 1)].adjoint() * s * vectors_[static_cast<size_t>(e)]);
        }
        raise_.push_back(std::move(blocks));
    }
}

int DressedFrame::manifold_of(int computational_index) const {
    const int D = tr_.dim();
    int atoms = computational_index / D;
    int photons = computational_index % D;
    // Bit value 0 is |+>, the excited level.
    return n_ - std::popcount(static_cast<unsigned>(atoms)) + photons;
}

const Mat &DressedFrame::raise_block(int j, int e) const {
    return raise_.at(static_cast<size_t>(j - 1)).at(static_cast<size_t>(e));
}

Mat DressedFrame::to_dressed(const Mat &psi) const {
    Mat c(dim_, psi.cols());
    for (size_t e = 0; e < members_.size(); e++) {
        const auto &mem = members_[e];
        Mat part(mem.size(), psi.cols());
        for (size_t r = 0; r < mem.size(); r++) part.row(static_cast<Eigen::Index>(r)) = psi.row(mem[r]);
        c.middleRows(start_[e], static_cast<Eigen::Index>(mem.size())) = vectors_[e].adjoint() * part;
    }
    return c;
}

Mat DressedFrame::from_dressed(const Mat &c) const {
    Mat psi(dim_, c.cols());
    for (size_t e = 0; e < members_.size(); e++) {
        const auto &mem = members_[e];
        Mat part = vectors_[e] * c.middleRows(start_[e], static_cast<Eigen::Index>(mem.size()));
        for (size_t r = 0; r < mem.size(); r++) psi.row(mem[r]) = part.row(static_cast<Eigen::Index>(r));
    }
    return psi;
}

namespace {

struct ActiveDrive {
    int atom;
    double h;
    double nu;  // Omega + omega
    double phi;
};

class Rk4Engine {
   public:
    Rk4Engine(const DressedFrame &frame, std::vector<ActiveDrive> drives)
        : frame_(frame), drives_(std::move(drives)) {
        for (const ActiveDrive &d : drives_) {
            std::vector<Mat> lowers;
            for (int e = 0; e + 1 < frame_.manifold_count(); e++) lowers.push_back(frame_.raise_block(d.atom, e).adjoint());
            lower_.push_back(std::move(lowers));
        }
    }

    // Highest manifold in [0, top] carrying amplitude above threshold.
    int highest_active(const Mat &c, int top) const {
        for (int e = top; e > 0; e--) {
            if (c.middleRows(frame_.manifold_start(e), frame_.manifold_size(e)).cwiseAbs().maxCoeff() > kWindowThreshold) {
                return e;
            }
        }
        return 0;
    }

    // k = -i u . (sum_j p_j M_j + conj(p_j) M_j^dagger) (conj(u) . c) on manifolds [0, top].
    void derivative(double t, const Eigen::VectorXcd &u, const Mat &c, int top, Mat &k) {
        const int rows = frame_.manifold_start(top + 1);
        w_.resize(c.rows(), c.cols());
        w_.topRows(rows).array() = c.topRows(rows).array().colwise() * u.head(rows).conjugate().array();
        k.topRows(rows).setZero();
        for (size_t d = 0; d < drives_.size(); d++) {
            const ActiveDrive &dr = drives_[d];
            cplx p = dr.h * std::polar(1.0, dr.nu * t + dr.phi);
            cplx pc = std::conj(p);
            for (int e = 0; e <= top; e++) {
                auto we = w_.middleRows(frame_.manifold_start(e), frame_.manifold_size(e));
                if (e + 1 <= top) {
                    k.middleRows(frame_.manifold_start(e + 1), frame_.manifold_size(e + 1)).noalias() +=
                        (p * frame_.raise_block(dr.atom, e)) * we;
                }
                if (e >= 1) {
                    k.middleRows(frame_.manifold_start(e - 1), frame_.manifold_size(e - 1)).noalias() +=
                        (pc * lower_[d][static_cast<size_t>(e - 1)]) * we;
                }
            }
        }
        k.topRows(rows).array().colwise() *= (u.head(rows) * cplx(0, -1)).array();
    }

    const DressedFrame &frame_;
    std::vector<ActiveDrive> drives_;
    std::vector<std::vector<Mat>> lower_;
    Mat w_;
};

double outside_norm_sq(const Mat &psi, const FockTruncation &tr, int photon) {
    double sum = 0;
    for (Eigen::Index r = 0; r < psi.rows(); r++) {
        if (r % tr.dim() != photon) sum += psi.row(r).squaredNorm();
    }
    return sum;
}

struct StateRun {
    Mat psi;
    long steps = 0;
    int manifolds_used = 0;
};

// Called with (t, psi) at `count` evenly spaced steps.
struct Observer {
    int count = 0;
    std::function<void(double, const Mat &)> fn;
};

StateRun propagate_state(const DressedFrame &frame, const ModelParams &params, double t0, double duration,
                         double step, const Mat &psi0, const std::vector<Observer> &observers = {}) {
    if (!(step > 0)) throw ConfigError("integration step must be positive");
    if (!(duration >= 0) || !std::isfinite(duration)) throw ConfigError("segment duration must be finite");
    std::vector<ActiveDrive> drives;
    double hsum = 0;
    for (int j = 1; j <= frame.n_atoms(); j++) {
        Drive d = params.drive(j);
        if (d.h == 0) continue;
        drives.push_back({j, d.h, d.Omega + params.omega, d.phi});
        hsum += d.h;
    }
    if (step * hsum >= kStabilityLimit) {
        throw IntegrationError("step * |F| = " + std::to_string(step * hsum) + " violates the stability guard (< 0.1)");
    }

    Mat c = frame.to_dressed(psi0);
    StateRun run;
    long nsteps = duration > 0 ? static_cast<long>(std::ceil(duration / step - 1e-9)) : 0;
    if (drives.empty() || nsteps == 0) {
        run.psi = psi0;
        run.manifolds_used = frame.manifold_count();
        return run;
    }
    const double dt = duration / static_cast<double>(nsteps);
    Rk4Engine eng(frame, drives);

    const int last = frame.manifold_count() - 1;
    int top = std::min(last, eng.highest_active(c, last) + kWindowMargin);

    const Eigen::VectorXd &d = frame.energies();
    const double g = frame.g();
    auto phases_at = [&](double t) {
        Eigen::VectorXcd u(d.size());
        for (Eigen::Index a = 0; a < d.size(); a++) u(a) = std::polar(1.0, g * t * d(a));
        return u;
    };
    Eigen::VectorXcd half(d.size());
    for (Eigen::Index a = 0; a < d.size(); a++) half(a) = std::polar(1.0, g * 0.5 * dt * d(a));

    Mat k1 = Mat::Zero(c.rows(), c.cols()), k2 = k1, k3 = k1, k4 = k1, tmp = k1;
    Eigen::VectorXcd u = phases_at(t0);
    std::vector<long> every;
    for (const Observer &o : observers) every.push_back(o.count > 0 ? std::max(1L, nsteps / o.count) : 0);
    for (long s = 0; s < nsteps; s++) {
        double t = t0 + static_cast<double>(s) * dt;
        if (s % kResyncEvery == 0) {
            u = phases_at(t);
            if (!c.allFinite()) throw IntegrationError("non-finite state during integration");
        }
        if (top < last) top = std::max(top, std::min(last, eng.highest_active(c, top) + kWindowMargin));
        const int rows = frame.manifold_start(top + 1);
        Eigen::VectorXcd u_mid = u.cwiseProduct(half);
        Eigen::VectorXcd u_end = u_mid.cwiseProduct(half);

        eng.derivative(t, u, c, top, k1);
        tmp.topRows(rows) = c.topRows(rows) + (0.5 * dt) * k1.topRows(rows);
        eng.derivative(t + 0.5 * dt, u_mid, tmp, top, k2);
        tmp.topRows(rows) = c.topRows(rows) + (0.5 * dt) * k2.topRows(rows);
        eng.derivative(t + 0.5 * dt, u_mid, tmp, top, k3);
        tmp.topRows(rows) = c.topRows(rows) + dt * k3.topRows(rows);
        eng.derivative(t + dt, u_end, tmp, top, k4);
        c.topRows(rows) += (dt / 6) * (k1.topRows(rows) + 2.0 * k2.topRows(rows) + 2.0 * k3.topRows(rows) + k4.topRows(rows));
        u = u_end;

        Mat psi;
        for (size_t o = 0; o < observers.size(); o++) {
            if (every[o] == 0 || (s + 1) % every[o] != 0) continue;
            if (psi.size() == 0) psi = frame.from_dressed(c);
            observers[o].fn(t + dt, psi);
        }
    }
    if (!c.allFinite()) throw IntegrationError("non-finite state at the end of integration");
    run.psi = frame.from_dressed(c);
    run.steps = nsteps;
    run.manifolds_used = top + 1;
    return run;
}

double columns_defect(const Mat &cols) {
    Mat gram = cols.adjoint() * cols;
    return (gram - Mat::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

namespace {

Propagation propagate_observed(const DressedFrame &frame, const ModelParams &params, double t0, double duration,
                               double step, const std::vector<int> &initial, const std::vector<Observer> &obs) {
    Mat psi0 = Mat::Zero(frame.dim(), static_cast<Eigen::Index>(initial.size()));
    for (size_t c = 0; c < initial.size(); c++) psi0(initial[c], static_cast<Eigen::Index>(c)) = 1;
    StateRun run = propagate_state(frame, params, t0, duration, step, psi0, obs);
    Propagation out;
    out.columns = std::move(run.psi);
    out.initial = initial;
    out.unitarity_defect = columns_defect(out.columns);
    out.steps = run.steps;
    out.duration = duration;
    out.manifolds_used = run.manifolds_used;
    return out;
}

Observer leakage_observer(const DressedFrame &frame, const std::vector<int> &initial, int report_grid,
                          std::vector<std::pair<double, double>> *samples) {
    int D = frame.dim() >> frame.n_atoms();
    FockTruncation tr{D - 1, 0};
    int photon = initial.empty() ? 0 : initial.front() % D;
    return {report_grid, [=](double t, const Mat &psi) {
                samples->emplace_back(t, std::sqrt(outside_norm_sq(psi, tr, photon)));
            }};
}

}  // namespace

Propagation propagate(const DressedFrame &frame, const ModelParams &params, double t0, double duration,
                      double step, const std::vector<int> &initial, int report_grid,
                      std::vector<std::pair<double, double>> *leakage_samples) {
    std::vector<Observer> obs;
    if (report_grid > 0 && leakage_samples) obs.push_back(leakage_observer(frame, initial, report_grid, leakage_samples));
    return propagate_observed(frame, params, t0, duration, step, initial, obs);
}

Propagation integrate(const SimulationConfig &cfg, const PulseSchedule &schedule) {
    cfg.validate();
    schedule.validate();
    schedule.params.require_resonant_cavity();
    const int n = schedule.n_atoms;
    DressedFrame frame(n, cfg.tr, schedule.params.g);
    std::vector<int> initial;
    if (cfg.all_columns) {
        for (int i = 0; i < frame.dim(); i++) initial.push_back(i);
    } else {
        initial = subspace_indices(n, cfg.tr, cfg.photon_init);
    }
    Mat psi = Mat::Zero(frame.dim(), static_cast<Eigen::Index>(initial.size()));
    for (size_t c = 0; c < initial.size(); c++) psi(initial[c], static_cast<Eigen::Index>(c)) = 1;

    Propagation out;
    out.initial = initial;
    double t = 0;
    for (const Segment &seg : schedule.segments) {
        if (!seg.is_drive()) {
            throw ConfigError("integrate() plays drive segments only; use simulate() for frame gates");
        }
        StateRun run = propagate_state(frame, schedule.segment_params(seg), t, seg.duration, cfg.step, psi);
        psi = std::move(run.psi);
        out.steps += run.steps;
        out.manifolds_used = std::max(out.manifolds_used, run.manifolds_used);
        t += seg.duration;
    }
    out.columns = std::move(psi);
    out.duration = t;
    out.unitarity_defect = columns_defect(out.columns);
    return out;
}

ExtractedGate extract_qubit_gate(const Mat &columns, int n, const FockTruncation &tr, int photon_init) {
    const int q = 1 << n;
    if (columns.rows() != q * tr.dim() || columns.cols() != q) {
        throw ConfigError("extract_qubit_gate: expected a " + std::to_string(q * tr.dim()) + " x " +
                          std::to_string(q) + " column block");
    }
    ExtractedGate out;
    out.computational.resize(q, q);
    std::vector<int> rows = subspace_indices(n, tr, photon_init);
    double outside = 0;
    for (int x = 0; x < q; x++) {
        double inside = 0;
        for (int y = 0; y < q; y++) {
            out.computational(y, x) = columns(rows[static_cast<size_t>(y)], x);
            inside += std::norm(out.computational(y, x));
        }
        outside += std::max(0.0, columns.col(x).squaredNorm() - inside);
    }
    Mat t = basis_change(n);
    out.phi = t.adjoint() * out.computational * t;
    out.leakage = std::sqrt(outside);
    out.subspace_nonunitarity = (out.computational.adjoint() * out.computational - Mat::Identity(q, q)).cwiseAbs().maxCoeff();
    return out;
}

ExtractedGate extract_qubit_gate(const Operator &u_full, int n, int photon_init) {
    if (!u_full.fock()) {
        throw ConfigError("extract_qubit_gate: operator has no photon space");
    }
    const FockTruncation &tr = *u_full.fock();
    std::vector<int> cols = subspace_indices(n, tr, photon_init);
    Mat block(u_full.dim(), static_cast<Eigen::Index>(cols.size()));
    for (size_t c = 0; c < cols.size(); c++) block.col(static_cast<Eigen::Index>(c)) = u_full.data().col(cols[c]);
    return extract_qubit_gate(block, n, tr, photon_init);
}

std::pair<int, int> dominant_pair(const Mat &g) {
    std::pair<int, int> best{0, 1};
    double best_val = -1;
    for (int i = 0; i < g.rows(); i++) {
        for (int j = i + 1; j < g.cols(); j++) {
            double v = std::abs(g(i, j)) + std::abs(g(j, i));
            if (v > best_val) {
                best_val = v;
                best = {i, j};
            }
        }
    }
    return best;
}

GateReport simulate(const PulseSchedule &schedule, const SimulationConfig &cfg) {
    auto start = std::chrono::steady_clock::now();
    cfg.validate();
    schedule.validate();
    schedule.params.require_resonant_cavity();
    const int n = schedule.n_atoms;
    const int q = 1 << n;
    QubitGate target = target_gate(parse_gate(schedule.target));
    if (target.matrix.rows() != q) {
        throw ConfigError("schedule target " + schedule.target + " does not act on " + std::to_string(n) + " atoms");
    }

    DressedFrame frame(n, cfg.tr, schedule.params.g);
    std::vector<int> initial = subspace_indices(n, cfg.tr, cfg.photon_init);
    using Key = std::tuple<int, double, double, double, double>;
    std::map<Key, size_t> cache;

    GateReport rep;
    rep.target = schedule.target;
    rep.n_atoms = n;
    rep.params = schedule.params;
    rep.tr = cfg.tr;
    rep.step = cfg.step;
    Mat total = Mat::Identity(q, q);
    int drive_segments = 0;
    for (size_t i = 0; i < schedule.segments.size(); i++) {
        const Segment &seg = schedule.segments[i];
        if (!seg.is_drive()) {
            total = frame_gate_matrix(seg.gate, seg.qubit, n) * total;
            continue;
        }
        drive_segments++;
        Key key{seg.drive, seg.Omega, seg.phi, seg.h, seg.duration};
        SegmentReport sr;
        auto hit = cache.find(key);
        if (hit != cache.end()) {
            sr = rep.segments[hit->second];
            sr.cached = true;
        } else {
            // Largest |G_ij| seen along the pulse. A half pulse ends with its
            // pair back on the diagonal, so the end point alone hides it.
            Eigen::MatrixXd peaks = Eigen::MatrixXd::Zero(q, q);
            std::vector<Observer> obs{{kPairSamples, [&](double, const Mat &psi) {
                                           Mat phi = extract_qubit_gate(psi, n, cfg.tr, cfg.photon_init).phi;
                                           peaks = peaks.cwiseMax(phi.cwiseAbs());
                                       }}};
            if (cfg.report_grid > 0) obs.push_back(leakage_observer(frame, initial, cfg.report_grid, &sr.leakage_samples));
            Propagation p = propagate_observed(frame, schedule.segment_params(seg), 0.0, seg.duration, cfg.step,
                                               initial, obs);
            ExtractedGate ex = extract_qubit_gate(p.columns, n, cfg.tr, cfg.photon_init);
            sr.primitive = seg.primitive;
            sr.duration = seg.duration;
            sr.steps = p.steps;
            sr.leakage = ex.leakage;
            sr.subspace_nonunitarity = ex.subspace_nonunitarity;
            sr.unitarity_defect = p.unitarity_defect;
            sr.manifolds_used = p.manifolds_used;
            sr.phi_block = ex.phi;
            sr.dominant = dominant_pair(peaks.cast<cplx>());
            if (!seg.primitive.empty()) {
                sr.fidelity = phase_invariant_fidelity(target_gate(parse_gate(seg.primitive)).matrix, ex.phi);
            }
            cache.emplace(key, rep.segments.size());
        }
        sr.index = static_cast<int>(i);
        total = sr.phi_block * total;
        rep.unitarity_defect = std::max(rep.unitarity_defect, sr.unitarity_defect);
        rep.segments.push_back(std::move(sr));
    }

    rep.achieved = total;
    Mat t = basis_change(n);
    rep.achieved_computational = t * total * t.adjoint();
    rep.fidelity = phase_invariant_fidelity(target.matrix, total);
    if (drive_segments == 1) {
        for (const SegmentReport &s : rep.segments) rep.leakage = s.leakage;
    } else {
        rep.leakage = std::sqrt(std::max(0.0, static_cast<double>(q) - total.squaredNorm()));
    }
    rep.subspace_nonunitarity = (total.adjoint() * total - Mat::Identity(q, q)).cwiseAbs().maxCoeff();
    rep.gate_time = schedule.drive_time();
    rep.dominant = drive_segments == 1 ? rep.segments.back().dominant : dominant_pair(total);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<SweepRow> fidelity_sweep(GateKind gate, const std::vector<double> &h_list, const SimulationConfig &cfg) {
    if (h_list.empty()) {
        throw ConfigError("fidelity_sweep needs at least one h value");
    }
    cfg.validate();
    auto run_one = [&](double h) {
        DesignParams dp{h, cfg.params.g, cfg.params.omega, cfg.params.delta};
        PulseSchedule s = design(gate, dp);
        SweepRow row;
        row.report = simulate(s, cfg);
        row.h_over_g = h / cfg.params.g;
        row.fidelity = row.report.fidelity;
        row.leakage = row.report.leakage;
        row.gate_time = row.report.gate_time;
        return row;
    };
    size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<SweepRow> rows(h_list.size());
    for (size_t begin = 0; begin < h_list.size(); begin += workers) {
        size_t end = std::min(h_list.size(), begin + workers);
        std::vector<std::future<SweepRow>> futures;
        for (size_t i = begin; i < end; i++) {
            futures.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, run_one, h_list[i]));
        }
        for (size_t i = begin; i < end; i++) rows[i] = futures[i - begin].get();
    }
    return rows;
}

bool fidelity_improves_as_h_decreases(const std::vector<SweepRow> &rows) {
    std::vector<SweepRow> sorted = rows;
    std::sort(sorted.begin(), sorted.end(), [](const SweepRow &a, const SweepRow &b) { return a.h_over_g > b.h_over_g; });
    for (size_t i = 1; i < sorted.size(); i++) {
        if (!(sorted[i].fidelity > sorted[i - 1].fidelity)) return false;
    }
    return sorted.size() >= 2;
}

}  // namespace tcq
