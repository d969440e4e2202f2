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
#include <random>

#include "doctest.h"
#include "tcq/errors.hpp"
#include "tcq/gate_assembly.hpp"
#include "tcq/interaction_picture.hpp"
#include "tcq/pulse_design.hpp"

using namespace tcq;

namespace {

ModelParams random_params(int n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> h(0.001, 0.2), om(0.0, 5.0), ph(-3.0, 3.0);
    ModelParams p;
    for (int j = 0; j < n; j++) p.drives.push_back({h(rng), om(rng), ph(rng)});
    return p;
}

ModelParams on_resonance(GateKind g, double h) {
    ModelParams p;
    p.drives.push_back({h, primitive_resonance(g).drive_frequency(p.g, p.omega), 0.0});
    return p;
}

}  // namespace

TEST_CASE("parameter validation") {
    ModelParams p;
    p.delta = 1.5;
    CHECK_THROWS_AS(p.require_resonant_cavity(), ConfigError);
    ModelParams q;
    q.g = -1;
    CHECK_THROWS_AS(q.validate(2), ConfigError);
    ModelParams r;
    r.drives.resize(4);
    CHECK_THROWS_AS(r.validate(3), ConfigError);
    CHECK(ModelParams{}.drive(2).h == 0);
}

TEST_CASE("Hamiltonian is hermitian at all times") {
    FockTruncation tr{8, 2};
    std::mt19937_64 rng(7);
    ModelParams p = random_params(3, rng);
    Hamiltonian h = build_hamiltonian(3, p, tr);
    for (double t : {0.0, 0.8, 5.1}) {
        Mat m = h.at(t).data();
        CHECK(max_abs_deviation(m, m.adjoint()) < 1e-15);
    }
}

TEST_CASE("interaction generator closed form equals the oracle conjugation") {
    FockTruncation tr{20, 6};
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 3; n++) {
        ModelParams p = random_params(n, rng);
        for (double t : {0.4, 3.0}) {
            Operator u = oracle_expm(coupling_operator(n, tr), cplx(0, -t * p.g));
            Operator f = u.adjoint() * drive_frame(n, p, tr, t) * u;
            CHECK(masked_max_deviation(interaction_generator(n, p, tr, t), f) < 1e-10);
        }
    }
}

TEST_CASE("reduced generators match the numerical ground-sector projection") {
    FockTruncation tr{14, 6};
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> tt(0, 60);
    for (int n = 2; n <= 3; n++) {
        ModelParams p = random_params(n, rng);
        ReducedGenerator gen = reduced_generator(n, p);
        for (int k = 0; k < 5; k++) {
            double t = tt(rng);
            Mat r = gen.evaluate(t);
            CHECK(max_abs_deviation(r, ground_sector_projection(n, p, tr, t)) < 1e-10);
            CHECK(max_abs_deviation(r, ground_sector_projection(n, p, tr, t, ExpmMethod::ClosedForm)) < 1e-10);
            CHECK(max_abs_deviation(r, r.adjoint()) < 1e-14);
        }
    }
    CHECK_THROWS_AS(reduced_generator(1, ModelParams{}), ConfigError);
}

TEST_CASE("RWA keeps exactly the predicted pair") {
    const double h = 0.01;
    for (GateKind g : {GateKind::CZ2, GateKind::A, GateKind::B, GateKind::C}) {
        RwaResult rwa = rwa_filter(reduced_generator(gate_atoms(g), on_resonance(g, h)), primitive_resonance(g));
        auto [i, j] = secular_pair(g);
        REQUIRE(rwa.survivors.size() == 2);
        CHECK(((rwa.survivors[0].row == i && rwa.survivors[0].col == j) || (rwa.survivors[0].row == j && rwa.survivors[0].col == i)));
        CHECK(std::abs(rwa.constant(i, j)) == doctest::Approx(rabi_rate(g, h)));
        CHECK(rwa.constant(i, j).real() < 0);
        CHECK(rwa.near_secular.empty());
    }
}

TEST_CASE("RWA rate is linear in h") {
    for (GateKind g : {GateKind::CZ2, GateKind::A}) {
        auto [i, j] = secular_pair(g);
        cplx a = rwa_filter(reduced_generator(gate_atoms(g), on_resonance(g, 0.01)), primitive_resonance(g)).constant(i, j);
        cplx b = rwa_filter(reduced_generator(gate_atoms(g), on_resonance(g, 0.03)), primitive_resonance(g)).constant(i, j);
        CHECK(std::abs(b - 3.0 * a) < 1e-16);
    }
}

TEST_CASE("off-resonance drive leaves no secular term") {
    ModelParams p;
    p.drives.push_back({0.01, 0.77, 0});
    CHECK(rwa_filter(reduced_generator(2, p), primitive_resonance(GateKind::CZ2)).empty == false);
    // The filter substitutes the resonant frequency, so the check above still fires.
    // A different resonance keeps nothing for two atoms.
    ResonanceCondition other{1, Surd::Sqrt3PlusSqrt10};
    CHECK(rwa_filter(reduced_generator(2, p), other).empty);
}

TEST_CASE("drive index must exist") {
    ResonanceCondition r{3, Surd::Sqrt2PlusSqrt6};
    CHECK_THROWS_AS(rwa_filter(reduced_generator(2, on_resonance(GateKind::CZ2, 0.01)), r), ConfigError);
}
