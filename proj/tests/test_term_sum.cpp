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
#include "tcq/resonance.hpp"
#include "tcq/term_sum.hpp"

using namespace tcq;
using cplx = std::complex<double>;

namespace {

FrequencyFrame frame_with(double d1, double d2 = 0, double d3 = 0, double g = 1) {
    FrequencyFrame f;
    f.drive = {d1, d2, d3};
    f.g = g;
    return f;
}

}  // namespace

TEST_CASE("drive term evaluates to h exp(i(nu t + phi))") {
    TermSum d = TermSum::drive(1, 0.3, 0.4);
    FrequencyFrame f = frame_with(2.5);
    for (double t : {0.0, 1.0, 17.3}) {
        CHECK(std::abs(d.evaluate(t, f) - 0.3 * std::polar(1.0, 2.5 * t + 0.4)) < 1e-15);
    }
    CHECK(std::abs(d.conj().evaluate(1.0, f) - std::conj(d.evaluate(1.0, f))) < 1e-15);
}

TEST_CASE("trigonometric rates") {
    FrequencyFrame f = frame_with(0, 0, 0, 0.7);
    for (double t : {0.0, 0.9, 13.0}) {
        CHECK(std::abs(TermSum::cos_rate(2.0).evaluate(t, f) - std::cos(2.0 * 0.7 * t)) < 1e-14);
        CHECK(std::abs(TermSum::sin_rate(2.0).evaluate(t, f) - std::sin(2.0 * 0.7 * t)) < 1e-14);
    }
    // cos^2 + sin^2 collapses to one constant term.
    TermSum one = TermSum::cos_rate(3.0) * TermSum::cos_rate(3.0) + TermSum::sin_rate(3.0) * TermSum::sin_rate(3.0);
    REQUIRE(one.terms().size() == 1);
    CHECK(std::abs(one.terms()[0].amplitude - 1.0) < 1e-15);
}

TEST_CASE("algebra agrees with pointwise evaluation") {
    TermSum a = TermSum::drive(1, 0.2, 0.1) * TermSum::cos_rate(1.5) + TermSum::constant(cplx(0.3, -0.2));
    TermSum b = TermSum::drive(2, 0.05, -1.0).conj() * TermSum::sin_rate(0.4);
    FrequencyFrame f = frame_with(1.1, 2.7);
    for (double t : {0.0, 3.3, 41.0}) {
        cplx ea = a.evaluate(t, f), eb = b.evaluate(t, f);
        CHECK(std::abs((a * b).evaluate(t, f) - ea * eb) < 1e-14);
        CHECK(std::abs((a - b).evaluate(t, f) - (ea - eb)) < 1e-14);
        CHECK(std::abs((cplx(0, 2) * a).evaluate(t, f) - cplx(0, 2) * ea) < 1e-14);
    }
    CHECK((a - a).empty());
}

TEST_CASE("surds") {
    CHECK(surd_value(Surd::Sqrt2PlusSqrt6) == doctest::Approx(std::sqrt(2.0) + std::sqrt(6.0)));
    CHECK(surd_value(Surd::Sqrt10PlusSqrt73) == doctest::Approx(4.30627).epsilon(1e-5));
    CHECK(surd_value(Surd::OnePlusSqrt3) == doctest::Approx(1 + std::sqrt(3.0)));
    CHECK(surd_value(Surd::Sqrt3PlusSqrt10) == doctest::Approx(std::sqrt(3.0) + std::sqrt(10.0)));
    for (Surd s : {Surd::Sqrt2PlusSqrt6, Surd::Sqrt10PlusSqrt73, Surd::OnePlusSqrt3, Surd::Sqrt3PlusSqrt10}) {
        CHECK(parse_surd(surd_label(s)) == s);
    }
    CHECK_THROWS_AS(parse_surd("sqrt5"), ConfigError);
}

TEST_CASE("resonance drive frequency") {
    ResonanceCondition r{1, Surd::Sqrt2PlusSqrt6};
    CHECK(r.drive_frequency(1, 1) == doctest::Approx(2.8637).epsilon(1e-4));
    CHECK(r.drive_frequency(2, 1) == doctest::Approx(2 * r.kappa() - 1));
    CHECK_THROWS_AS(r.drive_frequency(1, 10), ResonanceError);
    CHECK_NOTHROW(r.check(r.drive_frequency(1, 1), 1, 1, 1e-12));
    CHECK_THROWS_AS(r.check(r.drive_frequency(1, 1) + 1e-6, 1, 1, 1e-9), ResonanceError);
}
