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

#include "tcq/term_sum.hpp"

#include <cmath>

#include "tcq/errors.hpp"

namespace tcq {

namespace {

// Two terms share a frequency when their drive powers agree and the
// coupling-rate parts agree to within this tolerance.
constexpr double kRateMergeTol = 1e-9;
constexpr double kZeroAmplitude = 1e-300;

}  // namespace

double Term::frequency(const FrequencyFrame &frame) const {
    double theta = g_rate * frame.g;
    for (int j = 0; j < kMaxDrives; j++) {
        theta += drive_power[j] * frame.drive[j];
    }
    return theta;
}

TermSum::TermSum(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

TermSum TermSum::constant(std::complex<double> c) { return TermSum({Term{c, 0, {}, 0}}); }

TermSum TermSum::drive(int j, double h, double phi) {
    if (j < 1 || j > kMaxDrives) {
        throw ConfigError("TermSum::drive: atom index out of range");
    }
    Term t{h, phi, {}, 0};
    t.drive_power[j - 1] = 1;
    return TermSum({t});
}

TermSum TermSum::cos_rate(double kappa) {
    return TermSum({Term{0.5, 0, {}, kappa}, Term{0.5, 0, {}, -kappa}});
}

TermSum TermSum::sin_rate(double kappa) {
    const std::complex<double> half_i(0, 0.5);
    return TermSum({Term{-half_i, 0, {}, kappa}, Term{half_i, 0, {}, -kappa}});
}

TermSum TermSum::conj() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term &t : terms_) {
        Term c{std::conj(t.amplitude), -t.phase, {}, -t.g_rate};
        for (int j = 0; j < kMaxDrives; j++) c.drive_power[j] = -t.drive_power[j];
        out.push_back(c);
    }
    return TermSum(std::move(out));
}

std::complex<double> TermSum::evaluate(double t, const FrequencyFrame &frame) const {
    std::complex<double> sum = 0;
    for (const Term &term : terms_) {
        sum += term.amplitude * std::polar(1.0, term.frequency(frame) * t + term.phase);
    }
    return sum;
}

TermSum operator+(const TermSum &a, const TermSum &b) {
    std::vector<Term> out = a.terms_;
    out.insert(out.end(), b.terms_.begin(), b.terms_.end());
    return TermSum(std::move(out));
}

TermSum operator-(const TermSum &a, const TermSum &b) { return a + (-1.0 * b); }

TermSum operator*(std::complex<double> s, const TermSum &a) {
    std::vector<Term> out = a.terms_;
    for (Term &t : out) t.amplitude *= s;
    return TermSum(std::move(out));
}

TermSum operator*(const TermSum &a, const TermSum &b) {
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const Term &x : a.terms_) {
        for (const Term &y : b.terms_) {
            Term p{x.amplitude * y.amplitude, x.phase + y.phase, {}, x.g_rate + y.g_rate};
            for (int j = 0; j < kMaxDrives; j++) p.drive_power[j] = x.drive_power[j] + y.drive_power[j];
            out.push_back(p);
        }
    }
    return TermSum(std::move(out));
}

void TermSum::normalize() {
    std::vector<Term> merged;
    for (const Term &t : terms_) {
        bool placed = false;
        for (Term &m : merged) {
            if (m.drive_power == t.drive_power && std::abs(m.g_rate - t.g_rate) < kRateMergeTol) {
                m.amplitude += t.amplitude * std::polar(1.0, t.phase - m.phase);
                placed = true;
                break;
            }
        }
        if (!placed) merged.push_back(t);
    }
    terms_.clear();
    for (const Term &m : merged) {
        if (std::abs(m.amplitude) > kZeroAmplitude) terms_.push_back(m);
    }
}

}  // namespace tcq
