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

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace tcq {

constexpr int kMaxDrives = 3;

/// Numerical frequencies that turn the symbolic exponents into rad/time.
/// drive[j] is Omega_j + omega for atom j+1.
struct FrequencyFrame {
    std::array<double, kMaxDrives> drive{};
    double g = 1;
};

/// amplitude * exp(i (theta t + phase)) with
/// theta = sum_j drive_power[j] (Omega_j + omega) + g_rate * g.
struct Term {
    std::complex<double> amplitude;
    double phase = 0;
    std::array<int, kMaxDrives> drive_power{};
    double g_rate = 0;

    double frequency(const FrequencyFrame &frame) const;
};

/// Finite sum of exponential terms, closed under sum, product and conjugation.
class TermSum {
   public:
    TermSum() = default;
    explicit TermSum(std::vector<Term> terms);

    static TermSum constant(std::complex<double> c);
    /// h exp(i((Omega_j + omega) t + phi)) for atom j (1-based).
    static TermSum drive(int j, double h, double phi);
    /// cos(kappa g t) and sin(kappa g t) as exponential pairs.
    static TermSum cos_rate(double kappa);
    static TermSum sin_rate(double kappa);

    const std::vector<Term> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    TermSum conj() const;
    std::complex<double> evaluate(double t, const FrequencyFrame &frame) const;

    friend TermSum operator+(const TermSum &a, const TermSum &b);
    friend TermSum operator-(const TermSum &a, const TermSum &b);
    friend TermSum operator*(const TermSum &a, const TermSum &b);
    friend TermSum operator*(std::complex<double> s, const TermSum &a);

   private:
    void normalize();

    std::vector<Term> terms_;
};

}  // namespace tcq
