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

#include <string>

namespace tcq {

/// The four coupling-rate surds that appear as resonant frequencies.
enum class Surd {
    Sqrt2PlusSqrt6,    // two atoms, CZ2
    Sqrt10PlusSqrt73,  // three atoms, variant A: sqrt(10 + sqrt 73)
    OnePlusSqrt3,      // three atoms, variant B
    Sqrt3PlusSqrt10,   // three atoms, variant C
};

double surd_value(Surd s);
std::string surd_label(Surd s);
Surd parse_surd(const std::string &label);

/// Omega_j + omega = kappa g on drive j (1-based).
struct ResonanceCondition {
    int drive = 1;
    Surd surd = Surd::Sqrt2PlusSqrt6;

    double kappa() const { return surd_value(surd); }
    /// Omega_j = kappa g - omega; throws ResonanceError if not positive.
    double drive_frequency(double g, double omega) const;
    /// |Omega + omega - kappa g| within tol, else ResonanceError.
    void check(double Omega, double g, double omega, double tol) const;
};

}  // namespace tcq
