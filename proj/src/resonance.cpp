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

#include "tcq/resonance.hpp"

#include <cmath>

#include "tcq/errors.hpp"

namespace tcq {

double surd_value(Surd s) {
    switch (s) {
        case Surd::Sqrt2PlusSqrt6:
            return std::sqrt(2.0) + std::sqrt(6.0);
        case Surd::Sqrt10PlusSqrt73:
            return std::sqrt(10.0 + std::sqrt(73.0));
        case Surd::OnePlusSqrt3:
            return 1.0 + std::sqrt(3.0);
        case Surd::Sqrt3PlusSqrt10:
            return std::sqrt(3.0) + std::sqrt(10.0);
    }
    return 0;
}

std::string surd_label(Surd s) {
    switch (s) {
        case Surd::Sqrt2PlusSqrt6:
            return "sqrt2+sqrt6";
        case Surd::Sqrt10PlusSqrt73:
            return "sqrt(10+sqrt73)";
        case Surd::OnePlusSqrt3:
            return "1+sqrt3";
        case Surd::Sqrt3PlusSqrt10:
            return "sqrt3+sqrt10";
    }
    return "?";
}

Surd parse_surd(const std::string &label) {
    for (Surd s : {Surd::Sqrt2PlusSqrt6, Surd::Sqrt10PlusSqrt73, Surd::OnePlusSqrt3, Surd::Sqrt3PlusSqrt10}) {
        if (surd_label(s) == label) return s;
    }
    throw ConfigError("unknown resonance surd '" + label + "'");
}

double ResonanceCondition::drive_frequency(double g, double omega) const {
    double Omega = kappa() * g - omega;
    if (!(Omega > 0)) {
        throw ResonanceError("resonance " + surd_label(surd) + " needs kappa g > omega (g=" + std::to_string(g) +
                             ", omega=" + std::to_string(omega) + ")");
    }
    return Omega;
}

void ResonanceCondition::check(double Omega, double g, double omega, double tol) const {
    double miss = Omega + omega - kappa() * g;
    if (!(std::abs(miss) <= tol)) {
        throw ResonanceError("drive " + std::to_string(drive) + " misses resonance " + surd_label(surd) + " by " +
                             std::to_string(miss));
    }
}

}  // namespace tcq
