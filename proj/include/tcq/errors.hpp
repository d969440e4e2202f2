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

#include <stdexcept>
#include <string>

namespace tcq {

/// Invalid parameters, unknown gate names, malformed schedule files.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure inside the propagator (non-finite state, unstable step).
struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A drive frequency that does not satisfy the resonance it was built for.
struct ResonanceError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace tcq
