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

#include <cstdint>
#include <string>
#include <vector>

#include "tcq/operator_algebra.hpp"

namespace tcq {

enum class VerifyScope { Expm, Decomposition, KeyLemma, Reduced, Gates, Appendix, All };

VerifyScope parse_scope(const std::string &name);
std::string scope_name(VerifyScope s);

struct VerifyOptions {
    FockTruncation tr{40, 8};
    uint64_t seed = 20260101;
    int reduced_samples = 20;
    int appendix_draws = 1000;
};

struct Check {
    std::string scope;
    std::string name;
    double max_dev = 0;
    double tol = 0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<Check> checks;
    bool all_pass() const;
    std::vector<Check> in_scope(VerifyScope s) const;
};

/// Runs the oracle-equivalence checks of one scope (or all of them).
VerifyReport run_verification(VerifyScope scope, const VerifyOptions &opt = {});

std::string verify_report_to_json(const VerifyReport &r);

}  // namespace tcq
