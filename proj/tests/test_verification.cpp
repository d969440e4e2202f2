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

#include "doctest.h"
#include "tcq/errors.hpp"
#include "tcq/verification.hpp"

using namespace tcq;

TEST_CASE("scope names") {
    for (const char *s : {"expm", "decomposition", "keylemma", "reduced", "gates", "appendix", "all"}) {
        CHECK(scope_name(parse_scope(s)) == s);
    }
    CHECK_THROWS_AS(parse_scope("everything"), ConfigError);
}

TEST_CASE("oracle suites pass") {
    VerifyOptions opt;
    opt.tr = {24, 8};
    for (VerifyScope s : {VerifyScope::Expm, VerifyScope::Decomposition, VerifyScope::KeyLemma, VerifyScope::Reduced,
                          VerifyScope::Appendix}) {
        VerifyReport r = run_verification(s, opt);
        for (const Check &c : r.checks) CHECK_MESSAGE(c.pass, c.scope << ": " << c.name << " " << c.max_dev);
        CHECK(r.all_pass());
    }
}

TEST_CASE("gate suite flags only the printed fourth root") {
    VerifyReport r = run_verification(VerifyScope::Gates);
    int failures = 0;
    for (const Check &c : r.checks) {
        if (!c.pass) {
            failures++;
            CHECK(c.name == "printed V^4 = sigma1");
        }
    }
    CHECK(failures == 1);
    CHECK_FALSE(r.all_pass());
}

TEST_CASE("report is deterministic for a fixed seed") {
    VerifyOptions opt;
    opt.tr = {16, 6};
    opt.seed = 99;
    CHECK(verify_report_to_json(run_verification(VerifyScope::Reduced, opt)) ==
          verify_report_to_json(run_verification(VerifyScope::Reduced, opt)));
}
