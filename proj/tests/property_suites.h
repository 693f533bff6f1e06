// Copyright 2026 The MWPF Authors
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

#ifndef MWPF_TESTS_PROPERTY_SUITES_H
#define MWPF_TESTS_PROPERTY_SUITES_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mwpf::props {

struct SuiteResult {
    std::string name;
    size_t cases = 0;
    size_t failures = 0;
    std::string first_failure;

    void fail(const std::string &what) {
        if (failures++ == 0) {
            first_failure = what;
        }
    }
};

// Each suite draws its instances from a seeded generator and counts one case
// per checked object (relaxer, hair matrix, direction, merge, iteration).
SuiteResult odd_row_existence(uint64_t seed, size_t target_cases);
SuiteResult unique_row_termination(uint64_t seed, size_t target_cases);
SuiteResult relaxer_invariants(uint64_t seed, size_t target_cases);
SuiteResult compose_monotonicity(uint64_t seed, size_t target_cases);
SuiteResult cluster_disjointness(uint64_t seed, size_t target_cases);
SuiteResult history_monotonicity(uint64_t seed, size_t target_cases);
SuiteResult dual_feasibility_preservation(uint64_t seed, size_t target_cases);

struct Suite {
    const char *name;
    std::function<SuiteResult(uint64_t, size_t)> run;
};

std::vector<Suite> all_suites();

}  // namespace mwpf::props

#endif
