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

#ifndef MWPF_TESTS_FIXTURES_H
#define MWPF_TESTS_FIXTURES_H

#include "mwpf/hypergraph.h"

namespace mwpf::fixtures {

/// Four vertices, e0 = {0,2}, e1 = {0,1}, e2 = {1,2,3}, unit weights, defect {3}.
inline DecodingHypergraph f1_graph() {
    return DecodingHypergraph(4, {{{0, 2}, 1}, {{0, 1}, 1}, {{1, 2, 3}, 1}});
}
inline Syndrome f1_syndrome() {
    return Syndrome({3});
}

/// Triangle with unit weights.
inline DecodingHypergraph f2_graph() {
    return DecodingHypergraph(3, {{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, 1}});
}

/// One vertex with two boundary edges of weights 2 and 5.
inline DecodingHypergraph f3_graph() {
    return DecodingHypergraph(1, {{{0}, 2}, {{0}, 5}});
}

/// Distance-3 repetition code: boundary, bulk, boundary.
inline DecodingHypergraph f4_graph() {
    return DecodingHypergraph(2, {{{0}, 1}, {{0, 1}, 1}, {{1}, 1}});
}

}  // namespace mwpf::fixtures

#endif
