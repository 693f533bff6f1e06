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

#ifndef MWPF_SAMPLER_H
#define MWPF_SAMPLER_H

#include <array>
#include <cstdint>
#include <vector>

#include "mwpf/hypergraph.h"

namespace mwpf {

/// Philox4x64 with 10 rounds (Salmon et al., Random123). Pure function of
/// (counter, key).
std::array<uint64_t, 4> philox4x64_10(std::array<uint64_t, 4> counter, std::array<uint64_t, 2> key);

struct Shot {
    ErrorPattern error;
    Syndrome syndrome;
};

/// Draws independent edge errors with probability p.
///
/// Edge i of shot s uses word i % 4 of philox4x64_10({s, i / 4, 0, 0},
/// {seed, 0}) and is included when that word u satisfies u < p * 2^64,
/// evaluated exactly. Throws std::invalid_argument unless 0 <= p <= 1.
Shot sample_shot(const DecodingHypergraph &graph, const Weight &p, uint64_t seed, uint64_t shot);

std::vector<Shot> sample_syndromes(const DecodingHypergraph &graph, const Weight &p, size_t shots, uint64_t seed);

}  // namespace mwpf

#endif
