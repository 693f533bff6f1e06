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

#include "mwpf/sampler.h"

#include <stdexcept>

namespace mwpf {

namespace {

constexpr uint64_t kM0 = 0xD2E7470EE14C6C93ULL;
constexpr uint64_t kM1 = 0xCA5A826395121157ULL;
constexpr uint64_t kW0 = 0x9E3779B97F4A7C15ULL;
constexpr uint64_t kW1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(uint64_t a, uint64_t b, uint64_t &hi, uint64_t &lo) {
    unsigned __int128 p = (unsigned __int128)a * b;
    hi = (uint64_t)(p >> 64);
    lo = (uint64_t)p;
}

}  // namespace

std::array<uint64_t, 4> philox4x64_10(std::array<uint64_t, 4> x, std::array<uint64_t, 2> k) {
    for (int round = 0; round < 10; round++) {
        uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kM0, x[0], hi0, lo0);
        mulhilo(kM1, x[2], hi1, lo1);
        x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
        k[0] += kW0;
        k[1] += kW1;
    }
    return x;
}

Shot sample_shot(const DecodingHypergraph &graph, const Weight &p, uint64_t seed, uint64_t shot) {
    if (p.is_negative() || p > Weight(1)) {
        throw std::invalid_argument("error rate must lie in [0, 1]");
    }
    // u < (a / b) * 2^64  <=>  u * b < a * 2^64
    mpz_class a = p.numerator(), b = p.denominator();
    bool small = a.fits_ulong_p() && b.fits_ulong_p() && sizeof(unsigned long) == 8;
    unsigned __int128 a_shift = small ? (unsigned __int128)a.get_ui() << 64 : 0;
    uint64_t b_small = small ? b.get_ui() : 0;
    mpz_class a_big = a << 64;

    Shot out;
    std::array<uint64_t, 4> block{};
    for (size_t i = 0; i < graph.edge_count(); i++) {
        if (i % 4 == 0) {
            block = philox4x64_10({shot, (uint64_t)(i / 4), 0, 0}, {seed, 0});
        }
        uint64_t u = block[i % 4];
        bool hit;
        if (small) {
            hit = (unsigned __int128)u * b_small < a_shift;
        } else {
            mpz_class uz;
            mpz_import(uz.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
            hit = uz * b < a_big;
        }
        if (hit) {
            out.error.edges.push_back((EdgeId)i);
        }
    }
    out.syndrome = defects_of(graph, out.error);
    return out;
}

std::vector<Shot> sample_syndromes(const DecodingHypergraph &graph, const Weight &p, size_t shots, uint64_t seed) {
    std::vector<Shot> out;
    out.reserve(shots);
    for (size_t s = 0; s < shots; s++) {
        out.push_back(sample_shot(graph, p, seed, s));
    }
    return out;
}

}  // namespace mwpf
