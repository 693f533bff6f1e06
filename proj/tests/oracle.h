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

// Reference implementations used only by tests. None of them call into the
// library beyond reading graph data.

#ifndef MWPF_TESTS_ORACLE_H
#define MWPF_TESTS_ORACLE_H

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "mwpf/hypergraph.h"

namespace mwpf::oracle {

struct Instance {
    size_t vertex_count = 0;
    std::vector<std::vector<uint32_t>> edges;
    std::vector<mpq_class> weights;
    std::vector<uint32_t> syndrome;

    DecodingHypergraph graph() const {
        std::vector<HyperEdge> list;
        for (size_t i = 0; i < edges.size(); i++) {
            list.push_back({edges[i], Weight(weights[i])});
        }
        return DecodingHypergraph(vertex_count, std::move(list));
    }
};

struct Optimum {
    mpq_class weight;
    uint64_t mask = 0;
};

/// Exhaustive search over all 2^|E| subsets with plain GMP arithmetic.
inline std::optional<Optimum> min_parity_factor(const Instance &inst) {
    const size_t m = inst.edges.size();
    std::vector<uint64_t> target_bits((inst.vertex_count + 63) / 64 + 1, 0);
    for (auto v : inst.syndrome) {
        target_bits[v / 64] ^= uint64_t{1} << (v % 64);
    }
    std::optional<Optimum> best;
    std::vector<uint64_t> parity(target_bits.size());
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); mask++) {
        std::fill(parity.begin(), parity.end(), 0);
        mpq_class w = 0;
        for (size_t e = 0; e < m; e++) {
            if (mask >> e & 1) {
                w += inst.weights[e];
                for (auto v : inst.edges[e]) {
                    parity[v / 64] ^= uint64_t{1} << (v % 64);
                }
            }
        }
        if (parity != target_bits) {
            continue;
        }
        if (!best || w < best->weight) {
            best = Optimum{w, mask};
        }
    }
    return best;
}

/// Exact optimum of max c.x s.t. A x <= b, x >= 0 by enumerating every basis
/// of the n + m constraints. Only for tiny problems. Returns nullopt if the
/// feasible region has no vertex achieving a finite optimum among the bases
/// (callers only pass bounded problems).
inline std::optional<mpq_class> lp_vertex_enumeration(const std::vector<std::vector<mpq_class>> &a,
                                                      const std::vector<mpq_class> &b,
                                                      const std::vector<mpq_class> &c) {
    const size_t m = a.size();
    const size_t n = c.size();
    // Constraint rows: the m packing rows followed by -x_j <= 0.
    auto row = [&](size_t i, size_t j) -> mpq_class {
        if (i < m) {
            return a[i][j];
        }
        return (i - m == j) ? mpq_class(-1) : mpq_class(0);
    };
    auto rhs = [&](size_t i) -> mpq_class { return i < m ? b[i] : mpq_class(0); };
    const size_t total = m + n;
    std::optional<mpq_class> best;
    std::vector<size_t> pick(n);
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
        if (depth == n) {
            std::vector<std::vector<mpq_class>> mat(n, std::vector<mpq_class>(n + 1));
            for (size_t r = 0; r < n; r++) {
                for (size_t j = 0; j < n; j++) {
                    mat[r][j] = row(pick[r], j);
                }
                mat[r][n] = rhs(pick[r]);
            }
            for (size_t col = 0; col < n; col++) {
                size_t piv = col;
                while (piv < n && mat[piv][col] == 0) {
                    piv++;
                }
                if (piv == n) {
                    return;
                }
                std::swap(mat[piv], mat[col]);
                for (size_t r = 0; r < n; r++) {
                    if (r != col && mat[r][col] != 0) {
                        mpq_class f = mat[r][col] / mat[col][col];
                        for (size_t j = col; j <= n; j++) {
                            mat[r][j] -= f * mat[col][j];
                        }
                    }
                }
            }
            std::vector<mpq_class> x(n);
            for (size_t j = 0; j < n; j++) {
                x[j] = mat[j][n] / mat[j][j];
            }
            for (size_t i = 0; i < total; i++) {
                mpq_class lhs = 0;
                for (size_t j = 0; j < n; j++) {
                    lhs += row(i, j) * x[j];
                }
                if (lhs > rhs(i)) {
                    return;
                }
            }
            mpq_class obj = 0;
            for (size_t j = 0; j < n; j++) {
                obj += c[j] * x[j];
            }
            if (!best || obj > *best) {
                best = obj;
            }
            return;
        }
        for (size_t i = start; i < total; i++) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return best;
}

/// Random hypergraph with edges of size 1..max_arity, integer weights in
/// [1, max_weight] (optionally divided by 1..3) and a syndrome drawn from a
/// random error.
inline Instance random_instance(std::mt19937_64 &rng, size_t vertex_count, size_t edge_count, size_t max_arity,
                                bool fractional = false, int max_weight = 6) {
    Instance inst;
    inst.vertex_count = vertex_count;
    std::uniform_int_distribution<uint32_t> vd(0, (uint32_t)vertex_count - 1);
    std::uniform_int_distribution<size_t> ad(1, max_arity);
    std::uniform_int_distribution<int> wd(1, max_weight);
    for (size_t i = 0; i < edge_count; i++) {
        size_t arity = std::min(ad(rng), vertex_count);
        std::vector<uint32_t> vs;
        while (vs.size() < arity) {
            uint32_t v = vd(rng);
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) {
                vs.push_back(v);
            }
        }
        std::sort(vs.begin(), vs.end());
        inst.edges.push_back(vs);
        mpq_class w(wd(rng));
        if (fractional) {
            w /= std::uniform_int_distribution<int>(1, 3)(rng);
        }
        w.canonicalize();
        inst.weights.push_back(w);
    }
    std::vector<uint8_t> par(vertex_count, 0);
    for (size_t i = 0; i < edge_count; i++) {
        if (rng() & 1) {
            for (auto v : inst.edges[i]) {
                par[v] ^= 1;
            }
        }
    }
    for (uint32_t v = 0; v < vertex_count; v++) {
        if (par[v]) {
            inst.syndrome.push_back(v);
        }
    }
    return inst;
}

/// GF(2) rank of the incidence matrix by plain elimination on bitmasks
/// (one mask per edge over at most 64 vertices).
inline size_t incidence_rank(const Instance &inst) {
    std::vector<uint64_t> basis;
    for (const auto &e : inst.edges) {
        uint64_t x = 0;
        for (auto v : e) {
            x |= uint64_t{1} << v;
        }
        for (uint64_t b : basis) {
            x = std::min(x, x ^ b);
        }
        if (x != 0) {
            basis.push_back(x);
            std::sort(basis.rbegin(), basis.rend());
        }
    }
    return basis.size();
}

inline size_t nullity(const Instance &inst) {
    return inst.edges.size() - incidence_rank(inst);
}

/// Random instance whose incidence matrix has nullity at most 1: edges are
/// proposed at random and kept only while the nullity stays <= 1.
inline Instance random_nullity_le1_instance(std::mt19937_64 &rng, size_t vertex_count, size_t attempts,
                                            size_t max_arity, int max_weight = 10) {
    Instance pool = random_instance(rng, vertex_count, attempts, max_arity, false, max_weight);
    Instance inst;
    inst.vertex_count = vertex_count;
    for (size_t i = 0; i < pool.edges.size(); i++) {
        inst.edges.push_back(pool.edges[i]);
        inst.weights.push_back(pool.weights[i]);
        if (nullity(inst) > 1) {
            inst.edges.pop_back();
            inst.weights.pop_back();
        }
    }
    std::vector<uint8_t> par(vertex_count, 0);
    for (const auto &e : inst.edges) {
        if (rng() & 1) {
            for (auto v : e) {
                par[v] ^= 1;
            }
        }
    }
    for (uint32_t v = 0; v < vertex_count; v++) {
        if (par[v]) {
            inst.syndrome.push_back(v);
        }
    }
    return inst;
}

}  // namespace mwpf::oracle

#endif
