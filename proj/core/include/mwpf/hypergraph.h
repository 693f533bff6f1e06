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

#ifndef MWPF_HYPERGRAPH_H
#define MWPF_HYPERGRAPH_H

#include <cstdint>
#include <span>
#include <vector>

#include "mwpf/weight.h"

namespace mwpf {

using VertexId = uint32_t;
using EdgeId = uint32_t;

struct HyperEdge {
    std::vector<VertexId> vertices;
    Weight weight;
    friend bool operator==(const HyperEdge &, const HyperEdge &) = default;
};

/// Decoding hypergraph: one vertex per check, one hyperedge per independent
/// error mechanism. Immutable once built; edge ids are list positions.
class DecodingHypergraph {
   public:
    DecodingHypergraph() = default;

    /// Validates and builds adjacency. Edge vertex lists are sorted. Throws
    /// std::invalid_argument on an empty edge, an out-of-range or repeated
    /// vertex, or a negative weight.
    DecodingHypergraph(size_t vertex_count, std::vector<HyperEdge> edges);

    size_t vertex_count() const {
        return vertex_count_;
    }
    size_t edge_count() const {
        return edges_.size();
    }
    const std::vector<HyperEdge> &edges() const {
        return edges_;
    }
    const HyperEdge &edge(EdgeId e) const {
        return edges_[e];
    }
    const Weight &weight(EdgeId e) const {
        return edges_[e].weight;
    }
    std::span<const VertexId> vertices_of(EdgeId e) const {
        return edges_[e].vertices;
    }
    std::span<const EdgeId> incident(VertexId v) const {
        return {incident_edges_.data() + incident_offsets_[v], incident_edges_.data() + incident_offsets_[v + 1]};
    }

   private:
    size_t vertex_count_ = 0;
    std::vector<HyperEdge> edges_;
    std::vector<size_t> incident_offsets_{0};
    std::vector<EdgeId> incident_edges_;
};

DecodingHypergraph build_hypergraph(size_t vertex_count, std::vector<HyperEdge> edges);

/// Sorted, deduplicated set of defect vertices.
struct Syndrome {
    std::vector<VertexId> defects;

    Syndrome() = default;
    explicit Syndrome(std::vector<VertexId> ids);

    bool contains(VertexId v) const;
    bool empty() const {
        return defects.empty();
    }
    friend bool operator==(const Syndrome &, const Syndrome &) = default;
};

/// Sorted, deduplicated set of edge ids.
struct ErrorPattern {
    std::vector<EdgeId> edges;

    ErrorPattern() = default;
    explicit ErrorPattern(std::vector<EdgeId> ids);

    bool contains(EdgeId e) const;
    bool empty() const {
        return edges.empty();
    }
    size_t size() const {
        return edges.size();
    }
    friend bool operator==(const ErrorPattern &, const ErrorPattern &) = default;
    friend auto operator<=>(const ErrorPattern &, const ErrorPattern &) = default;
};

/// Symmetric difference of two patterns.
ErrorPattern operator^(const ErrorPattern &a, const ErrorPattern &b);
Syndrome operator^(const Syndrome &a, const Syndrome &b);

/// A pair (V_S, E_S) with both id lists sorted. Also the key of a dual variable.
///
/// Ordered canonically by (|V_S|, V_S, |E_S|, E_S); this order drives every
/// deterministic scan in the solver.
struct SubgraphRef {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    SubgraphRef() = default;
    SubgraphRef(std::vector<VertexId> vs, std::vector<EdgeId> es);

    friend bool operator==(const SubgraphRef &, const SubgraphRef &) = default;
    friend bool operator<(const SubgraphRef &a, const SubgraphRef &b);
};
using DualVarKey = SubgraphRef;

/// Throws std::invalid_argument unless every id is in range and every listed
/// edge lies entirely inside the vertex set.
void validate_subgraph(const DecodingHypergraph &graph, const SubgraphRef &s);
void validate_syndrome(const DecodingHypergraph &graph, const Syndrome &syndrome);
void validate_pattern(const DecodingHypergraph &graph, const ErrorPattern &pattern);

/// Vertices incident to an odd number of pattern edges.
Syndrome defects_of(const DecodingHypergraph &graph, const ErrorPattern &pattern);

/// Exact total weight of the pattern.
Weight weight_of(const DecodingHypergraph &graph, const ErrorPattern &pattern);

/// Approximates log((1-p)/p) as a dyadic rational with `fractional_bits`
/// bits after the binary point, rounded to nearest. Not covered by the
/// solver's exactness guarantees; weights in problem files are exact.
Weight edge_weight_from_probability(const Weight &p, unsigned fractional_bits = 64);

struct PreprocessedProblem {
    DecodingHypergraph graph;
    Syndrome syndrome;
    ErrorPattern flip_set;
};

/// Flips every negative-weight edge into an always-occurring error: its weight
/// is negated and its defects are xor-ed into the syndrome. Accepts weights
/// of either sign; all other validation matches build_hypergraph.
PreprocessedProblem preprocess_negative_weights(size_t vertex_count, std::vector<HyperEdge> edges,
                                                const Syndrome &syndrome);

/// Maps a solution of the preprocessed problem back to the original one.
inline ErrorPattern postprocess_pattern(const ErrorPattern &solution, const ErrorPattern &flip_set) {
    return solution ^ flip_set;
}

}  // namespace mwpf

#endif
