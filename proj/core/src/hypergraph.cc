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

#include "mwpf/hypergraph.h"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace mwpf {

namespace {

template <typename T>
std::vector<T> sorted_unique(std::vector<T> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

template <typename T>
std::vector<T> symmetric_difference(const std::vector<T> &a, const std::vector<T> &b) {
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void check_edge_vertices(size_t vertex_count, std::vector<VertexId> &vs, size_t edge_index) {
    if (vs.empty()) {
        throw std::invalid_argument("edge " + std::to_string(edge_index) + " has no vertices");
    }
    std::sort(vs.begin(), vs.end());
    for (size_t k = 0; k < vs.size(); k++) {
        if (vs[k] >= vertex_count) {
            throw std::invalid_argument(
                "edge " + std::to_string(edge_index) + " references vertex " + std::to_string(vs[k]) +
                " but vertex_count is " + std::to_string(vertex_count));
        }
        if (k > 0 && vs[k] == vs[k - 1]) {
            throw std::invalid_argument(
                "edge " + std::to_string(edge_index) + " repeats vertex " + std::to_string(vs[k]));
        }
    }
}

}  // namespace

DecodingHypergraph::DecodingHypergraph(size_t vertex_count, std::vector<HyperEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    std::vector<size_t> degree(vertex_count_ + 1, 0);
    for (size_t e = 0; e < edges_.size(); e++) {
        check_edge_vertices(vertex_count_, edges_[e].vertices, e);
        if (edges_[e].weight.is_negative()) {
            throw std::invalid_argument(
                "edge " + std::to_string(e) + " has negative weight " + edges_[e].weight.str() +
                "; preprocess negative weights first");
        }
        for (VertexId v : edges_[e].vertices) {
            degree[v + 1]++;
        }
    }
    for (size_t v = 0; v < vertex_count_; v++) {
        degree[v + 1] += degree[v];
    }
    incident_offsets_ = degree;
    incident_edges_.resize(incident_offsets_.back());
    std::vector<size_t> cursor(incident_offsets_.begin(), incident_offsets_.end() - 1);
    for (size_t e = 0; e < edges_.size(); e++) {
        for (VertexId v : edges_[e].vertices) {
            incident_edges_[cursor[v]++] = (EdgeId)e;
        }
    }
}

DecodingHypergraph build_hypergraph(size_t vertex_count, std::vector<HyperEdge> edges) {
    return DecodingHypergraph(vertex_count, std::move(edges));
}

Syndrome::Syndrome(std::vector<VertexId> ids) : defects(sorted_unique(std::move(ids))) {
}

bool Syndrome::contains(VertexId v) const {
    return std::binary_search(defects.begin(), defects.end(), v);
}

ErrorPattern::ErrorPattern(std::vector<EdgeId> ids) : edges(sorted_unique(std::move(ids))) {
}

bool ErrorPattern::contains(EdgeId e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

ErrorPattern operator^(const ErrorPattern &a, const ErrorPattern &b) {
    ErrorPattern out;
    out.edges = symmetric_difference(a.edges, b.edges);
    return out;
}

Syndrome operator^(const Syndrome &a, const Syndrome &b) {
    Syndrome out;
    out.defects = symmetric_difference(a.defects, b.defects);
    return out;
}

SubgraphRef::SubgraphRef(std::vector<VertexId> vs, std::vector<EdgeId> es)
    : vertices(sorted_unique(std::move(vs))), edges(sorted_unique(std::move(es))) {
}

bool operator<(const SubgraphRef &a, const SubgraphRef &b) {
    if (a.vertices.size() != b.vertices.size()) {
        return a.vertices.size() < b.vertices.size();
    }
    if (a.vertices != b.vertices) {
        return a.vertices < b.vertices;
    }
    if (a.edges.size() != b.edges.size()) {
        return a.edges.size() < b.edges.size();
    }
    return a.edges < b.edges;
}

void validate_subgraph(const DecodingHypergraph &graph, const SubgraphRef &s) {
    for (VertexId v : s.vertices) {
        if (v >= graph.vertex_count()) {
            throw std::invalid_argument("subgraph vertex " + std::to_string(v) + " out of range");
        }
    }
    for (EdgeId e : s.edges) {
        if (e >= graph.edge_count()) {
            throw std::invalid_argument("subgraph edge " + std::to_string(e) + " out of range");
        }
        for (VertexId v : graph.vertices_of(e)) {
            if (!std::binary_search(s.vertices.begin(), s.vertices.end(), v)) {
                throw std::invalid_argument(
                    "subgraph edge " + std::to_string(e) + " leaves the vertex set at " + std::to_string(v));
            }
        }
    }
}

void validate_syndrome(const DecodingHypergraph &graph, const Syndrome &syndrome) {
    for (VertexId v : syndrome.defects) {
        if (v >= graph.vertex_count()) {
            throw std::invalid_argument("defect vertex " + std::to_string(v) + " out of range");
        }
    }
}

void validate_pattern(const DecodingHypergraph &graph, const ErrorPattern &pattern) {
    for (EdgeId e : pattern.edges) {
        if (e >= graph.edge_count()) {
            throw std::invalid_argument("pattern edge " + std::to_string(e) + " out of range");
        }
    }
}

Syndrome defects_of(const DecodingHypergraph &graph, const ErrorPattern &pattern) {
    validate_pattern(graph, pattern);
    std::vector<VertexId> touched;
    for (EdgeId e : pattern.edges) {
        auto vs = graph.vertices_of(e);
        touched.insert(touched.end(), vs.begin(), vs.end());
    }
    std::sort(touched.begin(), touched.end());
    Syndrome out;
    for (size_t k = 0; k < touched.size();) {
        size_t j = k;
        while (j < touched.size() && touched[j] == touched[k]) {
            j++;
        }
        if ((j - k) & 1) {
            out.defects.push_back(touched[k]);
        }
        k = j;
    }
    return out;
}

Weight weight_of(const DecodingHypergraph &graph, const ErrorPattern &pattern) {
    validate_pattern(graph, pattern);
    Weight total;
    for (EdgeId e : pattern.edges) {
        total += graph.weight(e);
    }
    return total;
}

Weight edge_weight_from_probability(const Weight &p, unsigned fractional_bits) {
    using boost::multiprecision::cpp_bin_float_100;
    using boost::multiprecision::cpp_int;
    if (!p.is_positive() || p >= Weight(1)) {
        throw std::invalid_argument("probability " + p.str() + " must lie strictly between 0 and 1");
    }
    if (fractional_bits > 256) {
        throw std::invalid_argument("at most 256 fractional bits are supported");
    }
    Weight half(1, 2);
    if (p == half) {
        return Weight(0);
    }
    if (p > half) {
        return -edge_weight_from_probability(Weight(1) - p, fractional_bits);
    }
    cpp_bin_float_100 num(p.numerator().get_str());
    cpp_bin_float_100 den(p.denominator().get_str());
    cpp_bin_float_100 scaled = log((den - num) / num) * pow(cpp_bin_float_100(2), (int)fractional_bits);
    cpp_int rounded = static_cast<cpp_int>(round(scaled));
    mpz_class denominator = 1;
    denominator <<= fractional_bits;
    return Weight(mpq_class(mpz_class(rounded.str(), 10), denominator));
}

PreprocessedProblem preprocess_negative_weights(size_t vertex_count, std::vector<HyperEdge> edges,
                                                const Syndrome &syndrome) {
    PreprocessedProblem out;
    std::vector<VertexId> flipped_defects = syndrome.defects;
    for (size_t e = 0; e < edges.size(); e++) {
        if (edges[e].weight.is_negative()) {
            edges[e].weight = -edges[e].weight;
            out.flip_set.edges.push_back((EdgeId)e);
            flipped_defects.insert(flipped_defects.end(), edges[e].vertices.begin(), edges[e].vertices.end());
        }
    }
    out.graph = DecodingHypergraph(vertex_count, std::move(edges));
    validate_syndrome(out.graph, syndrome);
    std::sort(flipped_defects.begin(), flipped_defects.end());
    for (size_t k = 0; k < flipped_defects.size();) {
        size_t j = k;
        while (j < flipped_defects.size() && flipped_defects[j] == flipped_defects[k]) {
            j++;
        }
        if ((j - k) & 1) {
            out.syndrome.defects.push_back(flipped_defects[k]);
        }
        k = j;
    }
    return out;
}

}  // namespace mwpf
