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

#include "mwpf/dual.h"

#include <algorithm>
#include <stdexcept>

#include "mwpf/errors.h"
#include "mwpf/simplex.h"

namespace mwpf {

namespace {

std::string key_str(const DualVarKey &k) {
    std::string s = "({";
    for (size_t i = 0; i < k.vertices.size(); i++) {
        s += (i ? "," : "") + std::to_string(k.vertices[i]);
    }
    s += "},{";
    for (size_t i = 0; i < k.edges.size(); i++) {
        s += (i ? "," : "") + std::to_string(k.edges[i]);
    }
    return s + "})";
}

}  // namespace

std::vector<EdgeId> hair_of(const DecodingHypergraph &graph, const SubgraphRef &subgraph) {
    std::vector<EdgeId> touched;
    for (VertexId v : subgraph.vertices) {
        if (v >= graph.vertex_count()) {
            throw std::invalid_argument("subgraph vertex out of range");
        }
        auto inc = graph.incident(v);
        touched.insert(touched.end(), inc.begin(), inc.end());
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::vector<EdgeId> out;
    out.reserve(touched.size());
    std::set_difference(
        touched.begin(), touched.end(), subgraph.edges.begin(), subgraph.edges.end(), std::back_inserter(out));
    return out;
}

const std::vector<EdgeId> &HairCache::hair(const DualVarKey &key) {
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        it = cache_.emplace(key, hair_of(*graph_, key)).first;
    }
    return it->second;
}

Direction::Direction(std::initializer_list<std::pair<const DualVarKey, Weight>> init) {
    for (const auto &[k, w] : init) {
        add(k, w);
    }
}

void Direction::add(const DualVarKey &key, const Weight &delta) {
    if (delta.is_zero()) {
        return;
    }
    auto [it, inserted] = deltas.try_emplace(key, delta);
    if (!inserted) {
        it->second += delta;
        if (it->second.is_zero()) {
            deltas.erase(it);
        }
    }
}

void Direction::add_scaled(const Direction &other, const Weight &scale) {
    for (const auto &[k, d] : other.deltas) {
        add(k, d * scale);
    }
}

Weight Direction::sum() const {
    Weight s;
    for (const auto &[k, d] : deltas) {
        s += d;
    }
    return s;
}

DualSolution::DualSolution(const DecodingHypergraph &graph)
    : graph_(&graph), contribution_(graph.edge_count()), hairs_(std::make_shared<HairCache>(graph)) {
}

Weight DualSolution::value(const DualVarKey &key) const {
    auto it = values_.find(key);
    return it == values_.end() ? Weight() : it->second;
}

void DualSolution::set(const DualVarKey &key, const Weight &y) {
    if (y.is_negative()) {
        throw std::invalid_argument("dual value must be non-negative");
    }
    Weight delta = y - value(key);
    if (delta.is_zero()) {
        return;
    }
    for (EdgeId e : hair(key)) {
        contribution_[e] += delta;
    }
    objective_ += delta;
    if (y.is_zero()) {
        values_.erase(key);
    } else {
        values_[key] = y;
    }
}

void DualSolution::add(const DualVarKey &key, const Weight &delta) {
    set(key, value(key) + delta);
}

SlackReport slack_and_tight(const DualSolution &dual) {
    const auto &g = dual.graph();
    SlackReport r;
    r.slack.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); e++) {
        Weight s = dual.slack(e);
        if (s.is_negative()) {
            throw ContractViolation("dual infeasible: edge " + std::to_string(e) + " has slack " + s.str());
        }
        if (s.is_zero()) {
            r.tight.push_back(e);
        }
        r.slack.push_back(std::move(s));
    }
    return r;
}

std::vector<Weight> recompute_contributions(const DualSolution &dual) {
    std::vector<Weight> out(dual.graph().edge_count());
    for (const auto &[k, y] : dual.values()) {
        for (EdgeId e : hair_of(dual.graph(), k)) {
            out[e] += y;
        }
    }
    return out;
}

std::map<EdgeId, Weight> direction_contributions(HairCache &hairs, const Direction &direction) {
    std::map<EdgeId, Weight> out;
    for (const auto &[k, d] : direction.deltas) {
        for (EdgeId e : hairs.hair(k)) {
            out[e] += d;
        }
    }
    return out;
}

FeasibilityReport check_feasible_direction(const DualSolution &dual, const Direction &direction,
                                           std::span<const EdgeId> tight) {
    FeasibilityReport r;
    for (const auto &[k, d] : direction.deltas) {
        if (d.is_negative() && !dual.contains(k)) {
            r.feasible = false;
            r.violation = "negative delta on non-hyperblossom " + key_str(k);
            return r;
        }
    }
    auto contrib = direction_contributions(dual.hair_cache(), direction);
    for (EdgeId e : tight) {
        auto it = contrib.find(e);
        if (it != contrib.end() && it->second.is_positive()) {
            r.feasible = false;
            r.violation = "tight edge " + std::to_string(e) + " grows by " + it->second.str();
            return r;
        }
    }
    return r;
}

FeasibilityReport check_feasible_direction(const DualSolution &dual, const Direction &direction) {
    std::vector<EdgeId> tight;
    for (const auto &[e, c] : direction_contributions(dual.hair_cache(), direction)) {
        if (dual.is_tight(e)) {
            tight.push_back(e);
        }
    }
    return check_feasible_direction(dual, direction, tight);
}

GrowthResult apply_direction(DualSolution &dual, const Direction &direction, const std::optional<Weight> &length) {
    if (length.has_value() && length->is_negative()) {
        throw std::invalid_argument("direction length must be non-negative");
    }
    auto report = check_feasible_direction(dual, direction);
    if (!report) {
        throw std::invalid_argument("infeasible direction: " + report.violation);
    }
    GrowthResult result;
    if (direction.empty()) {
        return result;
    }
    std::optional<Weight> bound;
    auto tighten = [&](Weight candidate) {
        if (!bound.has_value() || candidate < *bound) {
            bound = std::move(candidate);
        }
    };
    for (const auto &[e, c] : direction_contributions(dual.hair_cache(), direction)) {
        if (c.is_positive()) {
            tighten(dual.slack(e) / c);
        }
    }
    for (const auto &[k, d] : direction.deltas) {
        if (d.is_negative()) {
            tighten(dual.value(k) / -d);
        }
    }
    if (length.has_value()) {
        if (bound.has_value() && *length > *bound) {
            throw ContractViolation("requested length " + length->str() + " exceeds feasible length " + bound->str());
        }
        result.length = *length;
    } else if (!bound.has_value()) {
        result.unbounded = true;
        return result;
    } else {
        result.length = *bound;
    }
    if (result.length.is_zero()) {
        return result;
    }
    for (const auto &[k, d] : direction.deltas) {
        dual.add(k, d * result.length);
    }
    return result;
}

RestrictedSolution solve_restricted_dlp(HairCache &hairs, const std::vector<DualVarKey> &history,
                                        const std::vector<EdgeId> &edge_scope,
                                        const std::vector<Weight> &capacities) {
    if (capacities.size() != edge_scope.size()) {
        throw std::invalid_argument("capacity count does not match edge scope");
    }
    std::vector<DualVarKey> keys = history;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    std::vector<std::pair<EdgeId, size_t>> row_of;
    row_of.reserve(edge_scope.size());
    for (size_t i = 0; i < edge_scope.size(); i++) {
        row_of.emplace_back(edge_scope[i], i);
    }
    std::sort(row_of.begin(), row_of.end());
    for (size_t i = 1; i < row_of.size(); i++) {
        if (row_of[i].first == row_of[i - 1].first) {
            throw std::invalid_argument("edge scope repeats an edge");
        }
    }

    std::vector<LpColumn> columns(keys.size());
    for (size_t j = 0; j < keys.size(); j++) {
        for (EdgeId e : hairs.hair(keys[j])) {
            auto it = std::lower_bound(row_of.begin(), row_of.end(), std::make_pair(e, size_t{0}));
            if (it != row_of.end() && it->first == e) {
                columns[j].emplace_back(it->second, Weight(1));
            }
        }
    }
    std::vector<Weight> b = capacities;
    for (auto &w : b) {
        if (w.is_negative()) {
            throw ContractViolation("negative capacity in restricted dual problem");
        }
    }
    LpResult lp = maximize_packing(b, columns, std::vector<Weight>(keys.size(), Weight(1)));
    RestrictedSolution out;
    if (lp.status == LpStatus::unbounded) {
        out.unbounded = true;
        return out;
    }
    for (size_t j = 0; j < keys.size(); j++) {
        out.values.emplace(keys[j], lp.x[j]);
    }
    out.objective = lp.objective;
    out.pivots = lp.pivots;
    return out;
}

RestrictedSolution solve_restricted_dlp(const DecodingHypergraph &graph, const std::vector<DualVarKey> &history,
                                        const std::vector<EdgeId> &edge_scope) {
    HairCache hairs(graph);
    std::vector<Weight> caps;
    caps.reserve(edge_scope.size());
    for (EdgeId e : edge_scope) {
        caps.push_back(graph.weight(e));
    }
    return solve_restricted_dlp(hairs, history, edge_scope, caps);
}

}  // namespace mwpf
