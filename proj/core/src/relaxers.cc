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

#include "mwpf/relaxers.h"

#include <algorithm>
#include <stdexcept>

#include "mwpf/errors.h"

namespace mwpf {

namespace {

std::vector<EdgeId> minus(std::span<const EdgeId> a, std::span<const EdgeId> b) {
    std::vector<EdgeId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<EdgeId> intersect(std::span<const EdgeId> a, std::span<const EdgeId> b) {
    std::vector<EdgeId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<EdgeId> negative_edges(const std::map<EdgeId, Weight> &contrib, std::span<const EdgeId> tight) {
    std::vector<EdgeId> out;
    for (EdgeId e : tight) {
        auto it = contrib.find(e);
        if (it != contrib.end() && it->second.is_negative()) {
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace

std::string_view finder_name(FinderKind kind) {
    switch (kind) {
        case FinderKind::single_hair:
            return "single-hair";
        case FinderKind::union_find:
            return "union-find";
        case FinderKind::nullity_le1:
            return "nullity";
    }
    return "?";
}

FinderKind parse_finder_kind(std::string_view name) {
    if (name == "single-hair") {
        return FinderKind::single_hair;
    }
    if (name == "union-find") {
        return FinderKind::union_find;
    }
    if (name == "nullity" || name == "nullity-le1") {
        return FinderKind::nullity_le1;
    }
    throw std::invalid_argument("unknown relaxer finder '" + std::string(name) + "'");
}

RelaxerFinder make_finder(FinderKind kind) {
    switch (kind) {
        case FinderKind::single_hair:
            return single_hair_find;
        case FinderKind::union_find:
            return union_find_find;
        case FinderKind::nullity_le1:
            return nullity_le1_find;
    }
    throw std::invalid_argument("unknown finder kind");
}

std::vector<EdgeId> HairMatrixView::hair_edges() const {
    const auto &order = parent.column_order();
    return {order.begin() + column_start, order.end()};
}

bool HairMatrixView::is_single_all_ones() const {
    if (row_count() != 1) {
        return false;
    }
    for (size_t c = 0; c < column_count(); c++) {
        if (!get(0, c)) {
            return false;
        }
    }
    return true;
}

HairMatrixView hyperblossom_hair_matrix(const DecodingHypergraph &graph, std::span<const VertexId> cluster_vertices,
                                        std::span<const EdgeId> tight_edges, const Syndrome &syndrome,
                                        const DualVarKey &s) {
    if (!std::includes(cluster_vertices.begin(), cluster_vertices.end(), s.vertices.begin(), s.vertices.end())) {
        throw std::invalid_argument("hyperblossom is not inside the cluster");
    }
    std::vector<EdgeId> hair = intersect(hair_of(graph, s), tight_edges);
    std::vector<EdgeId> order = minus(tight_edges, hair);
    size_t non_hair = order.size();
    order.insert(order.end(), hair.begin(), hair.end());
    HairMatrixView view{parity_matrix_rref(graph, cluster_vertices, order, syndrome), 0, non_hair};
    for (size_t c = 0; c < non_hair; c++) {
        if (view.parent.pivot_info()[c].has_value()) {
            view.row_start++;
        }
    }
    return view;
}

std::optional<Relaxer> single_hair_find(const RelaxerContext &ctx) {
    const auto &graph = *ctx.graph;
    if (is_invalid(graph, ctx.vertices, ctx.tight, *ctx.syndrome)) {
        return std::nullopt;
    }
    for (const auto &s : ctx.hyperblossoms) {
        HairMatrixView view = hyperblossom_hair_matrix(graph, ctx.vertices, ctx.tight, *ctx.syndrome, s);
        if (view.row_count() == 0 || view.is_single_all_ones()) {
            continue;
        }
        std::vector<EdgeId> hair = view.hair_edges();
        for (size_t r = 0; r < view.row_count(); r++) {
            if (!view.is_odd_row(r)) {
                continue;
            }
            std::vector<EdgeId> plus, relaxed;
            for (size_t c = 0; c < hair.size(); c++) {
                (view.get(r, c) ? plus : relaxed).push_back(hair[c]);
            }
            if (relaxed.empty()) {
                continue;
            }
            std::sort(plus.begin(), plus.end());
            std::sort(relaxed.begin(), relaxed.end());
            DualVarKey grown(ctx.vertices, minus(ctx.tight, plus));
            Relaxer out;
            out.direction.add(s, Weight(-1));
            out.direction.add(grown, Weight(1));
            out.relaxed = std::move(relaxed);
            return out;
        }
    }
    return std::nullopt;
}

std::optional<Relaxer> union_find_find(const RelaxerContext &) {
    return std::nullopt;
}

std::optional<NullityDual> nullity_le1_optimal_dual(const DecodingHypergraph &graph,
                                                    std::span<const VertexId> cluster_vertices,
                                                    std::span<const EdgeId> tight_edges, const Syndrome &syndrome) {
    if (is_invalid(graph, cluster_vertices, tight_edges, syndrome)) {
        return std::nullopt;
    }
    std::vector<VertexId> vs(cluster_vertices.begin(), cluster_vertices.end());
    std::vector<EdgeId> tight(tight_edges.begin(), tight_edges.end());
    auto factors = enumerate_parity_factors(graph, SubgraphRef(vs, tight), syndrome, 1);
    if (!factors.has_value()) {
        return std::nullopt;
    }
    auto key_without = [&](EdgeId a, EdgeId b) {
        std::vector<EdgeId> drop{std::min(a, b), std::max(a, b)};
        drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
        return DualVarKey(vs, minus(tight, drop));
    };
    NullityDual out;
    if (factors->size() == 1) {
        for (EdgeId e : factors->front().edges) {
            if (graph.weight(e).is_positive()) {
                out.values[key_without(e, e)] += graph.weight(e);
            }
        }
        out.optimum = weight_of(graph, factors->front());
        return out;
    }
    ErrorPattern e1 = (*factors)[0], e2 = (*factors)[1];
    Weight w1 = weight_of(graph, e1), w2 = weight_of(graph, e2);
    if (w2 < w1 || (w2 == w1 && e2 < e1)) {
        std::swap(e1, e2);
        std::swap(w1, w2);
    }
    std::vector<EdgeId> shared = intersect(e1.edges, e2.edges);
    std::vector<EdgeId> line1 = shared, line2 = shared;
    for (EdgeId e : minus(e1.edges, e2.edges)) {
        line1.push_back(e);
    }
    for (EdgeId e : minus(e2.edges, e1.edges)) {
        line2.push_back(e);
    }
    // Walk both lines together, cutting at every joint until line 1 ends.
    size_t i = 0, j = 0;
    Weight pos, end1, end2;
    if (!line1.empty()) {
        end1 = graph.weight(line1[0]);
    }
    if (!line2.empty()) {
        end2 = graph.weight(line2[0]);
    }
    while (i < line1.size() && j < line2.size()) {
        Weight next = min(end1, end2);
        if (next > pos) {
            out.values[key_without(line1[i], line2[j])] += next - pos;
            pos = next;
        }
        if (end1 == pos) {
            i++;
            if (i < line1.size()) {
                end1 += graph.weight(line1[i]);
            }
        }
        if (end2 == pos) {
            j++;
            if (j < line2.size()) {
                end2 += graph.weight(line2[j]);
            }
        }
    }
    out.optimum = w1;
    return out;
}

std::optional<Relaxer> nullity_le1_find(const RelaxerContext &ctx) {
    const auto &graph = *ctx.graph;
    auto optimal = nullity_le1_optimal_dual(graph, ctx.vertices, ctx.tight, *ctx.syndrome);
    if (!optimal.has_value()) {
        return std::nullopt;
    }
    Weight current;
    for (const auto &s : ctx.hyperblossoms) {
        current += ctx.dual->value(s);
    }
    if (current >= optimal->optimum) {
        return std::nullopt;
    }
    Relaxer out;
    for (const auto &s : ctx.hyperblossoms) {
        out.direction.add(s, -ctx.dual->value(s));
    }
    for (const auto &[k, y] : optimal->values) {
        out.direction.add(k, y);
    }
    Weight total = out.direction.sum();
    const DualVarKey *anchor = nullptr;
    for (EdgeId e : ctx.tight) {
        if (!graph.weight(e).is_positive()) {
            continue;
        }
        for (const auto &s : ctx.hyperblossoms) {
            const auto &h = ctx.dual->hair(s);
            if (std::binary_search(h.begin(), h.end(), e)) {
                anchor = &s;
                break;
            }
        }
        if (anchor != nullptr) {
            break;
        }
    }
    if (anchor == nullptr) {
        return std::nullopt;
    }
    out.direction.add(*anchor, -total);
    out.relaxed = negative_edges(direction_contributions(ctx.dual->hair_cache(), out.direction), ctx.tight);
    return out;
}

FeasibilityReport check_relaxer(const RelaxerContext &ctx, const Relaxer &relaxer) {
    FeasibilityReport r = check_feasible_direction(*ctx.dual, relaxer.direction, ctx.tight);
    if (!r) {
        return r;
    }
    auto fail = [&](std::string why) {
        r.feasible = false;
        r.violation = std::move(why);
        return r;
    };
    if (relaxer.relaxed.empty()) {
        return fail("relaxed edge set is empty");
    }
    if (relaxer.direction.sum().is_negative()) {
        return fail("direction lowers the dual objective");
    }
    auto contrib = direction_contributions(ctx.dual->hair_cache(), relaxer.direction);
    for (EdgeId e : relaxer.relaxed) {
        if (!std::binary_search(ctx.tight.begin(), ctx.tight.end(), e)) {
            return fail("relaxed edge " + std::to_string(e) + " is not tight");
        }
        auto it = contrib.find(e);
        if (it == contrib.end() || !it->second.is_negative()) {
            return fail("relaxed edge " + std::to_string(e) + " is not strictly relaxed");
        }
    }
    return r;
}

Direction compose(HairCache &hairs, const std::vector<Relaxer> &relaxers, std::span<const EdgeId> tight,
                  Direction direction) {
    std::vector<std::map<EdgeId, Weight>> relaxer_contrib;
    std::vector<EdgeId> candidates;
    for (const auto &r : relaxers) {
        relaxer_contrib.push_back(direction_contributions(hairs, r.direction));
        candidates.insert(candidates.end(), r.relaxed.begin(), r.relaxed.end());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    candidates = intersect(candidates, tight);

    auto contrib = direction_contributions(hairs, direction);
    for (EdgeId e : candidates) {
        auto it = contrib.find(e);
        if (it == contrib.end() || !it->second.is_positive()) {
            continue;
        }
        Weight alpha = it->second;
        size_t k = 0;
        while (k < relaxers.size() &&
               !std::binary_search(relaxers[k].relaxed.begin(), relaxers[k].relaxed.end(), e)) {
            k++;
        }
        if (k == relaxers.size()) {
            throw ContractViolation("no relaxer covers edge " + std::to_string(e));
        }
        Weight scale = alpha / -relaxer_contrib[k].at(e);
        direction.add_scaled(relaxers[k].direction, scale);
        for (const auto &[edge, c] : relaxer_contrib[k]) {
            contrib[edge] += c * scale;
        }
    }
    for (EdgeId e : tight) {
        auto it = contrib.find(e);
        if (it != contrib.end() && it->second.is_positive()) {
            throw ContractViolation("composed direction still grows tight edge " + std::to_string(e));
        }
    }
    return direction;
}

std::vector<Relaxer> batched_relaxing(const RelaxerContext &ctx, const std::vector<RelaxerFinder> &finders,
                                      size_t *finder_calls) {
    std::vector<Relaxer> lifted;
    if (finders.empty()) {
        return lifted;
    }
    HairCache &hairs = ctx.dual->hair_cache();
    RelaxerContext sub = ctx;
    while (true) {
        std::optional<Relaxer> raw;
        for (const auto &f : finders) {
            if (finder_calls != nullptr) {
                (*finder_calls)++;
            }
            raw = f(sub);
            if (raw.has_value()) {
                break;
            }
        }
        if (!raw.has_value()) {
            break;
        }
        FeasibilityReport report = check_relaxer(sub, *raw);
        if (!report) {
            throw FinderContractError("finder returned a non-relaxer: " + report.violation);
        }
        Relaxer r;
        r.direction = compose(hairs, lifted, ctx.tight, std::move(raw->direction));
        r.relaxed = negative_edges(direction_contributions(hairs, r.direction), ctx.tight);
        sub.tight = minus(sub.tight, r.relaxed);
        lifted.push_back(std::move(r));
    }
    return lifted;
}

}  // namespace mwpf
