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

#include "mwpf/decoder.h"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>

#include "mwpf/errors.h"

namespace mwpf {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<EdgeId> set_minus(const std::vector<EdgeId> &a, const std::vector<EdgeId> &b) {
    std::vector<EdgeId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct GrowthEvent {
    Weight time;
    EdgeId edge;
    uint64_t version;
};

struct LaterEvent {
    bool operator()(const GrowthEvent &a, const GrowthEvent &b) const {
        if (a.time != b.time) {
            return a.time > b.time;
        }
        return a.edge > b.edge;
    }
};

}  // namespace

Weight priority(const Weight &cluster_dual, const Weight &local_weight, size_t edge_count,
                size_t hyperblossom_count) {
    long size = (long)(edge_count + hyperblossom_count);
    if (size == 0) {
        throw std::invalid_argument("priority of an empty cluster");
    }
    return (cluster_dual - local_weight) / Weight(size * size * size);
}

std::optional<MwpfResult> local_mwpf(const DecodingHypergraph &graph, const Syndrome &syndrome,
                                     const std::vector<VertexId> &vertices, const std::vector<EdgeId> &edges,
                                     size_t free_var_cap) {
    return subgraph_mwpf(graph, SubgraphRef(vertices, edges), syndrome, free_var_cap);
}

LocalOptimality is_locally_optimal(const DecodingHypergraph &graph, const Syndrome &syndrome,
                                   const std::vector<VertexId> &vertices, const std::vector<EdgeId> &edges,
                                   const DualSolution &dual, const std::vector<DualVarKey> &hyperblossoms,
                                   size_t free_var_cap) {
    if (is_invalid(graph, vertices, edges, syndrome)) {
        return LocalOptimality::invalid;
    }
    auto best = local_mwpf(graph, syndrome, vertices, edges, free_var_cap);
    if (!best.has_value()) {
        return LocalOptimality::overflow;
    }
    Weight sum;
    for (const auto &s : hyperblossoms) {
        sum += dual.value(s);
    }
    return best->weight == sum ? LocalOptimality::optimal : LocalOptimality::suboptimal;
}

DecodeSession::DecodeSession(const DecodingHypergraph &graph, Syndrome syndrome, DecoderConfig config)
    : graph_(&graph),
      syndrome_(std::move(syndrome)),
      config_(std::move(config)),
      dual_(graph),
      owner_(graph.vertex_count(), -1) {
    validate_syndrome(graph, syndrome_);
    for (VertexId v : syndrome_.defects) {
        if (owner_[v] < 0) {
            size_t id = new_cluster(v);
            absorb_tight(id);
        }
    }
    for (size_t id : cluster_ids()) {
        refresh(id);
    }
}

size_t DecodeSession::new_cluster(VertexId v) {
    Cluster c;
    c.vertices = {v};
    c.history.insert(DualVarKey({v}, {}));
    owner_[v] = (int64_t)clusters_.size();
    clusters_.push_back(std::move(c));
    alive_.push_back(true);
    return clusters_.size() - 1;
}

std::vector<size_t> DecodeSession::cluster_ids() const {
    std::vector<size_t> ids;
    for (size_t i = 0; i < clusters_.size(); i++) {
        if (alive_[i]) {
            ids.push_back(i);
        }
    }
    std::sort(ids.begin(), ids.end(), [&](size_t a, size_t b) {
        return clusters_[a].vertices.front() < clusters_[b].vertices.front();
    });
    return ids;
}

void DecodeSession::absorb_tight(size_t id, std::vector<size_t> *merged) {
    std::vector<VertexId> stack = clusters_[id].vertices;
    bool changed = false;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : graph_->incident(v)) {
            if (!dual_.is_tight(e)) {
                continue;
            }
            for (VertexId u : graph_->vertices_of(e)) {
                int64_t o = owner_[u];
                if (o == (int64_t)id) {
                    continue;
                }
                changed = true;
                Cluster &c = clusters_[id];
                if (o < 0) {
                    owner_[u] = (int64_t)id;
                    c.vertices.push_back(u);
                    stack.push_back(u);
                    continue;
                }
                Cluster &other = clusters_[o];
                for (VertexId w : other.vertices) {
                    owner_[w] = (int64_t)id;
                    c.vertices.push_back(w);
                    stack.push_back(w);
                }
                c.history.insert(other.history.begin(), other.history.end());
                if (c.best.has_value() && other.best.has_value()) {
                    c.best = *c.best ^ *other.best;
                    c.best_weight += other.best_weight;
                } else {
                    c.best.reset();
                    c.best_weight = Weight();
                }
                c.overflow = c.overflow || other.overflow;
                other = Cluster{};
                alive_[o] = false;
                stats_.merges++;
                if (merged != nullptr) {
                    merged->push_back((size_t)o);
                }
            }
        }
    }
    Cluster &c = clusters_[id];
    std::sort(c.vertices.begin(), c.vertices.end());
    if (changed) {
        c.settled = false;
        c.stuck = false;
    }
}

void DecodeSession::refresh(size_t id) {
    Cluster &c = clusters_[id];
    c.edges.clear();
    for (VertexId v : c.vertices) {
        for (EdgeId e : graph_->incident(v)) {
            if (dual_.is_tight(e)) {
                c.edges.push_back(e);
            }
        }
    }
    std::sort(c.edges.begin(), c.edges.end());
    c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
    c.valid = !is_invalid(*graph_, c.vertices, c.edges, syndrome_);
}

void DecodeSession::update_best(size_t id) {
    Cluster &c = clusters_[id];
    if (!c.valid) {
        return;
    }
    auto r = local_mwpf(*graph_, syndrome_, c.vertices, c.edges, config_.local_mwpf_free_var_cap);
    if (!r.has_value()) {
        c.overflow = true;
        if (!c.best.has_value()) {
            c.best = particular_parity_factor(*graph_, SubgraphRef(c.vertices, c.edges), syndrome_);
            c.best_weight = weight_of(*graph_, *c.best);
        }
        return;
    }
    if (!c.best.has_value() || r->weight < c.best_weight) {
        c.best = std::move(r->pattern);
        c.best_weight = std::move(r->weight);
    }
}

std::vector<DualVarKey> DecodeSession::hyperblossoms(size_t id) const {
    std::vector<DualVarKey> out;
    for (const auto &k : clusters_[id].history) {
        if (dual_.contains(k)) {
            out.push_back(k);
        }
    }
    return out;
}

Weight DecodeSession::cluster_dual(size_t id) const {
    Weight sum;
    for (const auto &k : clusters_[id].history) {
        sum += dual_.value(k);
    }
    return sum;
}

bool DecodeSession::is_frozen(size_t id) const {
    const Cluster &c = clusters_[id];
    if (c.overflow) {
        return true;
    }
    if (!config_.cluster_limit.has_value()) {
        return false;
    }
    size_t limit = *config_.cluster_limit;
    if (limit == 0) {
        return true;
    }
    size_t count = 0;
    for (const auto &k : c.history) {
        if (dual_.contains(k) && ++count >= limit) {
            return true;
        }
    }
    return false;
}

bool DecodeSession::is_cluster_optimal(size_t id) const {
    const Cluster &c = clusters_[id];
    return c.valid && c.best.has_value() && c.best_weight == cluster_dual(id);
}

std::vector<RelaxerFinder> DecodeSession::finders() const {
    if (!config_.custom_finders.empty()) {
        return config_.custom_finders;
    }
    std::vector<RelaxerFinder> out;
    for (FinderKind k : config_.finders) {
        out.push_back(make_finder(k));
    }
    return out;
}

void DecodeSession::run_search_stage() {
    size_t m = graph_->edge_count();
    std::vector<size_t> rate(m, 0);
    std::vector<Weight> start_sum(m);
    std::vector<uint64_t> version(m, 0);
    std::priority_queue<GrowthEvent, std::vector<GrowthEvent>, LaterEvent> events;
    std::map<size_t, std::pair<DualVarKey, Weight>> growing;

    auto schedule = [&](EdgeId e) {
        version[e]++;
        if (rate[e] > 0) {
            Weight t = (dual_.slack(e) + start_sum[e]) / Weight((long)rate[e]);
            events.push(GrowthEvent{std::move(t), e, version[e]});
        }
    };
    auto start = [&](size_t id, const Weight &now) {
        const Cluster &c = clusters_[id];
        DualVarKey key(c.vertices, c.edges);
        const auto &hair = dual_.hair(key);
        if (hair.empty()) {
            throw InfeasibleSyndrome("an invalid cluster has no edge left to grow");
        }
        for (EdgeId e : hair) {
            rate[e]++;
            start_sum[e] += now;
            schedule(e);
        }
        growing.emplace(id, std::make_pair(std::move(key), now));
    };
    auto stop = [&](size_t id, const Weight &now) {
        auto it = growing.find(id);
        if (it == growing.end()) {
            return;
        }
        auto [key, since] = std::move(it->second);
        growing.erase(it);
        const auto &hair = dual_.hair(key);
        for (EdgeId e : hair) {
            rate[e]--;
            start_sum[e] -= since;
        }
        Weight amount = now - since;
        if (amount.is_positive()) {
            dual_.add(key, amount);
            clusters_[id].history.insert(key);
        }
        for (EdgeId e : hair) {
            schedule(e);
        }
    };

    Weight now;
    for (size_t id : cluster_ids()) {
        refresh(id);
        if (!clusters_[id].valid) {
            start(id, now);
        }
    }
    while (!events.empty()) {
        GrowthEvent top = events.top();
        events.pop();
        if (top.version != version[top.edge]) {
            continue;
        }
        now = top.time;
        std::vector<EdgeId> batch{top.edge};
        while (!events.empty() && events.top().time == now) {
            if (events.top().version == version[events.top().edge]) {
                batch.push_back(events.top().edge);
            }
            events.pop();
        }
        std::sort(batch.begin(), batch.end());
        batch.erase(std::unique(batch.begin(), batch.end()), batch.end());
        stats_.search_events += batch.size();

        std::vector<size_t> affected;
        for (EdgeId e : batch) {
            for (VertexId v : graph_->vertices_of(e)) {
                if (owner_[v] >= 0) {
                    affected.push_back((size_t)owner_[v]);
                }
            }
        }
        std::sort(affected.begin(), affected.end());
        affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
        for (size_t id : affected) {
            stop(id, now);
        }
        for (EdgeId e : batch) {
            if (!dual_.is_tight(e)) {
                throw ContractViolation("growth event fired on an edge that is not tight");
            }
        }
        std::vector<size_t> touched;
        for (EdgeId e : batch) {
            int64_t holder = -1;
            for (VertexId v : graph_->vertices_of(e)) {
                if (owner_[v] >= 0) {
                    holder = owner_[v];
                    break;
                }
            }
            if (holder < 0) {
                continue;
            }
            std::vector<size_t> merged;
            absorb_tight((size_t)holder, &merged);
            for (size_t o : merged) {
                if (growing.count(o)) {
                    throw ContractViolation("merged a cluster that was still growing");
                }
            }
            touched.push_back((size_t)holder);
        }
        for (size_t id : affected) {
            touched.push_back(id);
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (size_t id : touched) {
            if (!alive_[id]) {
                continue;
            }
            refresh(id);
            if (!clusters_[id].valid) {
                start(id, now);
            }
        }
    }
    for (size_t id : cluster_ids()) {
        if (!clusters_[id].valid) {
            throw InfeasibleSyndrome("an invalid cluster stopped growing");
        }
        update_best(id);
    }
}

std::optional<DecodeSession::PrimalResult> DecodeSession::primal_phase_for(size_t id) {
    if (is_cluster_optimal(id)) {
        return std::nullopt;
    }
    const Cluster &c = clusters_[id];
    RelaxerContext ctx;
    ctx.graph = graph_;
    ctx.syndrome = &syndrome_;
    ctx.dual = &dual_;
    ctx.vertices = c.vertices;
    ctx.tight = c.edges;
    ctx.hyperblossoms = hyperblossoms(id);
    std::vector<Relaxer> relaxers = batched_relaxing(ctx, finders(), &stats_.finder_calls);
    stats_.relaxers += relaxers.size();
    std::vector<EdgeId> relaxed;
    for (const auto &r : relaxers) {
        relaxed.insert(relaxed.end(), r.relaxed.begin(), r.relaxed.end());
    }
    std::sort(relaxed.begin(), relaxed.end());
    relaxed.erase(std::unique(relaxed.begin(), relaxed.end()), relaxed.end());
    std::vector<EdgeId> remaining = set_minus(c.edges, relaxed);
    if (!is_invalid(*graph_, c.vertices, remaining, syndrome_)) {
        return std::nullopt;
    }
    Direction trivial;
    trivial.add(DualVarKey(c.vertices, remaining), Weight(1));
    PrimalResult out;
    out.cluster = id;
    out.direction = compose(dual_.hair_cache(), relaxers, c.edges, std::move(trivial));
    out.relaxers = std::move(relaxers);
    return out;
}

std::optional<size_t> DecodeSession::next_refine_cluster() const {
    std::optional<size_t> pick;
    bool pick_urgent = false;
    Weight pick_score;
    for (size_t id : cluster_ids()) {
        const Cluster &c = clusters_[id];
        if (c.stuck || is_frozen(id) || is_cluster_optimal(id)) {
            continue;
        }
        size_t blossoms = hyperblossoms(id).size();
        bool urgent = !c.best.has_value() || c.edges.size() + blossoms == 0;
        if (urgent) {
            if (!pick_urgent) {
                pick = id;
                pick_urgent = true;
            }
            continue;
        }
        if (pick_urgent) {
            continue;
        }
        Weight score = priority(cluster_dual(id), c.best_weight, c.edges.size(), blossoms);
        if (!pick.has_value() || score < pick_score) {
            pick = id;
            pick_score = std::move(score);
        }
    }
    return pick;
}

std::optional<DecodeSession::PrimalResult> DecodeSession::primal_phase() {
    std::vector<std::pair<Weight, size_t>> order;
    std::vector<size_t> urgent;
    for (size_t id : cluster_ids()) {
        if (is_frozen(id) || is_cluster_optimal(id)) {
            continue;
        }
        const Cluster &c = clusters_[id];
        size_t blossoms = hyperblossoms(id).size();
        if (!c.best.has_value() || c.edges.size() + blossoms == 0) {
            urgent.push_back(id);
        } else {
            order.emplace_back(priority(cluster_dual(id), c.best_weight, c.edges.size(), blossoms), id);
        }
    }
    std::stable_sort(order.begin(), order.end(), [](const auto &a, const auto &b) {
        return a.first < b.first;
    });
    for (const auto &[score, id] : order) {
        urgent.push_back(id);
    }
    for (size_t id : urgent) {
        if (auto r = primal_phase_for(id)) {
            return r;
        }
    }
    return std::nullopt;
}

void DecodeSession::solve_history(size_t id) {
    Cluster &c = clusters_[id];
    std::vector<DualVarKey> keys(c.history.begin(), c.history.end());
    std::map<EdgeId, Weight> own;
    for (const auto &k : keys) {
        Weight y = dual_.value(k);
        for (EdgeId e : dual_.hair(k)) {
            own[e] += y;
        }
    }
    std::vector<EdgeId> scope;
    std::vector<Weight> caps;
    scope.reserve(own.size());
    caps.reserve(own.size());
    for (const auto &[e, y] : own) {
        scope.push_back(e);
        caps.push_back(dual_.slack(e) + y);
    }
    RestrictedSolution sol = solve_restricted_dlp(dual_.hair_cache(), keys, scope, caps);
    if (sol.unbounded) {
        throw InfeasibleSyndrome("an invalid subgraph has no hair");
    }
    stats_.lp_solves++;
    stats_.lp_pivots += sol.pivots;
    for (const auto &[k, y] : sol.values) {
        dual_.set(k, y);
    }
    for (EdgeId e : scope) {
        if (dual_.slack(e).is_negative()) {
            throw ContractViolation("restricted solve left edge " + std::to_string(e) + " over capacity");
        }
    }
}

void DecodeSession::settle(size_t id) {
    Weight before = dual_.objective();
    solve_history(id);
    if (dual_.objective() < before) {
        throw ContractViolation("restricted solve lowered the dual objective");
    }
    clusters_[id].settled = true;
    absorb_tight(id);
    refresh(id);
    update_best(id);
}

void DecodeSession::dual_phase(size_t id, const Direction &direction) {
    Weight before = dual_.objective();
    Cluster &c = clusters_[id];
    for (const auto &[k, d] : direction.deltas) {
        if (d.is_positive()) {
            c.history.insert(k);
        }
    }
    solve_history(id);
    if (!(dual_.objective() > before)) {
        throw ContractViolation("dual phase did not raise the objective");
    }
    stats_.refine_iterations++;
    clusters_[id].settled = true;
    clusters_[id].stuck = false;
    absorb_tight(id);
    refresh(id);
    update_best(id);
}

DecodeSession::RefineEvent DecodeSession::refine_step() {
    RefineEvent ev;
    if (config_.cluster_limit.has_value() && *config_.cluster_limit == 0) {
        return ev;
    }
    auto id = next_refine_cluster();
    if (!id.has_value()) {
        return ev;
    }
    ev.cluster = *id;
    if (!clusters_[*id].settled) {
        settle(*id);
        ev.kind = RefineStep::settled;
        return ev;
    }
    ev.primal = primal_phase_for(*id);
    if (!ev.primal.has_value()) {
        clusters_[*id].stuck = true;
        ev.kind = RefineStep::stuck;
        return ev;
    }
    dual_phase(*id, ev.primal->direction);
    ev.kind = RefineStep::grown;
    return ev;
}

void DecodeSession::run_refine_stage() {
    while (refine_step().kind != RefineStep::done) {
    }
}

Certificate DecodeSession::finish() {
    bool all_valid = true;
    for (size_t id : cluster_ids()) {
        refresh(id);
        all_valid = all_valid && clusters_[id].valid;
    }
    if (!all_valid) {
        run_search_stage();
    }
    Certificate cert;
    std::vector<EdgeId> edges;
    for (size_t id : cluster_ids()) {
        update_best(id);
        const Cluster &c = clusters_[id];
        if (!c.best.has_value()) {
            throw ContractViolation("cluster finished without a parity factor");
        }
        edges.insert(edges.end(), c.best->edges.begin(), c.best->edges.end());
        stats_.clusters++;
        if (is_frozen(id)) {
            stats_.clusters_frozen++;
        }
    }
    cert.pattern = ErrorPattern(std::move(edges));
    cert.primal_weight = weight_of(*graph_, cert.pattern);
    cert.dual = dual_.values();
    cert.dual_objective = dual_.objective();
    cert.gap = cert.primal_weight - cert.dual_objective;
    cert.certified = cert.gap.is_zero();
    if (defects_of(*graph_, cert.pattern) != syndrome_) {
        throw ContractViolation("assembled pattern does not reproduce the syndrome");
    }
    if (cert.gap.is_negative()) {
        throw ContractViolation("negative primal-dual gap");
    }
    cert.stats = stats_;
    return cert;
}

Certificate decode(const DecodingHypergraph &graph, const Syndrome &syndrome, const DecoderConfig &config) {
    auto t0 = Clock::now();
    DecodeSession session(graph, syndrome, config);
    double search = 0, refine = 0;
    if (config.stage != Stage::refine_only) {
        auto t = Clock::now();
        session.run_search_stage();
        search = seconds_since(t);
    }
    if (config.stage != Stage::search_only) {
        auto t = Clock::now();
        session.run_refine_stage();
        refine = seconds_since(t);
    }
    Certificate cert = session.finish();
    cert.stats.search_seconds = search;
    cert.stats.refine_seconds = refine;
    cert.stats.total_seconds = seconds_since(t0);
    return cert;
}

VerificationReport verify_certificate(const DecodingHypergraph &graph, const Syndrome &syndrome,
                                      const Certificate &certificate) {
    VerificationReport report;
    auto fail = [&](std::string why) {
        report.ok = false;
        report.failures.push_back(std::move(why));
    };
    try {
        validate_syndrome(graph, syndrome);
    } catch (const std::invalid_argument &ex) {
        fail(std::string("syndrome: ") + ex.what());
        return report;
    }
    bool pattern_ok = true;
    for (size_t i = 0; i < certificate.pattern.edges.size(); i++) {
        EdgeId e = certificate.pattern.edges[i];
        if (e >= graph.edge_count() || (i > 0 && certificate.pattern.edges[i - 1] >= e)) {
            pattern_ok = false;
        }
    }
    Weight primal;
    if (!pattern_ok) {
        fail("pattern: edge ids must be sorted, unique and in range");
    } else {
        if (defects_of(graph, certificate.pattern) != syndrome) {
            fail("parity: pattern defects differ from the syndrome");
        }
        primal = weight_of(graph, certificate.pattern);
        if (primal != certificate.primal_weight) {
            fail("arithmetic: primal weight is " + primal.str() + ", certificate says " +
                 certificate.primal_weight.str());
        }
    }
    std::vector<Weight> load(graph.edge_count());
    Weight total;
    for (const auto &[key, y] : certificate.dual) {
        std::string name = "dual key with " + std::to_string(key.vertices.size()) + " vertices and " +
                           std::to_string(key.edges.size()) + " edges";
        if (!y.is_positive()) {
            fail(name + ": value " + y.str() + " is not positive");
        }
        try {
            validate_subgraph(graph, key);
        } catch (const std::invalid_argument &ex) {
            fail(name + ": " + ex.what());
            continue;
        }
        if (!std::is_sorted(key.vertices.begin(), key.vertices.end()) ||
            !std::is_sorted(key.edges.begin(), key.edges.end())) {
            fail(name + ": ids not sorted");
            continue;
        }
        if (!is_invalid(graph, key, syndrome)) {
            fail(name + ": subgraph is not invalid");
        }
        for (EdgeId e : hair_of(graph, key)) {
            load[e] += y;
        }
        total += y;
    }
    for (EdgeId e = 0; e < graph.edge_count(); e++) {
        if (load[e] > graph.weight(e)) {
            fail("feasibility: edge " + std::to_string(e) + " carries " + load[e].str() + " over weight " +
                 graph.weight(e).str());
        }
    }
    if (total != certificate.dual_objective) {
        fail("arithmetic: dual objective is " + total.str() + ", certificate says " +
             certificate.dual_objective.str());
    }
    if (certificate.gap != certificate.primal_weight - certificate.dual_objective) {
        fail("arithmetic: gap does not equal primal minus dual");
    }
    if (certificate.gap.is_negative()) {
        fail("arithmetic: gap is negative");
    }
    if (certificate.certified != certificate.gap.is_zero()) {
        fail("certified flag disagrees with the gap");
    }
    return report;
}

}  // namespace mwpf
