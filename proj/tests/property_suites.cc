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

#include "property_suites.h"

#include <algorithm>
#include <random>
#include <set>

#include "mwpf/decoder.h"
#include "mwpf/dual.h"
#include "mwpf/errors.h"
#include "mwpf/gf2.h"
#include "mwpf/relaxers.h"
#include "oracle.h"

namespace mwpf::props {

namespace {

std::string describe(const DualVarKey &k) {
    std::string s = "V{";
    for (auto v : k.vertices) {
        s += std::to_string(v) + " ";
    }
    s += "} E{";
    for (auto e : k.edges) {
        s += std::to_string(e) + " ";
    }
    return s + "}";
}

std::vector<EdgeId> minus(const std::vector<EdgeId> &a, const std::vector<EdgeId> &b) {
    std::vector<EdgeId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

oracle::Instance draw(std::mt19937_64 &rng) {
    size_t n = std::uniform_int_distribution<size_t>(4, 10)(rng);
    size_t m = std::uniform_int_distribution<size_t>(n, n + 6)(rng);
    size_t arity = std::uniform_int_distribution<size_t>(2, 4)(rng);
    return oracle::random_instance(rng, n, m, arity, rng() % 3 == 0, 6);
}

RelaxerContext context_of(const DecodeSession &s, size_t id) {
    RelaxerContext ctx;
    ctx.graph = &s.graph();
    ctx.syndrome = &s.syndrome();
    ctx.dual = &s.dual();
    ctx.vertices = s.cluster(id).vertices;
    ctx.tight = s.cluster(id).edges;
    ctx.hyperblossoms = s.hyperblossoms(id);
    return ctx;
}

// Runs a decode one step at a time and calls `visit` on every intermediate
// state: after initialization, after the search stage and after every dual
// phase. Stops early once `visit` returns false.
template <typename Visit>
void walk(const DecodingHypergraph &g, const Syndrome &syn, const DecoderConfig &cfg, Visit &&visit) {
    using Step = const DecodeSession::PrimalResult *;
    DecodeSession s(g, syn, cfg);
    if (!visit(s, Step{})) {
        return;
    }
    if (cfg.stage != Stage::refine_only) {
        s.run_search_stage();
        if (!visit(s, Step{})) {
            return;
        }
    }
    for (int guard = 0; guard < 2000; guard++) {
        auto ev = s.refine_step();
        if (ev.kind == DecodeSession::RefineStep::done) {
            break;
        }
        if (!visit(s, ev.primal.has_value() ? Step{&*ev.primal} : Step{})) {
            return;
        }
    }
}

DecoderConfig config_for(std::mt19937_64 &rng) {
    DecoderConfig cfg;
    cfg.stage = rng() % 2 ? Stage::refine_only : Stage::search_and_refine;
    if (rng() % 3 == 0) {
        cfg.finders = {FinderKind::nullity_le1, FinderKind::single_hair};
    }
    return cfg;
}

bool is_valid_cluster(const DecodeSession &s, size_t id) {
    const Cluster &c = s.cluster(id);
    return !is_invalid(s.graph(), c.vertices, c.edges, s.syndrome());
}

}  // namespace

SuiteResult odd_row_existence(uint64_t seed, size_t target) {
    SuiteResult r{"odd-row existence"};
    std::mt19937_64 rng(seed);
    while (r.cases < target) {
        auto inst = draw(rng);
        auto g = inst.graph();
        walk(g, Syndrome(inst.syndrome), config_for(rng), [&](const DecodeSession &s, auto *) {
            for (size_t id : s.cluster_ids()) {
                if (!is_valid_cluster(s, id)) {
                    continue;
                }
                const Cluster &c = s.cluster(id);
                for (const auto &b : s.hyperblossoms(id)) {
                    if (!is_invalid(g, b, s.syndrome())) {
                        r.fail("hyperblossom is valid: " + describe(b));
                        continue;
                    }
                    r.cases++;
                    auto view = hyperblossom_hair_matrix(g, c.vertices, c.edges, s.syndrome(), b);
                    bool odd = false;
                    for (size_t row = 0; row < view.row_count(); row++) {
                        odd = odd || view.is_odd_row(row);
                    }
                    if (!odd) {
                        r.fail("no Odd row for " + describe(b));
                    }
                }
            }
            return r.cases < target;
        });
    }
    return r;
}

SuiteResult unique_row_termination(uint64_t seed, size_t target) {
    SuiteResult r{"unique-row termination"};
    std::mt19937_64 rng(seed);
    while (r.cases < target) {
        auto inst = draw(rng);
        auto g = inst.graph();
        walk(g, Syndrome(inst.syndrome), config_for(rng), [&](const DecodeSession &s, auto *) {
            for (size_t id : s.cluster_ids()) {
                if (!is_valid_cluster(s, id)) {
                    continue;
                }
                const Cluster &c = s.cluster(id);
                for (const auto &b : s.hyperblossoms(id)) {
                    auto view = hyperblossom_hair_matrix(g, c.vertices, c.edges, s.syndrome(), b);
                    size_t hair = view.column_count() - 1;
                    bool usable = false;
                    for (size_t row = 0; row < view.row_count() && !usable; row++) {
                        if (!view.is_odd_row(row)) {
                            continue;
                        }
                        for (size_t col = 0; col < hair; col++) {
                            usable = usable || !view.get(row, col);
                        }
                    }
                    if (usable) {
                        continue;
                    }
                    r.cases++;
                    if (!view.is_single_all_ones()) {
                        r.fail("skipped hair matrix is not a single all-ones row: " + describe(b));
                    }
                }
            }
            return r.cases < target;
        });
    }
    return r;
}

SuiteResult relaxer_invariants(uint64_t seed, size_t target) {
    SuiteResult r{"relaxer invariants"};
    std::mt19937_64 rng(seed);
    auto check = [&](const RelaxerContext &ctx, const Relaxer &rx, bool single_hair) {
        r.cases++;
        auto report = check_relaxer(ctx, rx);
        if (!report) {
            r.fail("relaxer rejected: " + report.violation);
            return;
        }
        if (rx.direction.sum().is_negative()) {
            r.fail("relaxer with negative sum");
        }
        auto contrib = direction_contributions(ctx.dual->hair_cache(), rx.direction);
        if (rx.relaxed.empty()) {
            r.fail("relaxer without relaxed edges");
        }
        for (EdgeId e : rx.relaxed) {
            auto it = contrib.find(e);
            if (it == contrib.end() || !it->second.is_negative()) {
                r.fail("edge " + std::to_string(e) + " is not relaxed");
            }
        }
        if (single_hair) {
            for (const auto &[k, d] : rx.direction.deltas) {
                if (d.is_positive() && !is_invalid(*ctx.graph, k, *ctx.syndrome)) {
                    r.fail("grown subgraph is valid: " + describe(k));
                }
            }
        }
    };
    while (r.cases < target) {
        auto inst = draw(rng);
        auto g = inst.graph();
        walk(g, Syndrome(inst.syndrome), config_for(rng), [&](const DecodeSession &s, auto *) {
            for (size_t id : s.cluster_ids()) {
                auto ctx = context_of(s, id);
                if (auto rx = single_hair_find(ctx)) {
                    check(ctx, *rx, true);
                }
                if (auto rx = nullity_le1_find(ctx)) {
                    check(ctx, *rx, false);
                }
                try {
                    for (const auto &rx : batched_relaxing(ctx, {make_finder(FinderKind::single_hair)})) {
                        check(ctx, rx, false);
                    }
                } catch (const std::exception &ex) {
                    r.fail(std::string("batched relaxing threw: ") + ex.what());
                }
            }
            return r.cases < target;
        });
    }
    return r;
}

SuiteResult compose_monotonicity(uint64_t seed, size_t target) {
    SuiteResult r{"compose monotonicity"};
    std::mt19937_64 rng(seed);
    auto check = [&](const DecodeSession &s, const std::vector<Relaxer> &rs, const std::vector<EdgeId> &tight,
                     const Direction &input, const std::vector<EdgeId> *must_relax) {
        r.cases++;
        Direction out;
        try {
            out = compose(s.dual().hair_cache(), rs, tight, input);
        } catch (const std::exception &ex) {
            r.fail(std::string("compose threw: ") + ex.what());
            return;
        }
        if (out.sum() < input.sum()) {
            r.fail("composed sum decreased");
        }
        auto report = check_feasible_direction(s.dual(), out, tight);
        if (!report) {
            r.fail("composed direction infeasible: " + report.violation);
        }
        if (must_relax != nullptr) {
            auto contrib = direction_contributions(s.dual().hair_cache(), out);
            for (EdgeId e : *must_relax) {
                auto it = contrib.find(e);
                if (it == contrib.end() || !it->second.is_negative()) {
                    r.fail("composed relaxer lost relaxed edge " + std::to_string(e));
                }
            }
        }
    };
    while (r.cases < target) {
        auto inst = draw(rng);
        auto g = inst.graph();
        Syndrome syn(inst.syndrome);
        walk(g, syn, config_for(rng), [&](const DecodeSession &s, auto *) {
            for (size_t id : s.cluster_ids()) {
                auto ctx = context_of(s, id);
                std::vector<Relaxer> rs;
                try {
                    rs = batched_relaxing(ctx, {make_finder(FinderKind::single_hair)});
                } catch (const std::exception &ex) {
                    r.fail(std::string("batched relaxing threw: ") + ex.what());
                    continue;
                }
                std::vector<EdgeId> relaxed;
                for (const auto &rx : rs) {
                    relaxed.insert(relaxed.end(), rx.relaxed.begin(), rx.relaxed.end());
                }
                std::sort(relaxed.begin(), relaxed.end());
                relaxed.erase(std::unique(relaxed.begin(), relaxed.end()), relaxed.end());
                std::vector<EdgeId> reduced = minus(ctx.tight, relaxed);

                if (is_invalid(g, ctx.vertices, reduced, syn)) {
                    check(s, rs, ctx.tight, Direction{{DualVarKey(ctx.vertices, reduced), Weight(1)}}, nullptr);
                }
                for (size_t i = 0; i < rs.size(); i++) {
                    std::vector<Relaxer> others(rs.begin(), rs.begin() + (long)i);
                    check(s, others, ctx.tight, rs[i].direction, &rs[i].relaxed);
                }
                // Random invalid subgraphs whose tight hair lies in the relaxed set.
                for (int attempt = 0; attempt < 6; attempt++) {
                    std::vector<VertexId> vs;
                    for (VertexId v : ctx.vertices) {
                        if (rng() % 2) {
                            vs.push_back(v);
                        }
                    }
                    if (vs.empty()) {
                        continue;
                    }
                    std::vector<EdgeId> es;
                    for (EdgeId e : ctx.tight) {
                        auto ev = g.vertices_of(e);
                        bool inside = std::includes(vs.begin(), vs.end(), ev.begin(), ev.end());
                        if (inside && rng() % 3 != 0) {
                            es.push_back(e);
                        }
                    }
                    DualVarKey k(vs, es);
                    if (!is_invalid(g, k, syn)) {
                        continue;
                    }
                    bool ok = true;
                    for (EdgeId e : s.dual().hair(k)) {
                        if (std::binary_search(reduced.begin(), reduced.end(), e)) {
                            ok = false;
                        }
                    }
                    if (ok) {
                        Weight scale(std::uniform_int_distribution<long>(1, 4)(rng), 2);
                        check(s, rs, ctx.tight, Direction{{k, scale}}, nullptr);
                    }
                }
            }
            return r.cases < target;
        });
    }
    return r;
}

SuiteResult cluster_disjointness(uint64_t seed, size_t target) {
    SuiteResult r{"cluster disjointness"};
    std::mt19937_64 rng(seed);
    while (r.cases < target) {
        auto inst = draw(rng);
        auto g = inst.graph();
        Syndrome syn(inst.syndrome);
        walk(g, syn, config_for(rng), [&](const DecodeSession &s, auto *) {
            r.cases++;
            std::vector<int> vertex_owner(g.vertex_count(), -1);
            std::vector<int> edge_owner(g.edge_count(), -1);
            std::set<DualVarKey> seen;
            for (size_t id : s.cluster_ids()) {
                const Cluster &c = s.cluster(id);
                for (VertexId v : c.vertices) {
                    if (vertex_owner[v] >= 0) {
                        r.fail("vertex " + std::to_string(v) + " in two clusters");
                    }
                    vertex_owner[v] = (int)id;
                }
                for (EdgeId e : c.edges) {
                    if (edge_owner[e] >= 0) {
                        r.fail("edge " + std::to_string(e) + " in two clusters");
                    }
                    edge_owner[e] = (int)id;
                    if (!s.dual().is_tight(e)) {
                        r.fail("cluster edge " + std::to_string(e) + " is not tight");
                    }
                }
                for (const auto &b : s.hyperblossoms(id)) {
                    if (!seen.insert(b).second) {
                        r.fail("hyperblossom in two clusters: " + describe(b));
                    }
                }
                for (const auto &b : s.hyperblossoms(id)) {
                    if (!c.history.count(b)) {
                        r.fail("hyperblossom missing from history: " + describe(b));
                    }
                }
            }
            for (VertexId d : syn.defects) {
                if (vertex_owner[d] < 0) {
                    r.fail("defect " + std::to_string(d) + " has no cluster");
                }
            }
            for (const auto &[k, y] : s.dual().values()) {
                if (!seen.count(k)) {
                    r.fail("dual key outside every cluster: " + describe(k));
                }
            }
            return r.cases < target;
        });
    }
    return r;
}

SuiteResult history_monotonicity(uint64_t seed, size_t target) {
    SuiteResult r{"history monotonicity"};
    std::mt19937_64 rng(seed);
    while (r.cases < target) {
        auto inst = draw(rng);
        auto g = inst.graph();
        Syndrome syn(inst.syndrome);
        size_t last_history = 0;
        Weight last_objective;
        walk(g, syn, config_for(rng), [&](const DecodeSession &s, const auto *step) {
            size_t total = 0;
            for (size_t id : s.cluster_ids()) {
                total += s.cluster(id).history.size();
            }
            if (step != nullptr) {
                r.cases++;
                if (total <= last_history) {
                    r.fail("history did not grow: " + std::to_string(last_history) + " -> " + std::to_string(total));
                }
                if (s.dual().objective() <= last_objective) {
                    r.fail("dual objective did not rise");
                }
            } else if (s.dual().objective() < last_objective) {
                r.fail("dual objective decreased");
            }
            last_history = total;
            last_objective = s.dual().objective();
            return r.cases < target;
        });
    }
    return r;
}

SuiteResult dual_feasibility_preservation(uint64_t seed, size_t target) {
    SuiteResult r{"dual feasibility preservation"};
    std::mt19937_64 rng(seed);
    while (r.cases < target) {
        auto inst = draw(rng);
        auto g = inst.graph();
        Syndrome syn(inst.syndrome);
        DualSolution dual(g);
        for (int step = 0; step < 40 && r.cases < target; step++) {
            Direction dir;
            std::vector<VertexId> vs;
            for (VertexId v = 0; v < g.vertex_count(); v++) {
                if (rng() % 3 == 0) {
                    vs.push_back(v);
                }
            }
            std::vector<EdgeId> es;
            for (EdgeId e = 0; e < g.edge_count(); e++) {
                auto ev = g.vertices_of(e);
                if (std::includes(vs.begin(), vs.end(), ev.begin(), ev.end()) && rng() % 2) {
                    es.push_back(e);
                }
            }
            DualVarKey grow(vs, es);
            if (vs.empty() || !is_invalid(g, grow, syn)) {
                continue;
            }
            dir.add(grow, Weight(std::uniform_int_distribution<long>(1, 3)(rng)));
            if (!dual.values().empty() && rng() % 2) {
                auto it = dual.values().begin();
                std::advance(it, (long)(rng() % dual.values().size()));
                dir.add(it->first, Weight(-1));
            }
            if (!check_feasible_direction(dual, dir)) {
                continue;
            }
            r.cases++;
            try {
                apply_direction(dual, dir);
                slack_and_tight(dual);
            } catch (const std::exception &ex) {
                r.fail(std::string("growth broke feasibility: ") + ex.what());
                break;
            }
            if (recompute_contributions(dual) != [&] {
                    std::vector<Weight> cached;
                    for (EdgeId e = 0; e < g.edge_count(); e++) {
                        cached.push_back(dual.contribution(e));
                    }
                    return cached;
                }()) {
                r.fail("contribution cache is stale");
            }
            for (const auto &[k, y] : dual.values()) {
                if (!y.is_positive()) {
                    r.fail("stored non-positive dual value");
                }
            }
        }
        // Every intermediate dual of a real decode must stay feasible too.
        walk(g, syn, config_for(rng), [&](const DecodeSession &s, auto *) {
            r.cases++;
            try {
                slack_and_tight(s.dual());
            } catch (const std::exception &ex) {
                r.fail(std::string("decode state infeasible: ") + ex.what());
            }
            return r.cases < target;
        });
    }
    return r;
}

std::vector<Suite> all_suites() {
    return {
        {"odd-row existence", odd_row_existence},
        {"unique-row termination", unique_row_termination},
        {"relaxer invariants", relaxer_invariants},
        {"compose monotonicity", compose_monotonicity},
        {"cluster disjointness", cluster_disjointness},
        {"history monotonicity", history_monotonicity},
        {"dual feasibility preservation", dual_feasibility_preservation},
    };
}

}  // namespace mwpf::props
