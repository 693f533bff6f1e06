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

#ifndef MWPF_DUAL_H
#define MWPF_DUAL_H

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mwpf/hypergraph.h"

namespace mwpf {

/// delta(S) = E(V_S) \ E_S, sorted.
std::vector<EdgeId> hair_of(const DecodingHypergraph &graph, const SubgraphRef &subgraph);

/// Memoized hair sets, keyed by subgraph.
class HairCache {
   public:
    explicit HairCache(const DecodingHypergraph &graph) : graph_(&graph) {
    }
    const std::vector<EdgeId> &hair(const DualVarKey &key);
    size_t size() const {
        return cache_.size();
    }

   private:
    const DecodingHypergraph *graph_;
    std::map<DualVarKey, std::vector<EdgeId>> cache_;
};

/// Signed sparse change to the dual variables.
struct Direction {
    std::map<DualVarKey, Weight> deltas;

    Direction() = default;
    Direction(std::initializer_list<std::pair<const DualVarKey, Weight>> init);

    /// Adds `delta` to the entry for `key`, dropping it if it becomes zero.
    void add(const DualVarKey &key, const Weight &delta);
    void add_scaled(const Direction &other, const Weight &scale);
    Weight sum() const;
    bool empty() const {
        return deltas.empty();
    }
    friend bool operator==(const Direction &, const Direction &) = default;
};

/// Feasible dual solution: positive y_S values and their per-edge sums.
///
/// Copies share the hair cache, which only grows.
class DualSolution {
   public:
    explicit DualSolution(const DecodingHypergraph &graph);

    const DecodingHypergraph &graph() const {
        return *graph_;
    }
    const std::map<DualVarKey, Weight> &values() const {
        return values_;
    }
    Weight value(const DualVarKey &key) const;
    bool contains(const DualVarKey &key) const {
        return values_.count(key) > 0;
    }
    /// Sum of y_S over keys whose hair contains e.
    const Weight &contribution(EdgeId e) const {
        return contribution_[e];
    }
    Weight slack(EdgeId e) const {
        return graph_->weight(e) - contribution_[e];
    }
    bool is_tight(EdgeId e) const {
        return contribution_[e] == graph_->weight(e);
    }
    const Weight &objective() const {
        return objective_;
    }
    const std::vector<EdgeId> &hair(const DualVarKey &key) const {
        return hairs_->hair(key);
    }
    HairCache &hair_cache() const {
        return *hairs_;
    }

    /// Sets y_S. Zero removes the entry. Throws std::invalid_argument on a
    /// negative value. Feasibility is not checked here.
    void set(const DualVarKey &key, const Weight &y);
    void add(const DualVarKey &key, const Weight &delta);

   private:
    const DecodingHypergraph *graph_;
    std::map<DualVarKey, Weight> values_;
    std::vector<Weight> contribution_;
    Weight objective_;
    std::shared_ptr<HairCache> hairs_;
};

struct SlackReport {
    std::vector<Weight> slack;
    std::vector<EdgeId> tight;
};

/// Exact slacks and the tight set. Throws ContractViolation on negative slack.
SlackReport slack_and_tight(const DualSolution &dual);

/// Contribution recomputed from scratch, for checking the cached values.
std::vector<Weight> recompute_contributions(const DualSolution &dual);

/// Summed delta of a direction on every edge it touches.
std::map<EdgeId, Weight> direction_contributions(HairCache &hairs, const Direction &direction);

struct FeasibilityReport {
    bool feasible = true;
    std::string violation;
    explicit operator bool() const {
        return feasible;
    }
};

/// Checks that every negative delta is on a current hyperblossom and every
/// edge of `tight` receives a non-positive summed delta.
FeasibilityReport check_feasible_direction(const DualSolution &dual, const Direction &direction,
                                           std::span<const EdgeId> tight);
/// Same, against the dual's own tight set.
FeasibilityReport check_feasible_direction(const DualSolution &dual, const Direction &direction);

struct GrowthResult {
    Weight length;
    bool unbounded = false;
};

/// Moves y along the direction. With no length given, grows by the largest
/// feasible length (until an edge becomes tight or a variable reaches 0).
/// An unbounded maximal length is reported and leaves the dual unchanged.
/// Throws std::invalid_argument for an infeasible direction or a negative
/// length, and ContractViolation if a requested length breaks feasibility.
GrowthResult apply_direction(DualSolution &dual, const Direction &direction,
                             const std::optional<Weight> &length = std::nullopt);

inline Weight dual_objective(const DualSolution &dual) {
    return dual.objective();
}

struct RestrictedSolution {
    std::map<DualVarKey, Weight> values;  // includes zero entries for every history key
    Weight objective;
    bool unbounded = false;
    size_t pivots = 0;
};

/// Maximizes sum y_S over the history keys with all other variables at 0,
/// subject to the edge constraints of `edge_scope` with capacity w_e.
RestrictedSolution solve_restricted_dlp(const DecodingHypergraph &graph, const std::vector<DualVarKey> &history,
                                        const std::vector<EdgeId> &edge_scope);

/// Same with explicit per-edge capacities (parallel to edge_scope). Hair
/// edges outside the scope are unconstrained.
RestrictedSolution solve_restricted_dlp(HairCache &hairs, const std::vector<DualVarKey> &history,
                                        const std::vector<EdgeId> &edge_scope,
                                        const std::vector<Weight> &capacities);

}  // namespace mwpf

#endif
