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

#ifndef MWPF_DECODER_H
#define MWPF_DECODER_H

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mwpf/dual.h"
#include "mwpf/gf2.h"
#include "mwpf/hypergraph.h"
#include "mwpf/relaxers.h"

namespace mwpf {

enum class Stage {
    search_and_refine,
    search_only,
    /// Skip simultaneous growth and run the primal/dual loop from the start.
    refine_only,
};

struct DecoderConfig {
    /// Maximum number of hyperblossoms a cluster may hold before it stops
    /// being refined. nullopt means unbounded; 0 disables refinement.
    std::optional<size_t> cluster_limit;
    std::vector<FinderKind> finders{FinderKind::single_hair};
    /// When non-empty, used instead of `finders`.
    std::vector<RelaxerFinder> custom_finders;
    size_t local_mwpf_free_var_cap = 16;
    Stage stage = Stage::search_and_refine;
};

struct DecodeStats {
    size_t search_events = 0;
    size_t refine_iterations = 0;
    size_t lp_solves = 0;
    size_t lp_pivots = 0;
    size_t finder_calls = 0;
    size_t relaxers = 0;
    size_t merges = 0;
    size_t clusters = 0;
    size_t clusters_frozen = 0;
    double search_seconds = 0;
    double refine_seconds = 0;
    double total_seconds = 0;
};

struct Certificate {
    ErrorPattern pattern;
    Weight primal_weight;
    std::map<DualVarKey, Weight> dual;
    Weight dual_objective;
    Weight gap;
    bool certified = false;
    DecodeStats stats;
};

struct Cluster {
    std::vector<VertexId> vertices;
    /// Tight edges incident to the cluster; all of them lie inside it.
    std::vector<EdgeId> edges;
    std::set<DualVarKey> history;
    std::optional<ErrorPattern> best;
    Weight best_weight;
    bool valid = false;
    /// Local enumeration overflowed; the cluster is no longer refined.
    bool overflow = false;
    /// Primal phase found no direction for the current state.
    bool stuck = false;
    /// The restricted problem over the history is known to be solved.
    bool settled = false;
};

/// (dual - primal) / (|E_C| + |B_C|)^3. Throws std::invalid_argument when
/// the denominator is zero.
Weight priority(const Weight &cluster_dual, const Weight &local_weight, size_t edge_count,
                size_t hyperblossom_count);

/// Minimum-weight parity factor of (V_C, E_C). nullopt on overflow.
/// Throws NoParityFactor for an invalid cluster.
std::optional<MwpfResult> local_mwpf(const DecodingHypergraph &graph, const Syndrome &syndrome,
                                     const std::vector<VertexId> &vertices, const std::vector<EdgeId> &edges,
                                     size_t free_var_cap);

enum class LocalOptimality { optimal, suboptimal, invalid, overflow };

/// Compares the local MWPF weight with the summed y of the given
/// hyperblossoms.
LocalOptimality is_locally_optimal(const DecodingHypergraph &graph, const Syndrome &syndrome,
                                   const std::vector<VertexId> &vertices, const std::vector<EdgeId> &edges,
                                   const DualSolution &dual, const std::vector<DualVarKey> &hyperblossoms,
                                   size_t free_var_cap);

/// Step-by-step decoder state. `decode` drives it to completion; tests may
/// call the phases individually.
class DecodeSession {
   public:
    /// Validates the syndrome and creates one cluster per defect (plus
    /// anything reachable over zero-weight edges).
    DecodeSession(const DecodingHypergraph &graph, Syndrome syndrome, DecoderConfig config);

    /// Grows every invalid cluster at unit rate until all clusters are valid.
    /// Throws InfeasibleSyndrome if an invalid cluster runs out of hair.
    void run_search_stage();

    struct PrimalResult {
        size_t cluster;
        Direction direction;
        std::vector<Relaxer> relaxers;
    };
    /// Relaxing on one cluster. nullopt if the cluster is locally optimal or
    /// no direction exists.
    std::optional<PrimalResult> primal_phase_for(size_t cluster);
    /// Scans clusters in refine order and returns the first direction found.
    std::optional<PrimalResult> primal_phase();
    /// Adds the growing keys to the history, re-solves the restricted problem
    /// and merges clusters. Throws ContractViolation unless the objective rises.
    void dual_phase(size_t cluster, const Direction &direction);
    enum class RefineStep { done, settled, stuck, grown };
    struct RefineEvent {
        RefineStep kind = RefineStep::done;
        size_t cluster = 0;
        /// Set for `grown` events.
        std::optional<PrimalResult> primal;
    };
    /// One refine iteration on the most urgent cluster: re-solve its history,
    /// mark it stuck, or apply one primal/dual round.
    RefineEvent refine_step();
    /// Priority-driven refinement until every cluster is optimal, frozen or stuck.
    void run_refine_stage();
    /// Assembles the certificate, growing any cluster that is still invalid.
    Certificate finish();

    /// Ids of live clusters in ascending order of their smallest vertex.
    std::vector<size_t> cluster_ids() const;
    const Cluster &cluster(size_t id) const {
        return clusters_[id];
    }
    std::vector<DualVarKey> hyperblossoms(size_t cluster) const;
    Weight cluster_dual(size_t cluster) const;
    bool is_frozen(size_t cluster) const;
    bool is_cluster_optimal(size_t cluster) const;
    const DualSolution &dual() const {
        return dual_;
    }
    const DecodeStats &stats() const {
        return stats_;
    }
    const DecodingHypergraph &graph() const {
        return *graph_;
    }
    const Syndrome &syndrome() const {
        return syndrome_;
    }

   private:
    size_t new_cluster(VertexId v);
    void absorb_tight(size_t cluster, std::vector<size_t> *merged = nullptr);
    void refresh(size_t cluster);
    void update_best(size_t cluster);
    void settle(size_t cluster);
    void solve_history(size_t cluster);
    std::vector<RelaxerFinder> finders() const;
    std::optional<size_t> next_refine_cluster() const;

    const DecodingHypergraph *graph_;
    Syndrome syndrome_;
    DecoderConfig config_;
    DualSolution dual_;
    std::vector<Cluster> clusters_;
    std::vector<bool> alive_;
    std::vector<int64_t> owner_;
    DecodeStats stats_;
};

/// Runs the full decoder. The graph must have non-negative weights.
Certificate decode(const DecodingHypergraph &graph, const Syndrome &syndrome, const DecoderConfig &config = {});

struct VerificationReport {
    bool ok = true;
    std::vector<std::string> failures;
    explicit operator bool() const {
        return ok;
    }
};

/// Re-checks parity, dual feasibility (every key invalid, every edge within
/// capacity), the objective arithmetic and the certified flag.
VerificationReport verify_certificate(const DecodingHypergraph &graph, const Syndrome &syndrome,
                                      const Certificate &certificate);

}  // namespace mwpf

#endif
