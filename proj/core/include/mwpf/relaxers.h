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

#ifndef MWPF_RELAXERS_H
#define MWPF_RELAXERS_H

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mwpf/dual.h"
#include "mwpf/gf2.h"

namespace mwpf {

/// A feasible direction that strictly lowers the summed delta on each edge of
/// `relaxed` and does not lower the dual objective.
struct Relaxer {
    Direction direction;
    std::vector<EdgeId> relaxed;
};

/// What a finder may look at: one cluster, its hyperblossoms and the tight
/// edges still under consideration.
struct RelaxerContext {
    const DecodingHypergraph *graph = nullptr;
    const Syndrome *syndrome = nullptr;
    const DualSolution *dual = nullptr;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> tight;
    std::vector<DualVarKey> hyperblossoms;  // canonical order
};

using RelaxerFinder = std::function<std::optional<Relaxer>(const RelaxerContext &)>;

enum class FinderKind { single_hair, union_find, nullity_le1 };

std::string_view finder_name(FinderKind kind);
/// Accepts "single-hair", "union-find" and "nullity" (or "nullity-le1").
FinderKind parse_finder_kind(std::string_view name);
RelaxerFinder make_finder(FinderKind kind);

std::optional<Relaxer> single_hair_find(const RelaxerContext &ctx);
std::optional<Relaxer> union_find_find(const RelaxerContext &ctx);
std::optional<Relaxer> nullity_le1_find(const RelaxerContext &ctx);

/// Rows of the hyperblossom matrix below the last pivot of a non-hair column,
/// restricted to the tight-hair columns and the syndrome column.
struct HairMatrixView {
    ParityMatrix parent;
    size_t row_start = 0;
    size_t column_start = 0;

    size_t row_count() const {
        return parent.row_count() - row_start;
    }
    /// Hair columns plus the syndrome column.
    size_t column_count() const {
        return parent.column_count() - column_start;
    }
    bool get(size_t row, size_t column) const {
        return parent.get(row_start + row, column_start + column);
    }
    bool is_odd_row(size_t row) const {
        return parent.is_odd_row(row_start + row);
    }
    /// Edge id of each hair column.
    std::vector<EdgeId> hair_edges() const;
    /// Exactly one row and every entry is 1.
    bool is_single_all_ones() const;
};

/// Throws std::invalid_argument if S does not lie inside the cluster vertices.
HairMatrixView hyperblossom_hair_matrix(const DecodingHypergraph &graph, std::span<const VertexId> cluster_vertices,
                                        std::span<const EdgeId> tight_edges, const Syndrome &syndrome,
                                        const DualVarKey &s);

/// The dual solution built from the parity factors of a nullity <= 1
/// cluster, and the weight of the lighter factor. nullopt if the cluster is
/// invalid or has nullity above 1.
struct NullityDual {
    std::map<DualVarKey, Weight> values;
    Weight optimum;
};
std::optional<NullityDual> nullity_le1_optimal_dual(const DecodingHypergraph &graph,
                                                    std::span<const VertexId> cluster_vertices,
                                                    std::span<const EdgeId> tight_edges, const Syndrome &syndrome);

/// Checks the relaxer conditions against ctx.tight and ctx.dual.
FeasibilityReport check_relaxer(const RelaxerContext &ctx, const Relaxer &relaxer);

/// Lifts `direction` so it is feasible on `tight` by adding scaled relaxers
/// for each relaxed tight edge that it still grows. The relaxers must already
/// be feasible on `tight`. Throws ContractViolation if the result is not.
Direction compose(HairCache &hairs, const std::vector<Relaxer> &relaxers, std::span<const EdgeId> tight,
                  Direction direction);

/// Repeatedly asks the finders (first answer wins) for a relaxer on the
/// shrinking tight set, lifting each one back to ctx.tight. Throws
/// FinderContractError when a finder returns something that is not a relaxer.
std::vector<Relaxer> batched_relaxing(const RelaxerContext &ctx, const std::vector<RelaxerFinder> &finders,
                                      size_t *finder_calls = nullptr);

}  // namespace mwpf

#endif
