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

#ifndef MWPF_GF2_H
#define MWPF_GF2_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mwpf/hypergraph.h"

namespace mwpf {

/// Augmented incidence matrix over GF(2) in reduced row echelon form.
///
/// Column c < edge_column_count() stands for edge column_order[c]; the last
/// column holds the syndrome. Rows are bit-packed; all-zero rows are dropped.
class ParityMatrix {
   public:
    size_t row_count() const {
        return rows_.size() / words_per_row_;
    }
    size_t column_count() const {
        return column_order_.size() + 1;
    }
    size_t edge_column_count() const {
        return column_order_.size();
    }
    size_t syndrome_column() const {
        return column_order_.size();
    }
    const std::vector<EdgeId> &column_order() const {
        return column_order_;
    }
    /// Vertex that originally occupied each row position before elimination.
    const std::vector<VertexId> &row_labels() const {
        return row_labels_;
    }
    /// Pivot row of each column, if that column is a pivot column.
    const std::vector<std::optional<size_t>> &pivot_info() const {
        return pivot_row_;
    }

    bool get(size_t row, size_t column) const {
        return (rows_[row * words_per_row_ + column / 64] >> (column % 64)) & 1;
    }
    bool is_odd_row(size_t row) const {
        return get(row, syndrome_column());
    }
    /// Column of the leading 1 in the row.
    size_t leading_column(size_t row) const;

    /// True when some row reads 0 = 1, i.e. no parity factor exists.
    bool is_invalid() const {
        return pivot_row_.back().has_value();
    }
    size_t nullity() const;
    /// Edge columns without a pivot, in column order.
    std::vector<size_t> free_columns() const;

    /// Solution given values for the free columns (same order as free_columns()).
    /// Requires !is_invalid(). Returns the set bits as column indices.
    std::vector<size_t> solve_columns(const std::vector<bool> &free_values) const;

   private:
    friend ParityMatrix parity_matrix_rref(const DecodingHypergraph &, std::span<const VertexId>,
                                           std::span<const EdgeId>, const Syndrome &);
    size_t words_per_row_ = 1;
    std::vector<uint64_t> rows_;
    std::vector<EdgeId> column_order_;
    std::vector<VertexId> row_labels_;
    std::vector<std::optional<size_t>> pivot_row_;
};

/// Builds the matrix with one row per vertex in `vertex_set` (sorted) and one
/// column per edge in `column_order`, then runs Gauss-Jordan elimination.
/// Incidences with vertices outside `vertex_set` are ignored. Throws
/// std::invalid_argument if `column_order` repeats an edge.
ParityMatrix parity_matrix_rref(const DecodingHypergraph &graph, std::span<const VertexId> vertex_set,
                                std::span<const EdgeId> column_order, const Syndrome &syndrome);

/// True iff no subset of `edges` has defects equal to syndrome ∩ vertices.
bool is_invalid(const DecodingHypergraph &graph, std::span<const VertexId> vertices, std::span<const EdgeId> edges,
                const Syndrome &syndrome);
bool is_invalid(const DecodingHypergraph &graph, const SubgraphRef &subgraph, const Syndrome &syndrome);

/// Nullity of the subgraph's incidence matrix (independent of the syndrome).
size_t subgraph_nullity(const DecodingHypergraph &graph, const SubgraphRef &subgraph);

/// All parity factors of a valid subgraph, free variables counted as a
/// binary counter (first free column is the least significant bit). Returns
/// nullopt when the nullity exceeds `free_var_cap`. Throws NoParityFactor if
/// the subgraph is invalid.
std::optional<std::vector<ErrorPattern>> enumerate_parity_factors(const DecodingHypergraph &graph,
                                                                  const SubgraphRef &subgraph,
                                                                  const Syndrome &syndrome, size_t free_var_cap);

/// The parity factor with every free variable set to 0. Throws NoParityFactor.
ErrorPattern particular_parity_factor(const DecodingHypergraph &graph, const SubgraphRef &subgraph,
                                      const Syndrome &syndrome);

struct MwpfResult {
    ErrorPattern pattern;
    Weight weight;
};

/// Minimum-weight parity factor inside the subgraph; ties go to the
/// lexicographically smallest edge set. nullopt when nullity > cap. Throws
/// NoParityFactor if the subgraph is invalid.
std::optional<MwpfResult> subgraph_mwpf(const DecodingHypergraph &graph, const SubgraphRef &subgraph,
                                        const Syndrome &syndrome, size_t free_var_cap);

/// Minimum-weight parity factor of the whole graph. Throws InfeasibleSyndrome
/// or EnumerationOverflow.
MwpfResult brute_force_mwpf(const DecodingHypergraph &graph, const Syndrome &syndrome, size_t free_var_cap = 24);

/// (V, E) of the whole graph.
SubgraphRef whole_graph(const DecodingHypergraph &graph);

}  // namespace mwpf

#endif
