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

#include "mwpf/gf2.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "mwpf/errors.h"

namespace mwpf {

size_t ParityMatrix::leading_column(size_t row) const {
    const uint64_t *r = rows_.data() + row * words_per_row_;
    for (size_t w = 0; w < words_per_row_; w++) {
        if (r[w]) {
            return w * 64 + std::countr_zero(r[w]);
        }
    }
    return column_count();
}

size_t ParityMatrix::nullity() const {
    size_t pivots = 0;
    for (size_t c = 0; c < edge_column_count(); c++) {
        pivots += pivot_row_[c].has_value();
    }
    return edge_column_count() - pivots;
}

std::vector<size_t> ParityMatrix::free_columns() const {
    std::vector<size_t> out;
    for (size_t c = 0; c < edge_column_count(); c++) {
        if (!pivot_row_[c].has_value()) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<size_t> ParityMatrix::solve_columns(const std::vector<bool> &free_values) const {
    auto free = free_columns();
    if (free.size() != free_values.size()) {
        throw std::invalid_argument("free value count does not match the nullity");
    }
    std::vector<size_t> out;
    for (size_t c = 0; c < edge_column_count(); c++) {
        const auto &p = pivot_row_[c];
        if (p.has_value()) {
            bool value = is_odd_row(*p);
            for (size_t k = 0; k < free.size(); k++) {
                if (free_values[k] && get(*p, free[k])) {
                    value = !value;
                }
            }
            if (value) {
                out.push_back(c);
            }
        } else {
            size_t k = std::lower_bound(free.begin(), free.end(), c) - free.begin();
            if (free_values[k]) {
                out.push_back(c);
            }
        }
    }
    return out;
}

ParityMatrix parity_matrix_rref(const DecodingHypergraph &graph, std::span<const VertexId> vertex_set,
                                std::span<const EdgeId> column_order, const Syndrome &syndrome) {
    ParityMatrix m;
    m.column_order_.assign(column_order.begin(), column_order.end());
    {
        std::vector<EdgeId> check = m.column_order_;
        std::sort(check.begin(), check.end());
        if (std::adjacent_find(check.begin(), check.end()) != check.end()) {
            throw std::invalid_argument("column order repeats an edge");
        }
        if (!check.empty() && check.back() >= graph.edge_count()) {
            throw std::invalid_argument("column order references an edge out of range");
        }
    }
    size_t cols = m.column_count();
    size_t words = (cols + 63) / 64;
    size_t n = vertex_set.size();
    m.words_per_row_ = words;
    m.rows_.assign(n * words, 0);
    m.row_labels_.assign(vertex_set.begin(), vertex_set.end());

    auto set_bit = [&](size_t r, size_t c) {
        m.rows_[r * words + c / 64] ^= uint64_t{1} << (c % 64);
    };
    for (size_t c = 0; c + 1 < cols; c++) {
        for (VertexId v : graph.vertices_of(m.column_order_[c])) {
            auto it = std::lower_bound(vertex_set.begin(), vertex_set.end(), v);
            if (it != vertex_set.end() && *it == v) {
                set_bit(it - vertex_set.begin(), c);
            }
        }
    }
    for (size_t r = 0; r < n; r++) {
        if (syndrome.contains(vertex_set[r])) {
            set_bit(r, cols - 1);
        }
    }

    m.pivot_row_.assign(cols, std::nullopt);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < n; c++) {
        size_t w = c / 64;
        uint64_t mask = uint64_t{1} << (c % 64);
        size_t found = n;
        for (size_t r = rank; r < n; r++) {
            if (m.rows_[r * words + w] & mask) {
                found = r;
                break;
            }
        }
        if (found == n) {
            continue;
        }
        if (found != rank) {
            std::swap_ranges(
                m.rows_.begin() + found * words, m.rows_.begin() + (found + 1) * words, m.rows_.begin() + rank * words);
            std::swap(m.row_labels_[found], m.row_labels_[rank]);
        }
        const uint64_t *pivot = m.rows_.data() + rank * words;
        for (size_t r = 0; r < n; r++) {
            if (r != rank && (m.rows_[r * words + w] & mask)) {
                uint64_t *row = m.rows_.data() + r * words;
                for (size_t k = w; k < words; k++) {
                    row[k] ^= pivot[k];
                }
            }
        }
        m.pivot_row_[c] = rank;
        rank++;
    }
    m.rows_.resize(rank * words);
    m.row_labels_.resize(rank);
    return m;
}

bool is_invalid(const DecodingHypergraph &graph, std::span<const VertexId> vertices, std::span<const EdgeId> edges,
                const Syndrome &syndrome) {
    bool any_defect = false;
    for (VertexId v : vertices) {
        if (syndrome.contains(v)) {
            any_defect = true;
            break;
        }
    }
    if (!any_defect) {
        return false;
    }
    return parity_matrix_rref(graph, vertices, edges, syndrome).is_invalid();
}

bool is_invalid(const DecodingHypergraph &graph, const SubgraphRef &subgraph, const Syndrome &syndrome) {
    validate_subgraph(graph, subgraph);
    return is_invalid(graph, std::span<const VertexId>(subgraph.vertices), std::span<const EdgeId>(subgraph.edges),
                      syndrome);
}

size_t subgraph_nullity(const DecodingHypergraph &graph, const SubgraphRef &subgraph) {
    return parity_matrix_rref(graph, subgraph.vertices, subgraph.edges, Syndrome{}).nullity();
}

namespace {

ParityMatrix valid_matrix(const DecodingHypergraph &graph, const SubgraphRef &subgraph, const Syndrome &syndrome) {
    validate_subgraph(graph, subgraph);
    ParityMatrix m = parity_matrix_rref(graph, subgraph.vertices, subgraph.edges, syndrome);
    if (m.is_invalid()) {
        throw NoParityFactor("subgraph admits no parity factor");
    }
    return m;
}

ErrorPattern to_pattern(const ParityMatrix &m, const std::vector<size_t> &columns) {
    ErrorPattern p;
    p.edges.reserve(columns.size());
    for (size_t c : columns) {
        p.edges.push_back(m.column_order()[c]);
    }
    std::sort(p.edges.begin(), p.edges.end());
    return p;
}

using Bits = std::vector<uint64_t>;

bool has_bit(const Bits &b, size_t i) {
    return (b[i / 64] >> (i % 64)) & 1;
}

bool has_bit_above(const Bits &b, size_t i) {
    size_t w = i / 64;
    uint64_t above = (i % 64 == 63) ? 0 : (b[w] & (~uint64_t{0} << (i % 64 + 1)));
    if (above) {
        return true;
    }
    for (size_t k = w + 1; k < b.size(); k++) {
        if (b[k]) {
            return true;
        }
    }
    return false;
}

// Lexicographic order of the sorted column lists encoded by the bitsets.
bool lex_less(const Bits &a, const Bits &b) {
    for (size_t w = 0; w < a.size(); w++) {
        uint64_t d = a[w] ^ b[w];
        if (d) {
            size_t m = w * 64 + std::countr_zero(d);
            if (has_bit(a, m)) {
                return has_bit_above(b, m);
            }
            return !has_bit_above(a, m);
        }
    }
    return false;
}

template <typename W>
Bits gray_code_search(const ParityMatrix &m, const std::vector<W> &column_weight) {
    size_t cols = m.edge_column_count();
    size_t words = std::max<size_t>(1, (cols + 63) / 64);
    auto free = m.free_columns();
    std::vector<bool> zeros(free.size(), false);

    Bits current(words, 0);
    W weight{};
    for (size_t c : m.solve_columns(zeros)) {
        current[c / 64] |= uint64_t{1} << (c % 64);
        weight += column_weight[c];
    }

    std::vector<std::vector<size_t>> toggles(free.size());
    for (size_t k = 0; k < free.size(); k++) {
        toggles[k].push_back(free[k]);
        for (size_t c = 0; c < cols; c++) {
            const auto &p = m.pivot_info()[c];
            if (p.has_value() && m.get(*p, free[k])) {
                toggles[k].push_back(c);
            }
        }
    }

    Bits best = current;
    W best_weight = weight;
    uint64_t total = uint64_t{1} << free.size();
    for (uint64_t i = 1; i < total; i++) {
        size_t k = std::countr_zero(i);
        for (size_t c : toggles[k]) {
            uint64_t bit = uint64_t{1} << (c % 64);
            if (current[c / 64] & bit) {
                weight -= column_weight[c];
            } else {
                weight += column_weight[c];
            }
            current[c / 64] ^= bit;
        }
        if (weight < best_weight || (weight == best_weight && lex_less(current, best))) {
            best = current;
            best_weight = weight;
        }
    }
    return best;
}

}  // namespace

std::optional<std::vector<ErrorPattern>> enumerate_parity_factors(const DecodingHypergraph &graph,
                                                                  const SubgraphRef &subgraph,
                                                                  const Syndrome &syndrome, size_t free_var_cap) {
    ParityMatrix m = valid_matrix(graph, subgraph, syndrome);
    size_t k = m.nullity();
    if (k > free_var_cap || k >= 63) {
        return std::nullopt;
    }
    std::vector<ErrorPattern> out;
    out.reserve(size_t{1} << k);
    std::vector<bool> values(k);
    for (uint64_t counter = 0; counter < (uint64_t{1} << k); counter++) {
        for (size_t b = 0; b < k; b++) {
            values[b] = (counter >> b) & 1;
        }
        out.push_back(to_pattern(m, m.solve_columns(values)));
    }
    return out;
}

ErrorPattern particular_parity_factor(const DecodingHypergraph &graph, const SubgraphRef &subgraph,
                                      const Syndrome &syndrome) {
    ParityMatrix m = valid_matrix(graph, subgraph, syndrome);
    return to_pattern(m, m.solve_columns(std::vector<bool>(m.nullity(), false)));
}

std::optional<MwpfResult> subgraph_mwpf(const DecodingHypergraph &graph, const SubgraphRef &subgraph,
                                        const Syndrome &syndrome, size_t free_var_cap) {
    ParityMatrix m = valid_matrix(graph, subgraph, syndrome);
    if (m.nullity() > free_var_cap || m.nullity() >= 63) {
        return std::nullopt;
    }
    // Columns follow subgraph.edges, which is sorted, so column order is edge order.
    const auto &cols = m.column_order();
    mpz_class lcm = 1;
    for (EdgeId e : cols) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), graph.weight(e).denominator().get_mpz_t());
    }
    mpz_class total = 0;
    std::vector<mpz_class> scaled(cols.size());
    for (size_t c = 0; c < cols.size(); c++) {
        const Weight &w = graph.weight(cols[c]);
        scaled[c] = w.numerator() * (lcm / w.denominator());
        total += scaled[c];
    }
    Bits best;
    if (total < (mpz_class(1) << 62) && total.fits_slong_p()) {
        std::vector<int64_t> fast(cols.size());
        for (size_t c = 0; c < cols.size(); c++) {
            fast[c] = scaled[c].get_si();
        }
        best = gray_code_search(m, fast);
    } else {
        std::vector<Weight> exact(cols.size());
        for (size_t c = 0; c < cols.size(); c++) {
            exact[c] = graph.weight(cols[c]);
        }
        best = gray_code_search(m, exact);
    }
    std::vector<size_t> chosen;
    for (size_t c = 0; c < cols.size(); c++) {
        if (has_bit(best, c)) {
            chosen.push_back(c);
        }
    }
    MwpfResult out{to_pattern(m, chosen), Weight()};
    out.weight = weight_of(graph, out.pattern);
    return out;
}

SubgraphRef whole_graph(const DecodingHypergraph &graph) {
    SubgraphRef s;
    s.vertices.resize(graph.vertex_count());
    std::iota(s.vertices.begin(), s.vertices.end(), VertexId{0});
    s.edges.resize(graph.edge_count());
    std::iota(s.edges.begin(), s.edges.end(), EdgeId{0});
    return s;
}

MwpfResult brute_force_mwpf(const DecodingHypergraph &graph, const Syndrome &syndrome, size_t free_var_cap) {
    validate_syndrome(graph, syndrome);
    std::optional<MwpfResult> r;
    try {
        r = subgraph_mwpf(graph, whole_graph(graph), syndrome, free_var_cap);
    } catch (const NoParityFactor &) {
        throw InfeasibleSyndrome("syndrome admits no parity factor in the graph");
    }
    if (!r.has_value()) {
        throw EnumerationOverflow("nullity exceeds the free-variable cap");
    }
    return *r;
}

}  // namespace mwpf
