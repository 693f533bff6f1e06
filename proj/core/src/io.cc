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

#include "mwpf/io.h"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "mwpf/errors.h"
#include "mwpf/gf2.h"

namespace mwpf {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string &what) {
    throw ParseError(what);
}

const json &require(const json &obj, const char *field) {
    auto it = obj.find(field);
    if (it == obj.end()) {
        parse_fail(std::string("missing field '") + field + "'");
    }
    return *it;
}

Weight weight_from_json(const json &j, const std::string &where) {
    try {
        if (j.is_string()) {
            return Weight::parse(j.get<std::string>());
        }
        if (j.is_number_integer()) {
            return Weight(j.get<long>());
        }
    } catch (const std::invalid_argument &ex) {
        parse_fail(where + ": " + ex.what());
    }
    parse_fail(where + ": rational must be a string like \"p/q\" or an integer");
}

std::vector<uint32_t> id_list(const json &j, const std::string &where) {
    if (!j.is_array()) {
        parse_fail(where + ": expected an array of ids");
    }
    std::vector<uint32_t> out;
    for (const auto &v : j) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
            parse_fail(where + ": ids must be non-negative integers");
        }
        unsigned long long x = v.get<unsigned long long>();
        if (x > UINT32_MAX) {
            parse_fail(where + ": id too large");
        }
        out.push_back((uint32_t)x);
    }
    return out;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &ex) {
        parse_fail(std::string("syntax: ") + ex.what());
    }
}

void check_version(const json &doc, std::string_view expected) {
    if (!doc.is_object()) {
        parse_fail("document must be a JSON object");
    }
    const json &v = require(doc, "version");
    if (!v.is_string() || v.get<std::string>() != expected) {
        parse_fail("unsupported version, expected " + std::string(expected));
    }
}

std::string dump(const json &doc) {
    return doc.dump(2) + "\n";
}

}  // namespace

Problem parse_problem(std::string_view text) {
    json doc = parse_json(text);
    check_version(doc, kProblemVersion);
    const json &vc = require(doc, "vertex_count");
    if (!vc.is_number_integer() || vc.get<long long>() < 0) {
        parse_fail("vertex_count must be a non-negative integer");
    }
    size_t vertex_count = vc.get<size_t>();
    const json &edges = require(doc, "edges");
    if (!edges.is_array()) {
        parse_fail("edges must be an array");
    }
    std::vector<HyperEdge> list;
    for (size_t i = 0; i < edges.size(); i++) {
        std::string where = "edge " + std::to_string(i);
        const json &e = edges[i];
        if (!e.is_object()) {
            parse_fail(where + ": expected an object");
        }
        HyperEdge he;
        he.vertices = id_list(require(e, "vertices"), where);
        he.weight = weight_from_json(require(e, "weight"), where);
        list.push_back(std::move(he));
    }
    Problem p;
    try {
        p.graph = DecodingHypergraph(vertex_count, std::move(list));
    } catch (const std::invalid_argument &ex) {
        parse_fail(std::string("range: ") + ex.what());
    }
    if (auto it = doc.find("syndrome"); it != doc.end() && !it->is_null()) {
        Syndrome s(id_list(*it, "syndrome"));
        try {
            validate_syndrome(p.graph, s);
        } catch (const std::invalid_argument &ex) {
            parse_fail(std::string("range: ") + ex.what());
        }
        p.syndrome = std::move(s);
    }
    if (auto it = doc.find("metadata"); it != doc.end() && !it->is_null()) {
        if (!it->is_object()) {
            parse_fail("metadata must be an object");
        }
        for (const auto &[k, v] : it->items()) {
            p.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
    }
    return p;
}

std::string serialize_problem(const Problem &problem) {
    json doc;
    doc["version"] = kProblemVersion;
    doc["vertex_count"] = problem.graph.vertex_count();
    json edges = json::array();
    for (const auto &e : problem.graph.edges()) {
        edges.push_back({{"vertices", e.vertices}, {"weight", e.weight.str()}});
    }
    doc["edges"] = std::move(edges);
    if (problem.syndrome.has_value()) {
        doc["syndrome"] = problem.syndrome->defects;
    }
    if (!problem.metadata.empty()) {
        doc["metadata"] = problem.metadata;
    }
    return dump(doc);
}

std::string serialize_certificate(const Certificate &cert, const Syndrome &syndrome) {
    json doc;
    doc["version"] = kCertificateVersion;
    doc["pattern"] = cert.pattern.edges;
    doc["primal_weight"] = cert.primal_weight.str();
    doc["dual_objective"] = cert.dual_objective.str();
    doc["gap"] = cert.gap.str();
    doc["certified"] = cert.certified;
    doc["syndrome"] = syndrome.defects;
    json dual = json::array();
    for (const auto &[k, y] : cert.dual) {
        dual.push_back({{"vertices", k.vertices}, {"edges", k.edges}, {"y", y.str()}});
    }
    doc["dual"] = std::move(dual);
    const auto &s = cert.stats;
    doc["stats"] = {
        {"search_events", s.search_events},
        {"refine_iterations", s.refine_iterations},
        {"lp_solves", s.lp_solves},
        {"finder_calls", s.finder_calls},
        {"relaxers", s.relaxers},
        {"merges", s.merges},
        {"clusters", s.clusters},
        {"clusters_frozen", s.clusters_frozen},
    };
    return dump(doc);
}

Certificate parse_certificate(std::string_view text, Syndrome *syndrome) {
    json doc = parse_json(text);
    check_version(doc, kCertificateVersion);
    Certificate c;
    auto pattern = id_list(require(doc, "pattern"), "pattern");
    if (!std::is_sorted(pattern.begin(), pattern.end()) ||
        std::adjacent_find(pattern.begin(), pattern.end()) != pattern.end()) {
        parse_fail("pattern: ids must be sorted and unique");
    }
    c.pattern.edges = std::move(pattern);
    c.primal_weight = weight_from_json(require(doc, "primal_weight"), "primal_weight");
    c.dual_objective = weight_from_json(require(doc, "dual_objective"), "dual_objective");
    c.gap = weight_from_json(require(doc, "gap"), "gap");
    const json &cert = require(doc, "certified");
    if (!cert.is_boolean()) {
        parse_fail("certified must be a boolean");
    }
    c.certified = cert.get<bool>();
    const json &dual = require(doc, "dual");
    if (!dual.is_array()) {
        parse_fail("dual must be an array");
    }
    for (size_t i = 0; i < dual.size(); i++) {
        std::string where = "dual entry " + std::to_string(i);
        const json &d = dual[i];
        if (!d.is_object()) {
            parse_fail(where + ": expected an object");
        }
        DualVarKey key(id_list(require(d, "vertices"), where), id_list(require(d, "edges"), where));
        Weight y = weight_from_json(require(d, "y"), where);
        if (!c.dual.emplace(std::move(key), std::move(y)).second) {
            parse_fail(where + ": duplicate dual key");
        }
    }
    if (syndrome != nullptr) {
        *syndrome = Syndrome(id_list(require(doc, "syndrome"), "syndrome"));
    }
    if (auto it = doc.find("stats"); it != doc.end() && it->is_object()) {
        auto get = [&](const char *k) -> size_t {
            auto f = it->find(k);
            return f != it->end() && f->is_number_unsigned() ? f->get<size_t>() : 0;
        };
        c.stats.search_events = get("search_events");
        c.stats.refine_iterations = get("refine_iterations");
        c.stats.lp_solves = get("lp_solves");
        c.stats.finder_calls = get("finder_calls");
        c.stats.relaxers = get("relaxers");
        c.stats.merges = get("merges");
        c.stats.clusters = get("clusters");
        c.stats.clusters_frozen = get("clusters_frozen");
    }
    return c;
}

Syndrome parse_syndrome_list(std::string_view text) {
    std::vector<VertexId> ids;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ',' || std::isspace((unsigned char)ch)) {
            i++;
            continue;
        }
        if (ch == 'v' || ch == 'V') {
            i++;
        }
        size_t start = i;
        unsigned long long value = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
            value = value * 10 + (unsigned long long)(text[i] - '0');
            if (value > UINT32_MAX) {
                parse_fail("syndrome id too large");
            }
            i++;
        }
        if (i == start) {
            parse_fail("malformed syndrome list '" + std::string(text) + "'");
        }
        ids.push_back((VertexId)value);
    }
    return Syndrome(std::move(ids));
}

CodeKind parse_code_kind(std::string_view name) {
    if (name == "repetition") {
        return CodeKind::repetition;
    }
    if (name == "surface-bitflip" || name == "surface_bitflip" || name == "bitflip") {
        return CodeKind::surface_bitflip;
    }
    if (name == "surface-biased-y" || name == "surface_biasedY" || name == "biased-y") {
        return CodeKind::surface_biased_y;
    }
    throw std::invalid_argument("unknown code kind '" + std::string(name) + "'");
}

std::string_view code_kind_name(CodeKind kind) {
    switch (kind) {
        case CodeKind::repetition:
            return "repetition";
        case CodeKind::surface_bitflip:
            return "surface-bitflip";
        case CodeKind::surface_biased_y:
            return "surface-biased-y";
    }
    return "?";
}

Weight WeightPolicy::weight() const {
    if (probability.has_value()) {
        return edge_weight_from_probability(*probability, fractional_bits);
    }
    return uniform;
}

namespace {

struct Check {
    int r, c;
    bool x_type;
};

// Stabilizers of the rotated surface code. A check sits at the corner (r, c)
// shared by qubits (r, c), (r, c+1), (r+1, c), (r+1, c+1).
std::vector<Check> rotated_checks(int d) {
    std::vector<Check> out;
    for (int r = -1; r < d; r++) {
        for (int c = -1; c < d; c++) {
            bool x_type = ((r + c) % 2 + 2) % 2 == 0;
            bool top_bottom = r == -1 || r == d - 1;
            bool left_right = c == -1 || c == d - 1;
            if (top_bottom && left_right) {
                continue;
            }
            if (top_bottom && !x_type) {
                continue;
            }
            if (left_right && x_type) {
                continue;
            }
            out.push_back({r, c, x_type});
        }
    }
    return out;
}

bool check_covers(const Check &k, int qr, int qc) {
    return (qr == k.r || qr == k.r + 1) && (qc == k.c || qc == k.c + 1);
}

}  // namespace

Problem generate_code(CodeKind kind, size_t d, const WeightPolicy &policy) {
    if (d < 3 || d % 2 == 0 || d > 4096) {
        throw std::invalid_argument("code distance must be odd and at least 3");
    }
    Weight w = policy.weight();
    if (w.is_negative()) {
        throw std::invalid_argument("generated weights must be non-negative; use p <= 1/2");
    }
    std::vector<HyperEdge> edges;
    size_t vertex_count = 0;
    if (kind == CodeKind::repetition) {
        vertex_count = d - 1;
        edges.push_back({{0}, w});
        for (VertexId v = 0; v + 1 < vertex_count; v++) {
            edges.push_back({{v, v + 1}, w});
        }
        edges.push_back({{(VertexId)(vertex_count - 1)}, w});
    } else {
        std::vector<Check> checks = rotated_checks((int)d);
        std::vector<Check> used;
        for (const auto &k : checks) {
            if (kind == CodeKind::surface_biased_y || !k.x_type) {
                used.push_back(k);
            }
        }
        vertex_count = used.size();
        for (int qr = 0; qr < (int)d; qr++) {
            for (int qc = 0; qc < (int)d; qc++) {
                HyperEdge e{{}, w};
                for (size_t i = 0; i < used.size(); i++) {
                    if (check_covers(used[i], qr, qc)) {
                        e.vertices.push_back((VertexId)i);
                    }
                }
                edges.push_back(std::move(e));
            }
        }
    }
    Problem p;
    p.graph = DecodingHypergraph(vertex_count, std::move(edges));
    p.metadata["code"] = std::string(code_kind_name(kind));
    p.metadata["distance"] = std::to_string(d);
    if (policy.probability.has_value()) {
        p.metadata["p"] = policy.probability->str();
    }
    if (kind == CodeKind::surface_biased_y) {
        size_t nullity = subgraph_nullity(p.graph, whole_graph(p.graph));
        if (nullity != 1) {
            throw std::logic_error("biased-Y surface code has nullity " + std::to_string(nullity) + ", expected 1");
        }
    }
    return p;
}

}  // namespace mwpf
