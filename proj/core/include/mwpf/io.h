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

#ifndef MWPF_IO_H
#define MWPF_IO_H

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwpf/decoder.h"
#include "mwpf/hypergraph.h"

namespace mwpf {

inline constexpr std::string_view kProblemVersion = "mwpf-problem/1";
inline constexpr std::string_view kCertificateVersion = "mwpf-certificate/1";

/// In-memory form of a problem file.
struct Problem {
    DecodingHypergraph graph;
    std::optional<Syndrome> syndrome;
    std::map<std::string, std::string> metadata;
};

/// Parses a problem document. Weights are strings "p", "p/q" or JSON
/// integers and must be non-negative. Throws ParseError.
Problem parse_problem(std::string_view text);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize_problem(const Problem &problem);

/// Certificate document, including the syndrome it answers.
std::string serialize_certificate(const Certificate &certificate, const Syndrome &syndrome);
/// Throws ParseError. Stats other than the counters are not restored.
Certificate parse_certificate(std::string_view text, Syndrome *syndrome = nullptr);

/// Accepts "3,5", "v3,v5" or whitespace-separated ids.
Syndrome parse_syndrome_list(std::string_view text);

enum class CodeKind { repetition, surface_bitflip, surface_biased_y };

CodeKind parse_code_kind(std::string_view name);
std::string_view code_kind_name(CodeKind kind);

/// Edge weights for generated codes: either one fixed rational, or the
/// rounded log-likelihood ratio of an error probability.
struct WeightPolicy {
    Weight uniform{1};
    std::optional<Weight> probability;
    unsigned fractional_bits = 64;

    Weight weight() const;
};

/// Repetition code, rotated surface code under bit-flip noise, or rotated
/// surface code under pure Y noise (every check, nullity checked to be 1).
/// Throws std::invalid_argument unless d is odd and at least 3.
Problem generate_code(CodeKind kind, size_t d, const WeightPolicy &policy = {});

}  // namespace mwpf

#endif
