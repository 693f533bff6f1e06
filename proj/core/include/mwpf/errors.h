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

#ifndef MWPF_ERRORS_H
#define MWPF_ERRORS_H

#include <stdexcept>

namespace mwpf {

// Malformed input (bad ids, malformed subgraphs, negative weights) is reported
// with std::invalid_argument. The types below cover solver-level failures.

/// The syndrome admits no parity factor anywhere in the graph.
struct InfeasibleSyndrome : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A subgraph that was required to be valid has no parity factor.
struct NoParityFactor : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration was asked for more free variables than its cap allows.
struct EnumerationOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed problem or certificate text.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A relaxer finder produced something that is not a relaxer.
struct FinderContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Internal solver invariant broken (infeasible dual, non-increasing objective).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace mwpf

#endif
