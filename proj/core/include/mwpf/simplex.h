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

#ifndef MWPF_SIMPLEX_H
#define MWPF_SIMPLEX_H

#include <utility>
#include <vector>

#include "mwpf/weight.h"

namespace mwpf {

enum class LpStatus { optimal, unbounded };

struct LpResult {
    LpStatus status = LpStatus::optimal;
    std::vector<Weight> x;
    Weight objective;
    size_t pivots = 0;
};

/// A sparse column: (row index, coefficient) pairs.
using LpColumn = std::vector<std::pair<size_t, Weight>>;

/// Exact primal simplex for
///
///     maximize c.x  subject to  A x <= b,  x >= 0
///
/// with b >= 0, so the all-slack basis is feasible and no phase one is
/// needed. Pivoting follows Bland's rule (lowest entering index, lowest
/// leaving basic index among ratio ties), so the result depends only on the
/// column order. Throws std::invalid_argument if some b is negative.
LpResult maximize_packing(const std::vector<Weight> &b, const std::vector<LpColumn> &columns,
                          const std::vector<Weight> &c);

}  // namespace mwpf

#endif
