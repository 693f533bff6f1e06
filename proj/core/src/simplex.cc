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

#include "mwpf/simplex.h"

#include <stdexcept>

namespace mwpf {

LpResult maximize_packing(const std::vector<Weight> &b, const std::vector<LpColumn> &columns,
                          const std::vector<Weight> &c) {
    size_t m = b.size();
    size_t n = columns.size();
    if (c.size() != n) {
        throw std::invalid_argument("objective length does not match the column count");
    }
    size_t width = n + m + 1;
    size_t rhs = n + m;
    std::vector<mpq_class> tab(m * width);
    auto at = [&](size_t i, size_t j) -> mpq_class & {
        return tab[i * width + j];
    };
    for (size_t i = 0; i < m; i++) {
        if (b[i].is_negative()) {
            throw std::invalid_argument("packing right-hand side must be non-negative");
        }
        at(i, n + i) = 1;
        at(i, rhs) = b[i].raw();
    }
    for (size_t j = 0; j < n; j++) {
        for (const auto &[row, coef] : columns[j]) {
            if (row >= m) {
                throw std::invalid_argument("column entry row out of range");
            }
            at(row, j) += coef.raw();
        }
    }
    std::vector<mpq_class> obj(width);
    for (size_t j = 0; j < n; j++) {
        obj[j] = c[j].raw();
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; i++) {
        basis[i] = n + i;
    }

    LpResult result;
    mpq_class value = 0;
    mpq_class ratio, best_ratio, factor;
    while (true) {
        size_t enter = rhs;
        for (size_t j = 0; j < rhs; j++) {
            if (sgn(obj[j]) > 0) {
                enter = j;
                break;
            }
        }
        if (enter == rhs) {
            break;
        }
        size_t leave = m;
        for (size_t i = 0; i < m; i++) {
            if (sgn(at(i, enter)) <= 0) {
                continue;
            }
            ratio = at(i, rhs) / at(i, enter);
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) {
            result.status = LpStatus::unbounded;
            return result;
        }
        mpq_class pivot = at(leave, enter);
        for (size_t j = 0; j < width; j++) {
            if (sgn(at(leave, j)) != 0) {
                at(leave, j) /= pivot;
            }
        }
        for (size_t i = 0; i < m; i++) {
            if (i == leave || sgn(at(i, enter)) == 0) {
                continue;
            }
            factor = at(i, enter);
            for (size_t j = 0; j < width; j++) {
                if (sgn(at(leave, j)) != 0) {
                    at(i, j) -= factor * at(leave, j);
                }
            }
        }
        factor = obj[enter];
        for (size_t j = 0; j < width; j++) {
            if (sgn(at(leave, j)) != 0) {
                obj[j] -= factor * at(leave, j);
            }
        }
        value += factor * at(leave, rhs);
        basis[leave] = enter;
        result.pivots++;
    }
    result.x.assign(n, Weight());
    for (size_t i = 0; i < m; i++) {
        if (basis[i] < n) {
            result.x[basis[i]] = Weight(at(i, rhs));
        }
    }
    result.objective = Weight(value);
    return result;
}

}  // namespace mwpf
