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

#include "mwpf/weight.h"

#include <ostream>
#include <stdexcept>

namespace mwpf {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace

Weight::Weight(long numerator, long denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("weight denominator must be non-zero");
    }
    q_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
    q_.canonicalize();
}

Weight Weight::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in rational '" + std::string(text) + "'");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Weight(std::move(q));
}

std::string Weight::str() const {
    if (q_.get_den() == 1) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Weight &Weight::operator/=(const Weight &o) {
    if (o.is_zero()) {
        throw std::domain_error("division of a weight by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::ostream &operator<<(std::ostream &out, const Weight &w) {
    return out << w.str();
}

}  // namespace mwpf
