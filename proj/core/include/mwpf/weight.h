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

#ifndef MWPF_WEIGHT_H
#define MWPF_WEIGHT_H

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mwpf {

/// Exact rational number used for edge weights, dual variables and lengths.
///
/// Always kept in lowest terms with a positive denominator. Arithmetic never
/// rounds, so equality tests (tightness, zero gap) are exact.
class Weight {
   public:
    Weight() = default;
    Weight(long value) : q_(value) {  // NOLINT(google-explicit-constructor)
    }
    Weight(long numerator, long denominator);
    explicit Weight(mpq_class q) : q_(std::move(q)) {
        q_.canonicalize();
    }

    /// Parses "p/q", "p" or "-p/q" (decimal integers of any length).
    /// Throws std::invalid_argument on malformed text or a zero denominator.
    static Weight parse(std::string_view text);

    std::string str() const;
    double to_double() const {
        return q_.get_d();
    }
    const mpq_class &raw() const {
        return q_;
    }
    mpz_class numerator() const {
        return q_.get_num();
    }
    mpz_class denominator() const {
        return q_.get_den();
    }

    int sign() const {
        return sgn(q_);
    }
    bool is_zero() const {
        return sgn(q_) == 0;
    }
    bool is_positive() const {
        return sgn(q_) > 0;
    }
    bool is_negative() const {
        return sgn(q_) < 0;
    }

    Weight &operator+=(const Weight &o) {
        q_ += o.q_;
        return *this;
    }
    Weight &operator-=(const Weight &o) {
        q_ -= o.q_;
        return *this;
    }
    Weight &operator*=(const Weight &o) {
        q_ *= o.q_;
        return *this;
    }
    Weight &operator/=(const Weight &o);

    friend Weight operator+(Weight a, const Weight &b) {
        a += b;
        return a;
    }
    friend Weight operator-(Weight a, const Weight &b) {
        a -= b;
        return a;
    }
    friend Weight operator*(Weight a, const Weight &b) {
        a *= b;
        return a;
    }
    friend Weight operator/(Weight a, const Weight &b) {
        a /= b;
        return a;
    }
    Weight operator-() const {
        return Weight(mpq_class(-q_));
    }

    friend bool operator==(const Weight &a, const Weight &b) {
        return a.q_ == b.q_;
    }
    friend std::strong_ordering operator<=>(const Weight &a, const Weight &b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

   private:
    mpq_class q_;
};

std::ostream &operator<<(std::ostream &out, const Weight &w);

inline const Weight &min(const Weight &a, const Weight &b) {
    return b < a ? b : a;
}

}  // namespace mwpf

#endif
