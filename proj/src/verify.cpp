// Copyright 2026 The dense-egyptian Authors
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

#include "egyptian/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "egyptian/dickman.hpp"

namespace egyptian {

namespace {

mpq_class tree_sum(std::span<const std::uint64_t> values) {
    if (values.empty()) return 0;
    if (values.size() == 1) return mpq_class(1, to_mpz(values[0]));
    const std::size_t mid = values.size() / 2;
    return tree_sum(values.first(mid)) + tree_sum(values.subspan(mid));
}

mpq_class exact_range_sum(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> v;
    v.reserve(hi - lo + 1);
    for (std::uint64_t n = lo; n <= hi; ++n) v.push_back(n);
    return tree_sum(v);
}

constexpr double kUp = std::numeric_limits<double>::infinity();

}  // namespace

Rational balanced_reciprocal_sum(std::span<const std::uint64_t> values) {
    return Rational(tree_sum(values));
}

bool harmonic_tail_at_most(std::uint64_t x, std::uint64_t m, const Rational& r) {
    if (m == 0) return r.sign() >= 0;
    if (m > x) return false;
    const std::uint64_t lo = x - m + 1;
    if (x <= 10000) return Rational(exact_range_sum(lo, x)) <= r;
    // Outward rounding after every operation keeps [low, high] sound.
    double low = 0.0, high = 0.0;
    for (std::uint64_t n = x; n >= lo; --n) {
        const double t = 1.0 / static_cast<double>(n);
        high = std::nextafter(high + std::nextafter(t, kUp), kUp);
        low = std::nextafter(low + std::nextafter(t, -kUp), -kUp);
        if (n == lo) break;
    }
    const double rv = r.to_double();
    if (high < std::nextafter(rv, -kUp)) return true;
    if (low > std::nextafter(rv, kUp)) return false;
    return Rational(exact_range_sum(lo, x)) <= r;
}

Certificate check(const Rational& r, std::span<const std::uint64_t> S, std::uint64_t x, double eta) noexcept {
    Certificate c;
    try {
        c.count = S.size();
        std::vector<std::uint64_t> sorted(S.begin(), S.end());
        std::sort(sorted.begin(), sorted.end());
        c.distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        c.max_element = sorted.empty() ? 0 : sorted.back();
        const bool positive = sorted.empty() || sorted.front() >= 1;
        c.max_ok = positive && c.max_element <= x;
        if (positive) {
            c.sum = Rational(tree_sum(S));
            c.sum_exact = c.sum == r;
        } else {
            c.note = "zero denominator present";
        }
        if (!c.distinct && c.note.empty()) c.note = "repeated denominator";
        if (!c.sum_exact && c.note.empty()) c.note = "reciprocal sum differs from r";
        if (!c.max_ok && c.note.empty()) c.note = "denominator exceeds x";
        if (x > 0) {
            c.density = Rational(to_mpz(c.count), to_mpz(x));
            c.harmonic_bound_ok = harmonic_tail_at_most(x, c.count, r);
        }
        if (r.is_positive()) {
            c.c_of_r_minus_eta = c_of_r(r) - eta;
            c.upper_bound = density_upper_bound(r.to_double());
        }
    } catch (const std::exception& e) {
        c.sum_exact = false;
        c.note = e.what();
    }
    return c;
}

}  // namespace egyptian
