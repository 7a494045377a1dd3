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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "egyptian/verify.hpp"
#include "oracles.hpp"

using namespace egyptian;

namespace {

using U64s = std::vector<std::uint64_t>;

bool harmonic_tail_by_brute_force(std::uint64_t x, std::uint64_t m, const Rational& r) {
    mpq_class s = 0;
    for (std::uint64_t n = x - m + 1; n <= x; ++n) s += mpq_class(1, static_cast<unsigned long>(n));
    return s <= r.value();
}

}  // namespace

TEST_CASE("certificates of small representations") {
    const auto c = check(Rational(1), U64s{2, 3, 6}, 6);
    CHECK(c.passed());
    CHECK(c.sum == Rational(1));
    CHECK(c.density == Rational::parse("1/2"));
    CHECK(c.count == 3);
    CHECK(c.max_element == 6);
    CHECK(c.upper_bound == doctest::Approx(1 - std::exp(-1.0)));

    const auto wrong = check(Rational(1), U64s{2, 3}, 6);
    CHECK_FALSE(wrong.sum_exact);
    CHECK_FALSE(wrong.passed());
    CHECK_FALSE(wrong.note.empty());

    CHECK_FALSE(check(Rational(1), U64s{2, 3, 6, 6}, 6).distinct);
    CHECK_FALSE(check(Rational(1), U64s{2, 3, 6}, 5).max_ok);
    CHECK_FALSE(check(Rational(1), U64s{0, 2, 3, 6}, 6).passed());
    const auto empty = check(Rational(1), U64s{}, 6);
    CHECK_FALSE(empty.sum_exact);
}

TEST_CASE("unsorted input is accepted") {
    CHECK(check(Rational(1), U64s{6, 2, 3}, 10).passed());
}

TEST_CASE("balanced summation equals the naive sum") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        U64s v(1 + rng() % 300);
        for (auto& n : v) n = 1 + rng() % 100000;
        CHECK(balanced_reciprocal_sum(v).value() == oracle::naive_sum(v));
    }
    CHECK(balanced_reciprocal_sum(U64s{}) == Rational(0));
}

TEST_CASE("harmonic tail bound") {
    for (std::uint64_t x : {10ULL, 100ULL, 5000ULL}) {
        for (std::uint64_t m : {1ULL, 3ULL, 7ULL}) {
            for (auto r : {"1/10", "1/3", "1", "2"}) {
                const Rational q = Rational::parse(r);
                CHECK(harmonic_tail_at_most(x, m, q) == harmonic_tail_by_brute_force(x, m, q));
            }
        }
    }
    // Large x uses interval arithmetic; brute force stays cheap for small m.
    for (std::uint64_t m : {1ULL, 10ULL, 1000ULL, 20000ULL}) {
        for (auto r : {"1/100", "1/10", "1/2"}) {
            const Rational q = Rational::parse(r);
            CHECK(harmonic_tail_at_most(1000000, m, q) == harmonic_tail_by_brute_force(1000000, m, q));
        }
    }
    // The two-term tail at x = 3 is exactly 5/6.
    CHECK(harmonic_tail_at_most(3, 2, Rational::parse("5/6")));
    CHECK_FALSE(harmonic_tail_at_most(3, 2, Rational::parse("4/5")));
}
