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
#include <set>

#include "egyptian/breusch.hpp"
#include "egyptian/error.hpp"
#include "oracles.hpp"

using namespace egyptian;

namespace {

using U64s = std::vector<std::uint64_t>;

void check_odd_expansion(const Rational& target, const OddExpansion& e) {
    CHECK(oracle::naive_sum(e.terms) == target.value());
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        CHECK(e.terms[i] % 2 == 1);
        if (i > 0) CHECK(e.terms[i] > e.terms[i - 1]);
        CHECK(e.modulus % mpz_class(static_cast<unsigned long>(e.terms[i])) == 0);
    }
}

ErrorCode code_of(const Rational& r, const OddExpansionOptions& o = {}) {
    try {
        expand_odd(r, o);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Domain;
}

}  // namespace

TEST_CASE("odd expansions of small fractions") {
    const auto a = expand_odd(Rational::parse("2/15"));
    CHECK(a.terms == U64s{9, 45});
    check_odd_expansion(Rational::parse("2/15"), a);
    const auto b = expand_odd(Rational::parse("2/9"));
    CHECK(b.terms == U64s{5, 45});
    check_odd_expansion(Rational::parse("2/9"), b);
    CHECK(odd_expansion_bound(15) == 225);
    CHECK(odd_expansion_bound(11025) == 55125);
}

TEST_CASE("odd expansion preconditions") {
    CHECK(code_of(Rational::parse("1/3")) == ErrorCode::BreuschPreconditionFailed);
    CHECK(code_of(Rational::parse("1/10")) == ErrorCode::BreuschPreconditionFailed);
    CHECK(code_of(Rational(0)) == ErrorCode::BreuschPreconditionFailed);
    CHECK(code_of(Rational::parse("-1/15")) == ErrorCode::BreuschPreconditionFailed);
    OddExpansionOptions tight;
    tight.max_term = 20;
    CHECK(code_of(Rational::parse("2/15"), tight) == ErrorCode::BoundExceeded);
}

TEST_CASE("odd expansions respect the avoid list and term limit") {
    OddExpansionOptions o;
    o.avoid = {9};
    const auto e = expand_odd(Rational::parse("2/15"), o);
    check_odd_expansion(Rational::parse("2/15"), e);
    CHECK(std::find(e.terms.begin(), e.terms.end(), 9) == e.terms.end());
    OddExpansionOptions m;
    m.max_term = 100;
    const auto f = expand_odd(Rational::parse("4/63"), m);
    check_odd_expansion(Rational::parse("4/63"), f);
    CHECK(f.terms.back() <= 100);
}

TEST_CASE("random inputs over 3^2 5^2 7^2") {
    U64s divisors;
    for (std::uint64_t d = 9; d <= 11025; ++d) {
        if (11025 % d == 0 && d % 2 == 1) divisors.push_back(d);
    }
    std::mt19937_64 rng(21);
    for (int i = 0; i < 60; ++i) {
        const std::uint64_t d = divisors[rng() % divisors.size()];
        const std::uint64_t cmax = (d - 1) / 7;
        if (cmax == 0) continue;
        const Rational r(mpz_class(static_cast<unsigned long>(1 + rng() % cmax)), mpz_class(static_cast<unsigned long>(d)));
        const auto e = expand_odd(r);
        check_odd_expansion(r, e);
        CHECK(e.within_bound);
        CHECK(mpz_class(static_cast<unsigned long>(e.terms.back())) <= odd_expansion_bound(r.denominator()));
    }
}

TEST_CASE("splitting identity") {
    CHECK(split(3) == std::pair<std::uint64_t, std::uint64_t>{4, 12});
    CHECK(split(1) == std::pair<std::uint64_t, std::uint64_t>{2, 2});
    CHECK(split(10) == std::pair<std::uint64_t, std::uint64_t>{11, 110});
    for (std::uint64_t n = 2; n < 2000; n += 3) {
        const auto [a, b] = split(n);
        CHECK(oracle::naive_sum({a, b}) == mpq_class(1, static_cast<unsigned long>(n)));
    }
}

TEST_CASE("greedy expansions") {
    auto as_u64 = [](const std::vector<mpz_class>& v) {
        U64s out;
        for (const auto& z : v) out.push_back(z.get_ui());
        return out;
    };
    CHECK(as_u64(greedy_expand(Rational::parse("5/6"))) == U64s{2, 3});
    CHECK(as_u64(greedy_expand(Rational::parse("2/3"))) == U64s{2, 6});
    CHECK(as_u64(greedy_expand(Rational::parse("4/17"))) == U64s{5, 29, 1233, 3039345});
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        const long d = 2 + static_cast<long>(rng() % 300);
        const long c = 1 + static_cast<long>(rng() % (d - 1));
        const Rational r{mpz_class(c), mpz_class(d)};
        const auto terms = greedy_expand(r);
        mpq_class s = 0;
        for (std::size_t j = 0; j < terms.size(); ++j) {
            if (j > 0) CHECK(terms[j] > terms[j - 1]);
            s += mpq_class(mpz_class(1), terms[j]);
        }
        s.canonicalize();
        CHECK(s == r.value());
    }
    CHECK_THROWS_AS(greedy_expand(Rational(0)), Error);
}
