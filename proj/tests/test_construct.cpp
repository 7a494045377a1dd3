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

#include <algorithm>
#include <cmath>

#include "egyptian/construct.hpp"
#include "egyptian/error.hpp"
#include "oracles.hpp"

using namespace egyptian;

namespace {

using U64s = std::vector<std::uint64_t>;

ErrorCode plan_error(const ConstructionConfig& cfg) {
    try {
        plan_parameters(cfg);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Domain;
}

bool disjoint(U64s a, U64s b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    U64s common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return common.empty();
}

mpq_class sum_of(std::initializer_list<const U64s*> parts) {
    U64s all;
    for (const auto* p : parts) all.insert(all.end(), p->begin(), p->end());
    return oracle::naive_sum(all);
}

}  // namespace

TEST_CASE("modulus products") {
    CHECK(modulus_product(7, 10, 3).value() == 900);
    CHECK(modulus_product_odd(7, 10, 3).value() == 225);
    CHECK(modulus_product(2, 10, 3).value() == 1);
    // Primes above w appear to the first power only.
    CHECK(modulus_product(12, 5, 3).value() == 4 * 9 * 25 * 7 * 11);
}

TEST_CASE("planning errors") {
    ConstructionConfig cfg;
    cfg.x = 1000000;
    cfg.r = Rational(mpz_class(1), mpz_class(1) << 20);
    cfg.k = 3;
    CHECK(plan_error(cfg) == ErrorCode::UnsupportedDenominator);
    ConstructionConfig big;
    big.r = Rational(10);
    big.x = 1000;
    CHECK(plan_error(big) == ErrorCode::InfeasibleMass);
    ConstructionConfig far;
    far.r = Rational::parse("1/101");  // P(b) = 101 > w
    far.x = 100000;
    CHECK(plan_error(far) == ErrorCode::UnsupportedDenominator);
}

TEST_CASE("formula cutoff") {
    ConstructionConfig cfg;
    cfg.r = Rational(1);
    cfg.x = 1000000;
    cfg.k = 3;
    cfg.epsilon = 0.1;
    cfg.delta = Rational::parse("1/20");
    cfg.lambda_mode = LambdaMode::Formula;
    const auto [resolved, plan] = plan_parameters(cfg);
    const double zeta3 = 1.2020569031595942;
    const double expected = std::exp(-0.95 * zeta3 / oracle::rho_to_3(2.0 / 0.9));
    CHECK(std::abs(plan.lambda.to_double() - expected) < 2e-6);
    CHECK(plan.cutoff == static_cast<std::uint64_t>(std::floor(expected * 1e6)));
    CHECK(plan.y == 501);
    CHECK(plan.w == 63);
    CHECK(resolved.k == 3);
}

TEST_CASE("adaptive plan invariants") {
    ConstructionConfig cfg;
    cfg.r = Rational::parse("1/3");
    cfg.x = 100000;
    const auto [resolved, plan] = plan_parameters(cfg);
    CHECK(plan.y_doubleprime <= plan.y_prime);
    CHECK(plan.y_prime <= plan.w);
    CHECK(plan.w <= plan.y);
    CHECK(plan.x_prime <= plan.cutoff);
    CHECK(resolved.delta.has_value());
    const auto family = build_family(SmoothParams{cfg.x, plan.y, plan.w, plan.lambda, plan.k});
    const Rational rem = cfg.r - reciprocal_sum(family.members(), modulus_product(next_prime(plan.y), plan.w, plan.k));
    CHECK(rem.is_positive());
    CHECK(rem <= plan.delta);
    for (std::size_t i = 1; i < plan.p_primes.size(); ++i) CHECK(plan.p_primes[i] < plan.p_primes[i - 1]);
}

TEST_CASE("stage one on the toy family") {
    ConstructionConfig cfg;
    cfg.r = Rational::parse("5/6");
    cfg.x = 30;
    cfg.k = 2;
    StagePlan plan;
    plan.y = 5;
    plan.w = 30;
    plan.k = 2;
    plan.cutoff = 0;
    plan.y_prime = 3;
    plan.q_primes = {5, 3};
    const auto family = build_family(SmoothParams{30, 5, 30, 0, 2});
    const Rational a0 = cfg.r - Rational::parse("12/5");
    // The whole family overshoots 5/6, so the range guard would reject this.
    CHECK_THROWS_AS(stage_one(cfg, plan, family), Error);
    const auto one = stage_one(cfg, plan, family, nullptr, false);
    CHECK(one.initial_remainder == a0);
    CHECK(one.remainder + Rational(oracle::naive_sum(one.A)) == cfg.r);
    CHECK(one.remainder.denominator() == 1);
    mpq_class added = 0;
    for (const auto& rec : one.trace) added += oracle::naive_sum(rec.removed);
    CHECK(one.remainder.value() - a0.value() == added);
    for (const auto& rec : one.trace) {
        const mpz_class reduced = rec.modulus.value() / rec.prime;
        CHECK(reduced % rec.remainder_after.denominator() == 0);
    }
    CHECK(one.trace.size() == 3);
}

TEST_CASE("stage two on a small remainder") {
    StagePlan plan;
    plan.k = 3;
    plan.w = 30;
    plan.y_prime = 6;
    plan.x_prime = 200;
    plan.y_doubleprime = 6;
    plan.cutoff = 100000;
    const Rational rem = Rational::parse("2/15");
    const auto two = stage_two(rem, plan, 1000000);
    CHECK(two.A_prime == U64s{25, 45, 75});
    CHECK(two.chosen_remainder == Rational::parse("13/225"));
    CHECK(two.breusch_input == two.chosen_remainder);
    CHECK(sum_of({&two.A_prime, &two.C_minus_A_prime, &two.D1, &two.D2}) == rem.value());
    for (auto n : two.C) CHECK(n % 2 == 1);
    CHECK(disjoint(two.A_prime, two.C_minus_A_prime));
    CHECK(two.stopped_at == 0);

    plan.y_prime = 5;  // D_0(5) = 9 does not admit 2/15
    CHECK_THROWS_AS(stage_two(rem, plan, 1000000), Error);
}

TEST_CASE("collision repair") {
    const auto r = repair_collisions(U64s{3, 15, 25}, U64s{7, 15});
    CHECK(r.C_minus_A_prime == U64s{7});
    CHECK(r.D1 == U64s{16});
    CHECK(r.D2 == U64s{240});
    const auto none = repair_collisions(U64s{3}, U64s{5, 9});
    CHECK(none.C_minus_A_prime == U64s{5, 9});
    CHECK(none.D1.empty());
}

TEST_CASE("end-to-end construction at x = 10^5") {
    ConstructionConfig cfg;
    cfg.r = Rational::parse("1/3");
    cfg.x = 100000;
    const auto rep = construct_dense(cfg);
    CHECK(rep.certificate.passed());
    CHECK(sum_of({&rep.A, &rep.A_prime, &rep.C_minus_A_prime, &rep.D1, &rep.D2}) == cfg.r.value());
    const std::vector<const U64s*> parts{&rep.A, &rep.A_prime, &rep.C_minus_A_prime, &rep.D1, &rep.D2};
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) CHECK(disjoint(*parts[i], *parts[j]));
    }
    const auto cutoff = rep.plan.cutoff;
    CHECK(std::all_of(rep.A.begin(), rep.A.end(), [&](auto n) { return n > cutoff; }));
    for (const auto* p : {&rep.A_prime, &rep.C_minus_A_prime, &rep.D1, &rep.D2}) {
        CHECK(std::all_of(p->begin(), p->end(), [&](auto n) { return n <= cutoff; }));
    }
    for (auto n : rep.A_prime) {
        CHECK(n % 2 == 1);
        CHECK_FALSE(is_quadratic_form(n));
    }
    for (auto n : rep.D1) CHECK(n % 2 == 0);
    for (auto n : rep.D2) CHECK(n % 2 == 0);
    for (const auto& rec : rep.trace) {
        const mpz_class reduced = rec.modulus.value() / rec.prime;
        CHECK(reduced % rec.remainder_after.denominator() == 0);
    }
    CHECK(modulus_product_odd(rep.plan.y_prime, rep.plan.w, rep.plan.k).is_divisible_by(
        rep.stage_one_remainder.denominator()));
    CHECK(rep.density > 0.02);

    const auto again = construct_dense(cfg);
    CHECK(again.S == rep.S);
}

TEST_CASE("strict and opportunistic stage one agree when both succeed") {
    ConstructionConfig cfg;
    cfg.r = Rational::parse("1/2");
    cfg.x = 100000;
    const auto strict = construct_dense(cfg);
    cfg.stage_one_mode = EliminationMode::Opportunistic;
    const auto opp = construct_dense(cfg);
    CHECK(strict.S == opp.S);
    CHECK(opp.certificate.passed());
}
