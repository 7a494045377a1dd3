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

#include "egyptian/construct.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <tuple>

#include "egyptian/dickman.hpp"
#include "egyptian/error.hpp"

namespace egyptian {

std::string_view to_string(LambdaMode mode) {
    return mode == LambdaMode::Formula ? "formula" : "adaptive";
}

std::string_view to_string(EliminationMode mode) {
    return mode == EliminationMode::Strict ? "strict" : "opportunistic";
}

FactoredInt modulus_product(std::uint64_t z, std::uint64_t w, unsigned k) {
    std::vector<PrimePower> f;
    if (z <= 2) return FactoredInt();
    for (std::uint64_t p : primes_in(2, z - 1)) {
        const std::uint32_t e = p <= w ? k - 1 : 1;
        if (e > 0) f.push_back({p, e});
    }
    return FactoredInt::from_factors(std::move(f));
}

FactoredInt modulus_product_odd(std::uint64_t z, std::uint64_t w, unsigned k) {
    return modulus_product(z, w, k).odd_part();
}

namespace {

std::uint64_t floor_power(std::uint64_t x, double exponent) {
    const double v = std::pow(static_cast<double>(x), exponent);
    return static_cast<std::uint64_t>(std::floor(v + 1e-9));
}

// Factors b over primes up to 2^16.
struct DenominatorShape {
    std::uint64_t largest = 1;
    std::uint32_t max_exponent = 0;
    bool fully_factored = true;
};

DenominatorShape shape_of(const mpz_class& b) {
    DenominatorShape s;
    mpz_class rest = b;
    for (std::uint64_t p : primes_in(2, 1U << 16)) {
        if (rest == 1) break;
        std::uint32_t e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0) {
            s.largest = p;
            s.max_exponent = std::max(s.max_exponent, e);
        }
    }
    if (rest != 1) s.fully_factored = false;
    return s;
}

// Parameters that do not depend on the sieve.
std::pair<ConstructionConfig, StagePlan> resolve_shape(const ConstructionConfig& in) {
    ConstructionConfig cfg = in;
    StagePlan plan;
    if (!cfg.r.is_positive()) throw Error(ErrorCode::Parameter, "r must be positive", "r");
    if (cfg.x < 3) throw Error(ErrorCode::Parameter, "x must be at least 3", "x");
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 0.5)) {
        throw Error(ErrorCode::Parameter, "epsilon must lie in (0, 1/2)", "epsilon");
    }
    if (!(cfg.eta > 0.0)) throw Error(ErrorCode::Parameter, "eta must be positive", "eta");

    // H(x) < log x + 0.5773 + 1/(2x) bounds every reciprocal sum below x.
    const double harmonic_hi = std::log(static_cast<double>(cfg.x)) + 0.5773 + 0.5 / static_cast<double>(cfg.x);
    if (cfg.r.to_double() > harmonic_hi) {
        throw Error(ErrorCode::InfeasibleMass,
                    "r = " + cfg.r.to_string() + " exceeds the sum of 1/n over all n <= " + std::to_string(cfg.x), "x",
                    "increase x; the reciprocals up to x must sum to more than r");
    }

    const DenominatorShape b = shape_of(cfg.r.denominator());
    if (!b.fully_factored) {
        throw Error(ErrorCode::UnsupportedDenominator, "denominator of r has a prime factor above 65536", "r",
                    "use a rational whose denominator is smooth");
    }
    if (cfg.k == 0) {
        cfg.k = std::max<unsigned>(3, b.max_exponent + 1);
    } else if (cfg.k < 2) {
        throw Error(ErrorCode::Parameter, "k must be at least 2", "k");
    } else if (b.max_exponent >= cfg.k) {
        throw Error(ErrorCode::UnsupportedDenominator,
                    "denominator of r is not " + std::to_string(cfg.k) + "-free", "k",
                    "raise k above " + std::to_string(b.max_exponent));
    }
    plan.k = cfg.k;
    plan.y = floor_power(cfg.x, (1.0 - cfg.epsilon) / 2.0);
    plan.w = floor_power(cfg.x, (1.0 - cfg.epsilon) / cfg.k);
    if (plan.w < 2 || b.largest > plan.w) {
        throw Error(ErrorCode::UnsupportedDenominator,
                    "largest prime of the denominator (" + std::to_string(b.largest) + ") exceeds w = " +
                        std::to_string(plan.w),
                    "r", "increase x or use a smaller k");
    }

    plan.delta = cfg.delta ? *cfg.delta
                           : std::min(cfg.r * Rational(mpz_class(1), mpz_class(4)), Rational(mpz_class(1), mpz_class(10)));
    if (!plan.delta.is_positive() || plan.delta >= cfg.r) {
        throw Error(ErrorCode::Parameter, "delta must lie in (0, r)", "delta");
    }
    cfg.delta = plan.delta;

    plan.y_prime = cfg.y_prime_override ? *cfg.y_prime_override : std::min<std::uint64_t>(plan.w, 30);
    if (plan.y_prime < 6 || plan.y_prime > plan.w) {
        throw Error(ErrorCode::Parameter,
                    "y' = " + std::to_string(plan.y_prime) + " must satisfy 6 <= y' <= w = " + std::to_string(plan.w),
                    "y_prime", "increase x so that w >= 6");
    }
    plan.w_prime = plan.y_prime;
    return {cfg, plan};
}

// Largest member boundary with 0 < r - sum_{n > cutoff} 1/n <= delta.
std::uint64_t adaptive_cutoff(const Rational& r, const Rational& delta, const SmoothFamily& family,
                              const FactoredInt& modulus) {
    const Rational goal = r - delta;
    const mpz_class& D = modulus.value();
    const mpz_class scaled = D * goal.denominator();
    const mpz_class rhs = goal.numerator() * D;
    mpz_class acc = 0, term;
    const auto& m = family.members();
    for (std::size_t i = m.size(); i-- > 0;) {
        mpz_divexact_ui(term.get_mpz_t(), scaled.get_mpz_t(), m[i]);
        acc += term;
        if (acc >= rhs) {
            // Sum over members >= m[i] must still fall short of r.
            if (Rational(acc, scaled) >= r) {
                throw Error(ErrorCode::Parameter,
                            "delta is smaller than the reciprocal gap 1/" + std::to_string(m[i]), "delta",
                            "choose a larger delta");
            }
            return m[i] - 1;
        }
    }
    throw Error(ErrorCode::InfeasibleMass,
                "the smooth family up to x carries reciprocal mass below r - delta", "x",
                "increase x or decrease r");
}

std::uint64_t chebyshev_guard(std::uint64_t x, unsigned k) {
    // Largest t with prod_{p <= t} p^k <= x^{2/3}.
    const double budget = (2.0 / 3.0) * std::log(static_cast<double>(x));
    double used = 0.0;
    for (std::uint64_t p = 2;; p = next_prime(p)) {
        used += k * std::log(static_cast<double>(p));
        if (used > budget) return p - 1;
    }
}

std::vector<std::uint64_t> descending(std::vector<std::uint64_t> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

std::vector<std::uint64_t> capped_descending(std::vector<std::uint64_t> v, std::size_t cap) {
    std::reverse(v.begin(), v.end());
    if (v.size() > cap) v.resize(cap);
    return v;
}

Rational reciprocal_total(const std::vector<std::uint64_t>& v) {
    mpq_class s = 0;
    for (std::uint64_t n : v) s += mpq_class(1, to_mpz(n));
    return Rational(s);
}

}  // namespace

std::pair<ConstructionConfig, StagePlan> plan_parameters(const ConstructionConfig& config,
                                                         const SmoothFamily* family, const SpfTable* table) {
    auto [cfg, plan] = resolve_shape(config);
    const std::uint64_t x = cfg.x;

    if (cfg.lambda_mode == LambdaMode::Formula) {
        const double lam = std::exp(-(cfg.r - plan.delta).to_double() * zeta(static_cast<int>(plan.k)) /
                                    rho(2.0 / (1.0 - cfg.epsilon)));
        plan.cutoff = static_cast<std::uint64_t>(std::floor(lam * static_cast<double>(x)));
    } else {
        std::unique_ptr<SmoothFamily> local;
        if (family == nullptr) {
            local = std::make_unique<SmoothFamily>(
                SmoothFamily::build(SmoothParams{x, plan.y, plan.w, Rational(0), plan.k}, table));
            family = local.get();
        }
        const auto& fp = family->params();
        if (fp.x != x || fp.y != plan.y || fp.w != plan.w || fp.k != plan.k || !fp.lambda.is_zero()) {
            throw Error(ErrorCode::Parameter, "family does not match the planned A(x, y; w, 0)", "family");
        }
        plan.cutoff = adaptive_cutoff(cfg.r, plan.delta, *family, modulus_product(next_prime(plan.y), plan.w, plan.k));
    }
    if (plan.cutoff >= x) throw Error(ErrorCode::Parameter, "lambda must be below 1", "lambda");
    plan.lambda = Rational(to_mpz(plan.cutoff), to_mpz(x));

    std::uint64_t x_prime = plan.cutoff / 2;
    double cap = 1.0;
    for (unsigned i = 0; i < 2 * plan.k; ++i) cap *= static_cast<double>(plan.y_prime);
    if (cap < static_cast<double>(x_prime)) x_prime = static_cast<std::uint64_t>(cap);
    if (cfg.x_prime_override) x_prime = *cfg.x_prime_override;
    if (x_prime < 2 * plan.y_prime || x_prime > plan.cutoff) {
        throw Error(ErrorCode::Parameter,
                    "x' = " + std::to_string(x_prime) + " must lie in [2y', lambda x] = [" +
                        std::to_string(2 * plan.y_prime) + ", " + std::to_string(plan.cutoff) + "]",
                    "x_prime", "increase x or lower r so that lambda x leaves room for stage two");
    }
    plan.x_prime = x_prime;
    cfg.x_prime_override = config.x_prime_override;

    // Keep 3 and 5 in the final odd modulus.
    plan.y_doubleprime = std::min(std::max<std::uint64_t>(chebyshev_guard(x, plan.k), 7), plan.y_prime);

    plan.p_primes = descending(primes_in(plan.w + 1, plan.y));
    plan.q_primes = descending(primes_in(plan.y_prime, plan.w));
    plan.q_prime_primes =
        plan.y_doubleprime < plan.y_prime ? descending(primes_in(plan.y_doubleprime, plan.y_prime - 1))
                                          : std::vector<std::uint64_t>{};
    return {cfg, plan};
}

StageOneResult stage_one(const ConstructionConfig& config, const StagePlan& plan, const SmoothFamily& family,
                         const SpfTable* table, bool check_range) {
    const auto& fp = family.params();
    if (fp.x != config.x || fp.y != plan.y || fp.w != plan.w || fp.k != plan.k || fp.cutoff() != plan.cutoff) {
        throw Error(ErrorCode::Parameter, "family does not match A(x, y; w, lambda) of the plan", "family");
    }
    const unsigned k = plan.k;
    const std::uint64_t p0 = next_prime(plan.y);
    const FactoredInt top = modulus_product(p0, plan.w, k);
    if (!top.is_divisible_by(config.r.denominator())) {
        throw Error(ErrorCode::UnsupportedDenominator, "denominator of r does not divide D(p_0)", "r");
    }

    StageOneResult out;
    out.family_size = family.size();
    out.initial_remainder = config.r - reciprocal_sum(family.members(), top);
    if (check_range && !out.initial_remainder.is_positive()) {
        throw Error(ErrorCode::RemainderNonPositive, "the family already sums to at least r", "lambda",
                    "raise lambda or delta");
    }
    Rational R = out.initial_remainder;
    Rational removed_mass(0);
    std::vector<bool> removed(config.x + 1, false);

    auto run = [&](const char* stage, std::uint64_t p, std::uint32_t l, const FactoredInt& N,
                   std::vector<std::uint64_t> S) {
        if (config.stage_one_mode == EliminationMode::Strict && S.size() + 1 < p) {
            throw Error(ErrorCode::EliminationFailed,
                        "only " + std::to_string(S.size()) + " candidates for p = " + std::to_string(p) +
                            ", l = " + std::to_string(l) + " (strict mode needs p - 1)",
                        "p=" + std::to_string(p), "increase x or use opportunistic mode");
        }
        Elimination e = eliminate_prime(R, N, S, p, l, config.stage_one_mode, table);
        for (std::uint64_t n : e.removed) {
            if (removed[n]) throw Error(ErrorCode::EliminationFailed, "internal: element removed twice");
            removed[n] = true;
        }
        removed_mass += reciprocal_total(e.removed);
        R = e.result;
        if (R != out.initial_remainder + removed_mass) {
            throw Error(ErrorCode::EliminationFailed, "internal: telescoping identity broken");
        }
        if (check_range && (!R.is_positive() || R >= config.r)) {
            throw Error(ErrorCode::RemainderNonPositive, "remainder left (0, r) at p = " + std::to_string(p),
                        "delta", "decrease delta or increase x");
        }
        out.removed_count += e.removed.size();
        out.trace.push_back(TraceRecord{stage, p, l, std::move(e.removed), R, N});
    };

    std::uint64_t prev = p0;
    for (std::uint64_t p : plan.p_primes) {
        run("p", p, 1, modulus_product(prev, plan.w, k), capped_descending(family.slice(p, 1), 2 * (p - 1)));
        prev = p;
    }
    for (std::uint64_t q : plan.q_primes) {
        const FactoredInt base = modulus_product(q, plan.w, k);
        for (unsigned j = 2; j <= k; ++j) {
            const std::uint32_t l = k - j + 1;
            const FactoredInt N = base * FactoredInt::from_factors({{q, l}});
            run("q", q, l, N, capped_descending(family.slice(q, l), 2 * (q - 1)));
        }
    }
    const FactoredInt odd = modulus_product_odd(plan.y_prime, plan.w, k);
    for (unsigned j = 2; j <= k; ++j) {
        const std::uint32_t l = k - j + 1;
        const FactoredInt N = odd * FactoredInt::from_factors({{2, l}});
        std::vector<std::uint64_t> S;
        for (std::size_t i = family.size(); i-- > 0 && S.size() < 2;) {
            const std::uint64_t n = family.members()[i];
            if (family.largest_prime(i) < plan.y_prime && exact_multiplicity(n, 2) == l && !removed[n]) S.push_back(n);
        }
        run("2", 2, l, N, std::move(S));
    }
    if (!odd.is_divisible_by(R.denominator())) {
        throw Error(ErrorCode::EliminationFailed, "internal: stage-one remainder does not divide D_0(y')");
    }
    out.remainder = R;
    out.A.reserve(family.size() - out.removed_count);
    for (std::uint64_t n : family.members()) {
        if (!removed[n]) out.A.push_back(n);
    }
    return out;
}

CollisionRepair repair_collisions(const std::vector<std::uint64_t>& A_prime, const std::vector<std::uint64_t>& C) {
    CollisionRepair out;
    for (std::uint64_t n : C) {
        if (std::binary_search(A_prime.begin(), A_prime.end(), n)) {
            const auto [a, b] = split(n);
            out.D1.push_back(a);
            out.D2.push_back(b);
        } else {
            out.C_minus_A_prime.push_back(n);
        }
    }
    std::sort(out.D1.begin(), out.D1.end());
    std::sort(out.D2.begin(), out.D2.end());
    return out;
}

StageTwoResult stage_two(const Rational& remainder, const StagePlan& plan, std::uint64_t x, EliminationMode mode,
                         const SpfTable* table) {
    const unsigned k = plan.k;
    const FactoredInt odd_top = modulus_product_odd(plan.y_prime, plan.w, k);
    if (!remainder.is_positive() || !odd_top.is_divisible_by(remainder.denominator())) {
        throw Error(ErrorCode::BreuschPreconditionFailed, "stage-two input must be positive with denominator | D_0(y')",
                    "remainder");
    }
    if (remainder.denominator() == 1) {
        throw Error(ErrorCode::BreuschPreconditionFailed, "remainder has denominator 1", "y_prime");
    }
    // Members must divide D_0(y'), so P(n) < y'.
    const std::uint64_t smooth = is_prime(plan.y_prime) ? plan.y_prime - 1 : plan.y_prime;
    const SmoothFamily pool_family =
        SmoothFamily::build(SmoothParams{plan.x_prime, smooth, smooth, Rational(0), k}, table);
    const auto pool = members_a0(pool_family);

    StageTwoResult out;
    LambdaChoice choice;
    try {
        choice = choose_lambda(pool, plan.x_prime, remainder);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Mass) throw;
        throw Error(ErrorCode::InfeasibleMass, std::string("stage two: ") + e.what(), "delta",
                    "decrease delta or increase x");
    }
    out.lambda_prime = choice.lambda;
    out.chosen_remainder = choice.remainder;
    std::vector<std::uint64_t> A_prime = std::move(choice.chosen);
    Rational c = choice.remainder;

    std::vector<bool> removed(plan.x_prime + 1, false);
    if (choice.cutoff < plan.x_prime) {
        const SmoothFamily chosen = pool_family.restricted(choice.cutoff);
        bool stop = false;
        for (std::uint64_t q : plan.q_prime_primes) {
            const FactoredInt base = modulus_product_odd(q, plan.w, k);
            for (unsigned j = 2; j <= k && !stop; ++j) {
                const std::uint32_t l = k - j + 1;
                const FactoredInt N = base * FactoredInt::from_factors({{q, l}});
                auto S = capped_descending(chosen.slice(q, l, true), 2 * (q - 1));
                if (mode == EliminationMode::Strict && S.size() + 1 < q) {
                    throw Error(ErrorCode::EliminationFailed,
                                "stage two has only " + std::to_string(S.size()) + " candidates for q' = " +
                                    std::to_string(q) + ", l = " + std::to_string(l),
                                "p=" + std::to_string(q), "use opportunistic mode for stage two");
                }
                try {
                    Elimination e = eliminate_prime(c, N, S, q, l, mode, table);
                    for (std::uint64_t n : e.removed) removed[n] = true;
                    c = e.result;
                    out.trace.push_back(TraceRecord{"q'", q, l, std::move(e.removed), c, N});
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::EliminationFailed || mode == EliminationMode::Strict) throw;
                    out.stopped_at = q;
                    stop = true;
                }
            }
            if (stop) break;
        }
    }
    std::erase_if(A_prime, [&removed](std::uint64_t n) { return removed[n]; });
    out.breusch_input = c;

    const mpz_class d = c.denominator();
    const FactoredInt fd = FactoredInt::factor_divisor(d, odd_top);
    if (c >= Rational::unit(fd.largest_prime())) {
        throw Error(ErrorCode::BreuschPreconditionFailed,
                    "residual " + c.to_string() + " is not below 1/P(denominator) = 1/" +
                        std::to_string(fd.largest_prime()),
                    "delta", "increase x or decrease delta");
    }

    const std::uint64_t soft_cap = std::min<std::uint64_t>(plan.cutoff, floor_power(x, 2.0 / 3.0));
    OddExpansion expansion;
    bool done = false;
    for (int attempt = 0; attempt < 4 && !done; ++attempt) {
        OddExpansionOptions opts;
        opts.max_term = (attempt % 2 == 0) ? soft_cap : plan.cutoff;
        if (attempt < 2) opts.avoid = A_prime;
        if (attempt % 2 == 1 && soft_cap == plan.cutoff) continue;
        try {
            expansion = expand_odd(c, opts);
            done = true;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BoundExceeded) throw;
        }
    }
    if (!done) {
        throw Error(ErrorCode::BoundExceeded,
                    "no odd expansion of the residual " + c.to_string() + " with terms <= lambda x", "x",
                    "increase x so more primes are eliminated in stage two");
    }
    out.expansion_within_bound = expansion.within_bound;
    out.C = expansion.terms;

    CollisionRepair rep = repair_collisions(A_prime, out.C);
    for (std::uint64_t n : rep.D2) {
        if (n > plan.cutoff) {
            throw Error(ErrorCode::BoundExceeded,
                        "collision repair produced " + std::to_string(n) + " above lambda x", "x_prime",
                        "lower x' so that n(n+1) stays below lambda x");
        }
    }
    out.A_prime = std::move(A_prime);
    out.C_minus_A_prime = std::move(rep.C_minus_A_prime);
    out.D1 = std::move(rep.D1);
    out.D2 = std::move(rep.D2);
    return out;
}

namespace {

// y' values tried in order: the requested or default value, then smaller
// ones that leave stage two fewer primes to clear.
std::vector<std::uint64_t> y_prime_ladder(const ConstructionConfig& config, const StagePlan& shape) {
    if (config.y_prime_override) return {*config.y_prime_override};
    const std::uint64_t start = std::min<std::uint64_t>(shape.w, 30);
    std::vector<std::uint64_t> out{start};
    for (std::uint64_t v : {24, 18, 12, 8}) {
        if (v < start && v >= 6) out.push_back(v);
    }
    return out;
}

bool retry_with_smaller_y_prime(ErrorCode code) {
    return code == ErrorCode::EliminationFailed || code == ErrorCode::BoundExceeded ||
           code == ErrorCode::BreuschPreconditionFailed || code == ErrorCode::InfeasibleMass;
}

}  // namespace

Representation construct_dense(const ConstructionConfig& config) {
    auto [cfg0, shape] = resolve_shape(config);
    const SpfTable table(cfg0.x);
    const SmoothFamily base = SmoothFamily::build(SmoothParams{cfg0.x, shape.y, shape.w, Rational(0), shape.k}, &table);

    const auto ladder = y_prime_ladder(config, shape);
    std::vector<std::uint64_t> tried;
    ConstructionConfig cfg;
    StagePlan plan;
    StageOneResult one;
    StageTwoResult two;
    for (std::size_t attempt = 0; attempt < ladder.size(); ++attempt) {
        ConstructionConfig trial = config;
        trial.y_prime_override = ladder[attempt];
        tried.push_back(ladder[attempt]);
        try {
            std::tie(cfg, plan) = plan_parameters(trial, &base, &table);
            const SmoothFamily family = plan.cutoff > 0 ? base.restricted(plan.cutoff) : base;
            one = stage_one(cfg, plan, family, &table);
            two = stage_two(one.remainder, plan, cfg.x, cfg.stage_two_mode, &table);
            break;
        } catch (const Error& e) {
            if (attempt + 1 == ladder.size() || !retry_with_smaller_y_prime(e.code())) throw;
        }
    }
    cfg.y_prime_override = config.y_prime_override;

    Representation rep;
    rep.config = cfg;
    rep.plan = plan;
    rep.A = std::move(one.A);
    rep.A_prime = std::move(two.A_prime);
    rep.C_minus_A_prime = std::move(two.C_minus_A_prime);
    rep.D1 = std::move(two.D1);
    rep.D2 = std::move(two.D2);
    rep.trace = std::move(one.trace);
    rep.trace.insert(rep.trace.end(), two.trace.begin(), two.trace.end());
    rep.stage_one_remainder = one.remainder;
    rep.breusch_input = two.breusch_input;
    rep.lambda_prime = two.lambda_prime;
    rep.stopped_at = two.stopped_at;
    rep.expansion_within_bound = two.expansion_within_bound;
    rep.y_prime_tried = std::move(tried);

    // Parts below lambda x never meet A; within stage two parity and the
    // m^2 + m - 1 exclusion separate them, and the merge re-checks it.
    for (const auto* part : {&rep.A_prime, &rep.C_minus_A_prime, &rep.D1, &rep.D2}) {
        if (!part->empty() && part->back() > plan.cutoff) {
            throw Error(ErrorCode::BoundExceeded, "a stage-two element exceeds lambda x", "x_prime");
        }
    }
    rep.S.reserve(rep.A.size() + rep.A_prime.size() + rep.C_minus_A_prime.size() + rep.D1.size() + rep.D2.size());
    for (const auto* part : {&rep.A_prime, &rep.C_minus_A_prime, &rep.D1, &rep.D2, &rep.A}) {
        rep.S.insert(rep.S.end(), part->begin(), part->end());
    }
    std::sort(rep.S.begin(), rep.S.end());
    if (std::adjacent_find(rep.S.begin(), rep.S.end()) != rep.S.end()) {
        throw Error(ErrorCode::BoundExceeded, "parts of the representation collide", "x",
                    "change x or x' so the stage-two sets separate");
    }
    rep.certificate = check(cfg.r, rep.S, cfg.x, cfg.eta);
    rep.density = static_cast<double>(rep.S.size()) / static_cast<double>(cfg.x);
    return rep;
}

}  // namespace egyptian
