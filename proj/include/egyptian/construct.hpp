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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egyptian/arith.hpp"
#include "egyptian/breusch.hpp"
#include "egyptian/modular.hpp"
#include "egyptian/smooth.hpp"
#include "egyptian/verify.hpp"

namespace egyptian {

enum class LambdaMode { Formula, Adaptive };

std::string_view to_string(LambdaMode mode);
std::string_view to_string(EliminationMode mode);

struct ConstructionConfig {
    Rational r{1};
    std::uint64_t x = 0;
    double eta = 0.05;
    unsigned k = 0;        // 0: smallest k >= 3 with b k-free
    double epsilon = 0.1;
    std::optional<Rational> delta;  // default min(r/4, 1/10)
    LambdaMode lambda_mode = LambdaMode::Adaptive;
    EliminationMode stage_one_mode = EliminationMode::Strict;
    EliminationMode stage_two_mode = EliminationMode::Opportunistic;
    std::optional<std::uint64_t> y_prime_override;
    std::optional<std::uint64_t> x_prime_override;
};

struct StagePlan {
    std::uint64_t y = 0;
    std::uint64_t w = 0;
    unsigned k = 0;
    Rational delta;
    Rational lambda;         // cutoff / x
    std::uint64_t cutoff = 0;  // members of A exceed it
    std::uint64_t y_prime = 0;
    std::uint64_t x_prime = 0;
    std::uint64_t w_prime = 0;
    std::uint64_t y_doubleprime = 0;
    std::vector<std::uint64_t> p_primes;        // (w, y], descending
    std::vector<std::uint64_t> q_primes;        // [y', w], descending
    std::vector<std::uint64_t> q_prime_primes;  // [y'', y'), descending
};

struct TraceRecord {
    std::string stage;  // "p", "q", "two", "q'"
    std::uint64_t prime = 0;
    std::uint32_t l = 0;
    std::vector<std::uint64_t> removed;
    Rational remainder_after;
    FactoredInt modulus;  // N at this step; the remainder's denominator divides N / prime
};

using StageTrace = std::vector<TraceRecord>;

struct StageOneResult {
    std::vector<std::uint64_t> A;  // ascending
    Rational initial_remainder;    // r - sum over the whole family
    Rational remainder;            // denominator divides D_0(y')
    StageTrace trace;
    std::size_t family_size = 0;
    std::size_t removed_count = 0;
};

struct StageTwoResult {
    std::vector<std::uint64_t> A_prime;
    std::vector<std::uint64_t> C;  // the full odd expansion
    std::vector<std::uint64_t> C_minus_A_prime;
    std::vector<std::uint64_t> D1;
    std::vector<std::uint64_t> D2;
    Rational lambda_prime;
    Rational chosen_remainder;  // after choose_lambda, before eliminations
    Rational breusch_input;     // handed to the odd expansion
    std::uint64_t stopped_at = 0;  // q' whose elimination failed, 0 if none
    bool expansion_within_bound = true;
    StageTrace trace;
};

struct Representation {
    ConstructionConfig config;
    StagePlan plan;
    std::vector<std::uint64_t> A, A_prime, C_minus_A_prime, D1, D2;
    std::vector<std::uint64_t> S;  // union, ascending
    StageTrace trace;
    Rational stage_one_remainder;
    Rational breusch_input;
    Rational lambda_prime;
    std::uint64_t stopped_at = 0;
    bool expansion_within_bound = true;
    std::vector<std::uint64_t> y_prime_tried;  // the last one succeeded
    Certificate certificate;
    double density = 0.0;
};

/// D(z) = prod_{p < z, p <= w} p^{k-1} * prod_{w < p < z} p.
FactoredInt modulus_product(std::uint64_t z, std::uint64_t w, unsigned k);
/// Odd part of D(z).
FactoredInt modulus_product_odd(std::uint64_t z, std::uint64_t w, unsigned k);

/// Resolves defaults and parameters. When `family` is given it must be
/// A(x, y; w, 0) for the returned plan; adaptive mode needs it and builds
/// one otherwise. Throws InfeasibleMass or UnsupportedDenominator.
std::pair<ConstructionConfig, StagePlan> plan_parameters(const ConstructionConfig& config,
                                                         const SmoothFamily* family = nullptr,
                                                         const SpfTable* table = nullptr);

/// Eliminates the primes of (w, y], then [y', w], then the powers of 2.
/// `family` must be A(x, y; w, lambda) for the plan. With check_range the
/// remainder must stay in (0, r) throughout (Error(RemainderNonPositive));
/// without it the eliminations run on any sign.
StageOneResult stage_one(const ConstructionConfig& config, const StagePlan& plan,
                         const SmoothFamily& family, const SpfTable* table = nullptr,
                         bool check_range = true);

/// Writes the stage-one remainder with odd denominators up to the plan's
/// cutoff and returns the four parts of the final representation.
StageTwoResult stage_two(const Rational& remainder, const StagePlan& plan, std::uint64_t x,
                         EliminationMode mode = EliminationMode::Opportunistic,
                         const SpfTable* table = nullptr);

/// Given A' and C (odd, A' free of m^2 + m - 1 values), replaces each
/// common n by n + 1 and n(n + 1). Returns {C \ A', D1, D2}.
struct CollisionRepair {
    std::vector<std::uint64_t> C_minus_A_prime, D1, D2;
};
CollisionRepair repair_collisions(const std::vector<std::uint64_t>& A_prime,
                                  const std::vector<std::uint64_t>& C);

/// The whole construction, certified by the independent verifier. Without
/// a y' override, a failed stage is retried with smaller y' (24, 18, 12, 8).
Representation construct_dense(const ConstructionConfig& config);

}  // namespace egyptian
