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

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "egyptian/arith.hpp"

namespace egyptian {

/// Parameters of the constrained smooth set
///   { n : lambda*x < n <= x, P(n) <= y, n k-free, d^2 | n => P(d) <= w }.
struct SmoothParams {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t w = 0;
    Rational lambda{0};
    unsigned k = 2;

    /// Throws Error(Parameter) when 2 <= y <= x, w >= 2, 0 <= lambda < 1,
    /// k >= 2 does not hold.
    void validate() const;

    /// floor(lambda * x); members are exactly the qualifying n > cutoff().
    std::uint64_t cutoff() const;
};

/// True iff n = m^2 + m - 1 for some integer m >= 1.
bool is_quadratic_form(std::uint64_t n);

/// Independent per-element evaluation of the four defining predicates.
bool satisfies_family_predicates(std::uint64_t n, const SmoothParams& params);

/// Sieved census of a constrained smooth set. Members are ascending and
/// annotated with P(n), the exact multiplicity of P(n), parity and the
/// m^2 + m - 1 flag. Immutable once built.
class SmoothFamily {
public:
    /// Default memory budget for build(): 2 GiB.
    static constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 31;

    /// Throws Error(Resource) if the sieve would exceed memory_budget bytes.
    static SmoothFamily build(const SmoothParams& params, const SpfTable* table = nullptr,
                              std::size_t memory_budget = kDefaultMemoryBudget);

    const SmoothParams& params() const noexcept { return params_; }
    const std::vector<std::uint64_t>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    std::size_t count_a0() const noexcept { return count_a0_; }

    bool contains(std::uint64_t n) const;
    std::uint64_t largest_prime(std::size_t i) const { return largest_[i]; }
    std::uint32_t largest_multiplicity(std::size_t i) const { return multiplicity_[i]; }
    bool in_a0(std::size_t i) const { return (flags_[i] & kA0) != 0; }

    /// Members n with P(n) = p exactly to the power l, ascending. Only
    /// checks the (p, l) preconditions; empty when nothing matches.
    std::vector<std::uint64_t> slice(std::uint64_t p, std::uint32_t l, bool a0_only = false) const;

    /// Members with P(n) <= bound.
    std::vector<std::uint64_t> core(std::uint64_t bound, bool a0_only = false) const;

    /// The same set restricted to n > new_cutoff (new_cutoff >= cutoff()).
    SmoothFamily restricted(std::uint64_t new_cutoff) const;

private:
    static constexpr std::uint8_t kOdd = 1;
    static constexpr std::uint8_t kQuadratic = 2;
    static constexpr std::uint8_t kA0 = 4;

    void index_slices();

    SmoothParams params_;
    std::vector<std::uint64_t> members_;
    std::vector<std::uint32_t> largest_;
    std::vector<std::uint8_t> multiplicity_;
    std::vector<std::uint8_t> flags_;
    std::vector<bool> member_bits_;  // indexed by n, 0..x
    std::size_t count_a0_ = 0;
    // (P(n) << 8 | l) -> range of slice_order_.
    std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> slice_ranges_;
    std::vector<std::uint32_t> slice_order_;
};

SmoothFamily build_family(const SmoothParams& params, const SpfTable* table = nullptr);

/// The odd members that are not of the form m^2 + m - 1.
std::vector<std::uint64_t> members_a0(const SmoothFamily& family);

/// Members with largest prime p to the exact power l. Throws
/// Error(Parameter) if p is not a prime <= y, l < 1, l >= k, or l > 1
/// while p > w.
std::vector<std::uint64_t> slice(const SmoothFamily& family, std::uint64_t p, std::uint32_t l);

/// Exact sum of 1/n using one integer accumulator over modulus.value().
/// Throws Error(Divisibility) if some n does not divide the modulus.
Rational reciprocal_sum(std::span<const std::uint64_t> values, const FactoredInt& modulus);

struct LambdaChoice {
    Rational lambda;                  // cutoff / x'
    std::uint64_t cutoff = 0;         // lambda * x'
    std::vector<std::uint64_t> chosen;  // pool members > cutoff, ascending
    Rational remainder;               // alpha - sum over chosen, in (0, 1/cutoff]
};

/// Picks the largest cutoff such that the pool members above it sum to
/// strictly less than alpha, leaving 0 < remainder <= 1/cutoff. `pool`
/// must be ascending. Throws Error(Mass) when no cutoff meets the bound.
LambdaChoice choose_lambda(std::span<const std::uint64_t> pool, std::uint64_t x_prime,
                           const Rational& alpha);

/// Same, with the pool A_0(x', y'; w', 0) sieved on the spot.
LambdaChoice choose_lambda(std::uint64_t x_prime, std::uint64_t y_prime, std::uint64_t w_prime,
                           unsigned k, const Rational& alpha);

}  // namespace egyptian
