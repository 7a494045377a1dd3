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
#include <utility>
#include <vector>

#include "egyptian/arith.hpp"

namespace egyptian {

struct OddExpansion {
    std::vector<std::uint64_t> terms;  // ascending, odd, distinct
    mpz_class modulus;                 // every term divides it
    mpz_class lemma_bound;             // 5 * lcm{d, 9 * prod_{3 < p <= P(d)} p}
    bool within_bound = true;          // max term <= lemma_bound
};

struct OddExpansionOptions {
    /// Largest admissible term; 0 means no limit beyond 64-bit range.
    std::uint64_t max_term = 0;
    /// Terms that must not appear, ascending.
    std::vector<std::uint64_t> avoid;
    /// Search nodes allowed per candidate modulus.
    std::uint64_t node_budget = 200000;
    /// Candidate moduli tried before giving up.
    std::size_t max_moduli = 4096;
};

/// 5 * lcm{d, 9 * prod_{3 < p <= P(d)} p} for odd d > 1.
mpz_class odd_expansion_bound(const mpz_class& d);

/// Writes c/d as a sum of reciprocals of distinct odd integers, each a
/// divisor of some odd multiple M of d. Moduli dividing the bound above
/// are tried in ascending order; larger moduli are tried only after those
/// fail, and the result is then flagged.
///
/// Throws Error(BreuschPreconditionFailed) unless c/d > 0, d is odd and
/// c/d < 1/P(d); Error(BoundExceeded) when no expansion respects the
/// options. The result is re-summed exactly before it is returned.
OddExpansion expand_odd(const Rational& c_over_d, const OddExpansionOptions& options = {});

/// 1/n = 1/(n+1) + 1/(n(n+1)).
std::pair<std::uint64_t, std::uint64_t> split(std::uint64_t n);

/// Fibonacci-Sylvester greedy expansion, ascending denominators.
std::vector<mpz_class> greedy_expand(const Rational& c_over_d);

}  // namespace egyptian
