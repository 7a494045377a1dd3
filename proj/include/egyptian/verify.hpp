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
#include <span>
#include <string>

#include "egyptian/arith.hpp"

namespace egyptian {

struct Certificate {
    bool sum_exact = false;
    bool distinct = false;
    bool max_ok = false;  // every element in [1, x]
    bool harmonic_bound_ok = false;
    std::size_t count = 0;
    std::uint64_t max_element = 0;
    Rational sum;       // meaningful only when every element is positive
    Rational density;   // count / x
    double c_of_r_minus_eta = 0.0;
    double upper_bound = 0.0;  // 1 - e^{-r}
    std::string note;          // why a field failed, empty otherwise

    bool passed() const { return sum_exact && distinct && max_ok && harmonic_bound_ok; }
};

/// Sum of 1/n by pairwise reduction over a balanced tree.
Rational balanced_reciprocal_sum(std::span<const std::uint64_t> values);

/// Whether H(x) - H(x - m) <= r, the least possible reciprocal sum of m
/// distinct integers up to x. Exact for x <= 10^4, otherwise a sound
/// interval enclosure decides and exact summation settles ties.
bool harmonic_tail_at_most(std::uint64_t x, std::uint64_t m, const Rational& r);

/// Certifies r = sum_{n in S} 1/n with distinct n <= x. Never throws;
/// failures are reported through the fields.
Certificate check(const Rational& r, std::span<const std::uint64_t> S, std::uint64_t x,
                  double eta = 0.05) noexcept;

}  // namespace egyptian
