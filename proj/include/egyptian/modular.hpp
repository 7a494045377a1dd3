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
#include <span>
#include <vector>

#include "egyptian/arith.hpp"

namespace egyptian {

struct SubsetWitness {
    std::vector<std::size_t> indices;  // strictly increasing
    std::uint64_t achieved = 0;        // sum of the selected residues mod p
};

/// Achievable subset sums of nonzero residues mod p, grown one residue at
/// a time. Each residue class keeps a witness of minimal cardinality; on
/// ties the earlier witness stays, so results are deterministic.
class SubsetSumTable {
public:
    /// Throws Error(Input) if a residue is 0 mod p, Error(Parameter) if p < 2.
    SubsetSumTable(std::span<const std::uint64_t> residues, std::uint64_t p);

    std::uint64_t modulus() const noexcept { return p_; }
    bool reachable(std::uint64_t target) const { return size_[target % p_] != kUnreached; }
    /// Number of residue classes that are subset sums (the empty sum included).
    std::size_t coverage() const noexcept { return coverage_; }
    std::optional<SubsetWitness> witness(std::uint64_t target) const;

private:
    static constexpr std::uint32_t kUnreached = 0xFFFFFFFFU;

    std::uint64_t p_;
    std::vector<std::uint64_t> residues_;
    std::vector<std::uint32_t> size_;
    // updated_[i * p + s]: class s received a new witness when residue i arrived.
    std::vector<bool> updated_;
    std::size_t coverage_ = 1;
};

/// Subset of `residues` summing to target mod p, or nullopt if no subset
/// does. With at least p - 1 residues a witness always exists.
std::optional<SubsetWitness> subset_sum_mod_p(std::span<const std::uint64_t> residues,
                                              std::uint64_t target, std::uint64_t p);

/// Size of the set of subset sums mod p; always >= min(p, t + 1).
std::size_t coverage_count(std::span<const std::uint64_t> residues, std::uint64_t p);

enum class EliminationMode { Strict, Opportunistic };

struct Elimination {
    std::vector<std::uint64_t> removed;  // the subset T, in input order
    Rational result;                     // c/d + sum_{n in T} 1/n
    FactoredInt lcm;                     // lcm{d, S}; result's denominator divides lcm / p
};

/// Adds reciprocals of fewer than p members of S to c/d so that the
/// reduced denominator divides N / p.
///
/// Requires p^l to divide N exactly, d | N, and every n in S to divide N
/// with exact multiplicity l at p. Strict mode additionally requires
/// |S| >= p - 1, which guarantees success. Opportunistic mode accepts any
/// S and throws Error(EliminationFailed) when the needed residue is not a
/// subset sum. Precondition violations throw Error(Parameter).
Elimination eliminate_prime(const Rational& c_over_d, const FactoredInt& N,
                            std::span<const std::uint64_t> S, std::uint64_t p, std::uint32_t l,
                            EliminationMode mode, const SpfTable* table = nullptr);

}  // namespace egyptian
