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

#include "egyptian/modular.hpp"

#include <algorithm>
#include <string>

#include "egyptian/error.hpp"

namespace egyptian {

SubsetSumTable::SubsetSumTable(std::span<const std::uint64_t> residues, std::uint64_t p)
    : p_(p), residues_(residues.begin(), residues.end()) {
    if (p < 2) throw Error(ErrorCode::Parameter, "subset sums need a modulus p >= 2", "p");
    for (std::uint64_t r : residues_) {
        if (r % p == 0) throw Error(ErrorCode::Input, "residue " + std::to_string(r) + " is 0 mod p");
    }
    size_.assign(p, kUnreached);
    size_[0] = 0;
    updated_.assign(residues_.size() * p, false);
    std::vector<std::uint32_t> next;
    for (std::size_t i = 0; i < residues_.size(); ++i) {
        const std::uint64_t step = residues_[i] % p;
        next = size_;
        for (std::uint64_t s = 0; s < p; ++s) {
            if (size_[s] == kUnreached) continue;
            std::uint64_t t = s + step;
            if (t >= p) t -= p;
            if (size_[s] + 1 < next[t]) {
                if (next[t] == kUnreached) ++coverage_;
                next[t] = size_[s] + 1;
                updated_[i * p + t] = true;
            }
        }
        size_.swap(next);
    }
}

std::optional<SubsetWitness> SubsetSumTable::witness(std::uint64_t target) const {
    target %= p_;
    if (size_[target] == kUnreached) return std::nullopt;
    SubsetWitness w;
    w.achieved = target;
    std::uint64_t cur = target;
    std::size_t i = residues_.size();
    // The class's witness is whatever its most recent update at or before
    // step i-1 recorded; that update extended the predecessor class as it
    // stood before the step.
    while (i > 0) {
        std::size_t j = i;
        while (j > 0 && !updated_[(j - 1) * p_ + cur]) --j;
        if (j == 0) break;
        --j;
        w.indices.push_back(j);
        const std::uint64_t step = residues_[j] % p_;
        cur = (cur + p_ - step) % p_;
        i = j;
    }
    std::reverse(w.indices.begin(), w.indices.end());
    return w;
}

std::optional<SubsetWitness> subset_sum_mod_p(std::span<const std::uint64_t> residues,
                                              std::uint64_t target, std::uint64_t p) {
    if (target == 0 || target % p == 0) {
        for (std::uint64_t r : residues) {
            if (r % p == 0) throw Error(ErrorCode::Input, "residue " + std::to_string(r) + " is 0 mod p");
        }
        return SubsetWitness{{}, 0};
    }
    return SubsetSumTable(residues, p).witness(target);
}

std::size_t coverage_count(std::span<const std::uint64_t> residues, std::uint64_t p) {
    return SubsetSumTable(residues, p).coverage();
}

Elimination eliminate_prime(const Rational& c_over_d, const FactoredInt& N,
                            std::span<const std::uint64_t> S, std::uint64_t p, std::uint32_t l,
                            EliminationMode mode, const SpfTable* table) {
    if (!is_prime(p) || l < 1) throw Error(ErrorCode::Parameter, "p must be prime and l >= 1", "p");
    if (N.exponent_of(p) != l) {
        throw Error(ErrorCode::Parameter,
                    "p^l must divide N exactly (p = " + std::to_string(p) + ", l = " + std::to_string(l) + ")", "N");
    }
    const mpz_class d = c_over_d.denominator();
    if (!N.is_divisible_by(d)) throw Error(ErrorCode::Parameter, "denominator does not divide N", "c_over_d");
    if (mode == EliminationMode::Strict && S.size() + 1 < p) {
        throw Error(ErrorCode::Parameter,
                    "strict elimination of " + std::to_string(p) + " needs at least p - 1 candidates, got " +
                        std::to_string(S.size()),
                    "S", "use opportunistic mode or enlarge the candidate set");
    }

    FactoredInt M = FactoredInt::factor_divisor(d, N);
    const mpz_class& Nv = N.value();
    for (std::uint64_t n : S) {
        if (n == 0 || !mpz_divisible_ui_p(Nv.get_mpz_t(), n)) {
            throw Error(ErrorCode::Parameter, std::to_string(n) + " does not divide N", "S");
        }
        if (exact_multiplicity(n, p) != l) {
            throw Error(ErrorCode::Parameter, std::to_string(n) + " is not exactly divisible by p^l", "S");
        }
    }
    // lcm{d, S} by exponent merge; every n already divides N.
    {
        FactoredInt acc = M;
        for (std::uint64_t n : S) {
            FactoredInt fn = factorize(n, table);
            bool grows = false;
            for (const auto& f : fn.factors()) {
                if (f.exponent > acc.exponent_of(f.prime)) {
                    grows = true;
                    break;
                }
            }
            if (grows) acc = acc.lcm(fn);
        }
        M = std::move(acc);
    }
    // M has p-exponent exactly l, so M / p^l is a unit mod p and
    // M / n = (M / p^l) / (n / p^l) is computed mod p without big division.
    mpz_class p_l;
    mpz_ui_pow_ui(p_l.get_mpz_t(), p, l);
    mpz_class m_over = M.value() / p_l;
    const std::uint64_t cofactor = mpz_fdiv_ui(m_over.get_mpz_t(), p);
    std::uint64_t pl_small = 1;
    for (std::uint32_t i = 0; i < l; ++i) pl_small *= p;

    std::vector<std::uint64_t> residues;
    residues.reserve(S.size());
    for (std::uint64_t n : S) {
        const std::uint64_t unit = (n / pl_small) % p;
        residues.push_back(static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(cofactor) * inverse_mod(unit, p) % p));
    }
    const mpz_class m = M.value() / d;
    mpz_class cm = c_over_d.numerator() * m;
    const std::uint64_t cm_mod = mpz_fdiv_ui(cm.get_mpz_t(), p);
    const std::uint64_t target = (p - cm_mod) % p;

    auto found = subset_sum_mod_p(residues, target, p);
    if (!found) {
        throw Error(ErrorCode::EliminationFailed,
                    "no subset of the " + std::to_string(S.size()) + " candidates clears p = " + std::to_string(p) +
                        " (l = " + std::to_string(l) + ")",
                    "p=" + std::to_string(p), "increase x or lower the smoothness cut for this stage");
    }

    Elimination out;
    out.lcm = M;
    mpz_class numer = cm, term;
    for (std::size_t idx : found->indices) {
        const std::uint64_t n = S[idx];
        out.removed.push_back(n);
        mpz_divexact_ui(term.get_mpz_t(), M.value().get_mpz_t(), n);
        numer += term;
    }
    out.result = Rational(numer, M.value());
    mpz_class n_over_p = Nv / static_cast<unsigned long>(p);
    if (!mpz_divisible_p(n_over_p.get_mpz_t(), out.result.denominator().get_mpz_t())) {
        throw Error(ErrorCode::EliminationFailed, "internal: reduced denominator does not divide N/p");
    }
    return out;
}

}  // namespace egyptian
