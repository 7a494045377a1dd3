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

#include "egyptian/smooth.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "egyptian/error.hpp"

namespace egyptian {

void SmoothParams::validate() const {
    if (y < 2 || y > x) throw Error(ErrorCode::Parameter, "smooth family requires 2 <= y <= x", "y");
    if (w < 2) throw Error(ErrorCode::Parameter, "smooth family requires w >= 2", "w");
    if (lambda.sign() < 0 || lambda >= Rational(1)) {
        throw Error(ErrorCode::Parameter, "smooth family requires 0 <= lambda < 1", "lambda");
    }
    if (k < 2) throw Error(ErrorCode::Parameter, "smooth family requires k >= 2", "k");
}

std::uint64_t SmoothParams::cutoff() const {
    const mpq_class scaled = lambda.value() * to_mpz(x);
    mpz_class t;
    mpz_fdiv_q(t.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return t.get_ui();
}

bool is_quadratic_form(std::uint64_t n) {
    // n = m^2 + m - 1  <=>  4n + 5 = (2m + 1)^2.
    const std::uint64_t t = 4 * n + 5;
    const std::uint64_t s = iroot(t, 2);
    return s * s == t && s >= 3 && (s & 1U) == 1;
}

bool satisfies_family_predicates(std::uint64_t n, const SmoothParams& params) {
    if (n == 0 || n > params.x || n <= params.cutoff()) return false;
    const FactoredInt fn = factorize(n);
    for (const auto& f : fn.factors()) {
        if (f.prime > params.y) return false;
        if (f.exponent >= params.k) return false;
        if (f.exponent >= 2 && f.prime > params.w) return false;
    }
    return true;
}

SmoothFamily SmoothFamily::build(const SmoothParams& params, const SpfTable* table,
                                 std::size_t memory_budget) {
    params.validate();
    const std::uint64_t x = params.x;
    const bool need_table = table == nullptr || !table->covers(x);
    const double estimate = (need_table ? 4.5 : 0.0) * static_cast<double>(x) + 0.25 * static_cast<double>(x);
    if (estimate > static_cast<double>(memory_budget)) {
        throw Error(ErrorCode::Resource,
                    "sieve up to x = " + std::to_string(x) + " exceeds the memory budget", "x",
                    "lower x or raise the memory budget");
    }
    std::unique_ptr<SpfTable> local;
    if (need_table) {
        local = std::make_unique<SpfTable>(x);
        table = local.get();
    }

    std::vector<bool> quadratic(x + 1, false);
    for (std::uint64_t m = 1; m * m + m - 1 <= x; ++m) quadratic[m * m + m - 1] = true;

    SmoothFamily fam;
    fam.params_ = params;
    fam.member_bits_.assign(x + 1, false);
    const std::uint64_t cutoff = params.cutoff();
    for (std::uint64_t n = cutoff + 1; n <= x; ++n) {
        std::uint64_t rest = n;
        std::uint64_t top = 1;
        std::uint32_t top_exp = 0;
        bool ok = true;
        while (rest > 1) {
            const std::uint32_t p = table->smallest(rest);
            std::uint32_t e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            if (p > params.y || e >= params.k || (e >= 2 && p > params.w)) {
                ok = false;
                break;
            }
            top = p;
            top_exp = e;
        }
        if (!ok) continue;
        std::uint8_t flags = 0;
        if (n & 1U) flags |= kOdd;
        if (quadratic[n]) flags |= kQuadratic;
        if ((flags & kOdd) && !(flags & kQuadratic)) {
            flags |= kA0;
            ++fam.count_a0_;
        }
        fam.members_.push_back(n);
        fam.largest_.push_back(static_cast<std::uint32_t>(top));
        fam.multiplicity_.push_back(static_cast<std::uint8_t>(top_exp));
        fam.flags_.push_back(flags);
        fam.member_bits_[n] = true;
    }
    fam.index_slices();
    return fam;
}

void SmoothFamily::index_slices() {
    slice_ranges_.clear();
    slice_order_.resize(members_.size());
    for (std::uint32_t i = 0; i < slice_order_.size(); ++i) slice_order_[i] = i;
    auto key = [this](std::uint32_t i) {
        return (static_cast<std::uint64_t>(largest_[i]) << 8) | multiplicity_[i];
    };
    std::stable_sort(slice_order_.begin(), slice_order_.end(),
                     [&key](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
    std::uint32_t begin = 0;
    for (std::uint32_t i = 1; i <= slice_order_.size(); ++i) {
        if (i == slice_order_.size() || key(slice_order_[i]) != key(slice_order_[begin])) {
            slice_ranges_[key(slice_order_[begin])] = {begin, i};
            begin = i;
        }
    }
}

bool SmoothFamily::contains(std::uint64_t n) const {
    return n < member_bits_.size() && member_bits_[n];
}

std::vector<std::uint64_t> SmoothFamily::slice(std::uint64_t p, std::uint32_t l, bool a0_only) const {
    std::vector<std::uint64_t> out;
    auto it = slice_ranges_.find((p << 8) | l);
    if (it == slice_ranges_.end()) return out;
    for (std::uint32_t j = it->second.first; j < it->second.second; ++j) {
        const std::uint32_t i = slice_order_[j];
        if (!a0_only || in_a0(i)) out.push_back(members_[i]);
    }
    return out;
}

std::vector<std::uint64_t> SmoothFamily::core(std::uint64_t bound, bool a0_only) const {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (largest_[i] <= bound && (!a0_only || in_a0(i))) out.push_back(members_[i]);
    }
    return out;
}

SmoothFamily SmoothFamily::restricted(std::uint64_t new_cutoff) const {
    if (new_cutoff < params_.cutoff() || new_cutoff >= params_.x) {
        throw Error(ErrorCode::Parameter, "restriction cutoff must lie in [cutoff, x)", "lambda");
    }
    SmoothFamily out;
    out.params_ = params_;
    out.params_.lambda = Rational(to_mpz(new_cutoff), to_mpz(params_.x));
    const auto first = static_cast<std::size_t>(
        std::upper_bound(members_.begin(), members_.end(), new_cutoff) - members_.begin());
    out.members_.assign(members_.begin() + first, members_.end());
    out.largest_.assign(largest_.begin() + first, largest_.end());
    out.multiplicity_.assign(multiplicity_.begin() + first, multiplicity_.end());
    out.flags_.assign(flags_.begin() + first, flags_.end());
    out.member_bits_ = member_bits_;
    for (std::size_t i = 0; i < first; ++i) out.member_bits_[members_[i]] = false;
    out.count_a0_ = static_cast<std::size_t>(
        std::count_if(out.flags_.begin(), out.flags_.end(), [](std::uint8_t f) { return (f & kA0) != 0; }));
    out.index_slices();
    return out;
}

SmoothFamily build_family(const SmoothParams& params, const SpfTable* table) {
    return SmoothFamily::build(params, table);
}

std::vector<std::uint64_t> members_a0(const SmoothFamily& family) {
    std::vector<std::uint64_t> out;
    out.reserve(family.count_a0());
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family.in_a0(i)) out.push_back(family.members()[i]);
    }
    return out;
}

std::vector<std::uint64_t> slice(const SmoothFamily& family, std::uint64_t p, std::uint32_t l) {
    const auto& prm = family.params();
    if (!is_prime(p) || p > prm.y) throw Error(ErrorCode::Parameter, "slice prime must be a prime <= y", "p");
    if (l < 1 || l >= prm.k) throw Error(ErrorCode::Parameter, "slice exponent must satisfy 1 <= l < k", "l");
    if (p > prm.w && l != 1) throw Error(ErrorCode::Parameter, "primes above w only occur to the first power", "l");
    return family.slice(p, l);
}

Rational reciprocal_sum(std::span<const std::uint64_t> values, const FactoredInt& modulus) {
    const mpz_class& D = modulus.value();
    mpz_class acc = 0, term;
    for (std::uint64_t n : values) {
        if (n == 0 || !mpz_divisible_ui_p(D.get_mpz_t(), n)) {
            throw Error(ErrorCode::Divisibility, std::to_string(n) + " does not divide the summation modulus");
        }
        mpz_divexact_ui(term.get_mpz_t(), D.get_mpz_t(), n);
        acc += term;
    }
    return Rational(acc, D);
}

LambdaChoice choose_lambda(std::span<const std::uint64_t> pool, std::uint64_t x_prime,
                           const Rational& alpha) {
    if (!alpha.is_positive()) throw Error(ErrorCode::Parameter, "alpha must be positive", "alpha");
    if (x_prime == 0) throw Error(ErrorCode::Parameter, "x' must be positive", "x_prime");
    mpq_class sum = 0;
    std::size_t keep_from = pool.size();
    std::uint64_t cutoff = 0;
    bool stopped = false;
    while (keep_from > 0) {
        const std::uint64_t n = pool[keep_from - 1];
        mpq_class next = sum + mpq_class(1, to_mpz(n));
        if (next >= alpha.value()) {
            cutoff = n;
            stopped = true;
            break;
        }
        sum = next;
        --keep_from;
    }
    Rational remainder = alpha - Rational(sum);
    if (!stopped) {
        const std::uint64_t smallest = pool.empty() ? x_prime + 1 : pool.front();
        cutoff = smallest - 1;
        if (cutoff == 0 || remainder > Rational::unit(cutoff)) {
            throw Error(ErrorCode::Mass,
                        "reciprocal mass of the pool is below the requested alpha = " + alpha.to_string(),
                        "alpha", "enlarge x' or reduce the remainder handed to this stage");
        }
    }
    LambdaChoice out;
    out.cutoff = cutoff;
    out.lambda = Rational(to_mpz(cutoff), to_mpz(x_prime));
    out.chosen.assign(pool.begin() + static_cast<std::ptrdiff_t>(keep_from), pool.end());
    out.remainder = std::move(remainder);
    return out;
}

LambdaChoice choose_lambda(std::uint64_t x_prime, std::uint64_t y_prime, std::uint64_t w_prime,
                           unsigned k, const Rational& alpha) {
    SmoothParams params{x_prime, y_prime, w_prime, Rational(0), k};
    const SmoothFamily family = SmoothFamily::build(params);
    const auto pool = members_a0(family);
    return choose_lambda(pool, x_prime, alpha);
}

}  // namespace egyptian
