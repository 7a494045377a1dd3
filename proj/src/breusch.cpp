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

#include "egyptian/breusch.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "egyptian/error.hpp"

namespace egyptian {

namespace {

const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> primes = primes_in(2, 1U << 16);
    return primes;
}

// d is expected to be smooth; a cofactor beyond 2^32 must itself be prime.
FactoredInt factor_big(const mpz_class& d) {
    std::vector<PrimePower> out;
    mpz_class rest = d;
    for (std::uint64_t p : small_primes()) {
        if (rest == 1) break;
        std::uint32_t e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    }
    if (rest != 1) {
        if (!rest.fits_ulong_p() || !is_prime(rest.get_ui())) {
            throw Error(ErrorCode::Input, "denominator has a prime factor beyond the supported range", "c_over_d");
        }
        out.push_back({rest.get_ui(), 1});
    }
    return FactoredInt::from_factors(std::move(out));
}

FactoredInt bound_modulus(const FactoredInt& d) {
    const std::uint64_t top = d.largest_prime();
    std::vector<PrimePower> f = d.factors();
    auto raise = [&f](std::uint64_t p, std::uint32_t e) {
        auto it = std::find_if(f.begin(), f.end(), [p](const PrimePower& q) { return q.prime >= p; });
        if (it != f.end() && it->prime == p) {
            it->exponent = std::max(it->exponent, e);
        } else {
            f.insert(it, PrimePower{p, e});
        }
    };
    raise(3, 2);
    for (std::uint64_t p : primes_in(5, std::max<std::uint64_t>(top, 5))) {
        if (p <= top) raise(p, 1);
    }
    FactoredInt lcm = FactoredInt::from_factors(std::move(f));
    return lcm * FactoredInt::from_factors({{5, 1}});
}

void divisors_upto(const std::vector<PrimePower>& f, std::size_t i, unsigned __int128 cur,
                   unsigned __int128 limit, std::vector<std::uint64_t>& out) {
    if (i == f.size()) {
        out.push_back(static_cast<std::uint64_t>(cur));
        return;
    }
    unsigned __int128 v = cur;
    for (std::uint32_t e = 0; e <= f[i].exponent; ++e) {
        divisors_upto(f, i + 1, v, limit, out);
        v *= f[i].prime;
        if (v > limit) break;
    }
}

void all_divisors(const std::vector<PrimePower>& f, std::size_t i, const mpz_class& cur,
                  std::vector<mpz_class>& out, std::size_t cap) {
    if (out.size() >= cap) return;
    if (i == f.size()) {
        out.push_back(cur);
        return;
    }
    mpz_class v = cur;
    for (std::uint32_t e = 0; e <= f[i].exponent; ++e) {
        all_divisors(f, i + 1, v, out, cap);
        v *= static_cast<unsigned long>(f[i].prime);
    }
}

class DivisorSearch {
public:
    DivisorSearch(std::vector<mpz_class> values, std::uint64_t budget)
        : values_(std::move(values)), suffix_(values_.size() + 1), budget_(budget) {
        suffix_.back() = 0;
        for (std::size_t i = values_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + values_[i];
    }

    const mpz_class& total() const { return suffix_.front(); }

    bool run(const mpz_class& target) {
        chosen_.clear();
        nodes_ = 0;
        return dfs(0, target);
    }

    const std::vector<std::size_t>& chosen() const { return chosen_; }

private:
    bool dfs(std::size_t i, const mpz_class& rem) {
        if (rem == 0) return true;
        if (i == values_.size() || suffix_[i] < rem || ++nodes_ > budget_) return false;
        while (i < values_.size() && values_[i] > rem) ++i;
        if (i == values_.size() || suffix_[i] < rem) return false;
        chosen_.push_back(i);
        if (dfs(i + 1, rem - values_[i])) return true;
        chosen_.pop_back();
        return dfs(i + 1, rem);
    }

    std::vector<mpz_class> values_;  // descending
    std::vector<mpz_class> suffix_;
    std::vector<std::size_t> chosen_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
};

// Tries one modulus M (a multiple of d); fills terms on success.
bool try_modulus(const FactoredInt& M, const Rational& c_over_d, const OddExpansionOptions& options,
                 std::vector<std::uint64_t>& terms) {
    const unsigned __int128 limit =
        options.max_term == 0 ? std::numeric_limits<std::uint64_t>::max() : options.max_term;
    std::vector<std::uint64_t> cands;
    divisors_upto(M.factors(), 0, 1, limit, cands);
    std::sort(cands.begin(), cands.end());
    std::erase_if(cands, [&options](std::uint64_t t) {
        return t < 3 || std::binary_search(options.avoid.begin(), options.avoid.end(), t);
    });
    const mpz_class target = c_over_d.numerator() * (M.value() / c_over_d.denominator());
    std::vector<mpz_class> values;
    values.reserve(cands.size());
    mpz_class v;
    for (std::uint64_t t : cands) {
        mpz_divexact_ui(v.get_mpz_t(), M.value().get_mpz_t(), t);
        values.push_back(v);
    }
    DivisorSearch search(std::move(values), options.node_budget);
    if (search.total() < target || !search.run(target)) return false;
    terms.clear();
    for (std::size_t i : search.chosen()) terms.push_back(cands[i]);
    std::sort(terms.begin(), terms.end());
    return true;
}

}  // namespace

mpz_class odd_expansion_bound(const mpz_class& d) {
    if (d <= 1 || mpz_even_p(d.get_mpz_t())) {
        throw Error(ErrorCode::BreuschPreconditionFailed, "odd expansion needs an odd denominator > 1", "c_over_d");
    }
    return bound_modulus(factor_big(d)).value();
}

OddExpansion expand_odd(const Rational& c_over_d, const OddExpansionOptions& options) {
    const mpz_class d = c_over_d.denominator();
    if (!c_over_d.is_positive() || d <= 1 || mpz_even_p(d.get_mpz_t())) {
        throw Error(ErrorCode::BreuschPreconditionFailed,
                    "odd expansion needs 0 < c/d with d odd, got " + c_over_d.to_string(), "c_over_d",
                    "the remainder must have an odd denominator before the terminal expansion");
    }
    if (!std::is_sorted(options.avoid.begin(), options.avoid.end())) {
        throw Error(ErrorCode::Parameter, "avoid list must be ascending", "avoid");
    }
    const FactoredInt fd = factor_big(d);
    const std::uint64_t top = fd.largest_prime();
    if (c_over_d >= Rational::unit(top)) {
        throw Error(ErrorCode::BreuschPreconditionFailed,
                    "odd expansion needs c/d < 1/P(d) = 1/" + std::to_string(top) + ", got " + c_over_d.to_string(),
                    "c_over_d", "increase x or decrease delta so the final remainder is smaller");
    }

    const FactoredInt bound = bound_modulus(fd);
    OddExpansion out;
    out.lemma_bound = bound.value();

    // Cofactors f | bound/d give the moduli d*f, smallest first.
    std::vector<PrimePower> co;
    for (const auto& pp : bound.factors()) {
        const std::uint32_t e = pp.exponent - fd.exponent_of(pp.prime);
        if (e > 0) co.push_back({pp.prime, e});
    }
    std::vector<mpz_class> cofactors;
    all_divisors(co, 0, mpz_class(1), cofactors, std::size_t{1} << 20);
    std::sort(cofactors.begin(), cofactors.end());
    if (cofactors.size() > options.max_moduli) cofactors.resize(options.max_moduli);

    std::vector<std::uint64_t> terms;
    bool found = false;
    for (const mpz_class& f : cofactors) {
        const FactoredInt exact = FactoredInt::factor_divisor(d * f, bound);
        if (try_modulus(exact, c_over_d, options, terms)) {
            out.modulus = exact.value();
            found = true;
            break;
        }
    }
    if (!found) {
        static constexpr std::uint64_t kWideners[] = {3, 5, 7, 9, 15, 21, 25, 27, 35, 45, 63, 75, 105, 135, 225, 315};
        for (std::uint64_t g : kWideners) {
            const FactoredInt exact = bound * factorize(g);
            if (try_modulus(exact, c_over_d, options, terms)) {
                out.modulus = exact.value();
                found = true;
                break;
            }
        }
    }
    if (!found) {
        throw Error(ErrorCode::BoundExceeded,
                    "no odd expansion of " + c_over_d.to_string() + " within the allowed term bound",
                    options.max_term ? "max_term" : "c_over_d", "raise x so larger terms are admissible");
    }

    mpz_class sum_num = 0, term;
    for (std::uint64_t t : terms) {
        mpz_divexact_ui(term.get_mpz_t(), out.modulus.get_mpz_t(), t);
        sum_num += term;
    }
    if (Rational(sum_num, out.modulus) != c_over_d) {
        throw Error(ErrorCode::BreuschPreconditionFailed, "internal: odd expansion failed its exact re-summation");
    }
    out.within_bound = to_mpz(terms.back()) <= out.lemma_bound;
    out.terms = std::move(terms);
    return out;
}

std::pair<std::uint64_t, std::uint64_t> split(std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::Domain, "split requires n >= 1", "n");
    return {n + 1, n * (n + 1)};
}

std::vector<mpz_class> greedy_expand(const Rational& c_over_d) {
    if (!c_over_d.is_positive()) throw Error(ErrorCode::Domain, "greedy expansion requires c/d > 0", "c_over_d");
    std::vector<mpz_class> out;
    mpq_class rest = c_over_d.value();
    mpz_class prev = 0;
    while (sgn(rest) > 0) {
        mpz_class n;
        mpz_cdiv_q(n.get_mpz_t(), rest.get_den_mpz_t(), rest.get_num_mpz_t());
        // Values of at least 1 start along the harmonic series.
        const bool pure = n > prev;
        if (!pure) n = prev + 1;
        const mpz_class before = rest.get_num();
        rest -= mpq_class(1, n);
        rest.canonicalize();
        prev = n;
        if (pure && sgn(rest) > 0 && rest.get_num() >= before) {
            throw Error(ErrorCode::Domain, "internal: greedy numerator failed to decrease");
        }
        out.push_back(std::move(n));
    }
    return out;
}

}  // namespace egyptian
