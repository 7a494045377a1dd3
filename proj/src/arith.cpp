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

#include "egyptian/arith.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <utility>

#include "egyptian/error.hpp"

namespace egyptian {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::Domain: return "DomainError";
        case ErrorCode::Parameter: return "ParameterError";
        case ErrorCode::Divisibility: return "DivisibilityError";
        case ErrorCode::Mass: return "MassError";
        case ErrorCode::Input: return "InputError";
        case ErrorCode::Resource: return "ResourceGuard";
        case ErrorCode::InfeasibleMass: return "InfeasibleMass";
        case ErrorCode::UnsupportedDenominator: return "UnsupportedDenominator";
        case ErrorCode::EliminationFailed: return "EliminationFailed";
        case ErrorCode::BreuschPreconditionFailed: return "BreuschPreconditionFailed";
        case ErrorCode::BoundExceeded: return "BoundExceeded";
        case ErrorCode::RemainderNonPositive: return "RemainderNonPositive";
    }
    return "Unknown";
}

mpz_class to_mpz(std::uint64_t n) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_class(static_cast<unsigned long>(n));
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw Error(ErrorCode::Domain, "zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational Rational::unit(std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::Domain, "unit fraction 1/0");
    return Rational(mpz_class(1), to_mpz(n));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::Domain, "division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) {
        throw Error(ErrorCode::Input, "malformed rational '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    mpz_class a(n, 10), b(std::string(den), 10);
    if (b == 0) throw Error(ErrorCode::Input, "zero denominator in '" + std::string(text) + "'");
    return Rational(a, b);
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

// ------------------------------------------------------------- FactoredInt

void FactoredInt::recompute() {
    value_ = 1;
    mpz_class pp;
    for (const auto& f : factors_) {
        mpz_ui_pow_ui(pp.get_mpz_t(), f.prime, f.exponent);
        value_ *= pp;
    }
}

FactoredInt FactoredInt::from_factors(std::vector<PrimePower> factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].exponent == 0 || factors[i].prime < 2) {
            throw Error(ErrorCode::Parameter, "factor with zero exponent or prime < 2");
        }
        if (i > 0 && factors[i - 1].prime >= factors[i].prime) {
            throw Error(ErrorCode::Parameter, "factor primes must be strictly increasing");
        }
    }
    FactoredInt out;
    out.factors_ = std::move(factors);
    out.recompute();
    return out;
}

FactoredInt FactoredInt::factor_divisor(const mpz_class& value, const FactoredInt& modulus) {
    if (value <= 0 || !modulus.is_divisible_by(value)) {
        throw Error(ErrorCode::Divisibility, value.get_str() + " does not divide the modulus");
    }
    std::vector<PrimePower> out;
    mpz_class rest = value;
    for (const auto& f : modulus.factors_) {
        if (rest == 1) break;
        std::uint32_t e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), f.prime)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), f.prime);
            ++e;
        }
        if (e > 0) out.push_back({f.prime, e});
    }
    FactoredInt result;
    result.factors_ = std::move(out);
    result.value_ = value;
    return result;
}

std::uint32_t FactoredInt::exponent_of(std::uint64_t prime) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                               [](const PrimePower& f, std::uint64_t p) { return f.prime < p; });
    return (it != factors_.end() && it->prime == prime) ? it->exponent : 0;
}

FactoredInt FactoredInt::with_exponent(std::uint64_t prime, std::uint32_t exponent) const {
    FactoredInt out = *this;
    auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), prime,
                               [](const PrimePower& f, std::uint64_t p) { return f.prime < p; });
    const bool present = it != out.factors_.end() && it->prime == prime;
    if (exponent == 0) {
        if (!present) return out;
        out.factors_.erase(it);
    } else if (present) {
        it->exponent = exponent;
    } else {
        out.factors_.insert(it, PrimePower{prime, exponent});
    }
    out.recompute();
    return out;
}

namespace {

template <typename Combine>
FactoredInt merge(const std::vector<PrimePower>& a, const std::vector<PrimePower>& b, Combine combine) {
    std::vector<PrimePower> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].prime < b[j].prime)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].prime < a[i].prime) {
            out.push_back(b[j++]);
        } else {
            out.push_back({a[i].prime, combine(a[i].exponent, b[j].exponent)});
            ++i;
            ++j;
        }
    }
    return FactoredInt::from_factors(std::move(out));
}

}  // namespace

FactoredInt FactoredInt::lcm(const FactoredInt& other) const {
    return merge(factors_, other.factors_, [](std::uint32_t x, std::uint32_t y) { return std::max(x, y); });
}

FactoredInt FactoredInt::operator*(const FactoredInt& other) const {
    return merge(factors_, other.factors_, [](std::uint32_t x, std::uint32_t y) { return x + y; });
}

// ----------------------------------------------------------------- sieving

SpfTable::SpfTable(std::uint64_t limit) : limit_(limit) {
    if (limit > std::numeric_limits<std::uint32_t>::max()) {
        throw Error(ErrorCode::Resource, "spf table limit exceeds 32-bit range");
    }
    spf_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(static_cast<std::uint32_t>(i));
        }
        const std::uint32_t si = spf_[i];
        for (std::uint32_t p : primes_) {
            if (p > si || static_cast<std::uint64_t>(p) * i > limit) break;
            spf_[p * i] = p;
        }
    }
}

FactoredInt factorize(std::uint64_t n, const SpfTable* table) {
    if (n == 0) throw Error(ErrorCode::Domain, "factorize(0)");
    std::vector<PrimePower> out;
    auto push = [&out](std::uint64_t p) {
        if (!out.empty() && out.back().prime == p) {
            ++out.back().exponent;
        } else {
            out.push_back({p, 1});
        }
    };
    if (table != nullptr && table->covers(n)) {
        while (n > 1) {
            std::uint32_t p = table->smallest(n);
            push(p);
            n /= p;
        }
    } else {
        while ((n & 1U) == 0) {
            push(2);
            n >>= 1;
        }
        for (std::uint64_t p = 3; p <= n / p; p += 2) {
            while (n % p == 0) {
                push(p);
                n /= p;
            }
        }
        if (n > 1) push(n);
    }
    return FactoredInt::from_factors(std::move(out));
}

std::uint64_t largest_prime_factor(std::uint64_t n, const SpfTable* table) {
    return factorize(n, table).largest_prime();
}

std::uint64_t least_prime_factor(std::uint64_t n, const SpfTable* table) {
    if (n == 1) return kInfinitePrime;
    if (table != nullptr && table->covers(n)) return table->smallest(n);
    return factorize(n, table).factors().front().prime;
}

std::uint32_t exact_multiplicity(std::uint64_t n, std::uint64_t p) {
    if (n == 0 || p < 2) throw Error(ErrorCode::Domain, "exact_multiplicity requires n >= 1 and p >= 2");
    std::uint32_t l = 0;
    while (n % p == 0) {
        n /= p;
        ++l;
    }
    return l;
}

std::uint32_t exact_multiplicity(const mpz_class& n, std::uint64_t p) {
    if (n == 0 || p < 2) throw Error(ErrorCode::Domain, "exact_multiplicity requires n >= 1 and p >= 2");
    mpz_class rest = abs(n);
    std::uint32_t l = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++l;
    }
    return l;
}

bool is_k_free(std::uint64_t n, unsigned k, const SpfTable* table) {
    if (k < 2) throw Error(ErrorCode::Parameter, "is_k_free requires k >= 2");
    const FactoredInt fn = factorize(n, table);
    for (const auto& f : fn.factors()) {
        if (f.exponent >= k) return false;
    }
    return true;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1U) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic for all 64-bit n with these bases.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 2 || lo > hi) return out;
    lo = std::max<std::uint64_t>(lo, 2);
    const std::uint64_t root = iroot(hi, 2);
    std::vector<char> base(root + 1, 1);
    std::vector<std::uint64_t> small;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!base[i]) continue;
        small.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) base[j] = 0;
    }
    constexpr std::uint64_t kSegment = 1 << 18;
    std::vector<char> seg;
    for (std::uint64_t start = lo; start <= hi; start += kSegment) {
        const std::uint64_t end = std::min(hi, start + kSegment - 1);
        seg.assign(end - start + 1, 1);
        for (std::uint64_t p : small) {
            std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
            for (std::uint64_t j = first; j <= end; j += p) seg[j - start] = 0;
        }
        for (std::uint64_t i = start; i <= end; ++i) {
            if (seg[i - start]) out.push_back(i);
        }
        if (end == hi) break;
    }
    return out;
}

std::uint64_t iroot(std::uint64_t n, unsigned k) {
    if (k == 0) throw Error(ErrorCode::Domain, "iroot with k = 0");
    if (n < 2 || k == 1) return n;
    auto pow_le = [n, k](std::uint64_t r) {
        unsigned __int128 acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= r;
            if (acc > n) return false;
        }
        return true;
    };
    auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / k));
    while (r > 0 && !pow_le(r)) --r;
    while (pow_le(r + 1)) ++r;
    return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) throw Error(ErrorCode::Domain, "value not invertible modulo m");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

}  // namespace egyptian
