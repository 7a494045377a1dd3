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

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace egyptian {

/// Reduced fraction with arbitrary-precision numerator and positive
/// denominator. GMP keeps mpq_class canonical after every operation, so
/// the invariant gcd(num, den) = 1 holds for every value observed.
class Rational {
public:
    Rational() = default;
    Rational(long numerator) : value_(numerator) {}  // NOLINT(implicit)
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(mpq_class value);

    /// 1/n.
    static Rational unit(std::uint64_t n);

    /// Parses "a/b" or "a" (decimal, optional sign). Throws Error(Input).
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_positive() const { return sign() > 0; }

    double to_double() const { return value_.get_d(); }
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Positive integer together with its full prime-power factorization.
/// Primes are strictly increasing and exponents are at least one.
class FactoredInt {
public:
    FactoredInt() = default;  // the integer 1

    /// Throws Error(Parameter) on unsorted primes or zero exponents.
    static FactoredInt from_factors(std::vector<PrimePower> factors);

    /// Factors `value` over the primes of `modulus`. Throws
    /// Error(Divisibility) if value does not divide modulus.
    static FactoredInt factor_divisor(const mpz_class& value, const FactoredInt& modulus);

    const mpz_class& value() const noexcept { return value_; }
    const std::vector<PrimePower>& factors() const noexcept { return factors_; }

    std::uint32_t exponent_of(std::uint64_t prime) const;
    std::uint64_t largest_prime() const { return factors_.empty() ? 1 : factors_.back().prime; }

    /// Copy with the exponent of `prime` replaced (0 removes it).
    FactoredInt with_exponent(std::uint64_t prime, std::uint32_t exponent) const;
    FactoredInt odd_part() const { return with_exponent(2, 0); }

    /// Prime-wise maximum of exponents.
    FactoredInt lcm(const FactoredInt& other) const;
    FactoredInt operator*(const FactoredInt& other) const;

    bool divides(const mpz_class& n) const { return mpz_divisible_p(n.get_mpz_t(), value_.get_mpz_t()) != 0; }
    bool is_divisible_by(const mpz_class& d) const { return mpz_divisible_p(value_.get_mpz_t(), d.get_mpz_t()) != 0; }

    friend bool operator==(const FactoredInt& a, const FactoredInt& b) { return a.factors_ == b.factors_; }

private:
    void recompute();

    std::vector<PrimePower> factors_;
    mpz_class value_{1};
};

/// Smallest-prime-factor table for 0..limit, built by a linear sieve.
class SpfTable {
public:
    explicit SpfTable(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    bool covers(std::uint64_t n) const noexcept { return n <= limit_; }
    /// Requires 2 <= n <= limit().
    std::uint32_t smallest(std::uint64_t n) const { return spf_[n]; }
    const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

/// Marker returned by least_prime_factor(1); larger than every prime.
inline constexpr std::uint64_t kInfinitePrime = std::numeric_limits<std::uint64_t>::max();

FactoredInt factorize(std::uint64_t n, const SpfTable* table = nullptr);

/// P(n) with P(1) = 1.
std::uint64_t largest_prime_factor(std::uint64_t n, const SpfTable* table = nullptr);
/// p(n) with p(1) = kInfinitePrime.
std::uint64_t least_prime_factor(std::uint64_t n, const SpfTable* table = nullptr);

/// Largest l with p^l | n.
std::uint32_t exact_multiplicity(std::uint64_t n, std::uint64_t p);
std::uint32_t exact_multiplicity(const mpz_class& n, std::uint64_t p);

bool is_k_free(std::uint64_t n, unsigned k, const SpfTable* table = nullptr);

bool is_prime(std::uint64_t n);
/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Primes in the closed interval [lo, hi], ascending (segmented sieve).
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

/// Integer floor of the k-th root.
std::uint64_t iroot(std::uint64_t n, unsigned k);

/// Modular inverse of a mod m (gcd(a, m) = 1 required).
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

mpz_class to_mpz(std::uint64_t n);

}  // namespace egyptian
