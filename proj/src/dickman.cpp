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

#include "egyptian/dickman.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "egyptian/error.hpp"

namespace egyptian {

RhoEvaluator::RhoEvaluator(double u_max, int terms) : u_max_(u_max) {
    if (!(u_max >= 1.0) || terms < 8) throw Error(ErrorCode::Parameter, "invalid rho series configuration");
    const auto intervals = static_cast<std::size_t>(std::ceil(u_max));
    const auto n = static_cast<std::size_t>(terms);
    series_.reserve(intervals);
    std::vector<long double> first(n, 0.0L);
    first[0] = 1.0L;
    series_.push_back(std::move(first));
    for (std::size_t j = 2; j <= intervals; ++j) {
        const auto& prev = series_.back();
        const auto jj = static_cast<long double>(j);
        std::vector<long double> c(n, 0.0L);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            c[i + 1] = (prev[i] + static_cast<long double>(i) * c[i]) / (jj * static_cast<long double>(i + 1));
        }
        long double tail = 0.0L;
        for (std::size_t i = n - 1; i >= 1; --i) tail += c[i] / static_cast<long double>(i + 1);
        c[0] = tail / (jj - 1.0L);
        series_.push_back(std::move(c));
    }
}

double RhoEvaluator::operator()(double u) const {
    if (!(u > 0.0) || u > u_max_) {
        std::ostringstream bound;
        bound << u_max_;
        throw Error(ErrorCode::Domain, "rho(u) requires 0 < u <= " + bound.str());
    }
    if (u <= 1.0) return 1.0;
    const auto j = static_cast<std::size_t>(std::ceil(u));
    const auto& c = series_[j - 1];
    const long double z = static_cast<long double>(j) - u;
    long double acc = 0.0L;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return static_cast<double>(acc);
}

const RhoEvaluator& default_rho() {
    static const RhoEvaluator evaluator;
    return evaluator;
}

double rho(double u) { return default_rho()(u); }

double c_of_r(double r) {
    if (!(r > 0.0)) throw Error(ErrorCode::Domain, "C(r) requires r > 0");
    const double rho2 = 1.0 - std::numbers::ln2;
    return -rho2 * std::expm1(-r / rho2);
}

double c_of_r(const Rational& r) {
    if (!r.is_positive()) throw Error(ErrorCode::Domain, "C(r) requires r > 0");
    return c_of_r(r.to_double());
}

double density_upper_bound(double r) { return -std::expm1(-r); }

double zeta(int k) {
    if (k < 2) throw Error(ErrorCode::Domain, "zeta(k) requires integer k >= 2");
    constexpr int kTerms = 64;
    long double sum = 0.0L;
    for (int n = kTerms - 1; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -k);
    const long double N = kTerms;
    const long double kk = k;
    // Euler-Maclaurin tail for sum_{n >= N} n^{-k}.
    long double tail = std::pow(N, 1 - kk) / (kk - 1) + 0.5L * std::pow(N, -kk)
                       + kk / 12.0L * std::pow(N, -kk - 1)
                       - kk * (kk + 1) * (kk + 2) / 720.0L * std::pow(N, -kk - 3)
                       + kk * (kk + 1) * (kk + 2) * (kk + 3) * (kk + 4) / 30240.0L * std::pow(N, -kk - 5);
    return static_cast<double>(sum + tail);
}

double xi(int k) { return 2.0 * (1.0 - std::ldexp(1.0, -k)) * zeta(k); }

namespace {

double smooth_ratio(double x, double y) {
    if (!(x >= 3.0) || !(y >= 2.0) || y > x) {
        throw Error(ErrorCode::Domain, "estimates require x >= 3 and 2 <= y <= x");
    }
    return std::log(x) / std::log(y);
}

}  // namespace

double psi_estimate(double x, double y, int k) { return x * rho(smooth_ratio(x, y)) / zeta(k); }

double psi0_estimate(double x, double y, int k) { return x * rho(smooth_ratio(x, y)) / xi(k); }

double recip_sum_estimate(double x, double y, int k, double lambda) {
    if (!(lambda > 0.0) || lambda > 1.0) throw Error(ErrorCode::Domain, "lambda must lie in (0, 1]");
    return rho(smooth_ratio(x, y)) * std::log(1.0 / lambda) / zeta(k);
}

}  // namespace egyptian
