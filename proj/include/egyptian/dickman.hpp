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

#include <vector>

#include "egyptian/arith.hpp"

namespace egyptian {

/// Dickman's function as one power series per unit interval.
///
/// On [j - 1, j] write rho(u) = sum_i c_i (j - u)^i. The delay equation
/// turns into c_{i+1} = (c'_i + i c_i) / (j (i + 1)) with c' the series
/// of the previous interval, and c_0 = rho(j) follows from
/// rho(j) = (1/j) integral_{j-1}^{j} rho. Every coefficient is positive,
/// so values keep full relative precision far into the tail.
class RhoEvaluator {
public:
    explicit RhoEvaluator(double u_max = 20.0, int terms = 72);

    /// Throws Error(Domain) unless 0 < u <= u_max().
    double operator()(double u) const;

    double u_max() const noexcept { return u_max_; }

private:
    double u_max_;
    // series_[j - 1] holds the coefficients on [j - 1, j].
    std::vector<std::vector<long double>> series_;
};

/// Shared evaluator with the default u_max = 20.
const RhoEvaluator& default_rho();

double rho(double u);

/// (1 - log 2)(1 - exp(-r / (1 - log 2))). Throws Error(Domain) for r <= 0.
double c_of_r(double r);
double c_of_r(const Rational& r);

/// 1 - e^{-r}, the ceiling on the attainable density.
double density_upper_bound(double r);

/// Riemann zeta at an integer k >= 2 (Euler-Maclaurin tail, ~1e-15).
double zeta(int k);
/// 2 (1 - 2^{-k}) zeta(k).
double xi(int k);

/// Main terms of the smooth-set census estimates; error terms are dropped.
double psi_estimate(double x, double y, int k);
double psi0_estimate(double x, double y, int k);
double recip_sum_estimate(double x, double y, int k, double lambda);

}  // namespace egyptian
