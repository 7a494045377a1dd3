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


// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "egyptian/breusch.hpp"
#include "egyptian/construct.hpp"
#include "egyptian/dickman.hpp"
#include "egyptian/modular.hpp"
#include "egyptian/smooth.hpp"
#include "egyptian/verify.hpp"
#include "oracles.hpp"

using namespace egyptian;

namespace {

using U64s = std::vector<std::uint64_t>;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_seconds) {
        out.require(false, "time " + std::to_string(secs) + " s over budget " + std::to_string(budget_seconds) + " s");
    }
    if (!out.pass) ++failures;
    std::printf("%s %d. %s (%.2f s; budget %.0f s) %s\n", out.pass ? "PASS" : "FAIL", id, title, secs, budget_seconds,
                out.detail.str().c_str());
    std::fflush(stdout);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Representations shared between the end-to-end and expansion criteria.
std::vector<Representation> runs;

}  // namespace

int main() {
    criterion(1, "Dickman rho values", 1.0, [](Outcome& o) {
        const double r2 = rho(2.0);
        o.require(std::abs(r2 - 0.30685281944) < 1e-8, "rho(2)");
        for (int i = 0; i < 20; ++i) {
            const double u = 1.0 + i / 19.0;
            o.require(std::abs(rho(u) - (1.0 - std::log(u))) < 1e-8, "rho(" + fmt(u) + ") on [1,2]");
        }
        const double r3 = rho(3.0);
        const double quad = oracle::rho_to_3(3.0);
        o.require(std::abs(quad - 0.0486083883) < 1e-7, "quadrature oracle drifted");
        o.require(std::abs(r3 - quad) < 1e-7, "rho(3)");
        o.detail << "rho(2)=" << fmt(r2) << " rho(3)=" << fmt(r3) << " oracle=" << fmt(quad);
    });

    criterion(2, "density constant relations on r = 0.1..5", 1.0, [](Outcome& o) {
        double min_ratio = 1.0;
        for (int i = 1; i <= 50; ++i) {
            const double r = i / 10.0;
            const double c = c_of_r(r), ub = density_upper_bound(r);
            o.require(c < ub, "C(r) < 1 - e^-r at r=" + fmt(r));
            o.require(c / ub > 1.0 - std::log(2.0), "ratio at r=" + fmt(r));
            min_ratio = std::min(min_ratio, c / ub);
        }
        o.detail << "min C(r)/(1-e^-r)=" << fmt(min_ratio);
    });

    criterion(3, "subset-sum solver equals exhaustive enumeration (p <= 13, t <= 6)", 30.0, [](Outcome& o) {
        std::size_t cases = 0;
        for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
            for (std::size_t t = 0; t <= 6; ++t) {
                U64s ms(t, 1);
                while (true) {
                    ++cases;
                    const auto ref = oracle::subset_sums(ms, p);
                    const SubsetSumTable table(ms, p);
                    std::set<std::uint64_t> got;
                    for (std::uint64_t s = 0; s < p; ++s) {
                        const auto w = table.witness(s);
                        if (!w) continue;
                        std::uint64_t acc = 0;
                        for (auto i : w->indices) acc = (acc + ms[i]) % p;
                        o.require(acc == s, "witness sum");
                        got.insert(s);
                    }
                    o.require(got == ref, "achievable set");
                    o.require(got.size() >= std::min<std::size_t>(p, t + 1), "size bound");
                    // Next non-decreasing sequence over [1, p-1].
                    std::size_t i = t;
                    while (i > 0 && ms[i - 1] == p - 1) --i;
                    if (i == 0) break;
                    ++ms[i - 1];
                    for (std::size_t j = i; j < t; ++j) ms[j] = ms[i - 1];
                }
            }
        }
        o.detail << cases << " multisets";
    });

    criterion(4, "prime elimination on 1000 random instances (p <= 50)", 30.0, [](Outcome& o) {
        std::mt19937_64 rng(2026);
        const auto primes = primes_in(2, 50);
        const U64s small{2, 3, 5, 7, 11, 13};
        std::size_t max_removed = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const std::uint64_t p = primes[rng() % primes.size()];
            const std::uint32_t l = 1 + static_cast<std::uint32_t>(rng() % 2);
            // N = p^l * M with M built until it has at least p + 5 divisors.
            std::vector<PrimePower> mf;
            std::uint64_t tau = 1;
            for (std::uint64_t q : small) {
                if (q == p || tau >= p + 5) continue;
                const std::uint32_t e = 1 + static_cast<std::uint32_t>(rng() % 3);
                mf.push_back({q, e});
                tau *= e + 1;
            }
            if (tau < p + 5) {
                mf.push_back({p == 17 ? std::uint64_t{19} : std::uint64_t{17}, 1});
                tau *= 2;
            }
            while (tau < p + 5) {
                for (auto& f : mf) {
                    if (tau >= p + 5) break;
                    tau = tau / (f.exponent + 1) * (f.exponent + 2);
                    ++f.exponent;
                }
            }
            std::vector<PrimePower> nf = mf;
            nf.push_back({p, l});
            std::sort(nf.begin(), nf.end(), [](auto a, auto b) { return a.prime < b.prime; });
            const FactoredInt N = FactoredInt::from_factors(nf);

            U64s divisors{1};
            for (const auto& f : mf) {
                const std::size_t n = divisors.size();
                std::uint64_t pw = 1;
                for (std::uint32_t e = 1; e <= f.exponent; ++e) {
                    pw *= f.prime;
                    for (std::size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * pw);
                }
            }
            std::shuffle(divisors.begin(), divisors.end(), rng);
            const std::size_t size = (p - 1) + rng() % (std::min<std::size_t>(divisors.size(), p + 5) - (p - 1) + 1);
            std::uint64_t pl = 1;
            for (std::uint32_t e = 0; e < l; ++e) pl *= p;
            U64s S;
            for (std::size_t i = 0; i < size; ++i) S.push_back(divisors[i] * pl);

            mpz_class d = 1;
            for (const auto& f : nf) {
                for (std::uint32_t e = rng() % (f.exponent + 1); e > 0; --e) d *= static_cast<unsigned long>(f.prime);
            }
            const mpz_class c = 1 + static_cast<unsigned long>(rng() % 1000);
            const Rational cd(c, d);

            const auto e = eliminate_prime(cd, N, S, p, l, EliminationMode::Strict);
            max_removed = std::max(max_removed, e.removed.size());
            o.require(e.removed.size() < p, "|T| < p");
            std::set<std::uint64_t> pool(S.begin(), S.end());
            std::set<std::uint64_t> chosen(e.removed.begin(), e.removed.end());
            o.require(chosen.size() == e.removed.size(), "T has repeats");
            for (auto n : e.removed) o.require(pool.count(n) == 1, "T not inside S");
            const mpq_class expect = cd.value() + oracle::naive_sum(e.removed);
            o.require(e.result.value() == expect, "result != c/d + sum T");
            const mpz_class reduced = N.value() / static_cast<unsigned long>(p);
            o.require(reduced % expect.get_den() == 0, "denominator does not divide N/p");
        }
        o.detail << "largest |T| " << max_removed;
    });

    criterion(5, "sieve ground truth and partition identity", 60.0, [](Outcome& o) {
        const SpfTable table(1000000);
        const auto sq = build_family(SmoothParams{1000000, 1000000, 1000000, 0, 2}, &table);
        const auto ref = oracle::k_free_count(1000000, 2);
        o.require(sq.size() == 607926, "count != 607926");
        o.require(ref == 607926, "oracle != 607926");
        o.detail << "squarefree count " << sq.size() << " (oracle " << ref << "); ";
        const auto desk = build_family(SmoothParams{1000000, 501, 63, 0, 3}, &table);
        for (const SmoothFamily* f : {&sq, &desk}) {
            const auto& prm = f->params();
            for (std::uint64_t yp : {10ULL, 30ULL}) {
                U64s all = f->core(yp);
                o.require(all == build_family(SmoothParams{prm.x, yp, std::min(prm.w, prm.x), 0, prm.k}, &table).members(),
                          "core differs from the y'-smooth family");
                std::size_t pieces = 1;
                for (auto q : primes_in(yp + 1, prm.y)) {
                    const std::uint32_t top = q > prm.w ? 1 : prm.k - 1;
                    for (std::uint32_t l = 1; l <= top; ++l) {
                        const auto s = slice(*f, q, l);
                        all.insert(all.end(), s.begin(), s.end());
                        ++pieces;
                    }
                }
                std::sort(all.begin(), all.end());
                o.require(std::adjacent_find(all.begin(), all.end()) == all.end(), "pieces overlap");
                o.require(all == f->members(), "pieces do not cover the family");
                if (f == &desk) o.detail << "y'=" << yp << ": " << pieces << " pieces; ";
            }
        }
    });

    criterion(6, "common-denominator sums equal balanced-tree sums", 30.0, [](Outcome& o) {
        const auto f = build_family(SmoothParams{1000000, 501, 63, 0, 3});
        const FactoredInt D = modulus_product(next_prime(501), 63, 3);
        std::mt19937_64 rng(6);
        U64s members = f.members();
        for (int i = 0; i < 100; ++i) {
            std::shuffle(members.begin(), members.end(), rng);
            U64s sub(members.begin(), members.begin() + 1000);
            o.require(reciprocal_sum(sub, D) == balanced_reciprocal_sum(sub), "sums differ");
        }
        o.detail << "family size " << f.size();
    });

    struct Run {
        const char* r;
        std::uint64_t x;
        EliminationMode mode;
    };
    const Run plan[] = {{"1/3", 1000000, EliminationMode::Strict},
                        {"1/2", 1000000, EliminationMode::Strict},
                        {"1", 1000000, EliminationMode::Opportunistic},
                        {"1", 10000000, EliminationMode::Opportunistic}};
    criterion(7, "end-to-end construction at desk scale", 1200.0, [&plan](Outcome& o) {
        for (const auto& run : plan) {
            ConstructionConfig cfg;
            cfg.r = Rational::parse(run.r);
            cfg.x = run.x;
            cfg.stage_one_mode = run.mode;
            const auto t0 = std::chrono::steady_clock::now();
            auto rep = construct_dense(cfg);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            const auto cert = check(cfg.r, rep.S, cfg.x);
            const std::string tag = std::string("r=") + run.r + " x=" + std::to_string(run.x);
            o.require(cert.sum_exact, tag + " sum");
            o.require(cert.distinct, tag + " distinct");
            o.require(cert.max_ok, tag + " max");
            o.require(cert.density.to_double() > 0.02, tag + " density");
            o.require(cert.harmonic_bound_ok, tag + " harmonic tail");
            o.require(secs < 600.0, tag + " runtime");
            o.detail << tag << ": |S|=" << cert.count << " density=" << fmt(cert.density.to_double())
                     << " target C(r)-eta=" << fmt(cert.c_of_r_minus_eta) << " " << fmt(secs) << " s; ";
            runs.push_back(std::move(rep));
        }
        ConstructionConfig small;
        small.r = Rational::parse("1/3");
        small.x = 100000;
        const double d5 = construct_dense(small).density;
        const double d6 = runs.front().density;
        o.detail << "[info] density r=1/3: x=1e5 " << fmt(d5) << ", x=1e6 " << fmt(d6)
                 << (d6 >= d5 ? " (non-decreasing)" : " (decreased)");
    });

    criterion(8, "odd expansions within the explicit bound", 60.0, [](Outcome& o) {
        U64s divisors;
        for (std::uint64_t d = 8; d <= 11025; ++d) {
            if (11025 % d == 0) divisors.push_back(d);
        }
        std::mt19937_64 rng(88);
        mpz_class worst_ratio_num = 0, worst_ratio_den = 1;
        for (int i = 0; i < 100; ++i) {
            const std::uint64_t d = divisors[rng() % divisors.size()];
            const std::uint64_t cmax = (d - 1) / 7;
            const Rational cd(mpz_class(static_cast<unsigned long>(1 + rng() % cmax)),
                              mpz_class(static_cast<unsigned long>(d)));
            const auto e = expand_odd(cd);
            o.require(oracle::naive_sum(e.terms) == cd.value(), "inexact");
            for (std::size_t j = 0; j < e.terms.size(); ++j) {
                o.require(e.terms[j] % 2 == 1, "even term");
                if (j > 0) o.require(e.terms[j] > e.terms[j - 1], "repeated term");
            }
            mpz_class l;
            const mpz_class dd = cd.denominator();
            mpz_lcm_ui(l.get_mpz_t(), dd.get_mpz_t(), 315);
            const mpz_class bound = 5 * l;
            const mpz_class top = static_cast<unsigned long>(e.terms.back());
            o.require(top <= bound, "max term above 5 lcm{d, 315} for " + cd.to_string());
            if (top * worst_ratio_den > worst_ratio_num * bound) worst_ratio_num = top, worst_ratio_den = bound;
        }
        o.detail << "largest max/bound " << mpq_class(worst_ratio_num, worst_ratio_den).get_d() << "; ";
        o.require(!runs.empty(), "no pipeline runs to inspect");
        for (const auto& rep : runs) {
            U64s C = rep.C_minus_A_prime;
            for (auto n : rep.D1) C.push_back(n - 1);
            const std::uint64_t limit = iroot(rep.config.x * rep.config.x, 3);
            const std::uint64_t top = C.empty() ? 0 : *std::max_element(C.begin(), C.end());
            o.require(top <= limit, "pipeline expansion above x^(2/3)");
            o.require(mpq_class(oracle::naive_sum(C)) == rep.breusch_input.value(), "pipeline expansion inexact");
            o.detail << "x=" << rep.config.x << " r=" << rep.config.r.to_string() << ": residual "
                     << fmt(rep.breusch_input.to_double()) << " (1/x'=" << fmt(1.0 / rep.plan.x_prime)
                     << "), max term " << top << " <= " << limit << "; ";
        }
    });

    criterion(9, "collision repair on 100 synthetic overlaps", 10.0, [](Outcome& o) {
        std::mt19937_64 rng(99);
        std::size_t collisions = 0;
        for (int s = 0; s < 100; ++s) {
            std::set<std::uint64_t> ap, c;
            while (ap.size() < 40) {
                const std::uint64_t n = 2 * (1 + rng() % 5000) + 1;
                if (!is_quadratic_form(n)) ap.insert(n);
            }
            for (auto n : ap) {
                if (rng() % 4 == 0) c.insert(n);
            }
            while (c.size() < 30) c.insert(2 * (1 + rng() % 5000) + 1);
            const U64s A(ap.begin(), ap.end()), C(c.begin(), c.end());
            const auto rep = repair_collisions(A, C);
            collisions += rep.D1.size();
            std::vector<const U64s*> parts{&A, &rep.C_minus_A_prime, &rep.D1, &rep.D2};
            U64s all;
            for (const auto* p : parts) all.insert(all.end(), p->begin(), p->end());
            std::sort(all.begin(), all.end());
            o.require(std::adjacent_find(all.begin(), all.end()) == all.end(), "parts overlap");
            o.require(oracle::naive_sum(all) == oracle::naive_sum(A) + oracle::naive_sum(C), "sum changed");
        }
        o.detail << collisions << " collisions repaired";
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
