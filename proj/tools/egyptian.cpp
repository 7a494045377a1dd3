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

// egyptian: dense Egyptian-fraction constructions with certificates.
//
//   egyptian construct --r 1/3 --x 1000000 [--out cert.json]
//   egyptian verify cert.json
//   egyptian rho --u 2 | --c-of-r 1
//   egyptian sieve-stats --x 1000000 --y 1000 --w 100 --k 3
//   egyptian expand --mode greedy|odd --r 4/17

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "egyptian/breusch.hpp"
#include "egyptian/certificate.hpp"
#include "egyptian/construct.hpp"
#include "egyptian/dickman.hpp"
#include "egyptian/error.hpp"
#include "egyptian/smooth.hpp"
#include "egyptian/verify.hpp"

namespace {

using egyptian::Error;
using egyptian::ErrorCode;
using egyptian::Json;
using egyptian::Rational;

constexpr int kExitUsage = 64;
constexpr int kExitCertificate = 1;

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::InfeasibleMass: return 2;
        case ErrorCode::UnsupportedDenominator: return 3;
        case ErrorCode::EliminationFailed: return 4;
        case ErrorCode::BreuschPreconditionFailed: return 5;
        case ErrorCode::BoundExceeded: return 6;
        case ErrorCode::Resource: return 7;
        case ErrorCode::Domain:
        case ErrorCode::Parameter:
        case ErrorCode::Input: return kExitUsage;
        default: return 8;
    }
}

int report(const Error& e) {
    Json j;
    j["code"] = std::string(egyptian::to_string(e.code()));
    j["message"] = e.what();
    j["failing_parameter"] = e.failing_parameter();
    j["suggestion"] = e.suggestion();
    std::cout << j.dump() << "\n";
    return exit_code(e.code());
}

Rational parse_rational(const std::string& text, const char* what) {
    try {
        return Rational::parse(text);
    } catch (const Error&) {
        throw Error(ErrorCode::Input, std::string("cannot parse ") + what + " '" + text + "' as a/b", what);
    }
}

Json term_list(const std::vector<mpz_class>& terms) {
    Json arr = Json::array();
    for (const auto& t : terms) {
        if (t.fits_ulong_p()) {
            arr.push_back(t.get_ui());
        } else {
            arr.push_back(t.get_str());
        }
    }
    return arr;
}

struct ConstructArgs {
    std::string r;
    std::uint64_t x = 0;
    double eta = 0.05;
    unsigned k = 0;
    double epsilon = 0.1;
    std::string delta;
    std::string mode = "strict";
    std::string lambda = "adaptive";
    std::optional<std::uint64_t> y_prime;
    std::optional<std::uint64_t> x_prime;
    std::string out;
    bool seedless = false;
};

int cmd_construct(const ConstructArgs& a) {
    egyptian::ConstructionConfig cfg;
    cfg.r = parse_rational(a.r, "r");
    if (!cfg.r.is_positive()) throw Error(ErrorCode::Input, "r must be positive", "r");
    cfg.x = a.x;
    cfg.eta = a.eta;
    cfg.k = a.k;
    cfg.epsilon = a.epsilon;
    if (!a.delta.empty()) cfg.delta = parse_rational(a.delta, "delta");
    cfg.stage_one_mode =
        a.mode == "strict" ? egyptian::EliminationMode::Strict : egyptian::EliminationMode::Opportunistic;
    cfg.lambda_mode = a.lambda == "formula" ? egyptian::LambdaMode::Formula : egyptian::LambdaMode::Adaptive;
    cfg.y_prime_override = a.y_prime;
    cfg.x_prime_override = a.x_prime;

    const auto rep = egyptian::construct_dense(cfg);
    const std::string text = egyptian::encode(egyptian::make_document(rep));
    if (a.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) throw Error(ErrorCode::Input, "cannot write " + a.out, "out");
        f << text;
        Json s;
        s["out"] = a.out;
        s["count"] = rep.S.size();
        s["density_approx"] = rep.density;
        s["certificate"] = egyptian::certificate_json(rep.certificate);
        std::cout << s.dump() << "\n";
    }
    return rep.certificate.passed() ? 0 : kExitCertificate;
}

int cmd_verify(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::Input, "cannot read " + path, "file");
    std::stringstream buf;
    buf << f.rdbuf();
    const auto doc = egyptian::decode(buf.str());
    double eta = 0.05;
    if (doc.parameters.contains("eta") && doc.parameters["eta"].is_number()) eta = doc.parameters["eta"].get<double>();
    const auto S = doc.denominators();
    const auto cert = egyptian::check(doc.r, S, doc.x, eta);
    Json j;
    j["r"] = doc.r.to_string();
    j["x"] = doc.x;
    j["certificate"] = egyptian::certificate_json(cert);
    std::cout << j.dump() << "\n";
    return cert.passed() ? 0 : kExitCertificate;
}

int cmd_rho(const std::optional<double>& u, const std::string& c_of_r) {
    Json j;
    if (u) {
        j["u"] = *u;
        j["rho"] = egyptian::rho(*u);
    } else {
        const Rational r = parse_rational(c_of_r, "c-of-r");
        j["r"] = r.to_string();
        j["c_of_r"] = egyptian::c_of_r(r);
        j["upper_bound"] = egyptian::density_upper_bound(r.to_double());
    }
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_sieve_stats(std::uint64_t x, std::uint64_t y, std::uint64_t w, const std::string& lambda, unsigned k) {
    const egyptian::SmoothParams params{x, y, w, parse_rational(lambda, "lambda"), k};
    const auto family = egyptian::SmoothFamily::build(params);
    const auto D = egyptian::modulus_product(egyptian::next_prime(y), w, k);
    const Rational sum = egyptian::reciprocal_sum(family.members(), D);
    Json j;
    j["params"] = {{"x", x}, {"y", y}, {"w", w}, {"lambda", params.lambda.to_string()}, {"k", k}};
    j["count"] = family.size();
    j["count_a0"] = family.count_a0();
    j["recip_sum"] = sum.to_string().size() <= 4096 ? Json(sum.to_string()) : Json(nullptr);
    j["recip_sum_approx"] = sum.to_double();
    if (x >= 3) {
        const double estimate = (1.0 - params.lambda.to_double()) *
                                egyptian::psi_estimate(static_cast<double>(x), static_cast<double>(y), static_cast<int>(k));
        j["estimate"] = estimate;
        j["ratio"] = estimate > 0 ? static_cast<double>(family.size()) / estimate : 0.0;
    }
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_expand(const std::string& mode, const std::string& r_text) {
    const Rational r = parse_rational(r_text, "r");
    Json j;
    if (mode == "greedy") {
        j["terms"] = term_list(egyptian::greedy_expand(r));
    } else {
        const auto e = egyptian::expand_odd(r);
        j["terms"] = e.terms;
        j["within_bound"] = e.within_bound;
        j["lemma_bound"] = e.lemma_bound.get_str();
    }
    std::cout << j.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dense Egyptian-fraction constructions with exact certificates"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build and certify a dense representation of r");
    construct->add_option("--r", ca.r, "Target rational a/b")->required();
    construct->add_option("--x", ca.x, "Largest admissible denominator")
        ->required()
        ->check(CLI::Range(std::uint64_t{3}, std::uint64_t{std::numeric_limits<std::uint32_t>::max()}));
    construct->add_option("--eta", ca.eta, "Density slack eta")->check(CLI::PositiveNumber);
    construct->add_option("--k", ca.k, "Power-freeness parameter (default: smallest admissible >= 3)");
    construct->add_option("--epsilon", ca.epsilon, "Smoothness exponent slack")->check(CLI::Range(0.0, 0.5));
    construct->add_option("--delta", ca.delta, "Stage-one remainder budget a/b");
    construct->add_option("--mode", ca.mode, "Stage-one elimination mode")
        ->check(CLI::IsMember({"strict", "opportunistic"}));
    construct->add_option("--lambda", ca.lambda, "Cutoff rule")->check(CLI::IsMember({"formula", "adaptive"}));
    construct->add_option("--y-prime", ca.y_prime, "Stage-two smoothness bound");
    construct->add_option("--x-prime", ca.x_prime, "Stage-two range bound");
    construct->add_option("--out", ca.out, "Write the certificate document here");
    construct->add_flag("--seedless", ca.seedless, "Accepted for compatibility; the construction is deterministic");

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "Re-check a certificate document");
    verify->add_option("file", verify_path, "Certificate JSON")->required();

    std::optional<double> rho_u;
    std::string rho_r;
    auto* rho = app.add_subcommand("rho", "Dickman rho and the density constant");
    auto* u_opt = rho->add_option("--u", rho_u, "Evaluate rho(u)");
    auto* r_opt = rho->add_option("--c-of-r", rho_r, "Evaluate C(r) for r = a/b");
    u_opt->excludes(r_opt);
    rho->require_option(1);

    std::uint64_t sx = 0, sy = 0, sw = 0;
    unsigned sk = 2;
    std::string slambda = "0";
    auto* sieve = app.add_subcommand("sieve-stats", "Census of a constrained smooth family");
    sieve->add_option("--x", sx)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31));
    sieve->add_option("--y", sy)->required();
    sieve->add_option("--w", sw)->required();
    sieve->add_option("--k", sk)->required();
    sieve->add_option("--lambda", slambda, "Rational cutoff fraction a/b");

    std::string emode = "greedy", er;
    auto* expand = app.add_subcommand("expand", "Standalone Egyptian-fraction expansions");
    expand->add_option("--mode", emode)->check(CLI::IsMember({"greedy", "odd"}));
    expand->add_option("--r", er)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*construct) return cmd_construct(ca);
        if (*verify) return cmd_verify(verify_path);
        if (*rho) return cmd_rho(rho_u, rho_r);
        if (*sieve) return cmd_sieve_stats(sx, sy, sw, slambda, sk);
        if (*expand) return cmd_expand(emode, er);
    } catch (const Error& e) {
        return report(e);
    } catch (const std::exception& e) {
        std::cerr << "egyptian: " << e.what() << "\n";
        return 70;
    }
    return kExitUsage;
}
