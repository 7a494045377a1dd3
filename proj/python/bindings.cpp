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


// Python bindings. Rationals cross the boundary as "a/b" strings and
// big integers as decimal strings; the package wrapper converts both.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "egyptian/breusch.hpp"
#include "egyptian/certificate.hpp"
#include "egyptian/construct.hpp"
#include "egyptian/dickman.hpp"
#include "egyptian/error.hpp"
#include "egyptian/modular.hpp"
#include "egyptian/smooth.hpp"
#include "egyptian/verify.hpp"

namespace py = pybind11;
using namespace egyptian;

namespace {

py::dict certificate_dict(const Certificate& c) {
    py::dict d;
    d["sum_exact"] = c.sum_exact;
    d["distinct"] = c.distinct;
    d["max_ok"] = c.max_ok;
    d["harmonic_bound_ok"] = c.harmonic_bound_ok;
    d["passed"] = c.passed();
    d["count"] = c.count;
    d["max_element"] = c.max_element;
    d["density"] = c.density.to_string();
    d["c_of_r_minus_eta"] = c.c_of_r_minus_eta;
    d["upper_bound"] = c.upper_bound;
    d["note"] = c.note;
    return d;
}

py::dict construct(const std::string& r, std::uint64_t x, double eta, unsigned k, double epsilon,
                   const std::string& mode, const std::string& lambda_mode, std::optional<std::uint64_t> y_prime,
                   std::optional<std::uint64_t> x_prime) {
    ConstructionConfig cfg;
    cfg.r = Rational::parse(r);
    cfg.x = x;
    cfg.eta = eta;
    cfg.k = k;
    cfg.epsilon = epsilon;
    cfg.stage_one_mode = mode == "opportunistic" ? EliminationMode::Opportunistic : EliminationMode::Strict;
    cfg.lambda_mode = lambda_mode == "formula" ? LambdaMode::Formula : LambdaMode::Adaptive;
    cfg.y_prime_override = y_prime;
    cfg.x_prime_override = x_prime;
    Representation rep;
    {
        py::gil_scoped_release release;
        rep = construct_dense(cfg);
    }
    py::dict parts;
    parts["A"] = rep.A;
    parts["A_prime"] = rep.A_prime;
    parts["C_minus_A_prime"] = rep.C_minus_A_prime;
    parts["D1"] = rep.D1;
    parts["D2"] = rep.D2;
    py::dict out;
    out["parts"] = parts;
    out["density"] = rep.density;
    out["certificate"] = certificate_dict(rep.certificate);
    out["document"] = encode(make_document(rep));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dense Egyptian-fraction constructions with exact certificates";

    static py::handle error_type = py::exception<Error>(m, "EgyptianError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(py::str(e.what()));
            exc.attr("code") = py::str(std::string(to_string(e.code())));
            exc.attr("failing_parameter") = py::str(e.failing_parameter());
            exc.attr("suggestion") = py::str(e.suggestion());
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    m.def("rho", &rho, py::arg("u"), "Dickman's function for 0 < u <= 20.");
    m.def(
        "c_of_r", [](const std::string& r) { return c_of_r(Rational::parse(r)); }, py::arg("r"));
    m.def("density_upper_bound", &density_upper_bound, py::arg("r"));

    m.def(
        "expand_odd",
        [](const std::string& r, std::uint64_t max_term) {
            OddExpansionOptions o;
            o.max_term = max_term;
            return expand_odd(Rational::parse(r), o).terms;
        },
        py::arg("r"), py::arg("max_term") = 0);
    m.def(
        "greedy_expand",
        [](const std::string& r) {
            std::vector<std::string> out;
            for (const auto& t : greedy_expand(Rational::parse(r))) out.push_back(t.get_str());
            return out;
        },
        py::arg("r"));

    m.def(
        "subset_sum_mod_p",
        [](const std::vector<std::uint64_t>& residues, std::uint64_t target, std::uint64_t p)
            -> std::optional<std::vector<std::size_t>> {
            auto w = subset_sum_mod_p(residues, target, p);
            if (!w) return std::nullopt;
            return w->indices;
        },
        py::arg("residues"), py::arg("target"), py::arg("p"));

    m.def(
        "sieve_stats",
        [](std::uint64_t x, std::uint64_t y, std::uint64_t w, unsigned k, const std::string& lambda) {
            const auto f = build_family(SmoothParams{x, y, w, Rational::parse(lambda), k});
            py::dict d;
            d["count"] = f.size();
            d["count_a0"] = f.count_a0();
            return d;
        },
        py::arg("x"), py::arg("y"), py::arg("w"), py::arg("k"), py::arg("lambda_") = "0");

    m.def(
        "family",
        [](std::uint64_t x, std::uint64_t y, std::uint64_t w, unsigned k, const std::string& lambda) {
            return build_family(SmoothParams{x, y, w, Rational::parse(lambda), k}).members();
        },
        py::arg("x"), py::arg("y"), py::arg("w"), py::arg("k"), py::arg("lambda_") = "0");

    m.def(
        "verify",
        [](const std::string& r, const std::vector<std::uint64_t>& S, std::uint64_t x, double eta) {
            return certificate_dict(check(Rational::parse(r), S, x, eta));
        },
        py::arg("r"), py::arg("S"), py::arg("x"), py::arg("eta") = 0.05);

    m.def("construct", &construct, py::arg("r"), py::arg("x"), py::arg("eta") = 0.05, py::arg("k") = 0,
          py::arg("epsilon") = 0.1, py::arg("mode") = "strict", py::arg("lambda_mode") = "adaptive",
          py::arg("y_prime") = py::none(), py::arg("x_prime") = py::none());
}
