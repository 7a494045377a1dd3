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

#include "egyptian/certificate.hpp"

#include <algorithm>

#include "egyptian/error.hpp"

namespace egyptian {

std::vector<std::uint64_t> CertificateDocument::denominators() const {
    std::vector<std::uint64_t> out;
    for (const auto& [name, values] : parts) out.insert(out.end(), values.begin(), values.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> delta_encode(const std::vector<std::uint64_t>& ascending) {
    std::vector<std::uint64_t> out;
    out.reserve(ascending.size());
    std::uint64_t prev = 0;
    for (std::size_t i = 0; i < ascending.size(); ++i) {
        if (i > 0 && ascending[i] <= prev) throw Error(ErrorCode::Input, "delta encoding needs a strictly ascending list");
        out.push_back(ascending[i] - prev);
        prev = ascending[i];
    }
    return out;
}

std::vector<std::uint64_t> delta_decode(const std::vector<std::uint64_t>& deltas) {
    std::vector<std::uint64_t> out;
    out.reserve(deltas.size());
    std::uint64_t acc = 0;
    for (std::uint64_t d : deltas) {
        acc += d;
        out.push_back(acc);
    }
    return out;
}

Json certificate_json(const Certificate& c) {
    Json j;
    j["sum_exact"] = c.sum_exact;
    j["distinct"] = c.distinct;
    j["max_ok"] = c.max_ok;
    j["harmonic_bound_ok"] = c.harmonic_bound_ok;
    j["passed"] = c.passed();
    j["count"] = c.count;
    j["max_element"] = c.max_element;
    j["density"] = c.density.to_string();
    j["density_approx"] = c.density.to_double();
    j["c_of_r_minus_eta_approx"] = c.c_of_r_minus_eta;
    j["upper_bound_approx"] = c.upper_bound;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

CertificateDocument make_document(const Representation& rep) {
    CertificateDocument doc;
    doc.r = rep.config.r;
    doc.x = rep.config.x;
    const StagePlan& p = rep.plan;
    Json& prm = doc.parameters;
    prm["epsilon"] = rep.config.epsilon;
    prm["eta"] = rep.config.eta;
    prm["delta"] = p.delta.to_string();
    prm["k"] = p.k;
    prm["lambda"] = p.lambda.to_string();
    prm["lambda_approx"] = p.lambda.to_double();
    prm["y"] = p.y;
    prm["w"] = p.w;
    prm["y_prime"] = p.y_prime;
    prm["x_prime"] = p.x_prime;
    prm["w_prime"] = p.w_prime;
    prm["y_doubleprime"] = p.y_doubleprime;
    prm["lambda_prime"] = rep.lambda_prime.to_string();
    prm["lambda_prime_approx"] = rep.lambda_prime.to_double();
    prm["lambda_mode"] = std::string(to_string(rep.config.lambda_mode));
    prm["stage_one_mode"] = std::string(to_string(rep.config.stage_one_mode));
    prm["stage_two_mode"] = std::string(to_string(rep.config.stage_two_mode));

    doc.parts = {{"A", rep.A},
                 {"A_prime", rep.A_prime},
                 {"C_minus_A_prime", rep.C_minus_A_prime},
                 {"D1", rep.D1},
                 {"D2", rep.D2}};

    Json& tr = doc.trace;
    std::size_t removed = 0;
    Json steps = Json::array();
    for (const auto& rec : rep.trace) {
        removed += rec.removed.size();
        Json s;
        s["stage"] = rec.stage;
        s["prime"] = rec.prime;
        s["l"] = rec.l;
        s["removed"] = rec.removed.size();
        s["remainder"] = rec.remainder_after.to_string();
        s["remainder_approx"] = rec.remainder_after.to_double();
        steps.push_back(std::move(s));
    }
    tr["primes_processed"] = rep.trace.size();
    tr["removed_total"] = removed;
    tr["stage_one_remainder"] = rep.stage_one_remainder.to_string();
    tr["stage_one_remainder_approx"] = rep.stage_one_remainder.to_double();
    tr["breusch_input"] = rep.breusch_input.to_string();
    tr["breusch_input_approx"] = rep.breusch_input.to_double();
    tr["y_prime_tried"] = rep.y_prime_tried;
    tr["stopped_at"] = rep.stopped_at;
    tr["expansion_within_bound"] = rep.expansion_within_bound;
    tr["steps"] = std::move(steps);

    doc.certificate = certificate_json(rep.certificate);
    return doc;
}

std::string encode(const CertificateDocument& doc) {
    Json j;
    j["version"] = doc.version;
    j["r"] = doc.r.to_string();
    j["x"] = doc.x;
    j["parameters"] = doc.parameters;
    Json parts = Json::object();
    for (const auto& [name, values] : doc.parts) parts[name] = delta_encode(values);
    j["parts"] = std::move(parts);
    j["trace"] = doc.trace;
    j["certificate"] = doc.certificate;
    return j.dump() + "\n";
}

CertificateDocument decode(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorCode::Input, std::string("certificate is not valid JSON: ") + e.what(), "file");
    }
    try {
        CertificateDocument doc;
        doc.version = j.at("version").get<int>();
        if (doc.version != kDocumentVersion) {
            throw Error(ErrorCode::Input, "unsupported certificate version " + std::to_string(doc.version), "file");
        }
        doc.r = Rational::parse(j.at("r").get<std::string>());
        doc.x = j.at("x").get<std::uint64_t>();
        doc.parameters = j.at("parameters");
        for (const auto& [name, deltas] : j.at("parts").items()) {
            if (!deltas.is_array()) throw Error(ErrorCode::Input, "part " + name + " must be an array", "file");
            std::vector<std::uint64_t> gaps;
            for (const auto& g : deltas) {
                if (!g.is_number_unsigned() || g.get<std::uint64_t>() == 0) {
                    throw Error(ErrorCode::Input, "part " + name + " must hold positive gaps", "file");
                }
                gaps.push_back(g.get<std::uint64_t>());
            }
            doc.parts.emplace_back(name, delta_decode(gaps));
        }
        doc.trace = j.at("trace");
        doc.certificate = j.at("certificate");
        return doc;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::Input, std::string("malformed certificate: ") + e.what(), "file");
    }
}

}  // namespace egyptian
