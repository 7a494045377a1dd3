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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "egyptian/construct.hpp"
#include "egyptian/verify.hpp"

namespace egyptian {

using Json = nlohmann::ordered_json;

inline constexpr int kDocumentVersion = 1;

/// Interchange form of a representation. Exact rationals are "a/b"
/// strings; floating values carry an "_approx" suffix.
struct CertificateDocument {
    int version = kDocumentVersion;
    Rational r;
    std::uint64_t x = 0;
    Json parameters = Json::object();
    std::vector<std::pair<std::string, std::vector<std::uint64_t>>> parts;  // ascending each
    Json trace = Json::object();
    Json certificate = Json::object();

    /// Union of the parts, ascending (duplicates kept).
    std::vector<std::uint64_t> denominators() const;
};

/// First element absolute, then gaps. Throws Error(Input) unless ascending.
std::vector<std::uint64_t> delta_encode(const std::vector<std::uint64_t>& ascending);
std::vector<std::uint64_t> delta_decode(const std::vector<std::uint64_t>& deltas);

Json certificate_json(const Certificate& c);

CertificateDocument make_document(const Representation& rep);

/// One line of compact JSON followed by a newline.
std::string encode(const CertificateDocument& doc);

/// Throws Error(Input) on malformed text.
CertificateDocument decode(std::string_view text);

}  // namespace egyptian
