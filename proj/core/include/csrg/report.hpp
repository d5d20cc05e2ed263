// Copyright 2026 the cayley-srg authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>
#include <string>

#include "csrg/catalog.hpp"
#include "csrg/cyclotomy.hpp"
#include "csrg/spectrum.hpp"

namespace csrg {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "cayley-srg-report/1";
inline constexpr const char* kToolName = "cayley-srg";
inline constexpr const char* kToolVersion = "1.0.0";

/// Numbers that can exceed 2^53 are serialized as decimal strings.
Json json_number(std::uint64_t v);
Json json_number(const BigInt& v);

Json to_json(const FieldSpec& spec);
Json to_json(const IndexSet& s);
Json to_json(const SubdiffResult& r, std::uint64_t p, std::uint32_t f);
Json to_json(const SrgParams& p);
Json to_json(const BigSrgParams& p);
Json to_json(const SpectrumReport& r);
Json to_json(const ConditionReport& r);
Json to_json(const PartitionSpec& p);
Json to_json(const ConnectionSet& set);

IndexSet index_set_from_json(const Json& j);

/// Skeleton report with schema, tool block and command echo.
Json make_report(const std::string& command);

}  // namespace csrg
