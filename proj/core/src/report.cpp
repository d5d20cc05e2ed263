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

#include "csrg/report.hpp"

#include "csrg/numeric.hpp"

namespace csrg {

Json json_number(std::uint64_t v) {
  if (v <= (1ull << 53)) return v;
  return std::to_string(v);
}

Json json_number(const BigInt& v) {
  if (v >= 0 && v <= BigInt(1ull << 53)) return static_cast<std::uint64_t>(v);
  if (v < 0 && -v <= BigInt(1ull << 53)) return static_cast<std::int64_t>(v);
  return v.str();
}

Json to_json(const FieldSpec& spec) {
  return Json{{"p", spec.p}, {"f", spec.f}, {"modulus", spec.modulus}, {"hash", hex64(spec.content_hash())}};
}

Json to_json(const IndexSet& s) { return Json{{"modulus", s.modulus()}, {"residues", s.residues()}}; }

Json to_json(const SubdiffResult& r, std::uint64_t p, std::uint32_t f) {
  return Json{{"p", p},          {"f", f},           {"N", r.N},
              {"I", r.I.residues()}, {"delta", r.delta}, {"sizes", {r.sizes[0], r.sizes[1]}}};
}

Json to_json(const SrgParams& p) {
  return Json{{"v", json_number(p.v)},
              {"k", json_number(p.k)},
              {"lambda", p.lambda},
              {"mu", p.mu},
              {"theta", {p.theta1, p.theta2}},
              {"multiplicities", {json_number(p.mult1), json_number(p.mult2)}},
              {"dense_oracle", p.dense_oracle_ran}};
}

Json to_json(const BigSrgParams& p) {
  return Json{{"v", json_number(p.v)},
              {"k", json_number(p.k)},
              {"lambda", json_number(p.lambda)},
              {"mu", json_number(p.mu)},
              {"theta", {json_number(p.theta1), json_number(p.theta2)}},
              {"multiplicities", {json_number(p.mult1), json_number(p.mult2)}},
              {"feasible", p.feasible}};
}

Json to_json(const SpectrumReport& r) {
  Json values = Json::array();
  for (const auto& sv : r.distinct) {
    values.push_back(Json{{"value", sv.value.to_string()}, {"multiplicity", json_number(sv.multiplicity)}, {"rep", sv.rep}});
  }
  return Json{{"group_order", json_number(r.group_order)},
              {"set_size", json_number(r.set_size)},
              {"grouping", r.grouping},
              {"distinct_values", values},
              {"two_valued", r.two_valued},
              {"all_rational", r.all_rational}};
}

Json to_json(const ConditionReport& r) {
  Json recs = Json::array();
  for (const auto& rec : r.records)
    recs.push_back(Json{{"c", rec.c}, {"lhs", rec.lhs.to_string()}, {"class", pc_class_name(rec.cls)}});
  return Json{{"N", r.N},
              {"side", side_name(r.side)},
              {"pass", r.pass},
              {"pass_global_sign", r.pass_global},
              {"G_exact", r.g_exact.to_string()},
              {"records", recs}};
}

Json to_json(const PartitionSpec& p) {
  return Json{{"side", side_name(p.side)}, {"P1", p.P1.residues()}, {"P2", p.P2.residues()}};
}

Json to_json(const ConnectionSet& set) {
  Json j{{"kind", set.kind == ConnectionSet::Kind::AdditiveCyclotomic ? "additive-cyclotomic" : "product-generated"},
         {"field", to_json(set.field->spec())},
         {"size", json_number(set.size())},
         {"content_hash", hex64(set.content_hash())}};
  if (set.kind == ConnectionSet::Kind::AdditiveCyclotomic) {
    j["class_modulus"] = set.class_modulus;
    j["indices"] = set.indices.residues();
  } else {
    j["N"] = set.N;
    j["product_kind"] = set.product_kind == ConnectionSet::ProductKind::FullH ? "full" : "half";
    j["indices"] = set.indices.residues();
    j["indices_modulus"] = set.indices.modulus();
    j["include_axes"] = set.include_axes;
  }
  return j;
}

IndexSet index_set_from_json(const Json& j) {
  return IndexSet(j.at("modulus").get<std::uint64_t>(), j.at("residues").get<std::vector<std::uint64_t>>());
}

Json make_report(const std::string& command) {
  return Json{{"schema", kReportSchema},
              {"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
              {"command", command}};
}

}  // namespace csrg
