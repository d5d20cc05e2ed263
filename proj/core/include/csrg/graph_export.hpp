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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "csrg/constructions.hpp"

namespace csrg {

enum class GraphFormat { EdgeList, Graph6, Json };
GraphFormat parse_graph_format(const std::string& name);

/// Stable vertex ids: the coordinate vector (c_0,...,c_{f-1}) read as a
/// base-p digit string with c_0 most significant; pairs concatenate with the
/// first coordinate in the high digits.
std::uint64_t export_vertex_id(const FieldCtx& field, bool product, std::uint64_t packed_enc);

struct ExportStats {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t edge_hash = 0;  // fnv over the sorted "u v" lines
};

/// Writes the Cayley graph of the connection set; edges u < v once.
/// Refuses v > 100000 for edgelist/graph6 unless force.
ExportStats export_graph(const ConnectionSet& set, std::ostream& os, GraphFormat format, bool force = false);

struct ParsedGraph {
  std::uint64_t vertices = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;

  std::vector<std::uint64_t> degree_sequence() const;
  std::uint64_t edge_hash() const;
};

ParsedGraph parse_edgelist(std::istream& is);
ParsedGraph parse_graph6(std::istream& is);

}  // namespace csrg
