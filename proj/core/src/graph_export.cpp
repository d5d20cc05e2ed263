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

#include "csrg/graph_export.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "csrg/numeric.hpp"

namespace csrg {

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "graph6") return GraphFormat::Graph6;
  if (name == "json") return GraphFormat::Json;
  fail(Errc::TooLarge, "unknown graph format: " + name);
}

namespace {

std::uint64_t reverse_digits(std::uint64_t packed, std::uint64_t p, std::uint32_t f) {
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < f; ++i) {
    out = out * p + packed % p;
    packed /= p;
  }
  return out;
}

std::uint64_t add_packed(std::uint64_t a, std::uint64_t b, std::uint64_t p, std::uint32_t f) {
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    out += ((a % p + b % p) % p) * mult;
    mult *= p;
    a /= p;
    b /= p;
  }
  return out;
}

}  // namespace

std::uint64_t export_vertex_id(const FieldCtx& field, bool product, std::uint64_t packed_enc) {
  std::uint64_t p = field.p();
  std::uint32_t f = field.f();
  if (!product) return reverse_digits(packed_enc, p, f);
  std::uint64_t q = field.q();
  return reverse_digits(packed_enc / q, p, f) * q + reverse_digits(packed_enc % q, p, f);
}

ExportStats export_graph(const ConnectionSet& set, std::ostream& os, GraphFormat format, bool force) {
  const FieldCtx& F = *set.field;
  const std::uint64_t v = set.group_order();
  const bool product = set.kind == ConnectionSet::Kind::ProductGenerated;
  if (format != GraphFormat::Json) {
    require(v <= 100000 || force, Errc::TooLarge,
            "graph export of v = " + std::to_string(v) + " vertices needs --force");
  }

  std::vector<std::uint64_t> conn;  // packed encodings of the connection set
  conn.reserve(set.size());
  set.for_each_element([&](std::uint64_t enc) { conn.push_back(enc); });

  const std::uint64_t q = F.q();
  auto group_add = [&](std::uint64_t a, std::uint64_t b) {
    if (!product) return add_packed(a, b, F.p(), F.f());
    return add_packed(a / q, b / q, F.p(), F.f()) * q + add_packed(a % q, b % q, F.p(), F.f());
  };

  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  edges.reserve(v * conn.size() / 2);
  for (std::uint64_t u = 0; u < v; ++u) {
    std::uint64_t uid = export_vertex_id(F, product, u);
    for (std::uint64_t d : conn) {
      std::uint64_t w = group_add(u, d);
      std::uint64_t wid = export_vertex_id(F, product, w);
      if (uid < wid) edges.emplace_back(uid, wid);
    }
  }
  std::sort(edges.begin(), edges.end());
  require(edges.size() == v * conn.size() / 2, Errc::Internal, "handshake count mismatch in export");

  ExportStats stats;
  stats.vertices = v;
  stats.edges = edges.size();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& [a, b] : edges) {
    std::string line = std::to_string(a) + " " + std::to_string(b) + "\n";
    h = fnv1a(line, h);
  }
  stats.edge_hash = h;

  switch (format) {
    case GraphFormat::EdgeList: {
      os << "# cayley-srg edgelist v=" << v << " e=" << edges.size() << "\n";
      for (const auto& [a, b] : edges) os << a << " " << b << "\n";
      break;
    }
    case GraphFormat::Graph6: {
      // size header
      std::string out;
      auto push6 = [&](std::uint64_t value, int sextets) {
        for (int i = sextets - 1; i >= 0; --i) out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
      };
      if (v <= 62) {
        out.push_back(static_cast<char>(v + 63));
      } else if (v <= 258047) {
        out.push_back('~');
        push6(v, 3);
      } else {
        out.append("~~");
        push6(v, 6);
      }
      // upper-triangle bits ordered by (column j, row i), i < j
      int bit = 5;
      char cur = 0;
      std::size_t next = 0;
      // edges sorted by (min, max); graph6 wants (j, i) order, i.e. sorted by (max, min)
      std::vector<std::pair<std::uint64_t, std::uint64_t>> byCol(edges);
      std::sort(byCol.begin(), byCol.end(),
                [](const auto& a, const auto& b) { return a.second != b.second ? a.second < b.second : a.first < b.first; });
      for (std::uint64_t j = 1; j < v; ++j) {
        for (std::uint64_t i = 0; i < j; ++i) {
          bool adj = next < byCol.size() && byCol[next].second == j && byCol[next].first == i;
          if (adj) ++next;
          if (adj) cur |= static_cast<char>(1 << bit);
          if (bit == 0) {
            out.push_back(static_cast<char>(cur + 63));
            cur = 0;
            bit = 5;
          } else {
            --bit;
          }
        }
      }
      if (bit != 5) out.push_back(static_cast<char>(cur + 63));
      os << out << "\n";
      break;
    }
    case GraphFormat::Json: {
      os << "{\"schema\":\"cayley-srg-graph/1\",\"vertices\":" << v << ",\"edges\":[";
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ",";
        os << "[" << edges[i].first << "," << edges[i].second << "]";
      }
      os << "]}\n";
      break;
    }
  }
  return stats;
}

std::vector<std::uint64_t> ParsedGraph::degree_sequence() const {
  std::vector<std::uint64_t> deg(vertices, 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  std::sort(deg.begin(), deg.end());
  return deg;
}

std::uint64_t ParsedGraph::edge_hash() const {
  auto sorted = edges;
  for (auto& e : sorted)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& [a, b] : sorted) h = fnv1a(std::to_string(a) + " " + std::to_string(b) + "\n", h);
  return h;
}

ParsedGraph parse_edgelist(std::istream& is) {
  ParsedGraph g;
  std::string line;
  std::uint64_t maxv = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      // header carries the vertex count
      auto pos = line.find("v=");
      if (pos != std::string::npos) g.vertices = std::stoull(line.substr(pos + 2));
      continue;
    }
    std::istringstream ls(line);
    std::uint64_t a, b;
    ls >> a >> b;
    g.edges.emplace_back(a, b);
    maxv = std::max({maxv, a + 1, b + 1});
  }
  if (g.vertices == 0) g.vertices = maxv;
  return g;
}

ParsedGraph parse_graph6(std::istream& is) {
  std::string line;
  std::getline(is, line);
  ParsedGraph g;
  std::size_t pos = 0;
  require(!line.empty(), Errc::Internal, "empty graph6 input");
  auto take6 = [&](int sextets) {
    std::uint64_t v = 0;
    for (int i = 0; i < sextets; ++i) v = (v << 6) | static_cast<std::uint64_t>(line.at(pos++) - 63);
    return v;
  };
  if (line[0] == '~') {
    if (line.size() > 1 && line[1] == '~') {
      pos = 2;
      g.vertices = take6(6);
    } else {
      pos = 1;
      g.vertices = take6(3);
    }
  } else {
    g.vertices = static_cast<std::uint64_t>(line[0] - 63);
    pos = 1;
  }
  int bit = 5;
  for (std::uint64_t j = 1; j < g.vertices; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      require(pos < line.size(), Errc::Internal, "graph6 input truncated");
      bool adj = (line[pos] - 63) >> bit & 1;
      if (adj) g.edges.emplace_back(i, j);
      if (bit == 0) {
        bit = 5;
        ++pos;
      } else {
        --bit;
      }
    }
  }
  return g;
}

}  // namespace csrg
