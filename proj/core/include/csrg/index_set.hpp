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
#include <string>
#include <vector>

namespace csrg {

/// A subset of Z_M naming a union of cyclotomic classes: sorted,
/// duplicate-free residues. The universal currency of the constructions.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::uint64_t modulus) : m_(modulus) {}
  IndexSet(std::uint64_t modulus, std::vector<std::uint64_t> residues);

  static IndexSet full(std::uint64_t modulus);
  static IndexSet single(std::uint64_t modulus, std::uint64_t r) { return IndexSet(modulus, {r % modulus}); }

  std::uint64_t modulus() const { return m_; }
  std::size_t size() const { return r_.size(); }
  bool empty() const { return r_.empty(); }
  const std::vector<std::uint64_t>& residues() const { return r_; }
  bool contains(std::uint64_t r) const;

  void insert(std::uint64_t r);
  IndexSet unite(const IndexSet& o) const;
  IndexSet intersect(const IndexSet& o) const;
  IndexSet complement() const;  // Z_M minus this
  bool disjoint(const IndexSet& o) const { return intersect(o).empty(); }

  IndexSet translated(std::uint64_t t) const;       // +t mod M
  IndexSet scaled(std::uint64_t u) const;           // *u mod M
  IndexSet reduced_mod(std::uint64_t m2) const;     // residues mod m2 (m2 | M), deduplicated
  /// The preimage under reduction from Z_{m2} (m divides m2): all lifts.
  IndexSet lifted_to(std::uint64_t m2) const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.m_ == b.m_ && a.r_ == b.r_; }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> r_;
};

}  // namespace csrg
