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

#include "csrg/index_set.hpp"

#include <algorithm>
#include <sstream>

#include "csrg/errors.hpp"
#include "csrg/numeric.hpp"

namespace csrg {

IndexSet::IndexSet(std::uint64_t modulus, std::vector<std::uint64_t> residues) : m_(modulus) {
  require(modulus > 0, Errc::BadDivisor, "index set modulus must be positive");
  for (auto& r : residues) r %= modulus;
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  r_ = std::move(residues);
}

IndexSet IndexSet::full(std::uint64_t modulus) {
  std::vector<std::uint64_t> all(modulus);
  for (std::uint64_t i = 0; i < modulus; ++i) all[i] = i;
  return IndexSet(modulus, std::move(all));
}

bool IndexSet::contains(std::uint64_t r) const {
  r %= m_;
  return std::binary_search(r_.begin(), r_.end(), r);
}

void IndexSet::insert(std::uint64_t r) {
  r %= m_;
  auto it = std::lower_bound(r_.begin(), r_.end(), r);
  if (it == r_.end() || *it != r) r_.insert(it, r);
}

IndexSet IndexSet::unite(const IndexSet& o) const {
  require(m_ == o.m_, Errc::InconsistentIndexSets, "union of index sets with different moduli");
  std::vector<std::uint64_t> out;
  std::set_union(r_.begin(), r_.end(), o.r_.begin(), o.r_.end(), std::back_inserter(out));
  return IndexSet(m_, std::move(out));
}

IndexSet IndexSet::intersect(const IndexSet& o) const {
  require(m_ == o.m_, Errc::InconsistentIndexSets, "intersection of index sets with different moduli");
  std::vector<std::uint64_t> out;
  std::set_intersection(r_.begin(), r_.end(), o.r_.begin(), o.r_.end(), std::back_inserter(out));
  return IndexSet(m_, std::move(out));
}

IndexSet IndexSet::complement() const {
  std::vector<std::uint64_t> out;
  out.reserve(m_ - r_.size());
  std::size_t i = 0;
  for (std::uint64_t r = 0; r < m_; ++r) {
    if (i < r_.size() && r_[i] == r)
      ++i;
    else
      out.push_back(r);
  }
  return IndexSet(m_, std::move(out));
}

IndexSet IndexSet::translated(std::uint64_t t) const {
  std::vector<std::uint64_t> out(r_);
  for (auto& r : out) r = (r + t) % m_;
  return IndexSet(m_, std::move(out));
}

IndexSet IndexSet::scaled(std::uint64_t u) const {
  std::vector<std::uint64_t> out(r_);
  for (auto& r : out) r = mulmod(r, u % m_, m_);
  return IndexSet(m_, std::move(out));
}

IndexSet IndexSet::reduced_mod(std::uint64_t m2) const {
  require(m2 > 0 && m_ % m2 == 0, Errc::BadDivisor, "reduction modulus must divide M");
  std::vector<std::uint64_t> out(r_);
  for (auto& r : out) r %= m2;
  return IndexSet(m2, std::move(out));
}

IndexSet IndexSet::lifted_to(std::uint64_t m2) const {
  require(m2 % m_ == 0, Errc::BadDivisor, "lift modulus must be a multiple of M");
  std::vector<std::uint64_t> out;
  out.reserve(r_.size() * (m2 / m_));
  for (std::uint64_t k = 0; k < m2 / m_; ++k)
    for (std::uint64_t r : r_) out.push_back(r + k * m_);
  return IndexSet(m2, std::move(out));
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (i) os << ",";
    os << r_[i];
  }
  os << "} mod " << m_;
  return os.str();
}

}  // namespace csrg
