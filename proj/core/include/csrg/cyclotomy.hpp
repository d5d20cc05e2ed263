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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csrg/field.hpp"
#include "csrg/index_set.hpp"

namespace csrg {

/// Materializes C_i^{(N,q)} = omega^i <omega^N> in a mid-field view.
std::vector<FieldElem> cyclotomic_class(const MidField& F, std::uint64_t N, std::uint64_t i);
/// Streams the class through a callback without materializing.
void for_each_in_class(const MidField& F, std::uint64_t N, std::uint64_t i,
                       const std::function<void(FieldElem)>& fn);

/// {i mod N' : Tr_{q^m/q}(omega^i) = 0}, N' = (q^m-1)/(q-1): the hyperplane
/// of PG(m-1, q) as a difference set in the Singer cycle.
IndexSet singer_set(const MidField& F);

/// The two-valued intersection pattern of the Singer set with the cosets of
/// C_0^{(N,q^m)}/F_q^*. I is the smaller of the two sides; delta = (value on
/// I) - (value off I), and |delta| is a power of p.
struct SubdiffResult {
  std::uint64_t N = 0;
  IndexSet I;
  std::int64_t delta = 0;
  std::uint64_t sizes[2] = {0, 0};  // [value off I, value on I]

  std::uint64_t lambda() const;  // difference-set lambda of I
};

SubdiffResult subdifference_set(const MidField& F, std::uint64_t N);

/// Which known family a cyclotomic configuration (p, f, N) belongs to.
struct FamilyTag {
  enum class Kind { Subfield, SemiPrimitive, Sporadic, NotSrg } kind = Kind::NotSrg;
  std::uint32_t subfield_degree = 0;   // d with N = (p^f-1)/(p^d-1)
  std::uint32_t semiprimitive_j = 0;   // minimal j with p^j = -1 mod N
  int sporadic_row = -1;               // row of the known sporadic table

  bool is_srg() const { return kind != Kind::NotSrg; }
  std::string to_string() const;
};

/// One row of the known sporadic cyclotomic configurations.
struct SporadicCase {
  std::uint64_t N;
  std::uint64_t p;
  std::uint32_t f;
  std::uint64_t k;  // |I|
};
const std::vector<SporadicCase>& sporadic_cases();

/// Classifies (p, f, N): subfield shape first, then semi-primitivity, then
/// the sporadic table. For small fields the decision is cross-checked against
/// the exact two-valuedness of the cyclotomic spectrum.
FamilyTag classify_cyclotomic(std::uint64_t p, std::uint32_t f, std::uint64_t N);

/// Exhaustive difference-count check that S is an (N, |S|, lambda) difference
/// set; returns lambda or nullopt.
std::optional<std::uint64_t> difference_set_lambda(const IndexSet& S);

}  // namespace csrg
