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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "csrg/constructions.hpp"

namespace csrg {

using BigInt = boost::multiprecision::cpp_int;

/// Latin (eps = +1) / negative Latin (eps = -1) square type parameters
/// (n^2, r(n-eps), eps n + r^2 - 3 eps r, r^2 - eps r), with restricted
/// eigenvalues and multiplicities. Arbitrary precision: the sporadic rows
/// reach v ~ 10^81.
struct BigSrgParams {
  BigInt v, k, lambda, mu;
  BigInt theta1, theta2;  // theta1 > theta2
  BigInt mult1, mult2;
  bool feasible = false;  // k(k-lambda-1) = (v-k-1) mu and integral multiplicities
};

BigSrgParams latin_type_params(const BigInt& n, const BigInt& r, int eps);

enum class LiftKind { Elliptic, Hyperbolic };
const char* lift_kind_name(LiftKind k);

/// Full lifts of the three cyclotomic families: r = (q^m-1)|I|/N.
BigSrgParams catalog_full_semiprimitive(std::uint64_t p, std::uint32_t f, std::uint64_t N, LiftKind kind);
BigSrgParams catalog_full_subfield(std::uint64_t q, std::uint32_t m, std::uint32_t d, LiftKind kind);
BigSrgParams catalog_full_sporadic(std::size_t row, LiftKind kind);

/// Halved lifts: r = (q^m-1)|I|/2N on the subdifference side, with |I|
/// replaced by N-|I| on the complement side.
BigSrgParams catalog_half_semiprimitive(std::uint64_t p, std::uint32_t f, std::uint64_t N, Side side);
BigSrgParams catalog_half_sporadic(std::size_t row, Side side);
/// m = 3 conic partition: r = (q^2-1)/2.
BigSrgParams catalog_conic(std::uint64_t q, LiftKind kind);
/// Odd-m quadric-complement partition: r = q^{m-1}(q-1)/2.
BigSrgParams catalog_quadric(std::uint64_t q, std::uint32_t m, LiftKind kind);

struct CatalogEntry {
  std::string family;
  int eps;
  std::string instance;  // human-readable parameter tuple
  BigSrgParams params;
};

/// The full table: every sporadic row in every applicable family, plus small
/// sample instances of the parametric families.
std::vector<CatalogEntry> catalog_all();

}  // namespace csrg
