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
#include <string>
#include <vector>

#include "csrg/cyclotomy.hpp"
#include "csrg/field.hpp"
#include "csrg/index_set.hpp"

namespace csrg {

enum class Side { Subdiff, Complement };
const char* side_name(Side s);

/// An ordered partition (P1, P2) of the subdifference set I (side = Subdiff)
/// or of Z_N minus I (side = Complement).
struct PartitionSpec {
  Side side = Side::Subdiff;
  IndexSet P1, P2;  // mod N

  IndexSet cover() const { return P1.unite(P2); }
  /// Throws NotAPartition unless P1, P2 are disjoint and cover the reference set.
  void validate_against(const IndexSet& reference) const;
};

/// The halved index sets: X mod 2N drives the condition check, Y mod 4N names
/// the halved connection set. J1 = {0,3} and J2 = {1,2} are the fixed digit
/// patterns of the Y construction.
struct HalvingIndexSets {
  IndexSet X;  // mod 2N
  IndexSet Y;  // mod 4N
  PartitionSpec provenance;
};

/// X = 2*P1'' union (2*P2'' + N) mod 2N and
/// Y = {N i + 4 j mod 4N : (i,j) in J1 x P1'' union J2 x P2''},
/// where P'' = 4^{-1} P mod N. Requires N odd; `reference` is I or its
/// complement according to the partition's side.
HalvingIndexSets build_halving_sets(const PartitionSpec& partition, std::uint64_t N, const IndexSet& reference);

/// Recovers the partition (P1, P2) with 4^{-1}P1 = (even part of X)/2 and
/// 4^{-1}P2 = (odd part of X - N)/2 from a condition-side index set X mod 2N.
PartitionSpec partition_from_x(const IndexSet& X, std::uint64_t N, Side side);

/// A symmetric connection set in an additive group, stored by generator data.
struct ConnectionSet {
  enum class Kind { AdditiveCyclotomic, ProductGenerated };
  enum class ProductKind { FullH, Half };

  Kind kind = Kind::AdditiveCyclotomic;
  const FieldCtx* field = nullptr;  // F_{q^{2m}} (additive) or F_{q^m} (product)

  // AdditiveCyclotomic: union of classes gamma^i <gamma^M>, i in indices
  std::uint64_t class_modulus = 0;  // M
  IndexSet indices;                 // mod M (additive) / the exponent set of the product kind

  // ProductGenerated
  std::uint64_t N = 0;
  ProductKind product_kind = ProductKind::FullH;
  bool include_axes = false;

  std::uint64_t group_order() const;
  std::uint64_t size() const;
  bool is_symmetric() const;  // index arithmetic; -D = D
  std::string describe() const;
  std::uint64_t content_hash() const;

  /// Materializes the elements: packed values (additive) or packed pairs
  /// u * q^m + v (product). Intended for small-scale use (dense oracle,
  /// export, enumerator tests).
  void for_each_element(const std::function<void(std::uint64_t)>& fn) const;
  /// Product sets: exponent pairs with -1 encoding a zero coordinate.
  void for_each_pair(const std::function<void(std::int64_t, std::int64_t)>& fn) const;
  /// Membership test (exact, index arithmetic; needs logs for product sets).
  bool contains_pair(FieldElem u, FieldElem v) const;
};

/// E = union of gamma^i <gamma^M> for i in indices (M = N for the full lift,
/// M = 4N for a halving, which additionally needs q^m = 3 mod 4).
ConnectionSet elliptic_connection(const FieldCtx& big_field, const IndexSet& indices, std::uint64_t M);

/// H = {(y, y^{-1} x omega^l)} (kind FullH, indices = I mod N) or
/// H_1 = {(x y, x y^{-1} z omega^l)} (kind Half, indices = Y mod 4N).
/// include_axes adds {(0,x)} and {(x,0)}, x != 0.
ConnectionSet hyperbolic_connection(const FieldCtx& field, std::uint64_t base_q, std::uint64_t N,
                                    ConnectionSet::ProductKind kind, const IndexSet& indices, bool include_axes);

/// The partition named for a family and side: semi-primitive -> ({0}, {});
/// -2 in <p> mod N -> (I, {}) resp. (complement, {}); the one sporadic case
/// without that condition, (7^9, 37), gets (2I, rest) on the complement side.
PartitionSpec canonical_partition(const FamilyTag& family, Side side, std::uint64_t p, std::uint32_t f,
                                  std::uint64_t N, const IndexSet& I);

/// Whether -2 lies in <p> mod N.
bool minus_two_in_p_powers(std::uint64_t p, std::uint64_t N);

/// Conic partition for m = 3: the zero set of Tr(x^2) in the Singer cycle
/// gives I_Q = 2^{-1} I; the secant products at the base point d_0 = min I_Q
/// produce X mod 2N and the partition of I it induces. Other base points
/// (base_choice > 0) can only translate X by N.
HalvingIndexSets conic_partition_m3(const MidField& F, std::size_t base_choice = 0);

/// Frame for the quadric-complement partition: pairwise-orthogonal isotropic
/// a_1..a_{(m-1)/2} plus an anisotropic b spanning the complementary flat.
struct QuadricFrame {
  std::vector<FieldElem> a;  // (m-1)/2 elements, Tr(a_i a_j) = 0
  FieldElem b;               // Tr(a_i b) = 0, Tr(b^2) != 0
  std::vector<std::uint64_t> cone_sizes;  // |A cap H_1 ... cap H_{l-1}| per level
};

struct QuadricPartitionResult {
  HalvingIndexSets halving;  // side = Complement
  QuadricFrame frame;
  IndexSet a_classes;  // classes of the quadric A mod 2N (= lifts of 2^{-1}I)
};

/// Complement-side partition from the parabolic quadric Tr(x^2) = 0 for odd
/// m >= 3 and odd q; the union D of the cone sections and the half-flat B is
/// a union of classes mod 2N with D, omega^N D partitioning F^* minus A.
QuadricPartitionResult quadric_complement_partition(const MidField& F);

/// 0 / 1 for a nonzero square / non-square of the base subfield F_q.
std::uint32_t base_square_class(const MidField& F, FieldElem t);

}  // namespace csrg
