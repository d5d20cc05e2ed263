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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "csrg/characters.hpp"
#include "csrg/constructions.hpp"
#include "csrg/cyclotomic_integer.hpp"

namespace csrg {

struct SpectrumValue {
  CycInt value;
  std::uint64_t multiplicity = 0;
  std::string rep;  // an example character attaining the value
};

/// The exact nontrivial character values of a connection set, grouped by
/// distinct value. Row-sum consistency (sum of value * multiplicity = -|D|)
/// is asserted internally.
struct SpectrumReport {
  std::uint64_t group_order = 0;
  std::uint64_t set_size = 0;
  std::string grouping;
  std::vector<SpectrumValue> distinct;  // sorted, largest rational value first
  bool two_valued = false;
  bool all_rational = true;
};

/// One streaming pass over the big field accumulates per-class trace counts;
/// psi(gamma^a D) for every a mod M is then assembled exactly.
SpectrumReport exact_spectrum_additive(const ConnectionSet& set, unsigned workers = 0);

struct ProductSweepOptions {
  unsigned workers = 0;
  /// Abort (TooLargeForFullSweep) when characters * |D| exceeds this.
  std::uint64_t ops_budget = 4'000'000'000ull;
  /// Use the rescaling-orbit reduction (symmetry verified by sampling) instead
  /// of the all-characters path.
  bool orbit_reduction = false;
  std::uint64_t symmetry_samples = 1000;
};

/// Exact values psi_{a,b}(D) for all (a,b) != (0,0), either by the full sweep
/// or by rescaling-orbit reduction with multiplicities.
SpectrumReport exact_spectrum_product(const ConnectionSet& set, const ProductSweepOptions& opts = {});

struct SrgParams {
  std::uint64_t v = 0, k = 0;
  std::int64_t lambda = 0, mu = 0;
  std::int64_t theta1 = 0, theta2 = 0;  // theta1 > theta2
  std::uint64_t mult1 = 0, mult2 = 0;
  bool dense_oracle_ran = false;
};

struct VerifyOptions {
  unsigned workers = 0;
  /// Run the dense adjacency-matrix oracle when v <= this (0 disables).
  std::uint64_t dense_oracle_max_v = 4096;
  ProductSweepOptions product;
};

/// Verifies strong regularity: symmetric set, exactly two distinct rational
/// restricted character values; cross-validates the feasibility identity and,
/// for small graphs, the dense A^2 = (lambda-mu)A + (k-mu)I + mu J oracle.
SrgParams srg_verify(const ConnectionSet& set, const VerifyOptions& opts = {});

/// The independent combinatorial oracle: builds the dense adjacency matrix
/// and checks A^2 entrywise. Throws on any mismatch.
void dense_adjacency_oracle(const ConnectionSet& set, const SrgParams& params);

enum class PcClass { Zero, PlusG, MinusG, Fail };
const char* pc_class_name(PcClass c);

struct ConditionRecord {
  std::uint64_t c = 0;
  CycInt lhs;
  PcClass cls = PcClass::Fail;
};

/// Per-c classification of the halving condition
///   2 psi(omega^c union_{t in X} C_t^{(2N)}) - psi(omega^c union C_t^{(N)})
/// against {0, +-G(eta)}: the subdiff side mandates +-G exactly on 2^{-1}I,
/// the complement side exactly off it. pass uses the per-c sign freedom;
/// pass_global additionally demands one sign throughout.
struct ConditionReport {
  std::uint64_t N = 0;
  Side side = Side::Subdiff;
  std::vector<ConditionRecord> records;
  bool pass = false;
  bool pass_global = false;
  CycInt g_exact;
};

ConditionReport condition_check(const MidField& F, const IndexSet& X, const IndexSet& I, Side side,
                                const ClassTraceCounts* table2N = nullptr);

struct SearchResult {
  std::vector<PartitionSpec> hits;  // both orderings of every passing pair
  std::uint64_t candidates = 0;     // all ordered partitions
  std::uint64_t evaluated = 0;      // after mirror reduction
};

/// Enumerates ordered partitions (P1, P2) of `base` (I or its complement),
/// fixing the minimum element in P1 (the swap mirrors X by X+N and cannot
/// change the outcome), and returns those passing the halving condition.
SearchResult partition_search(const MidField& F, const IndexSet& base, Side side, const IndexSet& I,
                              unsigned workers = 0);

/// Numeric cross-checks of the halved-set character-value formulas: exact
/// left side against the closed form with its Gauss factor, maximum absolute
/// deviation over all stated characters.
double crosscheck_elliptic_half(const FieldCtx& big, const MidField& mid, std::uint64_t N,
                                const HalvingIndexSets& hs, const IndexSet& I, Side side);
double crosscheck_hyperbolic_half(const FieldCtx& field, std::uint64_t base_q, std::uint64_t N,
                                  const HalvingIndexSets& hs, const IndexSet& I, Side side);

struct QuadricSumCheck {
  double max_dev = 0.0;
  std::array<std::uint64_t, 4> branch_counts{};  // per case branch of the value formula
};

/// Cone-section sums psi(omega^a T_l) for every a and l (flat = false), or
/// half-flat sums psi(omega^a B) (flat = true), against their closed forms.
QuadricSumCheck crosscheck_quadric_sums(const MidField& F, const QuadricPartitionResult& qp, bool flat);

/// G_q(eta') of the base subfield, exact-by-parity, as a complex value.
Cplx base_quadratic_gauss(const MidField& F);

}  // namespace csrg
