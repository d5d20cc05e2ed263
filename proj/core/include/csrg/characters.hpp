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

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "csrg/cyclotomic_integer.hpp"
#include "csrg/field.hpp"
#include "csrg/index_set.hpp"
#include "csrg/numeric.hpp"

namespace csrg {

using Cplx = std::complex<double>;

/// Default relative tolerance for floating character identities: 1e-9 sqrt(q).
double default_tolerance(std::uint64_t q);
/// |a-b| <= tol * max(1, |a|, |b|)
bool approx_equal(Cplx a, Cplx b, double tol);

/// A multiplicative character of order dividing N (N | q-1), evaluated as
/// chi(omega^k) = zeta_N^{j k mod N}.
struct MultChar {
  const FieldCtx* field = nullptr;
  std::uint64_t order = 1;  // N
  std::uint64_t index = 0;  // j in Z_N

  bool trivial() const { return index % order == 0; }
  std::uint64_t exact_order() const { return order / gcd_u64(index % order, order); }
  /// Exponent of zeta_N for a nonzero element.
  std::uint64_t zeta_exponent(FieldElem x) const { return mulmod(index % order, x.exponent() % order, order); }
  Cplx eval(FieldElem x) const;  // 0 for x = 0 when nontrivial, 1 when trivial
};

MultChar make_char(const FieldCtx& field, std::uint64_t order, std::uint64_t index);
MultChar quadratic_char(const FieldCtx& field);

/// tr_{q/p}(a x) as a residue in Z_p; the canonical additive character is
/// psi_a(x) = zeta_p^result.
std::uint32_t additive_char_exponent(const FieldCtx& field, FieldElem a, FieldElem x);

/// Exact additive character sum over an enumerable set: coefficient j of the
/// result counts the d in D with tr(a d) = j.
CycInt char_sum_exact(const FieldCtx& field, FieldElem a, const std::vector<FieldElem>& D);

/// Counts of tr_{q_mid/p}(x) = t over each cyclotomic class C_i^{(M, q_mid)},
/// accumulated in one streaming pass; the Gauss periods and every exact
/// spectrum in the verifier assemble from this table.
struct ClassTraceCounts {
  std::uint64_t modulus = 0;  // M
  std::uint64_t p = 0;
  std::uint64_t class_size = 0;
  std::vector<std::uint64_t> counts;  // modulus * p entries

  std::uint64_t at(std::uint64_t cls, std::uint64_t t) const { return counts[cls * p + t]; }
  CycInt period(std::uint64_t cls) const { return CycInt::from_counts(p, &counts[(cls % modulus) * p]); }
  ClassTraceCounts folded_to(std::uint64_t m2) const;  // m2 | modulus
};

/// psi(omega^shift union_{t in S} C_t^{(M)}) assembled from the count table.
CycInt period_union(const ClassTraceCounts& table, const IndexSet& classes, std::uint64_t shift = 0);

ClassTraceCounts class_trace_counts(const MidField& F, std::uint64_t M, unsigned workers = 0);

/// psi(C_i^{(N,q)}) as an exact cyclotomic integer.
CycInt gauss_period_exact(const MidField& F, std::uint64_t N, std::uint64_t i);
std::vector<CycInt> gauss_periods_exact(const MidField& F, std::uint64_t N);

/// G_q(eta) as an exact cyclotomic integer (eta the quadratic character),
/// via the two periods of order 2: period_0 - period_1.
CycInt quadratic_gauss_exact(const MidField& F);

/// Direct summation of G_q(chi) over all q-1 nonzero elements in double
/// precision (compensated accumulation, exponent-ascending order).
Cplx gauss_sum_direct(const FieldCtx& field, const MultChar& chi);

/// Quadratic Gauss sum closed form for odd q = p^s.
Cplx gauss_sum_quadratic_closed(std::uint64_t p, std::uint32_t s);

/// Semi-primitive closed form: requires p^j = -1 mod N with j minimal and
/// f = 2 j s; returns the signed p^{f/2}.
Cplx gauss_sum_semiprimitive_closed(std::uint64_t p, std::uint64_t N, std::uint32_t f);
/// The minimal j with p^j = -1 (mod N), or throws NotSemiprimitive.
std::uint32_t semiprimitivity_index(std::uint64_t p, std::uint64_t N);
bool is_semiprimitive(std::uint64_t p, std::uint64_t N, std::uint32_t* j_out = nullptr);

/// Max relative deviation between G_{q^m}(chi') and (-1)^{m-1} G_q(chi)^m,
/// both sides by direct summation inside F_{q^m} (chi on the subfield F_q,
/// chi' its norm lift).
double davenport_hasse_lift_check(std::uint64_t p, std::uint32_t e_base, std::uint32_t m, std::uint64_t order,
                                  std::uint64_t index);

/// Max relative deviation of the product formula
/// G(chi) = G(chi^l) / chi^l(l) * prod_i G(eta^i)/G(chi eta^i)
/// for eta of order l; throws DegenerateCharacter if some chi eta^i or chi^l
/// is trivial.
double davenport_hasse_product_check(const FieldCtx& field, std::uint64_t ell, std::uint64_t order,
                                     std::uint64_t index);

/// Direct sum of psi(a2 x^2 + a1 x + a0) over all of F_q (q odd).
Cplx quadratic_completion_sum(const FieldCtx& field, FieldElem a2, FieldElem a1, FieldElem a0);
/// The closed form psi(a0 - a1^2 (4 a2)^{-1}) eta(a2) G_q(eta).
Cplx quadratic_completion_closed(const FieldCtx& field, FieldElem a2, FieldElem a1, FieldElem a0);

}  // namespace csrg
