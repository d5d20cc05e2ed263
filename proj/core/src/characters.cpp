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

#include "csrg/characters.hpp"

#include <cmath>
#include <numbers>

namespace csrg {

namespace {

std::vector<Cplx> unit_roots(std::uint64_t n) {
  std::vector<Cplx> r(n);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::uint64_t k = 0; k < n; ++k) r[k] = {std::cos(w * static_cast<double>(k)), std::sin(w * static_cast<double>(k))};
  return r;
}

// Compensated (Kahan) accumulation; direct sums can run to ~4e7 terms.
struct KahanCplx {
  Cplx sum{0.0, 0.0}, comp{0.0, 0.0};
  void add(Cplx v) {
    Cplx y = v - comp;
    Cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double default_tolerance(std::uint64_t q) { return 1e-9 * std::sqrt(static_cast<double>(q)); }

bool approx_equal(Cplx a, Cplx b, double tol) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

Cplx MultChar::eval(FieldElem x) const {
  if (x.is_zero()) return trivial() ? Cplx{1.0, 0.0} : Cplx{0.0, 0.0};
  const double w = 2.0 * std::numbers::pi / static_cast<double>(order);
  double a = w * static_cast<double>(zeta_exponent(x));
  return {std::cos(a), std::sin(a)};
}

MultChar make_char(const FieldCtx& field, std::uint64_t order, std::uint64_t index) {
  require(order >= 1 && field.group_order() % order == 0, Errc::BadDivisor,
          "character order must divide q-1");
  return MultChar{&field, order, index % order};
}

MultChar quadratic_char(const FieldCtx& field) {
  require(field.p() != 2, Errc::EvenCharacteristic, "quadratic character needs odd q");
  return make_char(field, 2, 1);
}

std::uint32_t additive_char_exponent(const FieldCtx& field, FieldElem a, FieldElem x) {
  return field.trace_to_prime(field.mul(a, x));
}

CycInt char_sum_exact(const FieldCtx& field, FieldElem a, const std::vector<FieldElem>& D) {
  CycInt z(field.p());
  for (FieldElem d : D) z[additive_char_exponent(field, a, d)] += 1;
  return z;
}

ClassTraceCounts class_trace_counts(const MidField& F, std::uint64_t M, unsigned workers) {
  require(M >= 1 && (F.q_mid - 1) % M == 0, Errc::BadDivisor,
          "class modulus " + std::to_string(M) + " must divide q-1 = " + std::to_string(F.q_mid - 1));
  const std::uint64_t p = F.top->p();
  const std::uint64_t n = F.q_mid - 1;
  ClassTraceCounts table;
  table.modulus = M;
  table.p = p;
  table.class_size = n / M;

  unsigned chunks = plan_chunks(n, workers);
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(M * p, 0));
  chunked_run(n, chunks, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    auto& local = partial[chunk];
    ElementSweep s = F.sweep_from(begin);
    if (F.scale_valid) {
      const std::uint64_t scale = F.trace_scale;
      for (std::uint64_t j = begin; j < end; ++j) {
        std::uint64_t t = (scale * s.trace()) % p;
        ++local[(j % M) * p + t];
        s.advance();
      }
    } else {
      for (std::uint64_t j = begin; j < end; ++j) {
        ++local[(j % M) * p + F.sweep_trace_to_prime(s)];
        s.advance();
      }
    }
  });
  table.counts.assign(M * p, 0);
  for (const auto& local : partial)
    for (std::size_t i = 0; i < table.counts.size(); ++i) table.counts[i] += local[i];
  return table;
}

ClassTraceCounts ClassTraceCounts::folded_to(std::uint64_t m2) const {
  require(m2 >= 1 && modulus % m2 == 0, Errc::BadDivisor, "fold modulus must divide M");
  ClassTraceCounts out;
  out.modulus = m2;
  out.p = p;
  out.class_size = class_size * (modulus / m2);
  out.counts.assign(m2 * p, 0);
  for (std::uint64_t c = 0; c < modulus; ++c)
    for (std::uint64_t t = 0; t < p; ++t) out.counts[(c % m2) * p + t] += at(c, t);
  return out;
}

CycInt period_union(const ClassTraceCounts& table, const IndexSet& classes, std::uint64_t shift) {
  require(classes.modulus() == table.modulus, Errc::InconsistentIndexSets,
          "index set modulus does not match the count table");
  CycInt z(table.p);
  for (std::uint64_t t : classes.residues()) {
    std::uint64_t cls = (t + shift) % table.modulus;
    for (std::uint64_t j = 0; j < table.p; ++j) z[j] += static_cast<std::int64_t>(table.at(cls, j));
  }
  return z;
}

CycInt gauss_period_exact(const MidField& F, std::uint64_t N, std::uint64_t i) {
  return class_trace_counts(F, N).period(i % N);
}

std::vector<CycInt> gauss_periods_exact(const MidField& F, std::uint64_t N) {
  ClassTraceCounts table = class_trace_counts(F, N);
  std::vector<CycInt> out;
  out.reserve(N);
  for (std::uint64_t i = 0; i < N; ++i) out.push_back(table.period(i));
  return out;
}

CycInt quadratic_gauss_exact(const MidField& F) {
  require(F.top->p() != 2, Errc::EvenCharacteristic, "quadratic Gauss sum needs odd characteristic");
  ClassTraceCounts t2 = class_trace_counts(F, 2);
  return t2.period(0) - t2.period(1);
}

Cplx gauss_sum_direct(const FieldCtx& field, const MultChar& chi) {
  const std::uint64_t n = field.group_order();
  const std::uint64_t N = chi.order;
  const std::uint64_t j = chi.index % N;
  std::vector<Cplx> zN = unit_roots(N);
  std::vector<Cplx> zp = unit_roots(field.p());
  KahanCplx acc;
  ElementSweep s = field.sweep_from(0);
  std::uint64_t ze = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    acc.add(zN[ze] * zp[s.trace()]);
    ze += j;
    if (ze >= N) ze -= N;
    s.advance();
  }
  return acc.sum;
}

Cplx gauss_sum_quadratic_closed(std::uint64_t p, std::uint32_t s) {
  require(p != 2, Errc::EvenCharacteristic, "closed form needs odd p");
  double root = std::pow(static_cast<double>(p), static_cast<double>(s) / 2.0);
  double sign = (s % 2 == 0) ? -1.0 : 1.0;  // (-1)^(s-1)
  if (p % 4 == 1) return {sign * root, 0.0};
  // p = 3 mod 4: extra factor i^s
  Cplx is;
  switch (s % 4) {
    case 0: is = {1, 0}; break;
    case 1: is = {0, 1}; break;
    case 2: is = {-1, 0}; break;
    default: is = {0, -1}; break;
  }
  return sign * is * root;
}

bool is_semiprimitive(std::uint64_t p, std::uint64_t N, std::uint32_t* j_out) {
  if (N <= 2) return false;
  std::uint64_t pk = p % N;
  std::uint64_t target = N - 1;
  for (std::uint32_t j = 1; j <= 2 * N; ++j) {
    if (pk == target) {
      if (j_out) *j_out = j;
      return true;
    }
    if (pk == 1 && j > 1) return false;  // cycled back without hitting -1
    pk = mulmod(pk, p % N, N);
  }
  return false;
}

std::uint32_t semiprimitivity_index(std::uint64_t p, std::uint64_t N) {
  std::uint32_t j = 0;
  require(is_semiprimitive(p, N, &j), Errc::NotSemiprimitive,
          "no power of " + std::to_string(p) + " is -1 mod " + std::to_string(N));
  return j;
}

Cplx gauss_sum_semiprimitive_closed(std::uint64_t p, std::uint64_t N, std::uint32_t f) {
  require(N > 2, Errc::NotSemiprimitive, "semi-primitive closed form needs N > 2");
  std::uint32_t j = semiprimitivity_index(p, N);
  require(f % (2 * j) == 0, Errc::NotSemiprimitive,
          "degree f = " + std::to_string(f) + " is not a multiple of 2j = " + std::to_string(2 * j));
  std::uint64_t s = f / (2 * j);
  double mag = std::pow(static_cast<double>(p), static_cast<double>(f) / 2.0);
  std::uint64_t sign_exp;
  if (p == 2) {
    sign_exp = s - 1;
  } else {
    std::uint64_t pj = checked_pow_u64(p, j);
    sign_exp = (s - 1) + ((pj + 1) / N) * s;
  }
  return {(sign_exp % 2 == 0 ? 1.0 : -1.0) * mag, 0.0};
}

namespace {

// Direct Gauss sum of a character given on the subfield {0} + <g>, where
// g = omega^step generates a subfield of order q0 inside `field`; the
// additive character is the canonical one of the subfield.
Cplx gauss_sum_on_subfield(const FieldCtx& field, std::uint64_t step, std::uint64_t q0, std::uint32_t e_base,
                           std::uint64_t order, std::uint64_t index) {
  std::vector<Cplx> zN = unit_roots(order);
  std::vector<Cplx> zp = unit_roots(field.p());
  // tr_{q0/p} on the subfield: sum of e_base Frobenius images
  KahanCplx acc;
  for (std::uint64_t t = 0; t + 1 < q0; ++t) {
    FieldElem y = field.elem(mulmod(step, t, field.group_order()));
    FieldElem tr = FieldElem::zero();
    FieldElem cur = y;
    for (std::uint32_t i = 0; i < e_base; ++i) {
      tr = field.add(tr, cur);
      cur = field.frobenius(cur);
    }
    std::uint64_t tval = tr.is_zero() ? 0 : field.packed(tr) % field.p();
    acc.add(zN[mulmod(index, t % order, order)] * zp[tval]);
  }
  return acc.sum;
}

}  // namespace

double davenport_hasse_lift_check(std::uint64_t p, std::uint32_t e_base, std::uint32_t m, std::uint64_t order,
                                  std::uint64_t index) {
  require(m >= 1, Errc::BadDivisor, "lift degree must be >= 1");
  require(index % order != 0, Errc::DegenerateCharacter, "lift formula needs a nontrivial character");
  FieldCtx ext = FieldCtx::build(p, e_base * m);
  std::uint64_t q0 = checked_pow_u64(p, e_base);
  require((q0 - 1) % order == 0, Errc::BadDivisor, "character order must divide q-1");
  std::uint64_t step = ext.group_order() / (q0 - 1);

  Cplx g_base = gauss_sum_on_subfield(ext, step, q0, e_base, order, index);
  // The norm of omega is the subfield generator omega^step, so the lifted
  // character has the same index with respect to omega.
  MultChar lifted = make_char(ext, order, index);
  Cplx g_ext = gauss_sum_direct(ext, lifted);

  Cplx rhs = (m % 2 == 0 ? -1.0 : 1.0) * std::pow(g_base, static_cast<int>(m));
  double scale = std::max({1.0, std::abs(g_ext), std::abs(rhs)});
  return std::abs(g_ext - rhs) / scale;
}

double davenport_hasse_product_check(const FieldCtx& field, std::uint64_t ell, std::uint64_t order,
                                     std::uint64_t index) {
  require(ell > 1 && field.group_order() % ell == 0, Errc::BadDivisor, "eta order must divide q-1");
  MultChar chi = make_char(field, order, index);
  require(!chi.trivial(), Errc::DegenerateCharacter, "product formula needs a nontrivial character");

  // chi and eta^i on the common lattice of order lcm(order, ell)
  std::uint64_t L = order / gcd_u64(order, ell) * ell;
  std::uint64_t jchi = (index % order) * (L / order);
  std::uint64_t jeta = L / ell;
  require(mulmod(jchi, ell % L, L) % L != 0, Errc::DegenerateCharacter, "chi^ell is trivial");
  for (std::uint64_t i = 1; i < ell; ++i)
    require((jchi + i * jeta) % L != 0, Errc::DegenerateCharacter, "chi * eta^i is trivial");

  Cplx lhs = gauss_sum_direct(field, chi);

  Cplx g_chi_ell = gauss_sum_direct(field, make_char(field, L, mulmod(jchi, ell % L, L)));
  // chi^ell evaluated at the field element ell
  FieldElem ell_elem = field.from_int(ell);
  require(!ell_elem.is_zero(), Errc::DegenerateCharacter, "ell vanishes in the field");
  MultChar chi_ell = make_char(field, L, mulmod(jchi, ell % L, L));
  Cplx denom = chi_ell.eval(ell_elem);
  Cplx rhs = g_chi_ell / denom;
  for (std::uint64_t i = 1; i < ell; ++i) {
    Cplx g_eta = gauss_sum_direct(field, make_char(field, L, (i * jeta) % L));
    Cplx g_mix = gauss_sum_direct(field, make_char(field, L, (jchi + i * jeta) % L));
    rhs *= g_eta / g_mix;
  }
  double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) / scale;
}

Cplx quadratic_completion_sum(const FieldCtx& field, FieldElem a2, FieldElem a1, FieldElem a0) {
  require(field.p() != 2, Errc::EvenCharacteristic, "needs odd q");
  require(!a2.is_zero(), Errc::BadDivisor, "leading coefficient must be nonzero");
  std::vector<Cplx> zp = unit_roots(field.p());
  KahanCplx acc;
  // x = 0 term
  acc.add(zp[field.trace_to_prime(a0)]);
  for (std::uint64_t k = 0; k < field.group_order(); ++k) {
    FieldElem x = field.elem(k);
    FieldElem v = field.add(field.add(field.mul(a2, field.mul(x, x)), field.mul(a1, x)), a0);
    acc.add(zp[field.trace_to_prime(v)]);
  }
  return acc.sum;
}

Cplx quadratic_completion_closed(const FieldCtx& field, FieldElem a2, FieldElem a1, FieldElem a0) {
  require(field.p() != 2, Errc::EvenCharacteristic, "needs odd q");
  require(!a2.is_zero(), Errc::BadDivisor, "leading coefficient must be nonzero");
  // a0 - a1^2 (4 a2)^{-1}
  FieldElem four = field.from_int(4);
  FieldElem shift = field.sub(a0, field.mul(field.mul(a1, a1), field.inv(field.mul(four, a2))));
  std::vector<Cplx> zp = unit_roots(field.p());
  Cplx psi = zp[field.trace_to_prime(shift)];
  MultChar eta = quadratic_char(field);
  Cplx g = quadratic_gauss_exact(MidField::whole(field, field.f())).to_complex();
  return psi * eta.eval(a2) * g;
}

}  // namespace csrg
