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

#include "csrg/cyclotomy.hpp"

#include <algorithm>

#include "csrg/characters.hpp"
#include "csrg/numeric.hpp"

namespace csrg {

std::vector<FieldElem> cyclotomic_class(const MidField& F, std::uint64_t N, std::uint64_t i) {
  std::vector<FieldElem> out;
  out.reserve((F.q_mid - 1) / N);
  for_each_in_class(F, N, i, [&](FieldElem x) { out.push_back(x); });
  return out;
}

void for_each_in_class(const MidField& F, std::uint64_t N, std::uint64_t i,
                       const std::function<void(FieldElem)>& fn) {
  require(N >= 1 && (F.q_mid - 1) % N == 0, Errc::BadDivisor,
          "N = " + std::to_string(N) + " must divide q-1 = " + std::to_string(F.q_mid - 1));
  const std::uint64_t count = (F.q_mid - 1) / N;
  for (std::uint64_t k = 0; k < count; ++k) fn(F.element(i % N + k * N));
}

IndexSet singer_set(const MidField& F) {
  require(F.m >= 2, Errc::BadSubfield, "Singer set needs m >= 2");
  const std::uint64_t Np = (F.q_mid - 1) / (F.base_q - 1);
  IndexSet out(Np);
  if (F.e_base == 1 && F.scale_valid) {
    // trace to the prime field: one streaming pass over the first N' powers
    ElementSweep s = F.sweep_from(0);
    const std::uint64_t p = F.top->p();
    const std::uint64_t scale = F.trace_scale;
    for (std::uint64_t j = 0; j < Np; ++j) {
      if ((scale * s.trace()) % p == 0) out.insert(j);
      s.advance();
    }
  } else {
    for (std::uint64_t j = 0; j < Np; ++j) {
      if (F.trace_to_base(F.element(j)).is_zero()) out.insert(j);
    }
  }
  return out;
}

std::uint64_t SubdiffResult::lambda() const {
  std::uint64_t k = I.size();
  return k * (k - 1) / (N - 1);
}

SubdiffResult subdifference_set(const MidField& F, std::uint64_t N) {
  const std::uint64_t Np = (F.q_mid - 1) / (F.base_q - 1);
  require(N >= 2 && Np % N == 0, Errc::BadDivisor,
          "N = " + std::to_string(N) + " must divide (q^m-1)/(q-1) = " + std::to_string(Np));

  // counts[i] = |H_0 intersect omega^i C0-bar| over the Singer cycle
  std::vector<std::uint64_t> counts(N, 0);
  if (F.e_base == 1 && F.scale_valid) {
    ElementSweep s = F.sweep_from(0);
    const std::uint64_t p = F.top->p();
    const std::uint64_t scale = F.trace_scale;
    for (std::uint64_t j = 0; j < Np; ++j) {
      if ((scale * s.trace()) % p == 0) ++counts[j % N];
      s.advance();
    }
  } else {
    for (std::uint64_t j = 0; j < Np; ++j) {
      if (F.trace_to_base(F.element(j)).is_zero()) ++counts[j % N];
    }
  }

  std::uint64_t v0 = counts[0], v1 = v0;
  for (std::uint64_t c : counts) {
    if (c != v0) {
      v1 = c;
      break;
    }
  }
  require(v1 != v0, Errc::NotTwoValued, "intersection numbers are constant; no subdifference set");
  for (std::uint64_t c : counts)
    require(c == v0 || c == v1, Errc::NotTwoValued,
            "intersection numbers take more than two values; the cyclotomic graph is not strongly regular");

  std::uint64_t n0 = static_cast<std::uint64_t>(std::count(counts.begin(), counts.end(), v0));
  std::uint64_t n1 = N - n0;
  // I is the smaller side; on a tie, the side away from the C0-bar coset.
  std::uint64_t on_value = (n1 < n0) ? v1 : (n0 < n1) ? v0 : v1;
  SubdiffResult res;
  res.N = N;
  res.I = IndexSet(N);
  for (std::uint64_t i = 0; i < N; ++i)
    if (counts[i] == on_value) res.I.insert(i);
  std::uint64_t off_value = (on_value == v0) ? v1 : v0;
  res.delta = static_cast<std::int64_t>(on_value) - static_cast<std::int64_t>(off_value);
  res.sizes[0] = off_value;
  res.sizes[1] = on_value;

  // |delta| must be a power of p
  std::uint64_t ad = static_cast<std::uint64_t>(res.delta < 0 ? -res.delta : res.delta);
  while (ad % F.top->p() == 0) ad /= F.top->p();
  require(ad == 1, Errc::NotTwoValued, "|delta| is not a power of p");

  // I must be a difference set in Z_N (integrality of lambda enforced)
  std::uint64_t k = res.I.size();
  require((k * (k - 1)) % (N - 1) == 0, Errc::NotTwoValued, "subdifference set size is infeasible");
  auto lam = difference_set_lambda(res.I);
  require(lam.has_value() && *lam == res.lambda(), Errc::NotTwoValued, "I is not a difference set in Z_N");
  return res;
}

std::optional<std::uint64_t> difference_set_lambda(const IndexSet& S) {
  const std::uint64_t N = S.modulus();
  if (S.empty()) return std::nullopt;
  if (S.size() == 1) return 0;  // lambda = 0, trivially
  std::vector<std::uint64_t> diff(N, 0);
  const auto& r = S.residues();
  for (std::uint64_t a : r)
    for (std::uint64_t b : r)
      if (a != b) ++diff[(a + N - b) % N];
  for (std::uint64_t d = 2; d < N; ++d)
    if (diff[d] != diff[1]) return std::nullopt;
  return diff[1];
}

const std::vector<SporadicCase>& sporadic_cases() {
  static const std::vector<SporadicCase> table = {
      {11, 3, 5, 5},    {19, 5, 9, 9},    {35, 3, 12, 17},  {37, 7, 9, 9},
      {43, 11, 7, 21},  {67, 17, 33, 33}, {107, 3, 53, 53}, {133, 5, 18, 33},
      {163, 41, 81, 81}, {323, 3, 144, 161}, {499, 5, 249, 249},
  };
  return table;
}

std::string FamilyTag::to_string() const {
  switch (kind) {
    case Kind::Subfield: return "subfield(d=" + std::to_string(subfield_degree) + ")";
    case Kind::SemiPrimitive: return "semi-primitive(j=" + std::to_string(semiprimitive_j) + ")";
    case Kind::Sporadic: return "sporadic(N=" + std::to_string(sporadic_cases()[static_cast<std::size_t>(sporadic_row)].N) + ")";
    case Kind::NotSrg: return "not-srg";
  }
  return "?";
}

namespace {

// Exact two-valuedness of the nontrivial additive character values of
// C_0^{(N, p^f)}; ground truth for small fields.
bool cyclotomic_two_valued(std::uint64_t p, std::uint32_t f, std::uint64_t N) {
  FieldCtx ctx = FieldCtx::build(p, f);
  MidField F = MidField::whole(ctx, f);
  ClassTraceCounts table = class_trace_counts(F, N);
  CycInt v0 = table.period(0).canonical();
  CycInt v1 = v0;
  bool have_second = false;
  for (std::uint64_t a = 0; a < N; ++a) {
    // psi(omega^a C_0) = period of class a
    CycInt v = table.period(a).canonical();
    if (!v.is_rational_integer()) return false;
    if (v != v0) {
      if (!have_second) {
        v1 = v;
        have_second = true;
      } else if (v != v1) {
        return false;
      }
    }
  }
  return have_second;
}

}  // namespace

FamilyTag classify_cyclotomic(std::uint64_t p, std::uint32_t f, std::uint64_t N) {
  std::uint64_t q = checked_pow_u64(p, f);
  require(N >= 2 && (q - 1) % N == 0, Errc::BadDivisor, "N must divide p^f - 1");
  FamilyTag tag;
  for (std::uint32_t d = 1; d < f; ++d) {
    if (f % d != 0) continue;
    std::uint64_t qd = checked_pow_u64(p, d);
    if ((q - 1) / (qd - 1) == N) {
      tag.kind = FamilyTag::Kind::Subfield;
      tag.subfield_degree = d;
      break;
    }
  }
  if (tag.kind == FamilyTag::Kind::NotSrg) {
    std::uint32_t j = 0;
    if (is_semiprimitive(p, N, &j) && f % (2 * j) == 0) {
      tag.kind = FamilyTag::Kind::SemiPrimitive;
      tag.semiprimitive_j = j;
    }
  }
  if (tag.kind == FamilyTag::Kind::NotSrg) {
    const auto& table = sporadic_cases();
    for (std::size_t row = 0; row < table.size(); ++row) {
      if (table[row].N == N && table[row].p == p && table[row].f == f) {
        tag.kind = FamilyTag::Kind::Sporadic;
        tag.sporadic_row = static_cast<int>(row);
        break;
      }
    }
  }
  if (q <= (1ull << 20)) {
    bool srg = cyclotomic_two_valued(p, f, N);
    if (tag.is_srg()) {
      require(srg, Errc::Internal, "family classification disagrees with the exact spectrum for " +
                                       std::to_string(p) + "^" + std::to_string(f) + ", N=" + std::to_string(N));
    } else if (srg) {
      fail(Errc::Internal, "two-valued cyclotomic spectrum outside the known families at p=" + std::to_string(p) +
                               ", f=" + std::to_string(f) + ", N=" + std::to_string(N));
    }
  }
  return tag;
}

}  // namespace csrg
