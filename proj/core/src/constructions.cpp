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

#include "csrg/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "csrg/numeric.hpp"

namespace csrg {

const char* side_name(Side s) { return s == Side::Subdiff ? "subdiff" : "complement"; }

void PartitionSpec::validate_against(const IndexSet& reference) const {
  require(P1.modulus() == reference.modulus() && P2.modulus() == reference.modulus(), Errc::NotAPartition,
          "partition parts must share the reference modulus");
  require(P1.disjoint(P2), Errc::NotAPartition, "partition parts overlap");
  require(P1.unite(P2) == reference, Errc::NotAPartition, "partition does not cover the reference set");
}

HalvingIndexSets build_halving_sets(const PartitionSpec& partition, std::uint64_t N, const IndexSet& reference) {
  require(N % 2 == 1, Errc::EvenModulus, "halving needs odd N");
  require(N >= 3, Errc::EvenModulus, "halving needs N >= 3");
  partition.validate_against(reference);

  const std::uint64_t inv4 = invmod(4 % N, N);
  IndexSet p1dd = partition.P1.scaled(inv4);
  IndexSet p2dd = partition.P2.scaled(inv4);

  IndexSet X(2 * N);
  for (std::uint64_t s : p1dd.residues()) X.insert(2 * s);
  for (std::uint64_t s : p2dd.residues()) X.insert((2 * s + N) % (2 * N));
  require(X.size() == partition.P1.size() + partition.P2.size(), Errc::Internal, "X size mismatch");

  static const std::uint64_t J1[2] = {0, 3}, J2[2] = {1, 2};
  IndexSet Y(4 * N);
  for (std::uint64_t s : p1dd.residues())
    for (std::uint64_t i : J1) Y.insert((N * i + 4 * s) % (4 * N));
  for (std::uint64_t s : p2dd.residues())
    for (std::uint64_t i : J2) Y.insert((N * i + 4 * s) % (4 * N));
  require(Y.size() == 2 * (partition.P1.size() + partition.P2.size()), Errc::Internal, "Y size mismatch");

  return HalvingIndexSets{std::move(X), std::move(Y), partition};
}

PartitionSpec partition_from_x(const IndexSet& X, std::uint64_t N, Side side) {
  require(X.modulus() == 2 * N, Errc::InconsistentIndexSets, "X must live in Z_2N");
  require(N % 2 == 1, Errc::EvenModulus, "halving needs odd N");
  IndexSet p1dd(N), p2dd(N);
  for (std::uint64_t t : X.residues()) {
    if (t % 2 == 0)
      p1dd.insert(t / 2);
    else
      p2dd.insert(((t + 2 * N - N) % (2 * N)) / 2);
  }
  PartitionSpec ps;
  ps.side = side;
  ps.P1 = p1dd.scaled(4 % N);
  ps.P2 = p2dd.scaled(4 % N);
  require(ps.P1.size() == p1dd.size() && ps.P2.size() == p2dd.size(), Errc::InconsistentIndexSets,
          "X does not define a partition (scaling collision)");
  return ps;
}

std::uint64_t ConnectionSet::group_order() const {
  if (kind == Kind::AdditiveCyclotomic) return field->q();
  return field->q() * field->q();
}

std::uint64_t ConnectionSet::size() const {
  const std::uint64_t L = field->group_order();
  if (kind == Kind::AdditiveCyclotomic) return indices.size() * (L / class_modulus);
  unsigned __int128 sz;
  if (product_kind == ProductKind::FullH)
    sz = static_cast<unsigned __int128>(L) * (L / N) * indices.size();
  else
    sz = static_cast<unsigned __int128>(L) * (L / (4 * N)) * indices.size();
  if (include_axes) sz += 2 * static_cast<unsigned __int128>(L);
  return static_cast<std::uint64_t>(sz);
}

bool ConnectionSet::is_symmetric() const {
  if (kind == Kind::ProductGenerated) {
    // -H = H via y -> -y (full) resp. x -> -x (half; -1 lies in C_0^(N) since
    // 2N | q^m-1 for odd N); axes are symmetric.
    return true;
  }
  if (field->p() == 2) return true;
  std::uint64_t shift = (field->group_order() / 2) % class_modulus;
  return indices.translated(shift) == indices;
}

std::string ConnectionSet::describe() const {
  std::ostringstream os;
  if (kind == Kind::AdditiveCyclotomic) {
    os << "additive-cyclotomic q=" << field->q() << " M=" << class_modulus << " indices=" << indices.to_string();
  } else {
    os << "product-" << (product_kind == ProductKind::FullH ? "full" : "half") << " q^m=" << field->q()
       << " N=" << N << " indices=" << indices.to_string() << (include_axes ? " +axes" : "");
  }
  return os.str();
}

std::uint64_t ConnectionSet::content_hash() const { return fnv1a(describe()); }

void ConnectionSet::for_each_element(const std::function<void(std::uint64_t)>& fn) const {
  if (kind == Kind::AdditiveCyclotomic) {
    const std::uint64_t L = field->group_order();
    for (std::uint64_t i : indices.residues())
      for (std::uint64_t t = 0; t < L / class_modulus; ++t) fn(field->packed(field->elem(i + t * class_modulus)));
    return;
  }
  const std::uint64_t qm = field->q();
  for_each_pair([&](std::int64_t eu, std::int64_t ev) {
    std::uint64_t pu = eu < 0 ? 0 : field->packed(FieldElem::from_exponent(eu));
    std::uint64_t pv = ev < 0 ? 0 : field->packed(FieldElem::from_exponent(ev));
    fn(pu * qm + pv);
  });
}

void ConnectionSet::for_each_pair(const std::function<void(std::int64_t, std::int64_t)>& fn) const {
  require(kind == Kind::ProductGenerated, Errc::Internal, "pair enumeration needs a product set");
  const std::uint64_t L = field->group_order();
  auto modL = [L](unsigned __int128 x) { return static_cast<std::uint64_t>(x % L); };
  if (product_kind == ProductKind::FullH) {
    for (std::uint64_t ell : indices.residues())
      for (std::uint64_t u = 0; u < L; ++u)
        for (std::uint64_t v0 = 0; v0 < L / N; ++v0)
          fn(static_cast<std::int64_t>(u),
             static_cast<std::int64_t>(modL(static_cast<unsigned __int128>(N) * v0 + ell + (L - u))));
  } else {
    const std::uint64_t Mp = L / N;
    for (std::uint64_t ell : indices.residues())
      for (std::uint64_t a = 0; a < Mp; ++a)
        for (std::uint64_t b = 0; b < N; ++b)
          for (std::uint64_t c = 0; c < L / (4 * N); ++c) {
            std::uint64_t first = modL(static_cast<unsigned __int128>(N) * a + static_cast<unsigned __int128>(Mp) * b);
            std::uint64_t second = modL(static_cast<unsigned __int128>(N) * a + (L - mulmod(Mp, b, L)) +
                                        static_cast<unsigned __int128>(4) * N * c + ell);
            fn(static_cast<std::int64_t>(first), static_cast<std::int64_t>(second));
          }
  }
  if (include_axes) {
    for (std::uint64_t t = 0; t < L; ++t) {
      fn(-1, static_cast<std::int64_t>(t));
      fn(static_cast<std::int64_t>(t), -1);
    }
  }
}

bool ConnectionSet::contains_pair(FieldElem u, FieldElem v) const {
  require(kind == Kind::ProductGenerated, Errc::Internal, "pair membership needs a product set");
  if (u.is_zero() || v.is_zero()) {
    if (!include_axes) return false;
    return !(u.is_zero() && v.is_zero());
  }
  const std::uint64_t L = field->group_order();
  std::uint64_t lu = u.exponent(), lv = v.exponent();
  if (product_kind == ProductKind::FullH) {
    return indices.contains((lu + lv) % N);
  }
  const std::uint64_t Mp = L / N;
  std::uint64_t a = mulmod(invmod(N % Mp, Mp), lu % Mp, Mp);
  std::uint64_t b = mulmod(invmod(Mp % N, N), lu % N, N);
  std::uint64_t t = (lv + (L - mulmod(N, a, L)) + mulmod(Mp, b, L)) % L;
  return indices.contains(t % (4 * N));
}

ConnectionSet elliptic_connection(const FieldCtx& big_field, const IndexSet& indices, std::uint64_t M) {
  require(big_field.group_order() % M == 0, Errc::BadDivisor, "M must divide q^{2m}-1");
  require(indices.modulus() == M, Errc::InconsistentIndexSets, "index set modulus must be M");
  require(big_field.f() % 2 == 0, Errc::BadSubfield, "elliptic lifts live in a quadratic extension");
  if (M % 4 == 0) {
    std::uint64_t qm = checked_pow_u64(big_field.p(), big_field.f() / 2);
    require(qm % 4 == 3, Errc::BadModulusCongruence,
            "halved elliptic set needs q^m = 3 (mod 4), got q^m = " + std::to_string(qm));
  }
  ConnectionSet cs;
  cs.kind = ConnectionSet::Kind::AdditiveCyclotomic;
  cs.field = &big_field;
  cs.class_modulus = M;
  cs.indices = indices;
  return cs;
}

ConnectionSet hyperbolic_connection(const FieldCtx& field, std::uint64_t base_q, std::uint64_t N,
                                    ConnectionSet::ProductKind kind, const IndexSet& indices, bool include_axes) {
  const std::uint64_t L = field.group_order();
  require(base_q >= 2 && L % (base_q - 1) == 0, Errc::BadSubfield, "base field order must divide");
  require(N >= 1 && ((L / (base_q - 1)) % N == 0), Errc::BadDivisor, "N must divide (q^m-1)/(q-1)");
  ConnectionSet cs;
  cs.kind = ConnectionSet::Kind::ProductGenerated;
  cs.field = &field;
  cs.N = N;
  cs.product_kind = kind;
  cs.include_axes = include_axes;
  cs.indices = indices;
  if (kind == ConnectionSet::ProductKind::FullH) {
    require(indices.modulus() == N, Errc::InconsistentIndexSets, "full product set takes indices mod N");
  } else {
    require(field.q() % 4 == 1, Errc::BadModulusCongruence,
            "halved product set needs q^m = 1 (mod 4), got q^m = " + std::to_string(field.q()));
    require(N % 2 == 1, Errc::EvenModulus, "halved product set needs odd N");
    require(gcd_u64(N, L / N) == 1, Errc::GcdConditionViolated,
            "gcd(N, (q^m-1)/N) must be 1, got gcd = " + std::to_string(gcd_u64(N, L / N)));
    require(indices.modulus() == 4 * N, Errc::InconsistentIndexSets, "halved product set takes indices mod 4N");
  }
  return cs;
}

bool minus_two_in_p_powers(std::uint64_t p, std::uint64_t N) {
  std::uint64_t target = (N - 2) % N;
  std::uint64_t pk = 1 % N;
  for (std::uint64_t j = 0; j < N; ++j) {
    if (pk == target) return true;
    pk = mulmod(pk, p % N, N);
  }
  return false;
}

PartitionSpec canonical_partition(const FamilyTag& family, Side side, std::uint64_t p, std::uint32_t f,
                                  std::uint64_t N, const IndexSet& I) {
  require(I.modulus() == N, Errc::InconsistentIndexSets, "I must live in Z_N");
  PartitionSpec ps;
  ps.side = side;
  ps.P2 = IndexSet(N);
  switch (family.kind) {
    case FamilyTag::Kind::SemiPrimitive: {
      std::uint32_t j = family.semiprimitive_j;
      require(j > 0 && f % (2 * j) == 0 && f / (2 * j) >= 2, Errc::HypothesisFailed,
              "semi-primitive partition needs s = f/(2j) >= 2");
      require(I.size() == 1 && I.contains(0), Errc::HypothesisFailed, "semi-primitive subdifference set must be {0}");
      ps.P1 = (side == Side::Subdiff) ? I : I.complement();
      return ps;
    }
    case FamilyTag::Kind::Sporadic: {
      if (minus_two_in_p_powers(p, N)) {
        ps.P1 = (side == Side::Subdiff) ? I : I.complement();
        return ps;
      }
      const auto& row = sporadic_cases()[static_cast<std::size_t>(family.sporadic_row)];
      if (row.N == 37 && row.p == 7 && side == Side::Complement) {
        IndexSet twoI = I.scaled(2);
        require(twoI.disjoint(I), Errc::HypothesisFailed, "2I meets I; the special partition is unavailable");
        ps.P1 = twoI;
        ps.P2 = I.unite(twoI).complement();
        return ps;
      }
      fail(Errc::HypothesisFailed, "-2 is not a power of p modulo N and no special partition is known for this side");
    }
    default:
      fail(Errc::HypothesisFailed,
           "no canonical partition for family " + family.to_string() + "; use the conic or quadric partitions");
  }
}

HalvingIndexSets conic_partition_m3(const MidField& F, std::size_t base_choice) {
  require(F.top->p() != 2, Errc::NotOddPrimePower, "conic partition needs odd q");
  require(F.m == 3, Errc::HypothesisFailed, "conic partition is specific to m = 3");
  const std::uint64_t q = F.base_q;
  const std::uint64_t N = (F.q_mid - 1) / (q - 1);

  IndexSet I = singer_set(F);
  IndexSet IQ(N);
  for (std::uint64_t i = 0; i < N; ++i) {
    if (F.trace_to_base(F.element(2 * i)).is_zero()) IQ.insert(i);
  }
  require(IQ.size() == q + 1, Errc::Internal, "conic must have q+1 points");
  require(IQ == I.scaled(invmod(2 % N, N)), Errc::Internal, "conic classes must be 2^{-1} I");

  require(base_choice < IQ.size(), Errc::HypothesisFailed, "base point index out of range");
  const std::uint64_t d0 = IQ.residues()[base_choice];
  IndexSet X(2 * N);
  for (std::uint64_t di : IQ.residues()) {
    if (di == d0) continue;
    FieldElem tr = F.trace_to_base(F.element(d0 + di));
    require(!tr.is_zero(), Errc::Internal, "secant trace vanished");
    FieldElem x = F.top->mul(F.element(di), tr);
    X.insert(F.log(x) % (2 * N));
  }
  {
    FieldElem two = F.top->from_int(2);
    require(!two.is_zero(), Errc::NotOddPrimePower, "conic partition needs odd q");
    FieldElem x = F.top->mul(two, F.element(d0));
    X.insert(F.log(x) % (2 * N));
  }
  require(X.size() == IQ.size(), Errc::Internal, "conic index set lost elements");
  require(X.reduced_mod(N) == IQ, Errc::Internal, "X must reduce to the conic classes mod N");

  PartitionSpec ps = partition_from_x(X, N, Side::Subdiff);
  HalvingIndexSets hs = build_halving_sets(ps, N, I);
  require(hs.X == X, Errc::Internal, "halving formulas disagree with the conic index set");
  return hs;
}

std::uint32_t base_square_class(const MidField& F, FieldElem t) {
  const std::uint64_t N = (F.q_mid - 1) / (F.base_q - 1);
  std::uint64_t lg = F.log(t);
  require(lg % N == 0, Errc::Internal, "value is not in the base subfield");
  return static_cast<std::uint32_t>((lg / N) % 2);
}

QuadricPartitionResult quadric_complement_partition(const MidField& F) {
  require(F.top->p() != 2, Errc::EvenParameters, "quadric partition needs odd q");
  require(F.m % 2 == 1 && F.m >= 3, Errc::EvenParameters, "quadric partition needs odd m >= 3");
  const std::uint64_t q = F.base_q;
  const std::uint64_t N = (F.q_mid - 1) / (q - 1);
  const std::uint64_t half = (F.m - 1) / 2;
  const FieldCtx& T = *F.top;

  auto in_A = [&](FieldElem x) { return F.trace_to_base(T.mul(x, x)).is_zero(); };

  QuadricFrame frame;
  std::uint64_t scan_budget = F.q_mid - 1;
  for (std::uint64_t level = 0; level < half; ++level) {
    bool found = false;
    for (std::uint64_t j = 0; j < scan_budget; ++j) {
      FieldElem cand = F.element(j);
      if (!in_A(cand)) continue;
      bool in_flats = true;
      for (const FieldElem& ai : frame.a) {
        if (!F.trace_to_base(T.mul(ai, cand)).is_zero()) {
          in_flats = false;
          break;
        }
      }
      if (!in_flats) continue;
      // linear independence over F_q: candidate outside the span so far
      if (!frame.a.empty()) {
        std::set<std::uint64_t> span{0};
        std::vector<FieldElem> gens = frame.a;
        for (const FieldElem& g : gens) {
          std::set<std::uint64_t> next = span;
          for (std::uint64_t sv : span) {
            FieldElem s = sv == 0 ? FieldElem::zero() : T.from_packed(sv);
            for (std::uint64_t t = 0; t + 1 < q; ++t) {
              FieldElem scaled = T.add(s, T.mul(F.element(t * N), g));
              next.insert(scaled.is_zero() ? 0 : T.packed(scaled));
            }
          }
          span = std::move(next);
        }
        if (span.count(T.packed(cand))) continue;
      }
      frame.a.push_back(cand);
      found = true;
      break;
    }
    require(found, Errc::FrameSelectionFailed, "could not extend the isotropic frame");
  }
  {
    bool found = false;
    for (std::uint64_t j = 0; j < scan_budget; ++j) {
      FieldElem cand = F.element(j);
      if (in_A(cand)) continue;
      bool in_flats = true;
      for (const FieldElem& ai : frame.a) {
        if (!F.trace_to_base(T.mul(ai, cand)).is_zero()) {
          in_flats = false;
          break;
        }
      }
      if (!in_flats) continue;
      frame.b = cand;
      found = true;
      break;
    }
    require(found, Errc::FrameSelectionFailed, "could not select the anisotropic direction");
  }

  // in_D: membership in the union of the cone sections T_l and the half-flat B
  std::uint32_t b_sq_class = base_square_class(F, F.trace_to_base(T.mul(frame.b, frame.b)));
  auto in_D = [&](FieldElem x) -> bool {
    FieldElem x2tr = F.trace_to_base(T.mul(x, x));
    if (x2tr.is_zero()) return false;  // on the quadric
    std::uint32_t i = base_square_class(F, x2tr);
    for (std::size_t l = 0; l < frame.a.size(); ++l) {
      FieldElem t = F.trace_to_base(T.mul(frame.a[l], x));
      if (t.is_zero()) continue;
      return base_square_class(F, t) == i;  // T_{l+1} membership
    }
    // inside the flat: decompose against b
    FieldElem tb = F.trace_to_base(T.mul(frame.b, x));
    require(!tb.is_zero(), Errc::Internal, "flat element with vanishing b-trace is on the quadric");
    return base_square_class(F, tb) == b_sq_class;
  };

  // Classes of the quadric and of D mod 2N
  IndexSet a_classes(2 * N), xhat(2 * N);
  for (std::uint64_t t = 0; t < 2 * N; ++t) {
    FieldElem rep = F.element(t);
    if (in_A(rep)) {
      a_classes.insert(t);
    } else if (in_D(rep)) {
      xhat.insert(t);
    }
  }

  // Exhaustive class-constancy check at small scale
  if (F.q_mid <= (1ull << 20)) {
    for (std::uint64_t j = 0; j < F.q_mid - 1; ++j) {
      require(in_D(F.element(j)) == xhat.contains(j % (2 * N)), Errc::Internal,
              "D is not a union of classes mod 2N");
    }
  }

  // Cone size bookkeeping |A cap H_1 ... cap H_{l-1}| = q^{m-l} - 1
  if (F.q_mid <= (1ull << 20)) {
    for (std::uint64_t l = 1; l <= half + 1; ++l) {
      std::uint64_t count = 0;
      for (std::uint64_t j = 0; j < F.q_mid - 1; ++j) {
        FieldElem x = F.element(j);
        if (!in_A(x)) continue;
        bool ok = true;
        for (std::uint64_t i = 0; i + 1 < l && i < frame.a.size(); ++i) {
          if (!F.trace_to_base(T.mul(frame.a[i], x)).is_zero()) {
            ok = false;
            break;
          }
        }
        if (ok) ++count;
      }
      frame.cone_sizes.push_back(count);
      require(count == checked_pow_u64(q, F.m - static_cast<std::uint32_t>(l)) - 1, Errc::FrameSelectionFailed,
              "cone section size violates the dimension count");
    }
  }

  // D and omega^N D partition the complement of the quadric
  require(xhat.disjoint(xhat.translated(N)), Errc::Internal, "D meets omega^N D");
  require(xhat.unite(xhat.translated(N)) == a_classes.complement(), Errc::Internal,
          "D union omega^N D must cover the quadric complement");

  IndexSet I = singer_set(F);
  IndexSet inv2I = I.scaled(invmod(2 % N, N));
  require(xhat.reduced_mod(N) == inv2I.complement(), Errc::Internal, "X-hat must reduce to the complement of 2^{-1}I");

  PartitionSpec ps = partition_from_x(xhat, N, Side::Complement);
  HalvingIndexSets hs = build_halving_sets(ps, N, I.complement());
  require(hs.X == xhat, Errc::Internal, "halving formulas disagree with the quadric index set");

  QuadricPartitionResult res;
  res.halving = std::move(hs);
  res.frame = std::move(frame);
  res.a_classes = std::move(a_classes);
  return res;
}

}  // namespace csrg
