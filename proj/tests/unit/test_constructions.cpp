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

#include <doctest.h>

#include <random>
#include <set>

#include "csrg/catalog.hpp"
#include "csrg/constructions.hpp"
#include "csrg/numeric.hpp"

using namespace csrg;

namespace {

FieldOptions no_cache() {
  FieldOptions o;
  o.cache_dir = "-";
  return o;
}

IndexSet random_subset(std::uint64_t N, std::size_t size, std::mt19937_64& rng) {
  IndexSet out(N);
  while (out.size() < size) out.insert(rng() % N);
  return out;
}

}  // namespace

TEST_CASE("halving index sets from a partition") {
  SUBCASE("N = 5, ({0}, {}) gives X = {0}, Y = {0, 15}") {
    PartitionSpec ps;
    ps.side = Side::Subdiff;
    ps.P1 = IndexSet(5, {0});
    ps.P2 = IndexSet(5);
    HalvingIndexSets hs = build_halving_sets(ps, 5, IndexSet(5, {0}));
    CHECK(hs.X == IndexSet(10, {0}));
    CHECK(hs.Y == IndexSet(20, {0, 15}));
  }
  SUBCASE("halving inverses mod 11") {
    CHECK(invmod(2, 11) == 6);
    CHECK(invmod(4, 11) == 3);
  }
  SUBCASE("X reduces to 2^{-1}(P1 u P2) and Y to P1 u P2 mod N") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
      const std::uint64_t N = 11;
      IndexSet I = random_subset(N, 1 + rng() % 8, rng);
      IndexSet P1(N), P2(N);
      for (std::uint64_t r : I.residues())
        (rng() % 2 ? P1 : P2).insert(r);
      PartitionSpec ps{Side::Subdiff, P1, P2};
      HalvingIndexSets hs = build_halving_sets(ps, N, I);
      CHECK(hs.X.size() == I.size());
      CHECK(hs.Y.size() == 2 * I.size());
      CHECK(hs.X.reduced_mod(N) == I.scaled(invmod(2, N)));
      CHECK(hs.Y.reduced_mod(N) == I);
      // recovering the partition from X round-trips
      PartitionSpec back = partition_from_x(hs.X, N, Side::Subdiff);
      CHECK(back.P1 == P1);
      CHECK(back.P2 == P2);
    }
  }
  SUBCASE("swapping the parts translates X by N") {
    const std::uint64_t N = 11;
    IndexSet I(N, {0, 1, 3, 5, 9});
    const std::size_t n = I.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      IndexSet P1(N), P2(N);
      for (std::size_t i = 0; i < n; ++i)
        ((mask >> i & 1) ? P1 : P2).insert(I.residues()[i]);
      HalvingIndexSets a = build_halving_sets({Side::Subdiff, P1, P2}, N, I);
      HalvingIndexSets b = build_halving_sets({Side::Subdiff, P2, P1}, N, I);
      CHECK(b.X == a.X.translated(N));
    }
  }
  SUBCASE("bad inputs") {
    PartitionSpec ps{Side::Subdiff, IndexSet(4, {0}), IndexSet(4)};
    CHECK_THROWS_WITH_AS(build_halving_sets(ps, 4, IndexSet(4, {0})), doctest::Contains("EvenModulus"), Error);
    PartitionSpec overlap{Side::Subdiff, IndexSet(5, {0, 1}), IndexSet(5, {1})};
    CHECK_THROWS_WITH_AS(build_halving_sets(overlap, 5, IndexSet(5, {0, 1})), doctest::Contains("NotAPartition"),
                         Error);
  }
}

TEST_CASE("elliptic connection sets") {
  FieldCtx big = FieldCtx::build(3, 6, nullptr, no_cache());
  MidField mid = MidField::in_quadratic_lift(big, 1);
  SubdiffResult sd = subdifference_set(mid, 13);
  REQUIRE(sd.I.size() == 4);

  SUBCASE("full lift has |E| = 224 and is symmetric") {
    ConnectionSet E = elliptic_connection(big, sd.I.lifted_to(13), 13);
    CHECK(E.size() == 224);
    CHECK(E.is_symmetric());
    // enumerator yields exactly the advertised elements, no duplicates
    std::set<std::uint64_t> seen;
    E.for_each_element([&](std::uint64_t v) { CHECK(seen.insert(v).second); });
    CHECK(seen.size() == 224);
  }
  SUBCASE("halved lift has |E1| = 112") {
    HalvingIndexSets hs = conic_partition_m3(mid);
    ConnectionSet E1 = elliptic_connection(big, hs.Y, 52);
    CHECK(E1.size() == 112);
    CHECK(E1.is_symmetric());
  }
  SUBCASE("halving refuses q^m = 1 mod 4") {
    FieldCtx big2 = FieldCtx::build(3, 8, nullptr, no_cache());  // q^m = 81
    CHECK_THROWS_WITH_AS(elliptic_connection(big2, IndexSet(20, {0}), 20),
                         doctest::Contains("BadModulusCongruence"), Error);
  }
}

TEST_CASE("hyperbolic connection sets") {
  FieldCtx F = FieldCtx::build(3, 3, nullptr, no_cache());
  MidField W = MidField::whole(F, 1);
  SubdiffResult sd = subdifference_set(W, 13);

  SUBCASE("full product set has |H| = 208 with exact enumeration") {
    ConnectionSet H = hyperbolic_connection(F, 3, 13, ConnectionSet::ProductKind::FullH, sd.I, false);
    CHECK(H.size() == 208);
    std::set<std::uint64_t> seen;
    H.for_each_element([&](std::uint64_t v) { CHECK(seen.insert(v).second); });
    CHECK(seen.size() == 208);
    // membership test agrees with the enumeration
    std::uint64_t members = 0;
    for (std::uint64_t a = 0; a < 26; ++a)
      for (std::uint64_t b = 0; b < 26; ++b)
        if (H.contains_pair(F.elem(a), F.elem(b))) ++members;
    CHECK(members == 208);
  }
  SUBCASE("axes variant is the hyperbolic quadric") {
    ConnectionSet Hp = hyperbolic_connection(F, 3, 13, ConnectionSet::ProductKind::FullH, sd.I, true);
    CHECK(Hp.size() == 260);
    std::set<std::uint64_t> from_enum;
    Hp.for_each_element([&](std::uint64_t v) { from_enum.insert(v); });
    std::set<std::uint64_t> quadric;
    for (std::uint64_t pu = 0; pu < 27; ++pu)
      for (std::uint64_t pv = 0; pv < 27; ++pv) {
        if (pu == 0 && pv == 0) continue;
        FieldElem x = F.from_packed(pu), y = F.from_packed(pv);
        if (F.trace_to_prime(F.mul(x, y)) == 0 || x.is_zero() || y.is_zero()) {
          if (x.is_zero() || y.is_zero())
            quadric.insert(pu * 27 + pv);
          else if (F.trace_to_prime(F.mul(x, y)) == 0)
            quadric.insert(pu * 27 + pv);
        }
      }
    CHECK(from_enum == quadric);
  }
  SUBCASE("halved product set sizes at (5^3, 31)") {
    FieldCtx F125 = FieldCtx::build(5, 3, nullptr, no_cache());
    MidField W125 = MidField::whole(F125, 1);
    QuadricPartitionResult qp = quadric_complement_partition(W125);
    ConnectionSet H2 = hyperbolic_connection(F125, 5, 31, ConnectionSet::ProductKind::Half, qp.halving.Y, false);
    CHECK(H2.size() == 6200);
    std::set<std::uint64_t> seen;
    std::uint64_t count = 0;
    H2.for_each_pair([&](std::int64_t a, std::int64_t b) {
      CHECK(seen.insert(static_cast<std::uint64_t>(a) * 1000000 + static_cast<std::uint64_t>(b)).second);
      ++count;
      // every enumerated pair passes the membership test
      if (count <= 500) CHECK(H2.contains_pair(F125.elem(static_cast<std::uint64_t>(a)), F125.elem(static_cast<std::uint64_t>(b))));
    });
    CHECK(count == 6200);
  }
  SUBCASE("gcd condition is enforced") {
    // q^m = 17^2 = 289 = 1 mod 4, N = 3 odd, but gcd(3, 288/3) = 3
    FieldCtx F289 = FieldCtx::build(17, 2, nullptr, no_cache());
    CHECK_THROWS_WITH_AS(
        hyperbolic_connection(F289, 17, 3, ConnectionSet::ProductKind::Half, IndexSet(12, {0}), false),
        doctest::Contains("GcdConditionViolated"), Error);
  }
}

TEST_CASE("canonical partitions per family") {
  SUBCASE("semi-primitive takes ({0}, {})") {
    FamilyTag tag = classify_cyclotomic(3, 8, 5);
    IndexSet I(5, {0});
    PartitionSpec ps = canonical_partition(tag, Side::Subdiff, 3, 8, 5, I);
    CHECK(ps.P1 == I);
    CHECK(ps.P2.empty());
    PartitionSpec pc = canonical_partition(tag, Side::Complement, 3, 8, 5, I);
    CHECK(pc.P1 == I.complement());
  }
  SUBCASE("s = 1 fails the hypothesis") {
    FamilyTag tag = classify_cyclotomic(3, 4, 5);
    CHECK_THROWS_WITH_AS(canonical_partition(tag, Side::Subdiff, 3, 4, 5, IndexSet(5, {0})),
                         doctest::Contains("HypothesisFailed"), Error);
  }
  SUBCASE("sporadic (3^5, 11) takes (I, {}) since -2 is a power of 3") {
    CHECK(minus_two_in_p_powers(3, 11));  // 3^2 = 9 = -2 mod 11
    FieldCtx F = FieldCtx::build(3, 5, nullptr, no_cache());
    SubdiffResult sd = subdifference_set(MidField::whole(F, 1), 11);
    FamilyTag tag = classify_cyclotomic(3, 5, 11);
    PartitionSpec ps = canonical_partition(tag, Side::Subdiff, 3, 5, 11, sd.I);
    CHECK(ps.P1 == sd.I);
    CHECK(ps.P2.empty());
  }
  SUBCASE("-2 is not a power of 7 mod 37") { CHECK(!minus_two_in_p_powers(7, 37)); }
}

TEST_CASE("enumerated sets are closed under negation") {
  FieldCtx big = FieldCtx::build(3, 6, nullptr, no_cache());
  MidField mid = MidField::in_quadratic_lift(big, 1);
  HalvingIndexSets hs = conic_partition_m3(mid);
  ConnectionSet E1 = elliptic_connection(big, hs.Y, 52);
  std::set<std::uint64_t> elems;
  E1.for_each_element([&](std::uint64_t v) { elems.insert(v); });
  auto neg_packed = [&](std::uint64_t v) {
    std::uint64_t out = 0, mult = 1;
    for (std::uint32_t i = 0; i < big.f(); ++i) {
      out += ((3 - v % 3) % 3) * mult;
      mult *= 3;
      v /= 3;
    }
    return out;
  };
  for (std::uint64_t v : elems) CHECK(elems.count(neg_packed(v)) == 1);
}

TEST_CASE("conic partition rejects characteristic two") {
  FieldCtx big = FieldCtx::build(2, 6, nullptr, no_cache());
  MidField mid = MidField::in_quadratic_lift(big, 1);
  CHECK_THROWS_WITH_AS(conic_partition_m3(mid), doctest::Contains("NotOddPrimePower"), Error);
}

TEST_CASE("field orders beyond 2^63 are rejected") {
  CHECK_THROWS_WITH_AS(FieldCtx::build(2147483647ull, 3), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("conic partition at q = 3 inside the lift") {
  FieldCtx big = FieldCtx::build(3, 6, nullptr, no_cache());
  MidField mid = MidField::in_quadratic_lift(big, 1);
  HalvingIndexSets hs = conic_partition_m3(mid);
  CHECK(hs.X.size() == 4);  // |I_Q| = q + 1
  CHECK(hs.Y.size() == 8);
  IndexSet I = singer_set(mid);
  CHECK(hs.X.reduced_mod(13) == I.scaled(invmod(2, 13)));  // X = I_Q = 2^{-1} I mod N
  CHECK(hs.provenance.P1.unite(hs.provenance.P2) == I);
}

TEST_CASE("quadric-complement partition") {
  SUBCASE("q = 3, m = 3") {
    FieldCtx F = FieldCtx::build(3, 3, nullptr, no_cache());
    QuadricPartitionResult qp = quadric_complement_partition(MidField::whole(F, 1));
    CHECK(qp.a_classes.size() == 8);          // |A| = q^{m-1} - 1 (classes are singletons here)
    CHECK(qp.halving.X.size() == 9);          // |D| = q^{m-1}(q-1)/2
    REQUIRE(qp.frame.cone_sizes.size() == 2);
    CHECK(qp.frame.cone_sizes[0] == 8);       // |A|
    CHECK(qp.frame.cone_sizes[1] == 2);       // |A cap H_1| = q^{m-2} - 1
    CHECK(qp.frame.a.size() == 1);
  }
  SUBCASE("q = 5, m = 3") {
    FieldCtx F = FieldCtx::build(5, 3, nullptr, no_cache());
    QuadricPartitionResult qp = quadric_complement_partition(MidField::whole(F, 1));
    CHECK(qp.halving.X.size() == 25);
    CHECK(qp.frame.cone_sizes[0] == 24);
    CHECK(qp.frame.cone_sizes[1] == 4);
  }
  SUBCASE("even parameters are rejected") {
    FieldCtx F = FieldCtx::build(3, 4, nullptr, no_cache());
    CHECK_THROWS_WITH_AS(quadric_complement_partition(MidField::whole(F, 1)), doctest::Contains("EvenParameters"),
                         Error);
  }
}

TEST_CASE("parameter catalog") {
  SUBCASE("quadric family at q=3, m=3 gives (729, 252, 81, 90)") {
    BigSrgParams p = catalog_quadric(3, 3, LiftKind::Elliptic);
    CHECK(p.v == 729);
    CHECK(p.k == 252);
    CHECK(p.lambda == 81);
    CHECK(p.mu == 90);
    CHECK(p.feasible);
    // the feasibility identity in the concrete numbers
    CHECK(BigInt(252) * (252 - 81 - 1) == BigInt(729 - 252 - 1) * 90);
  }
  SUBCASE("conic family at q=3 gives (729, 112, 1, 20)") {
    BigSrgParams p = catalog_conic(3, LiftKind::Elliptic);
    CHECK(p.v == 729);
    CHECK(p.k == 112);
    CHECK(p.lambda == 1);
    CHECK(p.mu == 20);
    CHECK(p.feasible);
  }
  SUBCASE("sporadic halving at (3^5, 11, 5) gives (59049, 13420, 2947, 3080)") {
    BigSrgParams p = catalog_half_sporadic(0, Side::Subdiff);
    CHECK(p.v == 59049);
    CHECK(p.k == 13420);
    CHECK(p.lambda == 2947);
    CHECK(p.mu == 3080);
    CHECK(p.feasible);
  }
  SUBCASE("every catalog row is feasible, including the large sporadic cases") {
    auto all = catalog_all();
    CHECK(all.size() > 30);
    for (const auto& e : all) {
      CAPTURE(e.family);
      CAPTURE(e.instance);
      CHECK(e.params.feasible);
    }
  }
  SUBCASE("hypothesis violations are reported") {
    CHECK_THROWS_WITH_AS(catalog_conic(5, LiftKind::Elliptic), doctest::Contains("HypothesisFailed"), Error);
    CHECK_THROWS_WITH_AS(catalog_quadric(3, 4, LiftKind::Elliptic), doctest::Contains("HypothesisFailed"), Error);
    CHECK_THROWS_WITH_AS(catalog_half_sporadic(3, Side::Subdiff), doctest::Contains("HypothesisFailed"),
                         Error);  // (7^9, 37) subdiff side
  }
}
