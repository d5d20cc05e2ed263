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

#include "csrg/catalog.hpp"
#include "csrg/cyclotomy.hpp"
#include "csrg/spectrum.hpp"

using namespace csrg;

namespace {

FieldOptions no_cache() {
  FieldOptions o;
  o.cache_dir = "-";
  return o;
}

}  // namespace

TEST_CASE("additive spectra of the subfield-case lift") {
  FieldCtx big = FieldCtx::build(3, 6, nullptr, no_cache());
  MidField mid = MidField::in_quadratic_lift(big, 1);
  SubdiffResult sd = subdifference_set(mid, 13);
  ConnectionSet E = elliptic_connection(big, sd.I.lifted_to(13), 13);

  SpectrumReport rep = exact_spectrum_additive(E);
  REQUIRE(rep.two_valued);
  CHECK(rep.distinct[0].value.rational_value() == 8);
  CHECK(rep.distinct[1].value.rational_value() == -19);

  SrgParams p = srg_verify(E);
  CHECK(p.v == 729);
  CHECK(p.k == 224);
  CHECK(p.lambda == 61);
  CHECK(p.mu == 72);
  CHECK(p.dense_oracle_ran);
}

TEST_CASE("the full multiplicative group has constant spectrum -1") {
  FieldCtx big = FieldCtx::build(3, 6, nullptr, no_cache());
  ConnectionSet all;
  all.kind = ConnectionSet::Kind::AdditiveCyclotomic;
  all.field = &big;
  all.class_modulus = 1;
  all.indices = IndexSet(1, {0});
  SpectrumReport rep = exact_spectrum_additive(all);
  REQUIRE(rep.distinct.size() == 1);
  CHECK(rep.distinct[0].value.rational_value() == -1);
}

TEST_CASE("product spectra of the subfield-case lift") {
  FieldCtx F = FieldCtx::build(3, 3, nullptr, no_cache());
  MidField W = MidField::whole(F, 1);
  SubdiffResult sd = subdifference_set(W, 13);
  ConnectionSet H = hyperbolic_connection(F, 3, 13, ConnectionSet::ProductKind::FullH, sd.I, false);

  SpectrumReport rep = exact_spectrum_product(H);
  REQUIRE(rep.two_valued);
  CHECK(rep.distinct[0].value.rational_value() == 19);
  CHECK(rep.distinct[1].value.rational_value() == -8);

  SrgParams p = srg_verify(H);
  CHECK(p.v == 729);
  CHECK(p.k == 208);
  CHECK(p.lambda == 67);
  CHECK(p.mu == 56);
  CHECK(p.dense_oracle_ran);

  SUBCASE("orbit-reduced path computes the same spectrum") {
    ProductSweepOptions orbit;
    orbit.orbit_reduction = true;
    SpectrumReport rep2 = exact_spectrum_product(H, orbit);
    REQUIRE(rep2.distinct.size() == rep.distinct.size());
    for (std::size_t i = 0; i < rep.distinct.size(); ++i) {
      CHECK(rep2.distinct[i].value == rep.distinct[i].value);
      CHECK(rep2.distinct[i].multiplicity == rep.distinct[i].multiplicity);
    }
  }
  SUBCASE("axis characters take the value -(q^m-1)|I|/N = -8") {
    bool found = false;
    for (const auto& sv : rep.distinct)
      if (sv.value.rational_value() == -8) found = sv.multiplicity >= 2 * 26;
    CHECK(found);
  }
}

TEST_CASE("orbit reduction matches the full sweep on a halved product set") {
  FieldCtx F = FieldCtx::build(3, 4, nullptr, no_cache());
  MidField W = MidField::whole(F, 1);
  SubdiffResult sd = subdifference_set(W, 5);
  PartitionSpec ps{Side::Subdiff, sd.I, IndexSet(5)};
  HalvingIndexSets hs = build_halving_sets(ps, 5, sd.I);
  ConnectionSet H1 = hyperbolic_connection(F, 3, 5, ConnectionSet::ProductKind::Half, hs.Y, false);
  SpectrumReport full = exact_spectrum_product(H1);
  ProductSweepOptions orbit;
  orbit.orbit_reduction = true;
  SpectrumReport reduced = exact_spectrum_product(H1, orbit);
  REQUIRE(full.distinct.size() == reduced.distinct.size());
  for (std::size_t i = 0; i < full.distinct.size(); ++i) {
    CHECK(full.distinct[i].value == reduced.distinct[i].value);
    CHECK(full.distinct[i].multiplicity == reduced.distinct[i].multiplicity);
  }
  SUBCASE("an exhausted operation budget is a reported error") {
    ProductSweepOptions tiny;
    tiny.ops_budget = 10;
    CHECK_THROWS_WITH_AS(exact_spectrum_product(H1, tiny), doctest::Contains("TooLargeForFullSweep"), Error);
  }
}

TEST_CASE("the axes variant is the hyperbolic-quadric graph") {
  FieldCtx F = FieldCtx::build(3, 3, nullptr, no_cache());
  MidField W = MidField::whole(F, 1);
  SubdiffResult sd = subdifference_set(W, 13);
  ConnectionSet Hp = hyperbolic_connection(F, 3, 13, ConnectionSet::ProductKind::FullH, sd.I, true);
  SrgParams p = srg_verify(Hp);
  CHECK(p.v == 729);
  CHECK(p.k == 260);
  CHECK(p.lambda == 97);
  CHECK(p.mu == 90);
}

TEST_CASE("corrupted index sets are rejected as not strongly regular") {
  FieldCtx big = FieldCtx::build(3, 6, nullptr, no_cache());
  MidField mid = MidField::in_quadratic_lift(big, 1);
  SubdiffResult sd = subdifference_set(mid, 13);
  // move one residue: {i0,...} -> {i0+1,...}
  std::vector<std::uint64_t> res = sd.I.residues();
  std::uint64_t moved = (res[0] + 1) % 13;
  while (sd.I.contains(moved)) moved = (moved + 1) % 13;
  res[0] = moved;
  ConnectionSet bad = elliptic_connection(big, IndexSet(13, res).lifted_to(13), 13);
  CHECK_THROWS_WITH_AS(srg_verify(bad), doctest::Contains("NotTwoValued"), Error);
}

TEST_CASE("negative control: random index sets of the halving size fail verification") {
  FieldCtx big = FieldCtx::build(3, 6, nullptr, no_cache());
  std::mt19937_64 rng(4242);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    IndexSet idx(52);
    while (idx.size() < 8) idx.insert(rng() % 52);
    ConnectionSet set;
    set.kind = ConnectionSet::Kind::AdditiveCyclotomic;
    set.field = &big;
    set.class_modulus = 52;
    set.indices = idx;
    try {
      srg_verify(set);
    } catch (const Error& e) {
      if (is_math_failure(e.code())) ++failures;
    }
  }
  CHECK(failures >= 99);
}

TEST_CASE("halving condition at the semi-primitive instance (3, 5, 3^8)") {
  FieldCtx F = FieldCtx::build(3, 8, nullptr, no_cache());
  MidField W = MidField::whole(F, 1);
  IndexSet I(5, {0});
  SUBCASE("subdifference side with X = {0}") {
    ConditionReport rep = condition_check(W, IndexSet(10, {0}), I, Side::Subdiff);
    CHECK(rep.pass);
    CHECK(rep.pass_global);  // even representatives make every sign +G here
  }
  SUBCASE("complement side") {
    PartitionSpec ps{Side::Complement, I.complement(), IndexSet(5)};
    HalvingIndexSets hs = build_halving_sets(ps, 5, I.complement());
    ConditionReport rep = condition_check(W, hs.X, I, Side::Complement);
    CHECK(rep.pass);
  }
  SUBCASE("a wrong X fails with an exact non-match") {
    // X = {2} mod 10 reduces to {2} mod 5, not 2^{-1}I = {0}
    CHECK_THROWS_WITH_AS(condition_check(W, IndexSet(10, {2}), I, Side::Subdiff),
                         doctest::Contains("InconsistentIndexSets"), Error);
  }
}

TEST_CASE("condition pass propagates to a verified halved graph") {
  // conic partition at q = 3: condition holds and E1 is the (729,112,1,20) graph
  FieldCtx big = FieldCtx::build(3, 6, nullptr, no_cache());
  MidField mid = MidField::in_quadratic_lift(big, 1);
  IndexSet I = singer_set(mid);
  HalvingIndexSets hs = conic_partition_m3(mid);
  ConditionReport rep = condition_check(mid, hs.X, I, Side::Subdiff);
  REQUIRE(rep.pass);
  ConnectionSet E1 = elliptic_connection(big, hs.Y, 52);
  SrgParams p = srg_verify(E1);
  CHECK(p.v == 729);
  CHECK(p.k == 112);
  CHECK(p.lambda == 1);
  CHECK(p.mu == 20);
}

TEST_CASE("partition search finds the known partitions") {
  SUBCASE("(3^3, 13) subdiff side contains the conic-derived partition") {
    FieldCtx F = FieldCtx::build(3, 3, nullptr, no_cache());
    MidField W = MidField::whole(F, 1);
    IndexSet I = singer_set(W);
    HalvingIndexSets conic = conic_partition_m3(W);
    SearchResult res = partition_search(W, I, Side::Subdiff, I);
    CHECK(res.candidates == 16);
    CHECK(res.evaluated == 8);
    bool found = false;
    for (const auto& ps : res.hits)
      if (ps.P1 == conic.provenance.P1 && ps.P2 == conic.provenance.P2) found = true;
    CHECK(found);
  }
  SUBCASE("(3^5, 11) subdiff side contains (I, {})") {
    FieldCtx F = FieldCtx::build(3, 5, nullptr, no_cache());
    MidField W = MidField::whole(F, 1);
    SubdiffResult sd = subdifference_set(W, 11);
    SearchResult res = partition_search(W, sd.I, Side::Subdiff, sd.I);
    CHECK(res.candidates == 32);
    bool found = false;
    for (const auto& ps : res.hits)
      if (ps.P1 == sd.I && ps.P2.empty()) found = true;
    CHECK(found);
  }
  SUBCASE("a base set that is not I (or its complement) is refused") {
    FieldCtx F = FieldCtx::build(3, 3, nullptr, no_cache());
    MidField W = MidField::whole(F, 1);
    IndexSet I = singer_set(W);
    CHECK_THROWS_WITH_AS(partition_search(W, I.complement(), Side::Subdiff, I),
                         doctest::Contains("InconsistentIndexSets"), Error);
  }
}

TEST_CASE("halved-set character formulas: elliptic side") {
  FieldCtx big = FieldCtx::build(3, 10, nullptr, no_cache());
  MidField mid = MidField::in_quadratic_lift(big, 1);
  SubdiffResult sd = subdifference_set(mid, 11);
  FamilyTag tag = classify_cyclotomic(3, 5, 11);
  IndexSet I = sd.I;
  SUBCASE("subdifference side, partition (I, {})") {
    PartitionSpec ps = canonical_partition(tag, Side::Subdiff, 3, 5, 11, I);
    HalvingIndexSets hs = build_halving_sets(ps, 11, I);
    CHECK(crosscheck_elliptic_half(big, mid, 11, hs, I, Side::Subdiff) <= 1e-6);
  }
  SUBCASE("complement side") {
    PartitionSpec ps = canonical_partition(tag, Side::Complement, 3, 5, 11, I);
    HalvingIndexSets hs = build_halving_sets(ps, 11, I.complement());
    CHECK(crosscheck_elliptic_half(big, mid, 11, hs, I, Side::Complement) <= 1e-6);
  }
}

TEST_CASE("halved-set character formulas: hyperbolic side at (3^4, 5)") {
  FieldCtx F = FieldCtx::build(3, 4, nullptr, no_cache());
  MidField W = MidField::whole(F, 1);
  SubdiffResult sd = subdifference_set(W, 5);
  IndexSet I = sd.I;
  // any partition satisfies the value formulas; use (I, {}) and its complement analog
  SUBCASE("subdifference side") {
    PartitionSpec ps{Side::Subdiff, I, IndexSet(5)};
    HalvingIndexSets hs = build_halving_sets(ps, 5, I);
    CHECK(crosscheck_hyperbolic_half(F, 3, 5, hs, I, Side::Subdiff) <= 1e-6);
  }
  SUBCASE("complement side") {
    PartitionSpec ps{Side::Complement, I.complement(), IndexSet(5)};
    HalvingIndexSets hs = build_halving_sets(ps, 5, I.complement());
    CHECK(crosscheck_hyperbolic_half(F, 3, 5, hs, I, Side::Complement) <= 1e-6);
  }
  SUBCASE("a nontrivial split of the complement also satisfies the formulas") {
    IndexSet comp = I.complement();
    IndexSet P1(5, {comp.residues()[0]});
    IndexSet P2(5);
    for (std::size_t i = 1; i < comp.size(); ++i) P2.insert(comp.residues()[i]);
    PartitionSpec ps{Side::Complement, P1, P2};
    HalvingIndexSets hs = build_halving_sets(ps, 5, comp);
    CHECK(crosscheck_hyperbolic_half(F, 3, 5, hs, I, Side::Complement) <= 1e-6);
  }
}

TEST_CASE("quadric sum formulas at (3, 3) and at (3, 5) for the deep branches") {
  SUBCASE("q = 3, m = 3") {
    FieldCtx F = FieldCtx::build(3, 3, nullptr, no_cache());
    MidField W = MidField::whole(F, 1);
    QuadricPartitionResult qp = quadric_complement_partition(W);
    QuadricSumCheck cone = crosscheck_quadric_sums(W, qp, false);
    CHECK(cone.max_dev <= 1e-6);
    CHECK(cone.branch_counts[0] > 0);  // quadratic-character branch
    CHECK(cone.branch_counts[1] > 0);  // span difference
    CHECK(cone.branch_counts[2] == 0);  // vacuous at m = 3: the lower span is {0}
    CHECK(cone.branch_counts[3] > 0);  // zero branch
    QuadricSumCheck flat = crosscheck_quadric_sums(W, qp, true);
    CHECK(flat.max_dev <= 1e-6);
    for (int b = 0; b < 4; ++b) CHECK(flat.branch_counts[static_cast<std::size_t>(b)] > 0);
  }
  SUBCASE("q = 3, m = 5 exercises the lower-span branch") {
    FieldCtx F = FieldCtx::build(3, 5, nullptr, no_cache());
    MidField W = MidField::whole(F, 1);
    QuadricPartitionResult qp = quadric_complement_partition(W);
    QuadricSumCheck cone = crosscheck_quadric_sums(W, qp, false);
    CHECK(cone.max_dev <= 1e-6);
    for (int b = 0; b < 4; ++b) CHECK(cone.branch_counts[static_cast<std::size_t>(b)] > 0);
  }
}

TEST_CASE("conic halving beyond the smallest field: q = 7 elliptic side") {
  FieldCtx big = FieldCtx::build(7, 6, nullptr, no_cache());
  MidField mid = MidField::in_quadratic_lift(big, 1);
  HalvingIndexSets hs = conic_partition_m3(mid);
  CHECK(hs.X.size() == 8);  // q + 1 conic points
  ConnectionSet E1 = elliptic_connection(big, hs.Y, 4 * 57);
  SrgParams p = srg_verify(E1);
  BigSrgParams predicted = catalog_conic(7, LiftKind::Elliptic);
  CHECK(BigInt(p.v) == predicted.v);
  CHECK(BigInt(p.k) == predicted.k);
  CHECK(BigInt(p.lambda) == predicted.lambda);
  CHECK(BigInt(p.mu) == predicted.mu);
  CHECK(p.v == 117649);
  CHECK(p.k == 8256);
  // p = 7 mod 8 exercises the +1 branch of the sign rule in the value formula
  IndexSet I = singer_set(mid);
  CHECK(crosscheck_elliptic_half(big, mid, 57, hs, I, Side::Subdiff) <= 1e-6);
}

TEST_CASE("conic halving on the product side: q = 5 hyperbolic") {
  // q = 5 mod 12, so gcd(N, q^3-1 over N) = 1 and the product halving applies
  FieldCtx F = FieldCtx::build(5, 3, nullptr, no_cache());
  MidField W = MidField::whole(F, 1);
  IndexSet I = singer_set(W);
  HalvingIndexSets hs = conic_partition_m3(W);
  ConditionReport cond = condition_check(W, hs.X, I, Side::Subdiff);
  REQUIRE(cond.pass);
  ConnectionSet H1 = hyperbolic_connection(F, 5, 31, ConnectionSet::ProductKind::Half, hs.Y, false);
  SrgParams p = srg_verify(H1);
  CHECK(p.v == 15625);
  CHECK(p.k == 1488);  // r (q^3 - 1) with r = (q^2-1)/2 = 12
  CHECK(p.lambda == 233);
  CHECK(p.mu == 132);
  BigSrgParams predicted = catalog_conic(5, LiftKind::Hyperbolic);
  CHECK(BigInt(p.k) == predicted.k);
  CHECK(BigInt(p.mu) == predicted.mu);
}

TEST_CASE("two-valued spectra match the proof-level values") {
  // (q^m-1)|indices| * (class fraction) and that minus q^m
  FieldCtx big = FieldCtx::build(3, 6, nullptr, no_cache());
  MidField mid = MidField::in_quadratic_lift(big, 1);
  HalvingIndexSets hs = conic_partition_m3(mid);
  ConnectionSet E1 = elliptic_connection(big, hs.Y, 52);
  SpectrumReport rep = exact_spectrum_additive(E1);
  REQUIRE(rep.two_valued);
  CHECK(rep.distinct[0].value.rational_value() == 4);    // (q^m-1)|I|/(2N)
  CHECK(rep.distinct[1].value.rational_value() == -23);  // minus q^m
}
