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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "csrg/field.hpp"
#include "csrg/numeric.hpp"

using namespace csrg;

namespace {

FieldOptions no_cache() {
  FieldOptions o;
  o.cache_dir = "-";
  return o;
}

}  // namespace

TEST_CASE("prime field F_3 has canonical generator 2") {
  FieldCtx F = FieldCtx::build(3, 1, nullptr, no_cache());
  CHECK(F.q() == 3);
  CHECK(F.packed(F.omega()) == 2);
}

TEST_CASE("building a field with composite characteristic fails") {
  CHECK_THROWS_WITH_AS(FieldCtx::build(4, 1), doctest::Contains("NonPrime"), Error);
}

TEST_CASE("F_729: canonical modulus is primitive (exhaustive order check)") {
  FieldCtx F = FieldCtx::build(3, 6, nullptr, no_cache());
  CHECK(F.q() == 729);
  // the oracle: step through all powers of omega and count until 1 recurs
  ElementSweep s = F.sweep_from(1);
  std::uint64_t order = 1;
  while (s.packed() != 1) {
    s.advance();
    ++order;
  }
  CHECK(order == 728);
  // antilog is a bijection onto the nonzero packed values
  std::vector<bool> seen(729, false);
  ElementSweep t = F.sweep_from(0);
  for (std::uint64_t k = 0; k < 728; ++k) {
    std::uint64_t v = t.packed();
    REQUIRE(v > 0);
    REQUIRE(v < 729);
    REQUIRE(!seen[v]);
    seen[v] = true;
    t.advance();
  }
}

TEST_CASE("explicit modulus validation") {
  std::vector<std::uint32_t> not_irreducible{1, 1, 1};  // (x+2)^2 over F_3
  CHECK_THROWS_WITH_AS(FieldCtx::build(3, 2, &not_irreducible), doctest::Contains("NotIrreducible"), Error);
  std::vector<std::uint32_t> not_primitive{1, 0, 1};  // x^2+1: root has order 4, not 8
  CHECK_THROWS_WITH_AS(FieldCtx::build(3, 2, &not_primitive), doctest::Contains("NotPrimitive"), Error);
  std::vector<std::uint32_t> good{2, 1, 1};  // x^2+x+2 is primitive over F_3
  FieldCtx F = FieldCtx::build(3, 2, &good, no_cache());
  CHECK(F.q() == 9);
}

TEST_CASE("exponent arithmetic follows the field axioms") {
  FieldCtx F = FieldCtx::build(3, 4, nullptr, no_cache());
  const std::uint64_t L = F.group_order();
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t a = rng() % L, b = rng() % L;
    CHECK(F.mul(F.elem(a), F.elem(b)) == F.elem((a + b) % L));
    FieldElem x = F.elem(a);
    CHECK(F.add(x, F.neg(x)).is_zero());
    CHECK(F.mul(x, F.inv(x)) == F.one());
  }
  CHECK(F.pow(F.omega(), static_cast<std::int64_t>(L)) == F.one());
  CHECK(F.mul(F.zero(), F.omega()).is_zero());
  CHECK_THROWS_WITH_AS(F.inv(F.zero()), doctest::Contains("DivisionByZero"), Error);
  // distributivity couples the exponent product with the coordinate sum
  for (int i = 0; i < 100; ++i) {
    FieldElem x = F.elem(rng() % L), y = F.elem(rng() % L), z = F.elem(rng() % L);
    CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
  }
}

TEST_CASE("Frobenius is a field automorphism") {
  FieldCtx F = FieldCtx::build(5, 3, nullptr, no_cache());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    FieldElem x = F.elem(rng() % F.group_order());
    FieldElem y = F.elem(rng() % F.group_order());
    CHECK(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
    CHECK(F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y)));
  }
}

TEST_CASE("traces onto subfields") {
  SUBCASE("trace of 1 in F_9 is 2") {
    FieldCtx F = FieldCtx::build(3, 2, nullptr, no_cache());
    FieldElem t = F.trace(F.one(), 1);
    CHECK(F.packed(t) == 2);
    CHECK(F.trace_to_prime(F.one()) == 2);
  }
  SUBCASE("the trace kernel of F_27 over F_3 has 8 nonzero elements") {
    FieldCtx F = FieldCtx::build(3, 3, nullptr, no_cache());
    int zeros = 0;
    for (std::uint64_t k = 0; k < F.group_order(); ++k)
      if (F.trace_to_prime(F.elem(k)) == 0) ++zeros;
    CHECK(zeros == 8);
  }
  SUBCASE("quadratic trace is x + x^q") {
    FieldCtx F = FieldCtx::build(3, 4, nullptr, no_cache());  // F_81 over F_9
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
      FieldElem x = F.elem(rng() % F.group_order());
      CHECK(F.trace(x, 2) == F.add(x, F.frobenius(x, 2)));
    }
  }
  SUBCASE("trace is linear over the subfield") {
    FieldCtx F = FieldCtx::build(3, 6, nullptr, no_cache());
    const std::uint64_t sub_step = F.group_order() / (27 - 1);  // F_27 inside F_729
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
      FieldElem a = F.elem(sub_step * (rng() % 26));
      FieldElem b = F.elem(sub_step * (rng() % 26));
      FieldElem x = F.elem(rng() % F.group_order());
      FieldElem y = F.elem(rng() % F.group_order());
      FieldElem lhs = F.trace(F.add(F.mul(a, x), F.mul(b, y)), 3);
      FieldElem rhs = F.add(F.mul(a, F.trace(x, 3)), F.mul(b, F.trace(y, 3)));
      CHECK(lhs == rhs);
    }
    CHECK_THROWS_WITH_AS(F.trace(F.one(), 4), doctest::Contains("BadSubfield"), Error);
  }
}

TEST_CASE("discrete logs: representation, table path, BSGS path") {
  FieldCtx F = FieldCtx::build(3, 8, nullptr, no_cache());
  CHECK(F.discrete_log(F.elem(123)) == 123);
  CHECK(F.discrete_log(F.mul(F.omega(), F.omega())) == 2);
  CHECK_THROWS_WITH_AS(F.discrete_log(F.zero()), doctest::Contains("LogOfZero"), Error);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t k = rng() % F.group_order();
    std::uint64_t v = F.packed(F.elem(k));  // table path
    CHECK(F.log_packed(v) == k);
    CHECK(F.bsgs_log_packed(v) == k);  // independent BSGS path
  }
}

TEST_CASE("norm as power map lands in the subfield with the right order") {
  FieldCtx F = FieldCtx::build(3, 6, nullptr, no_cache());
  const std::uint64_t norm_exp = F.group_order() / (27 - 1);
  std::mt19937_64 rng(19);
  for (int i = 0; i < 50; ++i) {
    FieldElem x = F.elem(rng() % F.group_order());
    FieldElem n = F.pow(x, static_cast<std::int64_t>(norm_exp));
    CHECK(F.pow(n, 26) == F.one());
  }
}

TEST_CASE("rebuilding the same field is bit-identical") {
  FieldCtx a = FieldCtx::build(5, 4, nullptr, no_cache());
  FieldCtx b = FieldCtx::build(5, 4, nullptr, no_cache());
  CHECK(a.spec().modulus == b.spec().modulus);
  ElementSweep sa = a.sweep_from(0), sb = b.sweep_from(0);
  for (std::uint64_t k = 0; k < a.group_order(); ++k) {
    REQUIRE(sa.packed() == sb.packed());
    sa.advance();
    sb.advance();
  }
}

TEST_CASE("table budget") {
  FieldOptions opts = no_cache();
  opts.table_budget = 100;
  opts.allow_streaming = false;
  CHECK_THROWS_WITH_AS(FieldCtx::build(3, 8, nullptr, opts), doctest::Contains("TableBudgetExceeded"), Error);
  opts.allow_streaming = true;
  FieldCtx F = FieldCtx::build(3, 8, nullptr, opts);
  CHECK(!F.table_mode());
  // arithmetic still works through the streaming/BSGS paths
  CHECK(F.log_packed(F.packed(F.elem(4321))) == 4321);
  CHECK(F.add(F.one(), F.neg(F.one())).is_zero());
}

TEST_CASE("antilog cache file round-trip") {
  std::string dir = (std::filesystem::temp_directory_path() / "csrg-cache-test").string();
  std::filesystem::remove_all(dir);
  FieldOptions opts;
  opts.cache_dir = dir;
  opts.cache_min_entries = 1;
  FieldCtx F = FieldCtx::build(3, 5, nullptr, opts);
  F.ensure_tables();
  std::string path = dir + "/" + field_cache_file_name(F.spec());
  REQUIRE(std::filesystem::exists(path));

  // leading bytes are the magic, then p and f as little-endian words
  std::ifstream is(path, std::ios::binary);
  char magic[5];
  is.read(magic, 5);
  CHECK(std::string(magic, 5) == "CSRG1");

  std::vector<std::uint64_t> antilog;
  REQUIRE(field_cache_try_load(F.spec(), dir, antilog));
  REQUIRE(antilog.size() == F.group_order());
  ElementSweep s = F.sweep_from(0);
  for (std::uint64_t k = 0; k < F.group_order(); ++k) {
    CHECK(antilog[k] == s.packed());
    s.advance();
  }

  // corrupt entries are rejected and trigger a rebuild
  {
    std::fstream f(path, std::ios::binary | std::ios::in | std::ios::out);
    f.seekp(5 + 8 + 8 + 6 * 8);
    std::uint64_t bogus = ~0ull;
    f.write(reinterpret_cast<const char*>(&bogus), 8);
  }
  std::vector<std::uint64_t> corrupt;
  CHECK(!field_cache_try_load(F.spec(), dir, corrupt));
  std::filesystem::remove_all(dir);
}

TEST_CASE("table materialization consults the cache") {
  // a format-valid cache with two swapped antilog entries is picked up as-is,
  // which shows the load path is live (and why the file is keyed by content)
  std::string dir = (std::filesystem::temp_directory_path() / "csrg-cache-poison").string();
  std::filesystem::remove_all(dir);
  FieldOptions opts;
  opts.cache_dir = dir;
  opts.cache_min_entries = 1;
  {
    FieldCtx F = FieldCtx::build(3, 4, nullptr, opts);
    F.ensure_tables();
  }
  std::string path;
  {
    FieldCtx F = FieldCtx::build(3, 4, nullptr, opts);
    path = dir + "/" + field_cache_file_name(F.spec());
  }
  {
    // swap entries for exponents 5 and 7
    std::fstream f(path, std::ios::binary | std::ios::in | std::ios::out);
    auto read_at = [&](std::uint64_t idx) {
      f.seekg(static_cast<std::streamoff>(5 + 8 + 8 + 5 * 8 + idx * 8));
      std::uint64_t v = 0;
      f.read(reinterpret_cast<char*>(&v), 8);
      return v;
    };
    auto write_at = [&](std::uint64_t idx, std::uint64_t v) {
      f.seekp(static_cast<std::streamoff>(5 + 8 + 8 + 5 * 8 + idx * 8));
      f.write(reinterpret_cast<const char*>(&v), 8);
    };
    std::uint64_t a = read_at(5), b = read_at(7);
    write_at(5, b);
    write_at(7, a);
  }
  FieldCtx F = FieldCtx::build(3, 4, nullptr, opts);
  std::uint64_t honest = [&] {
    ElementSweep s = F.sweep_from(5);
    return s.packed();
  }();
  CHECK(F.packed(F.elem(5)) != honest);  // the poisoned table was loaded
  std::filesystem::remove_all(dir);
}

TEST_CASE("subfield views: lifted omega and traces") {
  FieldCtx big = FieldCtx::build(3, 6, nullptr, no_cache());
  MidField mid = MidField::in_quadratic_lift(big, 1);
  CHECK(mid.q_mid == 27);
  CHECK(mid.step == 28);
  // omega_mid generates exactly the subfield
  std::uint64_t order = 1;
  FieldElem w = mid.omega(), cur = w;
  while (cur != big.one()) {
    cur = big.mul(cur, w);
    ++order;
  }
  CHECK(order == 26);
  // mid-field trace matches the Frobenius-sum definition
  for (std::uint64_t j = 0; j < 26; ++j) {
    FieldElem x = mid.element(j);
    FieldElem acc = big.zero();
    FieldElem c = x;
    for (int i = 0; i < 3; ++i) {
      acc = big.add(acc, c);
      c = big.frobenius(c);
    }
    std::uint64_t expect = acc.is_zero() ? 0 : big.packed(acc) % 3;
    CHECK(mid.trace_to_prime(x) == expect);
  }
}
