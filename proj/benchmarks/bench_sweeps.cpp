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

#include <benchmark/benchmark.h>

#include "csrg/characters.hpp"
#include "csrg/constructions.hpp"
#include "csrg/cyclotomy.hpp"
#include "csrg/spectrum.hpp"

using namespace csrg;

namespace {

FieldOptions no_cache() {
  FieldOptions o;
  o.cache_dir = "-";
  return o;
}

void BM_field_build(benchmark::State& state) {
  auto f = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    FieldCtx F = FieldCtx::build(3, f, nullptr, no_cache());
    benchmark::DoNotOptimize(F.q());
  }
}
BENCHMARK(BM_field_build)->Arg(6)->Arg(10)->Arg(12);

void BM_trace_count_sweep(benchmark::State& state) {
  auto f = static_cast<std::uint32_t>(state.range(0));
  FieldCtx F = FieldCtx::build(3, f, nullptr, no_cache());
  MidField W = MidField::whole(F, 1);
  for (auto _ : state) {
    ClassTraceCounts t = class_trace_counts(W, 2, 1);
    benchmark::DoNotOptimize(t.counts.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(F.group_order()));
}
BENCHMARK(BM_trace_count_sweep)->Arg(8)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_gauss_sum_direct(benchmark::State& state) {
  FieldCtx F = FieldCtx::build(3, static_cast<std::uint32_t>(state.range(0)), nullptr, no_cache());
  MultChar chi = make_char(F, 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gauss_sum_direct(F, chi));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(F.group_order()));
}
BENCHMARK(BM_gauss_sum_direct)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_product_spectrum(benchmark::State& state) {
  FieldCtx F = FieldCtx::build(3, 3, nullptr, no_cache());
  MidField W = MidField::whole(F, 1);
  SubdiffResult sd = subdifference_set(W, 13);
  ConnectionSet H = hyperbolic_connection(F, 3, 13, ConnectionSet::ProductKind::FullH, sd.I, false);
  for (auto _ : state) {
    SpectrumReport rep = exact_spectrum_product(H);
    benchmark::DoNotOptimize(rep.two_valued);
  }
}
BENCHMARK(BM_product_spectrum)->Unit(benchmark::kMillisecond);

void BM_dense_oracle(benchmark::State& state) {
  FieldCtx big = FieldCtx::build(3, 6, nullptr, no_cache());
  MidField mid = MidField::in_quadratic_lift(big, 1);
  SubdiffResult sd = subdifference_set(mid, 13);
  ConnectionSet E = elliptic_connection(big, sd.I, 13);
  SrgParams params = srg_verify(E);
  for (auto _ : state) dense_adjacency_oracle(E, params);
}
BENCHMARK(BM_dense_oracle)->Unit(benchmark::kMillisecond);

void BM_bsgs_log(benchmark::State& state) {
  FieldOptions opts = no_cache();
  opts.table_budget = 1;  // force the BSGS path
  FieldCtx F = FieldCtx::build(3, static_cast<std::uint32_t>(state.range(0)), nullptr, opts);
  std::uint64_t k = 0;
  for (auto _ : state) {
    k = (k * 7 + 13) % F.group_order();
    benchmark::DoNotOptimize(F.bsgs_log_packed(F.packed(F.elem(k))));
  }
}
BENCHMARK(BM_bsgs_log)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
