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
#include <utility>
#include <vector>

namespace csrg {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Prime factorization by trial division + Brent-Pollard rho.
/// Returns (prime, exponent) pairs sorted by prime.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

std::uint64_t isqrt_u64(std::uint64_t n);

/// a^e without overflow checks beyond a 64-bit cap; throws on overflow.
std::uint64_t checked_pow_u64(std::uint64_t a, std::uint32_t e);

/// Multiplicative order of a modulo m given the factorization of group_order,
/// where a^group_order = 1 (mod m) is assumed.
std::uint64_t order_mod(std::uint64_t a, std::uint64_t m, std::uint64_t group_order,
                        const std::vector<std::pair<std::uint64_t, std::uint32_t>>& group_order_factors);

/// FNV-1a, used for content hashes in reports and cache file names.
std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ull);
std::uint64_t fnv1a(const std::string& s, std::uint64_t seed = 0xcbf29ce484222325ull);
std::string hex64(std::uint64_t v);

/// Worker cap for the chunked sweeps (trace-count tables, product spectra,
/// dense oracle). Results are exact integers merged in chunk order, so they do
/// not depend on the cap.
void set_worker_cap(unsigned n);
unsigned worker_cap();

/// Number of chunks to use for a sweep of n steps: `workers` when nonzero,
/// else the worker cap; 1 for small n.
unsigned plan_chunks(std::uint64_t n, unsigned workers);

/// Runs fn(chunk, begin, end) over exactly `chunks` disjoint slices of [0, n),
/// on one thread per chunk when chunks > 1.
void chunked_run(std::uint64_t n, unsigned chunks,
                 const std::function<void(unsigned chunk, std::uint64_t begin, std::uint64_t end)>& fn);

}  // namespace csrg
