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

#include "csrg/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "csrg/errors.hpp"

namespace csrg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::TableBudgetExceeded: return "TableBudgetExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::BadSubfield: return "BadSubfield";
    case Errc::LogOfZero: return "LogOfZero";
    case Errc::NotSemiprimitive: return "NotSemiprimitive";
    case Errc::DegenerateCharacter: return "DegenerateCharacter";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::BadDivisor: return "BadDivisor";
    case Errc::NotTwoValued: return "NotTwoValued";
    case Errc::EvenModulus: return "EvenModulus";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::BadModulusCongruence: return "BadModulusCongruence";
    case Errc::GcdConditionViolated: return "GcdConditionViolated";
    case Errc::NotOddPrimePower: return "NotOddPrimePower";
    case Errc::EvenParameters: return "EvenParameters";
    case Errc::FrameSelectionFailed: return "FrameSelectionFailed";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::InconsistentIndexSets: return "InconsistentIndexSets";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::TooLargeForFullSweep: return "TooLargeForFullSweep";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::IrrationalSpectrumValue: return "IrrationalSpectrumValue";
    case Errc::TooLarge: return "TooLarge";
    case Errc::CacheCorrupt: return "CacheCorrupt";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_math_failure(Errc c) {
  switch (c) {
    case Errc::NotTwoValued:
    case Errc::NotSymmetric:
    case Errc::IrrationalSpectrumValue:
      return true;
    default:
      return false;
  }
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
  if ((n & 1) == 0) return 2;
  std::uint64_t c = 1;
  for (;;) {
    std::uint64_t x = 2, y = 2, d = 1;
    std::uint64_t count = 0;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = gcd_u64(x > y ? x - y : y - x, n);
      if (++count > (1ull << 26)) break;
    }
    if (d != n && d != 1) return d;
    ++c;
  }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < 100000 && p * p <= n; p == 2 ? p = 3 : p += 2) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1u);
  }
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
  while (newr != 0) {
    std::int64_t qq = r / newr;
    std::int64_t tmp = t - qq * newt;
    t = newt;
    newt = tmp;
    tmp = r - qq * newr;
    r = newr;
    newr = tmp;
  }
  require(r == 1, Errc::BadDivisor, "invmod of non-unit");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t checked_pow_u64(std::uint64_t a, std::uint32_t e) {
  unsigned __int128 r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    r *= a;
    require(r <= static_cast<unsigned __int128>(UINT64_MAX), Errc::TooLarge, "power exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t order_mod(std::uint64_t a, std::uint64_t m, std::uint64_t group_order,
                        const std::vector<std::pair<std::uint64_t, std::uint32_t>>& factors) {
  std::uint64_t order = group_order;
  for (const auto& [p, e] : factors) {
    for (std::uint32_t i = 0; i < e; ++i) {
      if (powmod(a, order / p, m) == 1)
        order /= p;
      else
        break;
    }
  }
  return order;
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
  const unsigned char* b = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= b[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t seed) { return fnv1a(s.data(), s.size(), seed); }

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

namespace {
std::atomic<unsigned> g_worker_cap{0};  // 0: decide from hardware
}

void set_worker_cap(unsigned n) { g_worker_cap.store(n); }

unsigned worker_cap() {
  unsigned cap = g_worker_cap.load();
  if (cap == 0) {
    cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
  }
  return cap;
}

unsigned plan_chunks(std::uint64_t n, unsigned workers) {
  if (workers == 0) workers = worker_cap();
  if (n < (1u << 12)) workers = 1;
  if (workers == 0) workers = 1;
  return workers;
}

void chunked_run(std::uint64_t n, unsigned chunks,
                 const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
  if (chunks <= 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> threads;
  std::uint64_t per = n / chunks;
  for (unsigned c = 0; c < chunks; ++c) {
    std::uint64_t begin = per * c;
    std::uint64_t end = (c + 1 == chunks) ? n : per * (c + 1);
    threads.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace csrg
