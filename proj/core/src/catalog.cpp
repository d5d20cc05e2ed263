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

#include "csrg/catalog.hpp"

#include <sstream>

#include "csrg/characters.hpp"
#include "csrg/numeric.hpp"

namespace csrg {

namespace {

BigInt big_pow(std::uint64_t base, std::uint32_t e) {
  BigInt r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

std::uint64_t pf_mod4(std::uint64_t p, std::uint32_t f) { return powmod(p, f, 4); }

void check_gcd_condition(const BigInt& N, const BigInt& L) {
  BigInt g = boost::multiprecision::gcd(N, L / N);
  require(g == 1, Errc::HypothesisFailed, "gcd(N, (q^m-1)/N) must be 1");
}

}  // namespace

const char* lift_kind_name(LiftKind k) { return k == LiftKind::Elliptic ? "elliptic" : "hyperbolic"; }

BigSrgParams latin_type_params(const BigInt& n, const BigInt& r, int eps) {
  require(eps == 1 || eps == -1, Errc::HypothesisFailed, "eps must be +-1");
  BigSrgParams out;
  out.v = n * n;
  out.k = r * (n - eps);
  out.lambda = eps * n + r * r - 3 * eps * r;
  out.mu = r * r - eps * r;
  if (eps == 1) {
    out.theta1 = n - r;
    out.theta2 = -r;
  } else {
    out.theta1 = r;
    out.theta2 = r - n;
  }
  // feasibility: the quadratic identity plus integral positive multiplicities
  bool ok = out.k * (out.k - out.lambda - 1) == (out.v - out.k - 1) * out.mu;
  BigInt denom = out.theta1 - out.theta2;
  BigInt num = 2 * out.k + (out.v - 1) * (out.theta1 + out.theta2);
  if (ok && denom != 0 && num % denom == 0) {
    BigInt t = num / denom;
    if ((out.v - 1 - t) % 2 == 0 && (out.v - 1 + t) % 2 == 0) {
      out.mult1 = (out.v - 1 - t) / 2;
      out.mult2 = (out.v - 1 + t) / 2;
      ok = out.mult1 > 0 && out.mult2 > 0 && out.mult1 + out.mult2 == out.v - 1;
    } else {
      ok = false;
    }
  } else {
    ok = false;
  }
  out.feasible = ok;
  return out;
}

BigSrgParams catalog_full_semiprimitive(std::uint64_t p, std::uint32_t f, std::uint64_t N, LiftKind kind) {
  std::uint32_t j = semiprimitivity_index(p, N);
  require(f % (2 * j) == 0, Errc::HypothesisFailed, "f must be a multiple of 2j");
  BigInt n = big_pow(p, f);
  BigInt r = (n - 1) / N;
  return latin_type_params(n, r, kind == LiftKind::Elliptic ? -1 : 1);
}

BigSrgParams catalog_full_subfield(std::uint64_t q, std::uint32_t m, std::uint32_t d, LiftKind kind) {
  require(m >= 2 && d >= 1 && m % d == 0 && d < m, Errc::HypothesisFailed, "need d | m, d < m");
  BigInt n = big_pow(q, m);
  BigInt r = big_pow(q, m - d) - 1;
  return latin_type_params(n, r, kind == LiftKind::Elliptic ? -1 : 1);
}

BigSrgParams catalog_full_sporadic(std::size_t row, LiftKind kind) {
  const auto& c = sporadic_cases().at(row);
  BigInt n = big_pow(c.p, c.f);
  BigInt r = (n - 1) / c.N * c.k;
  return latin_type_params(n, r, kind == LiftKind::Elliptic ? -1 : 1);
}

BigSrgParams catalog_half_semiprimitive(std::uint64_t p, std::uint32_t f, std::uint64_t N, Side side) {
  std::uint32_t j = semiprimitivity_index(p, N);
  require(f % (2 * j) == 0 && f / (2 * j) >= 2, Errc::HypothesisFailed, "need f = 2js with s >= 2");
  require(N % 2 == 1, Errc::HypothesisFailed, "need odd N");
  BigInt n = big_pow(p, f);
  require(pf_mod4(p, f) == 1, Errc::HypothesisFailed, "need q^m = 1 (mod 4)");
  check_gcd_condition(N, n - 1);
  BigInt r = (n - 1) / (2 * BigInt(N)) * (side == Side::Subdiff ? 1 : BigInt(N) - 1);
  return latin_type_params(n, r, 1);
}

BigSrgParams catalog_half_sporadic(std::size_t row, Side side) {
  const auto& c = sporadic_cases().at(row);
  BigInt n = big_pow(c.p, c.f);
  std::uint64_t mod4 = pf_mod4(c.p, c.f);
  bool minus2 = minus_two_in_p_powers(c.p, c.N);
  if (!minus2) {
    require(c.N == 37 && side == Side::Complement, Errc::HypothesisFailed,
            "-2 is not a power of p mod N; only the complement side of the N=37 row has a known partition");
  }
  require(c.N % 2 == 1, Errc::HypothesisFailed, "need odd N");
  BigInt mult = (side == Side::Subdiff) ? BigInt(c.k) : BigInt(c.N - c.k);
  BigInt r = (n - 1) / (2 * BigInt(c.N)) * mult;
  if (mod4 == 3) return latin_type_params(n, r, -1);  // elliptic halving
  check_gcd_condition(BigInt(c.N), n - 1);
  return latin_type_params(n, r, 1);  // hyperbolic halving
}

BigSrgParams catalog_conic(std::uint64_t q, LiftKind kind) {
  if (kind == LiftKind::Elliptic)
    require(q % 4 == 3, Errc::HypothesisFailed, "elliptic conic family needs q = 3 (mod 4)");
  else
    require(q % 12 == 5 || q % 12 == 9, Errc::HypothesisFailed, "hyperbolic conic family needs q = 5, 9 (mod 12)");
  BigInt n = big_pow(q, 3);
  BigInt r = (BigInt(q) * q - 1) / 2;
  return latin_type_params(n, r, kind == LiftKind::Elliptic ? -1 : 1);
}

BigSrgParams catalog_quadric(std::uint64_t q, std::uint32_t m, LiftKind kind) {
  require(m % 2 == 1 && m >= 3, Errc::HypothesisFailed, "quadric family needs odd m >= 3");
  BigInt n = big_pow(q, m);
  if (kind == LiftKind::Elliptic) {
    require(q % 4 == 3, Errc::HypothesisFailed, "elliptic quadric family needs q = 3 (mod 4)");
  } else {
    require(q % 4 == 1, Errc::HypothesisFailed, "hyperbolic quadric family needs q = 1 (mod 4)");
    BigInt N = (n - 1) / (q - 1);
    require(boost::multiprecision::gcd(BigInt(q) - 1, N) == 1, Errc::HypothesisFailed,
            "need gcd(q-1, (q^m-1)/(q-1)) = 1");
  }
  BigInt r = big_pow(q, m - 1) * (q - 1) / 2;
  return latin_type_params(n, r, kind == LiftKind::Elliptic ? -1 : 1);
}

std::vector<CatalogEntry> catalog_all() {
  std::vector<CatalogEntry> out;
  auto add = [&](const std::string& family, int eps, const std::string& inst, BigSrgParams p) {
    out.push_back(CatalogEntry{family, eps, inst, std::move(p)});
  };

  for (LiftKind kind : {LiftKind::Elliptic, LiftKind::Hyperbolic}) {
    int eps = kind == LiftKind::Elliptic ? -1 : 1;
    std::string kn = lift_kind_name(kind);
    add("full-semiprimitive-" + kn, eps, "p=3 f=8 N=5", catalog_full_semiprimitive(3, 8, 5, kind));
    add("full-subfield-" + kn, eps, "q=3 m=3 d=1", catalog_full_subfield(3, 3, 1, kind));
    for (std::size_t row = 0; row < sporadic_cases().size(); ++row) {
      const auto& c = sporadic_cases()[row];
      std::ostringstream inst;
      inst << "q^m=" << c.p << "^" << c.f << " N=" << c.N << " k=" << c.k;
      add("full-sporadic-" + kn, eps, inst.str(), catalog_full_sporadic(row, kind));
    }
  }

  for (Side side : {Side::Subdiff, Side::Complement}) {
    add(std::string("half-hyperbolic-semiprimitive-") + side_name(side), 1, "p=3 f=8 N=5",
        catalog_half_semiprimitive(3, 8, 5, side));
  }
  for (std::size_t row = 0; row < sporadic_cases().size(); ++row) {
    const auto& c = sporadic_cases()[row];
    std::uint64_t mod4 = pf_mod4(c.p, c.f);
    std::string kn = mod4 == 3 ? "elliptic" : "hyperbolic";
    int eps = mod4 == 3 ? -1 : 1;
    for (Side side : {Side::Subdiff, Side::Complement}) {
      if (!minus_two_in_p_powers(c.p, c.N) && !(c.N == 37 && side == Side::Complement)) continue;
      std::ostringstream inst;
      inst << "q^m=" << c.p << "^" << c.f << " N=" << c.N << " k=" << c.k;
      add("half-" + kn + "-sporadic-" + side_name(side), eps, inst.str(), catalog_half_sporadic(row, side));
    }
  }
  add("half-elliptic-conic", -1, "q=3", catalog_conic(3, LiftKind::Elliptic));
  add("half-hyperbolic-conic", 1, "q=5", catalog_conic(5, LiftKind::Hyperbolic));
  add("half-elliptic-quadric", -1, "q=3 m=3", catalog_quadric(3, 3, LiftKind::Elliptic));
  add("half-hyperbolic-quadric", 1, "q=5 m=3", catalog_quadric(5, 3, LiftKind::Hyperbolic));
  return out;
}

}  // namespace csrg
