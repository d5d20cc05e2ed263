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

#include "csrg/field.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <unordered_map>

#include "csrg/numeric.hpp"

namespace csrg {

namespace {

using Poly = std::vector<std::uint32_t>;  // dense coefficients mod p, constant first

// Trims leading zeros (keeps at least one coefficient).
void poly_trim(Poly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

int poly_deg(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return out;
}

// a mod m, m monic.
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  int dm = poly_deg(m);
  for (int i = poly_deg(a); i >= dm; --i) {
    std::uint64_t c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      std::size_t idx = static_cast<std::size_t>(i - dm + j);
      std::uint64_t sub = (c * m[static_cast<std::size_t>(j)]) % p;
      a[idx] = static_cast<std::uint32_t>((a[idx] + p - sub) % p);
    }
  }
  a.resize(static_cast<std::size_t>(dm), 0);
  if (a.empty()) a.push_back(0);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  return poly_mod(poly_mul(a, b, p), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  poly_trim(a);
  poly_trim(b);
  while (poly_deg(b) >= 0) {
    // normalize b monic
    std::uint64_t lead = b[static_cast<std::size_t>(poly_deg(b))];
    if (lead != 1) {
      std::uint64_t il = invmod(lead, p);
      for (auto& c : b) c = static_cast<std::uint32_t>((c * il) % p);
    }
    Poly bm = b;
    bm.resize(static_cast<std::size_t>(poly_deg(b)) + 1);
    Poly r = poly_mod(a, bm, p);
    poly_trim(r);
    a = std::move(b);
    b = std::move(r);
    if (poly_deg(b) < 0) break;
  }
  return a;
}

bool is_irreducible(const Poly& m, std::uint64_t p, std::uint32_t f) {
  if (f == 1) return true;
  Poly x{0, 1};
  // x^(p^f) == x (mod m)
  Poly xp = x;
  for (std::uint32_t i = 0; i < f; ++i) xp = poly_powmod(xp, p, m, p);
  Poly xr = poly_mod(x, m, p);
  poly_trim(xp);
  Poly xr2 = xr;
  poly_trim(xr2);
  if (xp != xr2) return false;
  // gcd(x^(p^(f/l)) - x, m) constant for every prime l | f
  for (const auto& [l, e] : factorize(f)) {
    (void)e;
    Poly y = x;
    for (std::uint32_t i = 0; i < f / l; ++i) y = poly_powmod(y, p, m, p);
    // y - x
    Poly d = y;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = static_cast<std::uint32_t>((d[1] + p - 1) % p);
    poly_trim(d);
    Poly g = poly_gcd(m, d, p);
    if (poly_deg(g) > 0) return false;
  }
  return true;
}

bool is_primitive(const Poly& m, std::uint64_t p, std::uint64_t q,
                  const std::vector<std::pair<std::uint64_t, std::uint32_t>>& qm1_factors) {
  Poly x{0, 1};
  Poly xr = poly_mod(x, m, p);
  if (poly_deg(xr) < 0) return false;  // residue of x is zero
  Poly one{1};
  Poly full = poly_powmod(x, q - 1, m, p);
  poly_trim(full);
  if (full != one) return false;
  for (const auto& [l, e] : qm1_factors) {
    (void)e;
    Poly t = poly_powmod(x, (q - 1) / l, m, p);
    poly_trim(t);
    if (t == one) return false;
  }
  return true;
}

void write_u64_le(std::ostream& os, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

bool read_u64_le(std::istream& is, std::uint64_t& v) {
  unsigned char b[8];
  if (!is.read(reinterpret_cast<char*>(b), 8)) return false;
  v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return true;
}

}  // namespace

struct FieldCtx::Tables {
  std::once_flag flag;
  bool built = false;
  std::vector<std::uint64_t> antilog;  // exponent -> packed coordinates
  std::vector<std::uint32_t> logt;     // packed -> exponent, sentinel at 0
};

FieldCtx::FieldCtx(FieldCtx&&) noexcept = default;
FieldCtx& FieldCtx::operator=(FieldCtx&&) noexcept = default;
FieldCtx::~FieldCtx() = default;

std::uint64_t FieldSpec::content_hash() const {
  std::uint64_t h = fnv1a(&p, sizeof(p));
  std::uint64_t f64 = f;
  h = fnv1a(&f64, sizeof(f64), h);
  for (std::uint32_t c : modulus) {
    std::uint64_t c64 = c;
    h = fnv1a(&c64, sizeof(c64), h);
  }
  return h;
}

FieldCtx FieldCtx::build(std::uint64_t p, std::uint32_t f, const std::vector<std::uint32_t>* modulus,
                         const FieldOptions& opts) {
  require(is_prime_u64(p), Errc::NonPrime, "p = " + std::to_string(p));
  require(f >= 1, Errc::TooLarge, "extension degree must be >= 1");
  require(p < (1ull << 32), Errc::TooLarge, "characteristic must fit in 32 bits");
  std::uint64_t q = checked_pow_u64(p, f);
  require(q <= static_cast<std::uint64_t>(INT64_MAX), Errc::TooLarge, "q exceeds 2^63-1");
  require(q <= opts.table_budget || opts.allow_streaming, Errc::TableBudgetExceeded,
          "q = " + std::to_string(q) + " exceeds table budget and streaming is disabled");

  FieldCtx ctx;
  ctx.spec_.p = p;
  ctx.spec_.f = f;
  ctx.q_ = q;
  ctx.opts_ = opts;
  ctx.qm1_factors_ = factorize(q - 1);

  if (modulus) {
    require(modulus->size() == static_cast<std::size_t>(f) + 1, Errc::NotIrreducible,
            "modulus must have degree f = " + std::to_string(f));
    require(modulus->back() == 1, Errc::NotIrreducible, "modulus must be monic");
    for (std::uint32_t c : *modulus) require(c < p, Errc::NotIrreducible, "modulus coefficient out of range");
    Poly m(modulus->begin(), modulus->end());
    require(is_irreducible(m, p, f), Errc::NotIrreducible, "modulus is reducible");
    require(is_primitive(m, p, q, ctx.qm1_factors_), Errc::NotPrimitive, "modulus root does not generate F_q^*");
    ctx.spec_.modulus = *modulus;
  } else {
    // Deterministic canonical choice: scan coefficient tuples (c_0,...,c_{f-1})
    // with c_i = i-th base-p digit of the counter, first primitive hit wins.
    Poly m(static_cast<std::size_t>(f) + 1, 0);
    m[f] = 1;
    bool found = false;
    for (std::uint64_t t = 0;; ++t) {
      std::uint64_t v = t;
      for (std::uint32_t i = 0; i < f; ++i) {
        m[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (v != 0) break;  // exhausted all monic candidates
      if (f > 1 && m[0] == 0) continue;
      if (!is_irreducible(m, p, f)) continue;
      if (!is_primitive(m, p, q, ctx.qm1_factors_)) continue;
      found = true;
      break;
    }
    require(found, Errc::Internal, "no primitive polynomial found");
    ctx.spec_.modulus.assign(m.begin(), m.end());
  }

  // x^f = -(m_0 + m_1 x + ... + m_{f-1} x^{f-1})
  ctx.reduction_.resize(f);
  for (std::uint32_t i = 0; i < f; ++i)
    ctx.reduction_[i] = static_cast<std::uint32_t>((p - ctx.spec_.modulus[i]) % p);

  // Power sums of the modulus roots give tr(x^k) via Newton's identities.
  ctx.trace_basis_.resize(f);
  ctx.trace_basis_[0] = static_cast<std::uint32_t>(f % p);
  for (std::uint32_t k = 1; k < f; ++k) {
    std::uint64_t s = (static_cast<std::uint64_t>(k % p) * ctx.spec_.modulus[f - k]) % p;
    for (std::uint32_t i = 1; i < k; ++i) {
      s = (s + static_cast<std::uint64_t>(ctx.spec_.modulus[f - i]) * ctx.trace_basis_[k - i]) % p;
    }
    ctx.trace_basis_[k] = static_cast<std::uint32_t>((p - s % p) % p);
  }

  ctx.tables_ = std::make_unique<Tables>();
  return ctx;
}

void FieldCtx::mul_by_x_inplace(std::vector<std::uint32_t>& c) const {
  const std::uint64_t p = spec_.p;
  const std::uint32_t f = spec_.f;
  std::uint64_t top = c[f - 1];
  for (std::uint32_t i = f - 1; i > 0; --i) c[i] = c[i - 1];
  c[0] = 0;
  if (top) {
    for (std::uint32_t i = 0; i < f; ++i)
      c[i] = static_cast<std::uint32_t>((c[i] + top * reduction_[i]) % p);
  }
}

void FieldCtx::poly_mul_inplace(std::vector<std::uint32_t>& c, const std::vector<std::uint32_t>& m) const {
  const std::uint64_t p = spec_.p;
  const std::uint32_t f = spec_.f;
  std::vector<std::uint64_t> tmp(2 * static_cast<std::size_t>(f) - 1, 0);
  for (std::uint32_t i = 0; i < f; ++i) {
    if (c[i] == 0) continue;
    for (std::uint32_t j = 0; j < f; ++j)
      tmp[i + j] = (tmp[i + j] + static_cast<std::uint64_t>(c[i]) * m[j]) % p;
  }
  for (std::uint32_t i = 2 * f - 2; i >= f; --i) {
    std::uint64_t d = tmp[i];
    if (d) {
      for (std::uint32_t j = 0; j < f; ++j)
        tmp[i - f + j] = (tmp[i - f + j] + d * reduction_[j]) % p;
    }
    if (i == f) break;
  }
  for (std::uint32_t i = 0; i < f; ++i) c[i] = static_cast<std::uint32_t>(tmp[i]);
}

std::vector<std::uint32_t> FieldCtx::coords_by_powering(std::uint64_t exponent) const {
  const std::uint64_t p = spec_.p;
  Poly m(spec_.modulus.begin(), spec_.modulus.end());
  Poly r = poly_powmod(Poly{0, 1}, exponent, m, p);
  r.resize(spec_.f, 0);
  return r;
}

FieldElem FieldCtx::from_int(std::uint64_t n) const {
  n %= spec_.p;
  if (n == 0) return FieldElem::zero();
  return from_packed(n);
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  if (a.is_zero() || b.is_zero()) return FieldElem::zero();
  std::uint64_t k = a.exponent() + b.exponent();
  if (k >= q_ - 1) k -= q_ - 1;
  return FieldElem::from_exponent(static_cast<std::int64_t>(k));
}

FieldElem FieldCtx::inv(FieldElem a) const {
  require(!a.is_zero(), Errc::DivisionByZero, "inverse of zero");
  std::uint64_t k = a.exponent();
  return FieldElem::from_exponent(static_cast<std::int64_t>(k == 0 ? 0 : q_ - 1 - k));
}

FieldElem FieldCtx::pow(FieldElem a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e == 0) return one();
    require(e > 0, Errc::DivisionByZero, "negative power of zero");
    return FieldElem::zero();
  }
  const std::uint64_t L = q_ - 1;
  std::int64_t em = e % static_cast<std::int64_t>(L);
  if (em < 0) em += static_cast<std::int64_t>(L);
  return FieldElem::from_exponent(
      static_cast<std::int64_t>(mulmod(a.exponent() % L, static_cast<std::uint64_t>(em), L)));
}

FieldElem FieldCtx::neg(FieldElem a) const {
  if (a.is_zero() || spec_.p == 2) return a;
  std::uint64_t half = (q_ - 1) / 2;
  std::uint64_t k = a.exponent() + half;
  if (k >= q_ - 1) k -= q_ - 1;
  return FieldElem::from_exponent(static_cast<std::int64_t>(k));
}

FieldElem FieldCtx::frobenius(FieldElem a, std::uint32_t times) const {
  if (a.is_zero()) return a;
  std::uint64_t k = a.exponent();
  for (std::uint32_t i = 0; i < times; ++i) k = mulmod(k, spec_.p, q_ - 1);
  return FieldElem::from_exponent(static_cast<std::int64_t>(k));
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::uint64_t p = spec_.p;
  std::uint64_t va = packed(a), vb = packed(b);
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < spec_.f; ++i) {
    std::uint64_t d = (va % p + vb % p) % p;
    out += d * mult;
    mult *= p;
    va /= p;
    vb /= p;
  }
  return from_packed(out);
}

FieldElem FieldCtx::trace(FieldElem a, std::uint32_t sub_degree) const {
  require(sub_degree >= 1 && spec_.f % sub_degree == 0, Errc::BadSubfield,
          "sub_degree " + std::to_string(sub_degree) + " does not divide f = " + std::to_string(spec_.f));
  if (a.is_zero()) return a;
  FieldElem acc = FieldElem::zero();
  std::uint64_t k = a.exponent();
  std::uint64_t step = powmod(spec_.p, sub_degree, q_ - 1);
  std::uint64_t cur = k % (q_ - 1);
  for (std::uint32_t i = 0; i < spec_.f / sub_degree; ++i) {
    acc = add(acc, FieldElem::from_exponent(static_cast<std::int64_t>(cur)));
    cur = mulmod(cur, step, q_ - 1);
  }
  return acc;
}

std::uint32_t FieldCtx::trace_of_packed(std::uint64_t v) const {
  const std::uint64_t p = spec_.p;
  std::uint64_t t = 0;
  for (std::uint32_t i = 0; i < spec_.f; ++i) {
    t += (v % p) * trace_basis_[i];
    v /= p;
  }
  return static_cast<std::uint32_t>(t % p);
}

std::uint32_t FieldCtx::trace_to_prime(FieldElem a) const {
  if (a.is_zero()) return 0;
  return trace_of_packed(packed(a));
}

std::uint64_t FieldCtx::packed(FieldElem a) const {
  if (a.is_zero()) return 0;
  if (table_mode()) {
    ensure_tables();
    return tables_->antilog[a.exponent()];
  }
  auto c = coords_by_powering(a.exponent());
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < spec_.f; ++i) {
    out += static_cast<std::uint64_t>(c[i]) * mult;
    mult *= spec_.p;
  }
  return out;
}

std::vector<std::uint32_t> FieldCtx::coords(FieldElem a) const {
  std::uint64_t v = packed(a);
  std::vector<std::uint32_t> c(spec_.f);
  for (std::uint32_t i = 0; i < spec_.f; ++i) {
    c[i] = static_cast<std::uint32_t>(v % spec_.p);
    v /= spec_.p;
  }
  return c;
}

FieldElem FieldCtx::from_packed(std::uint64_t v) const {
  if (v == 0) return FieldElem::zero();
  return FieldElem::from_exponent(static_cast<std::int64_t>(log_packed(v)));
}

FieldElem FieldCtx::from_coords(const std::vector<std::uint32_t>& c) const {
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < spec_.f; ++i) {
    out += static_cast<std::uint64_t>(i < c.size() ? c[i] : 0) * mult;
    mult *= spec_.p;
  }
  return from_packed(out);
}

std::uint64_t FieldCtx::log_packed(std::uint64_t v) const {
  require(v != 0, Errc::LogOfZero, "log of zero");
  require(v < q_, Errc::Internal, "packed value out of range");
  if (table_mode()) {
    ensure_tables();
    std::uint32_t k = tables_->logt[v];
    require(k != UINT32_MAX, Errc::Internal, "log table miss");
    return k;
  }
  return bsgs_log_packed(v);
}

std::uint64_t FieldCtx::bsgs_log_packed(std::uint64_t v) const {
  require(v != 0, Errc::LogOfZero, "log of zero");
  const std::uint64_t n = q_ - 1;
  std::uint64_t mstep = isqrt_u64(n);
  if (mstep * mstep < n) ++mstep;
  require(mstep <= (1ull << 26), Errc::TooLarge, "field too large for BSGS discrete log");

  auto pack = [&](const std::vector<std::uint32_t>& c) {
    std::uint64_t out = 0, mult = 1;
    for (std::uint32_t i = 0; i < spec_.f; ++i) {
      out += static_cast<std::uint64_t>(c[i]) * mult;
      mult *= spec_.p;
    }
    return out;
  };

  std::unordered_map<std::uint64_t, std::uint32_t> baby;
  baby.reserve(static_cast<std::size_t>(mstep) * 2);
  {
    ElementSweep s = sweep_from(0);
    for (std::uint64_t j = 0; j < mstep; ++j) {
      baby.emplace(s.packed(), static_cast<std::uint32_t>(j));
      s.advance();
    }
  }
  std::vector<std::uint32_t> giant = coords_by_powering((n - mstep % n) % n);
  std::vector<std::uint32_t> cur(spec_.f);
  {
    std::uint64_t t = v;
    for (std::uint32_t i = 0; i < spec_.f; ++i) {
      cur[i] = static_cast<std::uint32_t>(t % spec_.p);
      t /= spec_.p;
    }
  }
  for (std::uint64_t i = 0; i <= mstep; ++i) {
    auto it = baby.find(pack(cur));
    if (it != baby.end()) {
      std::uint64_t e = (i * mstep + it->second) % n;
      return e;
    }
    poly_mul_inplace(cur, giant);
  }
  fail(Errc::Internal, "BSGS failed to find a discrete log");
}

ElementSweep FieldCtx::sweep_from(std::uint64_t exponent) const {
  ElementSweep s;
  s.ctx_ = this;
  s.k_ = exponent;
  s.step_ = 1;
  s.c_ = coords_by_powering(exponent % (q_ - 1));
  return s;
}

ElementSweep FieldCtx::sweep_subgroup(std::uint64_t step, std::uint64_t j0) const {
  ElementSweep s;
  s.ctx_ = this;
  s.k_ = j0;
  s.step_ = step;
  s.c_ = coords_by_powering(mulmod(step, j0 % (q_ - 1), q_ - 1));
  if (step % (q_ - 1) != 1) s.mult_ = coords_by_powering(step % (q_ - 1));
  return s;
}

void ElementSweep::advance() {
  if (mult_.empty())
    ctx_->mul_by_x_inplace(c_);
  else
    ctx_->poly_mul_inplace(c_, mult_);
  ++k_;
}

std::uint32_t ElementSweep::trace() const {
  const auto& tb = ctx_->trace_basis();
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) t += static_cast<std::uint64_t>(c_[i]) * tb[i];
  return static_cast<std::uint32_t>(t % ctx_->p());
}

std::uint64_t ElementSweep::packed() const {
  std::uint64_t out = 0, mult = 1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out += static_cast<std::uint64_t>(c_[i]) * mult;
    mult *= ctx_->p();
  }
  return out;
}

bool FieldCtx::tables_built() const { return tables_->built; }

void FieldCtx::ensure_tables() const {
  require(table_mode(), Errc::TableBudgetExceeded, "q = " + std::to_string(q_) + " exceeds the table budget");
  std::call_once(tables_->flag, [this] {
    Tables& t = *tables_;
    const std::uint64_t n = q_ - 1;
    std::string dir = resolve_cache_dir(opts_.cache_dir);
    bool cache_eligible = !dir.empty() && n >= opts_.cache_min_entries;
    bool loaded = false;
    if (cache_eligible) loaded = field_cache_try_load(spec_, dir, t.antilog);
    if (!loaded) {
      t.antilog.resize(n);
      ElementSweep s = sweep_from(0);
      for (std::uint64_t k = 0; k < n; ++k) {
        t.antilog[k] = s.packed();
        s.advance();
      }
    }
    t.logt.assign(q_, UINT32_MAX);
    for (std::uint64_t k = 0; k < n; ++k) t.logt[t.antilog[k]] = static_cast<std::uint32_t>(k);
    if (cache_eligible && !loaded) field_cache_save(*this, dir);
    t.built = true;
  });
}

std::string field_cache_file_name(const FieldSpec& spec) { return "csrg-" + hex64(spec.content_hash()) + ".tbl"; }

std::string resolve_cache_dir(const std::string& configured) {
  std::string dir = configured;
  if (dir == "-") return "";
  if (dir.empty()) {
    if (const char* env = std::getenv("CAYLEY_CACHE_DIR")) {
      dir = env;
    } else if (const char* xdg = std::getenv("XDG_CACHE_HOME")) {
      dir = std::string(xdg) + "/cayley-srg";
    } else if (const char* home = std::getenv("HOME")) {
      dir = std::string(home) + "/.cache/cayley-srg";
    } else {
      return "";
    }
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return "";
  return dir;
}

std::string field_cache_save(const FieldCtx& ctx, const std::string& dir) {
  std::string path = dir + "/" + field_cache_file_name(ctx.spec());
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    require(os.good(), Errc::Internal, "cannot write cache file " + tmp);
    os.write("CSRG1", 5);
    write_u64_le(os, ctx.p());
    write_u64_le(os, ctx.f());
    for (std::uint32_t c : ctx.spec().modulus) write_u64_le(os, c);
    ElementSweep s = ctx.sweep_from(0);
    for (std::uint64_t k = 0; k + 1 < ctx.q(); ++k) {
      write_u64_le(os, s.packed());
      s.advance();
    }
    require(os.good(), Errc::Internal, "short write to cache file " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  require(!ec, Errc::Internal, "cannot move cache file into place: " + path);
  return path;
}

bool field_cache_try_load(const FieldSpec& spec, const std::string& dir, std::vector<std::uint64_t>& antilog_out) {
  std::string path = dir + "/" + field_cache_file_name(spec);
  std::ifstream is(path, std::ios::binary);
  if (!is.good()) return false;
  char magic[5];
  if (!is.read(magic, 5) || std::memcmp(magic, "CSRG1", 5) != 0) return false;
  std::uint64_t p = 0, f = 0;
  if (!read_u64_le(is, p) || !read_u64_le(is, f)) return false;
  if (p != spec.p || f != spec.f) return false;
  for (std::uint32_t c : spec.modulus) {
    std::uint64_t cc = 0;
    if (!read_u64_le(is, cc) || cc != c) return false;
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.f; ++i) q *= spec.p;
  antilog_out.resize(q - 1);
  for (std::uint64_t k = 0; k + 1 < q; ++k) {
    if (!read_u64_le(is, antilog_out[k]) || antilog_out[k] == 0 || antilog_out[k] >= q) {
      antilog_out.clear();
      return false;
    }
  }
  if (antilog_out[0] != 1) {
    antilog_out.clear();
    return false;
  }
  return true;
}

MidField MidField::whole(const FieldCtx& ctx, std::uint32_t e_base) {
  require(e_base >= 1 && ctx.f() % e_base == 0, Errc::BadSubfield, "base degree must divide f");
  MidField mf;
  mf.top = &ctx;
  mf.step = 1;
  mf.q_mid = ctx.q();
  mf.f_mid = ctx.f();
  mf.e_base = e_base;
  mf.base_q = checked_pow_u64(ctx.p(), e_base);
  mf.m = ctx.f() / e_base;
  mf.trace_scale = 1;
  mf.scale_valid = true;
  return mf;
}

MidField MidField::in_quadratic_lift(const FieldCtx& ctx, std::uint32_t e_base) {
  require(ctx.f() % 2 == 0, Errc::BadSubfield, "quadratic lift requires even degree");
  std::uint32_t f_mid = ctx.f() / 2;
  require(e_base >= 1 && f_mid % e_base == 0, Errc::BadSubfield, "base degree must divide f/2");
  MidField mf;
  mf.top = &ctx;
  mf.f_mid = f_mid;
  mf.q_mid = checked_pow_u64(ctx.p(), f_mid);
  mf.step = mf.q_mid + 1;
  mf.e_base = e_base;
  mf.base_q = checked_pow_u64(ctx.p(), e_base);
  mf.m = f_mid / e_base;
  if (ctx.p() == 2) {
    mf.scale_valid = false;
    mf.trace_scale = 0;
  } else {
    mf.scale_valid = true;
    mf.trace_scale = static_cast<std::uint32_t>(invmod(2 % ctx.p(), ctx.p()));
  }
  return mf;
}

FieldElem MidField::element(std::uint64_t j) const {
  return top->elem(mulmod(step, j % (q_mid - 1), top->group_order()));
}

bool MidField::contains(FieldElem x) const {
  if (x.is_zero()) return true;
  return x.exponent() % step == 0;
}

std::uint64_t MidField::log(FieldElem x) const {
  require(!x.is_zero(), Errc::LogOfZero, "log of zero");
  require(contains(x), Errc::BadSubfield, "element outside the subfield");
  return x.exponent() / step;
}

std::uint32_t MidField::trace_to_prime(FieldElem x) const {
  if (x.is_zero()) return 0;
  if (scale_valid) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(trace_scale) * top->trace_to_prime(x)) % top->p());
  }
  // generic path: sum the f_mid Frobenius images inside the top field
  FieldElem acc = FieldElem::zero();
  FieldElem cur = x;
  for (std::uint32_t i = 0; i < f_mid; ++i) {
    acc = top->add(acc, cur);
    cur = top->frobenius(cur);
  }
  // acc lies in F_p; read its packed value
  std::uint64_t v = top->packed(acc);
  return static_cast<std::uint32_t>(v % top->p());
}

FieldElem MidField::trace_to_base(FieldElem x) const {
  if (x.is_zero()) return x;
  FieldElem acc = FieldElem::zero();
  FieldElem cur = x;
  for (std::uint32_t i = 0; i < m; ++i) {
    acc = top->add(acc, cur);
    cur = top->frobenius(cur, e_base);
  }
  return acc;
}

std::uint32_t MidField::sweep_trace_to_prime(const ElementSweep& s) const {
  if (scale_valid) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(trace_scale) * s.trace()) % top->p());
  }
  FieldElem x = top->elem(mulmod(step, s.exponent() % (q_mid - 1), top->group_order()));
  return trace_to_prime(x);
}

}  // namespace csrg
