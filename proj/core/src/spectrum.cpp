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

#include "csrg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "csrg/numeric.hpp"

namespace csrg {

namespace {

using DistinctMap = std::map<std::vector<std::int64_t>, SpectrumValue>;

void accumulate_value(DistinctMap& map, const CycInt& value, std::uint64_t multiplicity, const std::string& rep) {
  CycInt canon = value.canonical();
  auto [it, inserted] = map.try_emplace(canon.coeffs(), SpectrumValue{canon, 0, rep});
  it->second.multiplicity += multiplicity;
}

SpectrumReport finalize_report(const DistinctMap& map, std::uint64_t group_order, std::uint64_t set_size,
                               std::string grouping, std::uint64_t p) {
  SpectrumReport rep;
  rep.group_order = group_order;
  rep.set_size = set_size;
  rep.grouping = std::move(grouping);
  CycInt rowsum(p);
  for (const auto& [key, sv] : map) {
    rep.distinct.push_back(sv);
    if (!sv.value.is_rational_integer()) rep.all_rational = false;
    rowsum += sv.value * static_cast<std::int64_t>(sv.multiplicity);
  }
  require(rowsum == CycInt(p, -static_cast<std::int64_t>(set_size)), Errc::Internal,
          "character row-sum inconsistency: nontrivial values must sum to -|D|");
  if (rep.all_rational) {
    std::sort(rep.distinct.begin(), rep.distinct.end(), [](const SpectrumValue& a, const SpectrumValue& b) {
      return a.value.rational_value() > b.value.rational_value();
    });
  }
  rep.two_valued = rep.distinct.size() == 2;
  return rep;
}

}  // namespace

SpectrumReport exact_spectrum_additive(const ConnectionSet& set, unsigned workers) {
  require(set.kind == ConnectionSet::Kind::AdditiveCyclotomic, Errc::Internal, "additive spectrum needs an additive set");
  const FieldCtx& F = *set.field;
  const std::uint64_t M = set.class_modulus;
  MidField whole = MidField::whole(F, F.f());
  ClassTraceCounts table = class_trace_counts(whole, M, workers);
  DistinctMap map;
  for (std::uint64_t a = 0; a < M; ++a) {
    CycInt val = period_union(table, set.indices, a);
    accumulate_value(map, val, F.group_order() / M, "a=" + std::to_string(a));
  }
  return finalize_report(map, F.q(), set.size(), "classes mod " + std::to_string(M), F.p());
}

namespace {

struct ProductSweepData {
  std::vector<std::uint8_t> trace;     // tr(omega^e), e in [0, L)
  std::vector<std::uint64_t> wt;       // global trace distribution over F^*
  std::vector<std::uint32_t> eu, ev;   // nonzero element pairs, exponent form
};

ProductSweepData product_sweep_data(const ConnectionSet& set) {
  const FieldCtx& F = *set.field;
  const std::uint64_t L = F.group_order();
  ProductSweepData d;
  d.trace.resize(L);
  d.wt.assign(F.p(), 0);
  ElementSweep s = F.sweep_from(0);
  for (std::uint64_t e = 0; e < L; ++e) {
    d.trace[e] = static_cast<std::uint8_t>(s.trace());
    ++d.wt[d.trace[e]];
    s.advance();
  }
  set.for_each_pair([&](std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) return;  // axes enter analytically
    d.eu.push_back(static_cast<std::uint32_t>(a));
    d.ev.push_back(static_cast<std::uint32_t>(b));
  });
  return d;
}

// psi_{a,b}(D) for one character; alpha/beta < 0 encode a zero coordinate.
CycInt product_char_value(const ConnectionSet& set, const ProductSweepData& d, std::int64_t alpha, std::int64_t beta) {
  const FieldCtx& F = *set.field;
  const std::uint64_t L = F.group_order();
  const std::uint64_t p = F.p();
  std::vector<std::uint64_t> cnt(p, 0);
  const std::size_t n = d.eu.size();
  if (alpha >= 0 && beta >= 0) {
    const std::uint64_t a = static_cast<std::uint64_t>(alpha), b = static_cast<std::uint64_t>(beta);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t ea = a + d.eu[i];
      if (ea >= L) ea -= L;
      std::uint64_t eb = b + d.ev[i];
      if (eb >= L) eb -= L;
      std::uint64_t t = static_cast<std::uint64_t>(d.trace[ea]) + d.trace[eb];
      if (t >= p) t -= p;
      ++cnt[t];
    }
  } else {
    // exactly one of the coordinates is the zero functional
    const std::uint64_t g = static_cast<std::uint64_t>(alpha >= 0 ? alpha : beta);
    const auto& ee = alpha >= 0 ? d.eu : d.ev;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t e = g + ee[i];
      if (e >= L) e -= L;
      ++cnt[d.trace[e]];
    }
  }
  CycInt val = CycInt::from_counts(p, cnt.data());
  if (set.include_axes) {
    // {(0,x)}: psi(b x); {(x,0)}: psi(a x); a zero functional contributes L at 0
    for (int side = 0; side < 2; ++side) {
      std::int64_t g = side == 0 ? beta : alpha;
      if (g < 0) {
        val[0] += static_cast<std::int64_t>(L);
      } else {
        for (std::uint64_t t = 0; t < p; ++t) val[t] += static_cast<std::int64_t>(d.wt[t]);
      }
    }
  }
  return val;
}

std::uint64_t orbit_step(const ConnectionSet& set) {
  const std::uint64_t L = set.field->group_order();
  return set.product_kind == ConnectionSet::ProductKind::FullH ? 1 : L / set.N;
}

// The rescaling (u,v) -> (d u, d^{-1} v), d in <omega^sigma>, fixes the set;
// verified on random elements before the orbit path trusts it.
bool verify_rescaling_symmetry(const ConnectionSet& set, std::uint64_t sigma, std::uint64_t samples) {
  const FieldCtx& F = *set.field;
  const std::uint64_t L = F.group_order();
  std::mt19937_64 rng(set.content_hash() ^ 0x5bd1e995u);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pool;
  set.for_each_pair([&](std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) return;
    if (pool.size() < 4096 && rng() % 7 == 0) pool.emplace_back(a, b);
  });
  if (pool.empty()) set.for_each_pair([&](std::int64_t a, std::int64_t b) {
    if (a >= 0 && b >= 0 && pool.size() < 4096) pool.emplace_back(a, b);
  });
  for (std::uint64_t i = 0; i < samples && !pool.empty(); ++i) {
    auto [eu, ev] = pool[rng() % pool.size()];
    std::uint64_t s = mulmod(sigma, rng() % (L / sigma), L);
    FieldElem u = F.elem(eu + s);
    FieldElem v = F.elem(ev + (L - s));
    if (!set.contains_pair(u, v)) return false;
  }
  return true;
}

SpectrumReport product_spectrum_full(const ConnectionSet& set, const ProductSweepOptions& opts) {
  const FieldCtx& F = *set.field;
  const std::uint64_t L = F.group_order();
  ProductSweepData d = product_sweep_data(set);
  unsigned __int128 ops = (static_cast<unsigned __int128>(L) * L + 2 * static_cast<unsigned __int128>(L)) * d.eu.size();
  require(ops <= opts.ops_budget, Errc::TooLargeForFullSweep,
          "full product sweep needs ~" + std::to_string(static_cast<double>(ops)) +
              " operations; use the orbit-reduced path");

  unsigned chunks = plan_chunks(L + 1, opts.workers);
  std::vector<DistinctMap> partial(chunks);
  // alpha = L plays the zero functional
  chunked_run(L + 1, chunks, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    DistinctMap& local = partial[chunk];
    for (std::uint64_t ai = begin; ai < end; ++ai) {
      std::int64_t alpha = ai == L ? -1 : static_cast<std::int64_t>(ai);
      for (std::uint64_t bi = 0; bi <= L; ++bi) {
        if (ai == L && bi == L) continue;
        std::int64_t beta = bi == L ? -1 : static_cast<std::int64_t>(bi);
        CycInt val = product_char_value(set, d, alpha, beta);
        accumulate_value(local, val, 1, "a=w^" + (alpha < 0 ? std::string("zero") : std::to_string(alpha)) +
                                            ",b=w^" + (beta < 0 ? std::string("zero") : std::to_string(beta)));
      }
    }
  });
  DistinctMap map;
  for (auto& local : partial)
    for (auto& [key, sv] : local) {
      auto [it, inserted] = map.try_emplace(key, sv);
      if (!inserted) it->second.multiplicity += sv.multiplicity;
    }
  return finalize_report(map, set.group_order(), set.size(), "all product characters", F.p());
}

SpectrumReport product_spectrum_orbit(const ConnectionSet& set, const ProductSweepOptions& opts) {
  const FieldCtx& F = *set.field;
  const std::uint64_t L = F.group_order();
  const std::uint64_t sigma = orbit_step(set);
  if (!verify_rescaling_symmetry(set, sigma, opts.symmetry_samples)) {
    // fall back to the exhaustive path; the sampled symmetry is not usable
    return product_spectrum_full(set, opts);
  }
  ProductSweepData d = product_sweep_data(set);
  unsigned __int128 ops = static_cast<unsigned __int128>(sigma) * L * d.eu.size();
  require(ops <= opts.ops_budget, Errc::TooLargeForFullSweep,
          "orbit-reduced product sweep still needs ~" + std::to_string(static_cast<double>(ops)) + " operations");

  DistinctMap map;
  const std::uint64_t orbit_size = L / sigma;
  // nonzero-nonzero characters: representatives (alpha0, beta), alpha0 < sigma
  unsigned chunks = plan_chunks(sigma, opts.workers);
  std::vector<DistinctMap> partial(chunks);
  chunked_run(sigma, chunks, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    DistinctMap& local = partial[chunk];
    for (std::uint64_t alpha0 = begin; alpha0 < end; ++alpha0)
      for (std::uint64_t beta = 0; beta < L; ++beta) {
        CycInt val = product_char_value(set, d, static_cast<std::int64_t>(alpha0), static_cast<std::int64_t>(beta));
        accumulate_value(local, val, orbit_size,
                         "a=w^" + std::to_string(alpha0) + ",b=w^" + std::to_string(beta));
      }
  });
  for (auto& local : partial)
    for (auto& [key, sv] : local) {
      auto [it, inserted] = map.try_emplace(key, sv);
      if (!inserted) it->second.multiplicity += sv.multiplicity;
    }
  // axis characters: psi_{a,0} is constant on the d-orbit of a
  for (std::uint64_t alpha0 = 0; alpha0 < sigma; ++alpha0) {
    accumulate_value(map, product_char_value(set, d, static_cast<std::int64_t>(alpha0), -1), orbit_size,
                     "a=w^" + std::to_string(alpha0) + ",b=zero");
    accumulate_value(map, product_char_value(set, d, -1, static_cast<std::int64_t>(alpha0)), orbit_size,
                     "a=zero,b=w^" + std::to_string(alpha0));
  }
  return finalize_report(map, set.group_order(), set.size(), "product characters up to rescaling", F.p());
}

}  // namespace

SpectrumReport exact_spectrum_product(const ConnectionSet& set, const ProductSweepOptions& opts) {
  require(set.kind == ConnectionSet::Kind::ProductGenerated, Errc::Internal, "product spectrum needs a product set");
  return opts.orbit_reduction ? product_spectrum_orbit(set, opts) : product_spectrum_full(set, opts);
}

SrgParams srg_verify(const ConnectionSet& set, const VerifyOptions& opts) {
  require(set.is_symmetric(), Errc::NotSymmetric, "connection set is not symmetric: " + set.describe());
  SpectrumReport rep;
  if (set.kind == ConnectionSet::Kind::AdditiveCyclotomic) {
    rep = exact_spectrum_additive(set, opts.workers);
  } else {
    try {
      rep = exact_spectrum_product(set, opts.product);
    } catch (const Error& e) {
      if (e.code() != Errc::TooLargeForFullSweep || opts.product.orbit_reduction) throw;
      ProductSweepOptions orbit = opts.product;
      orbit.orbit_reduction = true;
      rep = exact_spectrum_product(set, orbit);
    }
  }
  require(rep.all_rational, Errc::IrrationalSpectrumValue, "spectrum contains non-rational character values");
  if (!rep.two_valued) {
    std::ostringstream os;
    os << "spectrum has " << rep.distinct.size() << " distinct restricted values:";
    for (std::size_t i = 0; i < std::min<std::size_t>(rep.distinct.size(), 6); ++i)
      os << " " << rep.distinct[i].value.to_string();
    fail(Errc::NotTwoValued, os.str());
  }

  SrgParams out;
  out.v = rep.group_order;
  out.k = rep.set_size;
  out.theta1 = rep.distinct[0].value.rational_value();
  out.theta2 = rep.distinct[1].value.rational_value();
  out.mult1 = rep.distinct[0].multiplicity;
  out.mult2 = rep.distinct[1].multiplicity;
  __int128 th1 = out.theta1, th2 = out.theta2, k = static_cast<__int128>(out.k);
  __int128 lambda = k + th1 * th2 + th1 + th2;
  __int128 mu = k + th1 * th2;
  out.lambda = static_cast<std::int64_t>(lambda);
  out.mu = static_cast<std::int64_t>(mu);
  require(mu >= 0 && lambda >= 0, Errc::Internal, "negative lambda/mu from a two-valued spectrum");
  __int128 lhs = k * (k - lambda - 1);
  __int128 rhs = (static_cast<__int128>(out.v) - k - 1) * mu;
  require(lhs == rhs, Errc::Internal, "feasibility identity k(k-lambda-1) = (v-k-1)mu violated");
  require(out.mult1 + out.mult2 == out.v - 1, Errc::Internal, "restricted multiplicities must sum to v-1");

  if (opts.dense_oracle_max_v > 0 && out.v <= opts.dense_oracle_max_v) {
    dense_adjacency_oracle(set, out);
    out.dense_oracle_ran = true;
  }
  return out;
}

namespace {

// group data for the dense oracle: vertex encodings are packed coordinates
// (additive) or pu * q + pv (product)
struct DenseGroup {
  std::uint64_t v;
  std::uint64_t q;        // component field size (product) or full size (additive)
  std::uint64_t p;
  std::uint32_t f;
  bool product;

  std::uint64_t sub_packed(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0, mult = 1;
    for (std::uint32_t i = 0; i < f; ++i) {
      std::uint64_t da = a % p, db = b % p;
      out += ((da + p - db) % p) * mult;
      mult *= p;
      a /= p;
      b /= p;
    }
    return out;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    if (!product) return sub_packed(a, b);
    return sub_packed(a / q, b / q) * q + sub_packed(a % q, b % q);
  }
};

}  // namespace

void dense_adjacency_oracle(const ConnectionSet& set, const SrgParams& params) {
  const FieldCtx& F = *set.field;
  DenseGroup g{set.group_order(), F.q(), F.p(), F.f(), set.kind == ConnectionSet::Kind::ProductGenerated};
  require(g.v <= 1u << 16, Errc::TooLarge, "dense oracle limited to v <= 65536");

  std::vector<std::uint8_t> conn(g.v, 0);
  std::uint64_t listed = 0;
  set.for_each_element([&](std::uint64_t enc) {
    require(enc < g.v && enc != 0, Errc::Internal, "connection element out of range");
    require(!conn[enc], Errc::Internal, "enumerator produced a duplicate element");
    conn[enc] = 1;
    ++listed;
  });
  require(listed == set.size(), Errc::Internal, "enumerator cardinality disagrees with the closed form");

  const std::size_t words = (g.v + 63) / 64;
  std::vector<std::uint64_t> rows(g.v * words, 0);
  for (std::uint64_t i = 0; i < g.v; ++i) {
    std::uint64_t degree = 0;
    for (std::uint64_t j = 0; j < g.v; ++j) {
      if (conn[g.sub(i, j)]) {
        rows[i * words + j / 64] |= 1ull << (j % 64);
        ++degree;
      }
    }
    require(degree == params.k, Errc::Internal, "dense oracle: row degree != k");
  }
  for (std::uint64_t i = 0; i < g.v; ++i) {
    for (std::uint64_t j = i; j < g.v; ++j) {
      std::uint64_t cn = 0;
      const std::uint64_t* ri = &rows[i * words];
      const std::uint64_t* rj = &rows[j * words];
      for (std::size_t w = 0; w < words; ++w) cn += static_cast<std::uint64_t>(__builtin_popcountll(ri[w] & rj[w]));
      std::uint64_t expect;
      if (i == j)
        expect = params.k;
      else if (rows[i * words + j / 64] >> (j % 64) & 1)
        expect = static_cast<std::uint64_t>(params.lambda);
      else
        expect = static_cast<std::uint64_t>(params.mu);
      require(cn == expect, Errc::Internal, "dense oracle: A^2 entry mismatch at (" + std::to_string(i) + "," +
                                                std::to_string(j) + "): " + std::to_string(cn) +
                                                " != " + std::to_string(expect));
    }
  }
}

const char* pc_class_name(PcClass c) {
  switch (c) {
    case PcClass::Zero: return "zero";
    case PcClass::PlusG: return "+G";
    case PcClass::MinusG: return "-G";
    case PcClass::Fail: return "fail";
  }
  return "?";
}

ConditionReport condition_check(const MidField& F, const IndexSet& X, const IndexSet& I, Side side,
                                const ClassTraceCounts* table2N) {
  const std::uint64_t N = I.modulus();
  require(N % 2 == 1 && N >= 3, Errc::EvenModulus, "halving condition needs odd N >= 3");
  require(X.modulus() == 2 * N, Errc::InconsistentIndexSets, "X must live in Z_2N");
  require((F.q_mid - 1) % (2 * N) == 0, Errc::BadDivisor, "2N must divide q^m - 1");
  IndexSet half_I = I.scaled(invmod(2 % N, N));
  IndexSet target = (side == Side::Subdiff) ? half_I : half_I.complement();
  require(X.reduced_mod(N) == target, Errc::InconsistentIndexSets,
          "X mod N must equal " + std::string(side == Side::Subdiff ? "2^{-1}I" : "the complement of 2^{-1}I"));

  ClassTraceCounts local;
  if (!table2N) {
    local = class_trace_counts(F, 2 * N);
    table2N = &local;
  }
  require(table2N->modulus == 2 * N, Errc::InconsistentIndexSets, "count table modulus mismatch");
  ClassTraceCounts tableN = table2N->folded_to(N);
  ClassTraceCounts table2 = table2N->folded_to(2);
  CycInt g = table2.period(0) - table2.period(1);

  ConditionReport rep;
  rep.N = N;
  rep.side = side;
  rep.g_exact = g.canonical();
  const CycInt zero(F.top->p(), 0);
  bool pass = true;
  int sign_seen = 0;  // +1 / -1 once a signed value appears
  bool single_sign = true;
  for (std::uint64_t c = 0; c < N; ++c) {
    std::uint64_t c_even = (c % 2 == 0) ? c : c + N;  // the even representative mod 2N
    CycInt lhs = period_union(*table2N, X, c_even) * 2 - period_union(tableN, target, c);
    PcClass cls;
    if (lhs == zero)
      cls = PcClass::Zero;
    else if (lhs == g)
      cls = PcClass::PlusG;
    else if (lhs == -g)
      cls = PcClass::MinusG;
    else
      cls = PcClass::Fail;
    bool want_g = (side == Side::Subdiff) ? half_I.contains(c) : !half_I.contains(c);
    if (want_g) {
      if (cls != PcClass::PlusG && cls != PcClass::MinusG) pass = false;
      int s = cls == PcClass::PlusG ? 1 : cls == PcClass::MinusG ? -1 : 0;
      if (s != 0) {
        if (sign_seen == 0)
          sign_seen = s;
        else if (sign_seen != s)
          single_sign = false;
      }
    } else {
      if (cls != PcClass::Zero) pass = false;
    }
    rep.records.push_back(ConditionRecord{c, lhs.canonical(), cls});
  }
  rep.pass = pass;
  rep.pass_global = pass && single_sign;
  return rep;
}

SearchResult partition_search(const MidField& F, const IndexSet& base, Side side, const IndexSet& I,
                              unsigned workers) {
  const std::uint64_t N = I.modulus();
  require(base.modulus() == N, Errc::InconsistentIndexSets, "base set must live in Z_N");
  IndexSet expected = (side == Side::Subdiff) ? I : I.complement();
  require(base == expected, Errc::InconsistentIndexSets, "base set must be I (subdiff side) or its complement");
  const std::size_t n = base.size();
  require(n >= 1 && n <= 30, Errc::SearchSpaceTooLarge,
          "partition search is limited to 2^30 candidates, got |base| = " + std::to_string(n));

  ClassTraceCounts table = class_trace_counts(F, 2 * N);
  const std::uint64_t reps = 1ull << (n - 1);
  const auto& residues = base.residues();

  unsigned chunks = plan_chunks(reps, workers == 0 ? worker_cap() : workers);
  std::vector<std::vector<PartitionSpec>> partial(chunks);
  chunked_run(reps, chunks, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      PartitionSpec ps;
      ps.side = side;
      ps.P1 = IndexSet(N);
      ps.P2 = IndexSet(N);
      ps.P1.insert(residues[0]);  // the minimum element stays in P1 (mirror reduction)
      for (std::size_t i = 1; i < n; ++i) {
        if (mask >> (i - 1) & 1)
          ps.P1.insert(residues[i]);
        else
          ps.P2.insert(residues[i]);
      }
      HalvingIndexSets hs = build_halving_sets(ps, N, base);
      ConditionReport rep = condition_check(F, hs.X, I, side, &table);
      if (rep.pass) partial[chunk].push_back(std::move(ps));
    }
  });

  SearchResult out;
  out.candidates = 1ull << n;
  out.evaluated = reps;
  for (auto& hits : partial)
    for (auto& ps : hits) {
      PartitionSpec mirror{ps.side, ps.P2, ps.P1};
      out.hits.push_back(std::move(ps));
      out.hits.push_back(std::move(mirror));
    }
  return out;
}

namespace {

int delta_sign_mod4(std::uint64_t a_mod4, std::uint64_t N) {
  std::uint64_t n4 = N % 4, n34 = (3 * N) % 4;
  if (a_mod4 == 0 || a_mod4 == n4) return 1;
  if (a_mod4 == 2 || a_mod4 == n34) return -1;
  fail(Errc::Internal, "unreachable residue class in the sign rule");
}

Cplx condition_term(const ClassTraceCounts& t2N, const ClassTraceCounts& tN, const IndexSet& X, const IndexSet& S,
                    std::uint64_t c2N) {
  CycInt lhs = period_union(t2N, X, c2N) * 2 - period_union(tN, S, c2N % tN.modulus);
  return lhs.to_complex();
}

}  // namespace

double crosscheck_elliptic_half(const FieldCtx& big, const MidField& mid, std::uint64_t N,
                                const HalvingIndexSets& hs, const IndexSet& I, Side side) {
  const std::uint64_t qm = mid.q_mid;
  require(qm % 4 == 3, Errc::HypothesisFailed, "elliptic halving formulas need q^m = 3 (mod 4)");
  const std::uint64_t p = big.p();
  require(p % 4 == 3, Errc::HypothesisFailed, "q^m = 3 (mod 4) forces p = 3 (mod 4)");
  const double rho = (p % 8 == 7) ? 1.0 : -1.0;

  MidField whole_big = MidField::whole(big, big.f());
  ClassTraceCounts big4N = class_trace_counts(whole_big, 4 * N);
  ClassTraceCounts mid2N = class_trace_counts(mid, 2 * N);
  ClassTraceCounts midN = mid2N.folded_to(N);

  IndexSet half_I = I.scaled(invmod(2 % N, N));
  IndexSet S = (side == Side::Subdiff) ? half_I : half_I.complement();
  Cplx G = quadratic_gauss_exact(mid).to_complex();
  // exact: 2N divides q^m - 1
  const double base = static_cast<double>((qm - 1) / (2 * N) * (side == Side::Subdiff ? I.size() : N - I.size()));
  const std::uint64_t inv4 = invmod(4 % N, N);

  double maxdev = 0.0;
  for (std::uint64_t a = 0; a < 4 * N; ++a) {
    Cplx lhs = period_union(big4N, hs.Y, a).to_complex();
    std::uint64_t b = mulmod(inv4, a % N, N);
    std::uint64_t c = (2 * b) % (2 * N);
    int da = delta_sign_mod4(a % 4, N);
    Cplx pterm = condition_term(mid2N, midN, hs.X, S, c);
    bool in_half_I = half_I.contains(c % N);
    double bracket = (side == Side::Subdiff) ? (in_half_I ? qm / 2.0 : 0.0) : (in_half_I ? 0.0 : qm / 2.0);
    Cplx rhs = (rho * da * static_cast<double>(qm)) / (2.0 * G) * pterm + base - bracket;
    maxdev = std::max(maxdev, std::abs(lhs - rhs));
  }
  return maxdev;
}

double crosscheck_hyperbolic_half(const FieldCtx& field, std::uint64_t base_q, std::uint64_t N,
                                  const HalvingIndexSets& hs, const IndexSet& I, Side side) {
  const std::uint64_t qm = field.q();
  require(qm % 4 == 1, Errc::HypothesisFailed, "hyperbolic halving formulas need q^m = 1 (mod 4)");
  const std::uint64_t L = field.group_order();
  ConnectionSet H = hyperbolic_connection(field, base_q, N, ConnectionSet::ProductKind::Half, hs.Y, false);
  ProductSweepData d = product_sweep_data(H);

  std::uint32_t e_base = 0;
  for (std::uint32_t e = 1; e <= field.f(); ++e)
    if (field.f() % e == 0 && checked_pow_u64(field.p(), e) == base_q) e_base = e;
  require(e_base > 0, Errc::BadSubfield, "base_q is not a subfield order");
  MidField mid = MidField::whole(field, e_base);
  ClassTraceCounts mid2N = class_trace_counts(mid, 2 * N);
  ClassTraceCounts midN = mid2N.folded_to(N);

  IndexSet half_I = I.scaled(invmod(2 % N, N));
  IndexSet S = (side == Side::Subdiff) ? half_I : half_I.complement();
  Cplx G = quadratic_gauss_exact(mid).to_complex();
  // exact: 2N divides q^m - 1
  const double base = static_cast<double>((qm - 1) / (2 * N) * (side == Side::Subdiff ? I.size() : N - I.size()));
  const std::uint64_t log_two = field.from_int(2).exponent();
  const std::uint64_t half_mod = (N + 1) / 2;

  double maxdev = 0.0;
  auto check = [&](std::int64_t alpha, std::int64_t beta) {
    Cplx lhs = product_char_value(H, d, alpha, beta).to_complex();
    Cplx rhs;
    if (alpha < 0 || beta < 0) {
      rhs = -base;
    } else {
      std::uint64_t la = static_cast<std::uint64_t>(alpha), lb = static_cast<std::uint64_t>(beta);
      std::uint64_t c_full = mulmod(half_mod, (la + lb) % L, L);
      int dab = delta_sign_mod4(((lb + L - la) % L) % 4, N);
      double eta2wc = ((log_two + c_full) % 2 == 0) ? 1.0 : -1.0;
      Cplx pterm = condition_term(mid2N, midN, hs.X, S, c_full % (2 * N));
      bool in_half_I = half_I.contains(c_full % N);
      double bracket = (side == Side::Subdiff) ? (in_half_I ? qm / 2.0 : 0.0) : (in_half_I ? 0.0 : qm / 2.0);
      rhs = eta2wc * G * static_cast<double>(dab) / 2.0 * pterm - base + bracket;
    }
    maxdev = std::max(maxdev, std::abs(lhs - rhs));
  };
  for (std::uint64_t a = 0; a < L; ++a) {
    check(static_cast<std::int64_t>(a), -1);
    check(-1, static_cast<std::int64_t>(a));
    for (std::uint64_t b = 0; b < L; ++b) check(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
  }
  return maxdev;
}

Cplx base_quadratic_gauss(const MidField& F) {
  const FieldCtx& T = *F.top;
  const std::uint64_t q = F.base_q;
  const std::uint64_t N = (F.q_mid - 1) / (q - 1);
  Cplx acc{0, 0};
  const double w = 2.0 * std::numbers::pi / static_cast<double>(T.p());
  for (std::uint64_t t = 0; t + 1 < q; ++t) {
    FieldElem y = F.element(mulmod(N, t, F.q_mid - 1));
    // tr_{q/p} of the base subfield element
    FieldElem tr = FieldElem::zero();
    FieldElem cur = y;
    for (std::uint32_t i = 0; i < F.e_base; ++i) {
      tr = T.add(tr, cur);
      cur = T.frobenius(cur);
    }
    std::uint64_t tv = tr.is_zero() ? 0 : T.packed(tr) % T.p();
    double ang = w * static_cast<double>(tv);
    double sign = (t % 2 == 0) ? 1.0 : -1.0;
    acc += sign * Cplx{std::cos(ang), std::sin(ang)};
  }
  return acc;
}

QuadricSumCheck crosscheck_quadric_sums(const MidField& F, const QuadricPartitionResult& qp, bool flat) {
  const FieldCtx& T = *F.top;
  const std::uint64_t q = F.base_q;
  const std::uint64_t L = F.q_mid - 1;
  const std::uint64_t N = L / (q - 1);
  const std::uint32_t m = F.m;
  const std::uint32_t half = (m - 1) / 2;
  const auto& frame = qp.frame;

  // trace table of the mid-field canonical character
  std::vector<std::uint8_t> Ttab(L);
  for (std::uint64_t e = 0; e < L; ++e) Ttab[e] = static_cast<std::uint8_t>(F.trace_to_prime(F.element(e)));
  const std::uint64_t p = T.p();
  std::vector<Cplx> zp(p);
  for (std::uint64_t t = 0; t < p; ++t) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(p);
    zp[t] = {std::cos(ang), std::sin(ang)};
  }

  Cplx Gq = base_quadratic_gauss(F);
  const int eps = (q % 4 == 3) ? 1 : 0;
  std::uint32_t tau = base_square_class(F, T.from_int(2));
  const double qpow_half = std::pow(static_cast<double>(q), (m - 1) / 2.0);

  auto sq_class = [&](FieldElem x) -> std::int32_t {
    FieldElem t = F.trace_to_base(T.mul(x, x));
    if (t.is_zero()) return -1;
    return static_cast<std::int32_t>(base_square_class(F, t));
  };
  auto lin_class = [&](FieldElem a, FieldElem x) -> std::int32_t {
    FieldElem t = F.trace_to_base(T.mul(a, x));
    if (t.is_zero()) return -1;
    return static_cast<std::int32_t>(base_square_class(F, t));
  };

  // spans of the frame prefixes, as packed values (0 included)
  std::vector<std::set<std::uint64_t>> spans(half + 1);
  spans[0].insert(0);
  for (std::uint32_t l = 1; l <= half; ++l) {
    spans[l] = spans[l - 1];
    std::set<std::uint64_t> next;
    for (std::uint64_t sv : spans[l - 1]) {
      FieldElem s = sv == 0 ? FieldElem::zero() : T.from_packed(sv);
      for (std::uint64_t t = 0; t + 1 < q; ++t) {
        FieldElem e = T.add(s, T.mul(F.element(mulmod(N, t, L)), frame.a[l - 1]));
        next.insert(e.is_zero() ? 0 : T.packed(e));
      }
    }
    for (std::uint64_t sv : next) spans[l].insert(sv);
  }

  QuadricSumCheck out;
  std::uint32_t b_class = base_square_class(F, F.trace_to_base(T.mul(frame.b, frame.b)));

  auto run_level = [&](const std::vector<std::uint64_t>& members, std::uint32_t level) {
    // members: exponents of the set being summed (T_level or B)
    for (std::uint64_t a = 0; a < L; ++a) {
      Cplx lhs{0, 0};
      for (std::uint64_t e : members) {
        std::uint64_t s = a + e;
        if (s >= L) s -= L;
        lhs += zp[Ttab[s]];
      }
      FieldElem x = F.element(a);
      Cplx rhs{0, 0};
      std::size_t branch = 3;
      if (!flat) {
        std::uint64_t px = T.packed(x);
        std::int32_t i = sq_class(x);
        if (spans[level].count(px) && !spans[level - 1].count(px)) {
          branch = 1;
          rhs = -std::pow(static_cast<double>(q), static_cast<double>(m - level - 1)) * (q - 1) / 2.0;
        } else if (spans[level - 1].count(px)) {
          branch = 2;
          rhs = std::pow(static_cast<double>(q), static_cast<double>(m - level - 1)) * (q - 1) * (q - 1) / 2.0;
        } else if (i >= 0) {
          bool in_flats = true;
          for (std::uint32_t l = 1; l < level; ++l)
            if (!F.trace_to_base(T.mul(frame.a[l - 1], x)).is_zero()) {
              in_flats = false;
              break;
            }
          std::int32_t j = in_flats ? lin_class(frame.a[level - 1], x) : -1;
          if (in_flats && j >= 0) {
            branch = 0;
            double sign_i = ((static_cast<std::uint32_t>(i) + eps * half) % 2 == 0) ? 1.0 : -1.0;
            double sign_j = ((static_cast<std::uint32_t>(j) + tau) % 2 == 0) ? 1.0 : -1.0;
            rhs = sign_i * qpow_half * (-1.0 + sign_j * Gq) / 2.0;
          }
        }
      } else {
        bool in_flats = true;
        for (std::uint32_t l = 1; l <= half; ++l)
          if (!F.trace_to_base(T.mul(frame.a[l - 1], x)).is_zero()) {
            in_flats = false;
            break;
          }
        if (in_flats) {
          FieldElem tb = F.trace_to_base(T.mul(frame.b, x));
          if (tb.is_zero()) {
            branch = 2;
            rhs = qpow_half * (q - 1) / 2.0;
          } else {
            std::uint32_t i = base_square_class(F, tb);
            branch = i;  // 0 or 1
            double sign = (i == 0) ? 1.0 : -1.0;
            rhs = qpow_half * (-1.0 + sign * Gq) / 2.0;
          }
        }
      }
      ++out.branch_counts[branch];
      out.max_dev = std::max(out.max_dev, std::abs(lhs - rhs));
    }
  };

  if (flat) {
    std::vector<std::uint64_t> B;
    for (std::uint64_t e = 0; e < L; ++e) {
      FieldElem x = F.element(e);
      bool in_flats = true;
      for (std::uint32_t l = 1; l <= half; ++l)
        if (!F.trace_to_base(T.mul(frame.a[l - 1], x)).is_zero()) {
          in_flats = false;
          break;
        }
      if (!in_flats) continue;
      FieldElem tb = F.trace_to_base(T.mul(frame.b, x));
      if (tb.is_zero()) continue;
      if (base_square_class(F, tb) == b_class) B.push_back(e);
    }
    run_level(B, 0);
  } else {
    for (std::uint32_t level = 1; level <= half; ++level) {
      std::vector<std::uint64_t> Tl;
      for (std::uint64_t e = 0; e < L; ++e) {
        FieldElem x = F.element(e);
        std::int32_t i = sq_class(x);
        if (i < 0) continue;
        bool in_flats = true;
        for (std::uint32_t l = 1; l < level; ++l)
          if (!F.trace_to_base(T.mul(frame.a[l - 1], x)).is_zero()) {
            in_flats = false;
            break;
          }
        if (!in_flats) continue;
        std::int32_t j = lin_class(frame.a[level - 1], x);
        if (j == i) Tl.push_back(e);
      }
      run_level(Tl, level);
    }
  }
  return out;
}

}  // namespace csrg
