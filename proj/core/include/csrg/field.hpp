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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "csrg/errors.hpp"

namespace csrg {

/// Parameters of a constructed field F_{p^f}. The modulus is monic of degree
/// f, stored as f+1 coefficients with the constant term first; its residue x
/// is required to generate the multiplicative group (primitive modulus).
struct FieldSpec {
  std::uint64_t p = 0;
  std::uint32_t f = 0;
  std::vector<std::uint32_t> modulus;

  std::uint64_t content_hash() const;
};

/// A field element in exponent form: Zero, or Exp(k) = omega^k with
/// k in [0, q-2]. All arithmetic goes through the owning FieldCtx.
class FieldElem {
 public:
  constexpr FieldElem() : k_(-1) {}

  static constexpr FieldElem zero() { return FieldElem(); }
  /// k must already be reduced into [0, q-2]; FieldCtx::elem normalizes.
  static FieldElem from_exponent(std::int64_t k) {
    FieldElem e;
    e.k_ = k;
    return e;
  }

  bool is_zero() const { return k_ < 0; }
  std::uint64_t exponent() const {
    require(k_ >= 0, Errc::LogOfZero, "exponent of zero element");
    return static_cast<std::uint64_t>(k_);
  }

  friend bool operator==(FieldElem a, FieldElem b) { return a.k_ == b.k_; }
  friend bool operator!=(FieldElem a, FieldElem b) { return a.k_ != b.k_; }

 private:
  std::int64_t k_;
};

struct FieldOptions {
  /// Full log/antilog tables are materialized (lazily, on first random-access
  /// use) only when q <= table_budget.
  std::uint64_t table_budget = 1ull << 27;
  /// When false, building a field with q > table_budget is an error instead
  /// of falling back to streaming enumeration + BSGS logs.
  bool allow_streaming = true;
  /// Cache directory for antilog tables. Empty: $CAYLEY_CACHE_DIR, else the
  /// platform cache dir. "-" disables the cache.
  std::string cache_dir;
  /// Tables smaller than this many entries are not worth caching on disk.
  std::uint64_t cache_min_entries = 1ull << 20;
};

class FieldCtx;

/// Streaming enumerator of omega^k, k = k0, k0+1, ...: maintains the
/// coordinate vector incrementally (one multiplication by omega per step)
/// so large fields never need materialized tables.
class ElementSweep {
 public:
  void advance();
  std::uint32_t trace() const;  // tr_{q/p} of the current element
  std::uint64_t packed() const;
  const std::vector<std::uint32_t>& coords() const { return c_; }
  std::uint64_t exponent() const { return k_; }

 private:
  friend class FieldCtx;
  const FieldCtx* ctx_ = nullptr;
  std::vector<std::uint32_t> c_;
  std::vector<std::uint32_t> mult_;  // multiplier coords; empty = multiply by x
  std::uint64_t k_ = 0;
  std::uint64_t step_ = 1;  // exponent advance per step (in omega-exponent units)
};

/// A constructed finite field: deterministic primitive modulus, exponent
/// arithmetic, trace, discrete logs. Immutable after construction (the lazy
/// log/antilog tables are built under a once-flag) and shareable across
/// threads.
class FieldCtx {
 public:
  static FieldCtx build(std::uint64_t p, std::uint32_t f, const std::vector<std::uint32_t>* modulus = nullptr,
                        const FieldOptions& opts = {});

  FieldCtx(FieldCtx&&) noexcept;
  FieldCtx& operator=(FieldCtx&&) noexcept;
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;
  ~FieldCtx();

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t p() const { return spec_.p; }
  std::uint32_t f() const { return spec_.f; }
  std::uint64_t q() const { return q_; }
  std::uint64_t group_order() const { return q_ - 1; }
  const std::vector<std::pair<std::uint64_t, std::uint32_t>>& group_order_factors() const { return qm1_factors_; }

  FieldElem zero() const { return FieldElem::zero(); }
  FieldElem one() const { return FieldElem::from_exponent(0); }
  FieldElem omega() const { return elem(1); }
  /// omega^k with k reduced modulo q-1.
  FieldElem elem(std::uint64_t k) const { return FieldElem::from_exponent(static_cast<std::int64_t>(k % (q_ - 1))); }
  /// The constant n mod p.
  FieldElem from_int(std::uint64_t n) const;

  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::int64_t e) const;
  FieldElem neg(FieldElem a) const;
  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  /// x -> x^(p^times)
  FieldElem frobenius(FieldElem a, std::uint32_t times = 1) const;

  /// Trace onto the subfield F_{p^sub_degree}; sub_degree must divide f.
  FieldElem trace(FieldElem a, std::uint32_t sub_degree) const;
  /// tr_{q/p} as a residue in Z_p.
  std::uint32_t trace_to_prime(FieldElem a) const;
  std::uint32_t trace_of_packed(std::uint64_t v) const;

  /// Coordinates packed as sum c_i p^i (c_0 least significant).
  std::uint64_t packed(FieldElem a) const;
  std::vector<std::uint32_t> coords(FieldElem a) const;
  FieldElem from_packed(std::uint64_t v) const;
  FieldElem from_coords(const std::vector<std::uint32_t>& c) const;

  /// Exponent of a nonzero element (trivial in this representation).
  std::uint64_t discrete_log(FieldElem a) const { return a.exponent(); }
  /// Coordinate form -> exponent via the log table when materialized, else BSGS.
  std::uint64_t log_packed(std::uint64_t v) const;
  /// Always uses baby-step giant-step (exposed so the table path can be cross-checked).
  std::uint64_t bsgs_log_packed(std::uint64_t v) const;

  ElementSweep sweep_from(std::uint64_t exponent) const;
  /// Sweep of (omega^step)^j starting at j = j0.
  ElementSweep sweep_subgroup(std::uint64_t step, std::uint64_t j0) const;

  bool table_mode() const { return q_ <= opts_.table_budget && q_ <= (1ull << 32); }
  bool tables_built() const;
  void ensure_tables() const;

  /// tr_{q/p}(x^i) for i < f; trace_to_prime is the dot product with these.
  const std::vector<std::uint32_t>& trace_basis() const { return trace_basis_; }

 private:
  FieldCtx() = default;

  FieldSpec spec_;
  std::uint64_t q_ = 0;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> qm1_factors_;
  std::vector<std::uint32_t> trace_basis_;
  std::vector<std::uint32_t> reduction_;  // coords of x^f mod modulus
  FieldOptions opts_;

  struct Tables;
  std::unique_ptr<Tables> tables_;

  friend class ElementSweep;
  void mul_by_x_inplace(std::vector<std::uint32_t>& c) const;
  void poly_mul_inplace(std::vector<std::uint32_t>& c, const std::vector<std::uint32_t>& m) const;
  std::vector<std::uint32_t> coords_by_powering(std::uint64_t exponent) const;
};

/// Explicit cache interface (build/ensure_tables consult it automatically for
/// large tables). Returns the file path written / loaded from.
std::string field_cache_save(const FieldCtx& ctx, const std::string& dir);
bool field_cache_try_load(const FieldSpec& spec, const std::string& dir, std::vector<std::uint64_t>& antilog_out);
std::string field_cache_file_name(const FieldSpec& spec);
std::string resolve_cache_dir(const std::string& configured);

/// A subfield F_{q_mid} realized inside a containing field as
/// {0} + <omega_top^step>, together with the base subfield F_{base_q} its
/// Singer-type traces map to. For a directly built field, step = 1.
struct MidField {
  const FieldCtx* top = nullptr;
  std::uint64_t step = 1;
  std::uint64_t q_mid = 0;
  std::uint32_t f_mid = 0;
  std::uint64_t base_q = 0;
  std::uint32_t e_base = 0;
  std::uint32_t m = 0;              // f_mid / e_base
  std::uint32_t trace_scale = 1;    // tr_{mid/p} = trace_scale * tr_{top/p} on mid
  bool scale_valid = true;          // false when p divides f_top/f_mid

  /// The whole field viewed over its subfield F_{p^e_base}.
  static MidField whole(const FieldCtx& ctx, std::uint32_t e_base);
  /// The index-2 subfield {0} + <omega^(q_mid+1)> of a quadratic extension.
  static MidField in_quadratic_lift(const FieldCtx& ctx, std::uint32_t e_base);

  std::uint64_t group_order() const { return q_mid - 1; }
  FieldElem element(std::uint64_t j) const;  // omega_mid^j, as a top-field element
  FieldElem omega() const { return element(1); }
  bool contains(FieldElem x) const;
  std::uint64_t log(FieldElem x) const;  // exponent base omega_mid
  std::uint32_t trace_to_prime(FieldElem x) const;
  /// Tr_{q_mid/base_q}(x), returned as a top-field element.
  FieldElem trace_to_base(FieldElem x) const;
  ElementSweep sweep_from(std::uint64_t j0) const { return top->sweep_subgroup(step, j0); }
  std::uint32_t sweep_trace_to_prime(const ElementSweep& s) const;
};

}  // namespace csrg
