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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "csrg/errors.hpp"

namespace csrg {

/// An exact element of Z[zeta_p]: coefficients (c_0, ..., c_{p-1}) of
/// sum c_j zeta_p^j. Since sum_j zeta_p^j = 0, the representation is unique
/// once c_{p-1} = 0; canonicalize() subtracts c_{p-1} from every coefficient
/// and is idempotent. Every exact additive character sum lives here.
class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(std::uint64_t p) : p_(p), c_(p, 0) {}
  CycInt(std::uint64_t p, std::int64_t rational) : p_(p), c_(p, 0) { c_[0] = rational; }
  static CycInt from_counts(std::uint64_t p, const std::uint64_t* counts) {
    CycInt z(p);
    for (std::uint64_t j = 0; j < p; ++j) z.c_[j] = static_cast<std::int64_t>(counts[j]);
    return z;
  }

  std::uint64_t p() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  std::int64_t& operator[](std::size_t j) { return c_[j]; }
  std::int64_t operator[](std::size_t j) const { return c_[j]; }

  CycInt& canonicalize() {
    std::int64_t top = c_[p_ - 1];
    if (top != 0)
      for (auto& v : c_) v -= top;
    return *this;
  }
  CycInt canonical() const {
    CycInt z = *this;
    z.canonicalize();
    return z;
  }

  /// True iff all of c_1..c_{p-1} agree (any representation); the rational
  /// value is then c_0 - c_1.
  bool is_rational_integer() const {
    for (std::size_t j = 2; j < p_; ++j)
      if (c_[j] != c_[1]) return false;
    return true;
  }
  std::int64_t rational_value() const {
    require(is_rational_integer(), Errc::IrrationalSpectrumValue, "cyclotomic integer is not rational");
    return c_[0] - (p_ > 1 ? c_[1] : 0);
  }

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  CycInt operator-() const;
  CycInt& operator*=(std::int64_t s);
  friend CycInt operator*(CycInt a, std::int64_t s) { return a *= s; }

  /// Ring product (cyclic convolution, then canonicalized).
  CycInt operator*(const CycInt& o) const;
  /// Complex conjugation zeta -> zeta^{-1}.
  CycInt conj() const;
  /// Multiplication by zeta_p^j (coefficient rotation).
  CycInt rotated(std::uint64_t j) const;

  /// Equal as algebraic numbers (compares canonical forms).
  friend bool operator==(const CycInt& a, const CycInt& b);
  friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  std::uint64_t p_ = 0;
  std::vector<std::int64_t> c_;
};

}  // namespace csrg
