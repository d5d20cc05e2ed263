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

#include "csrg/cyclotomic_integer.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace csrg {

CycInt& CycInt::operator+=(const CycInt& o) {
  require(p_ == o.p_, Errc::Internal, "cyclotomic order mismatch");
  for (std::size_t j = 0; j < p_; ++j) c_[j] += o.c_[j];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  require(p_ == o.p_, Errc::Internal, "cyclotomic order mismatch");
  for (std::size_t j = 0; j < p_; ++j) c_[j] -= o.c_[j];
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt z = *this;
  for (auto& v : z.c_) v = -v;
  return z;
}

CycInt& CycInt::operator*=(std::int64_t s) {
  for (auto& v : c_) v *= s;
  return *this;
}

CycInt CycInt::operator*(const CycInt& o) const {
  require(p_ == o.p_, Errc::Internal, "cyclotomic order mismatch");
  CycInt z(p_);
  for (std::size_t i = 0; i < p_; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < p_; ++j) {
      std::size_t k = i + j;
      if (k >= p_) k -= p_;
      z.c_[k] += c_[i] * o.c_[j];
    }
  }
  z.canonicalize();
  return z;
}

CycInt CycInt::conj() const {
  CycInt z(p_);
  for (std::size_t j = 0; j < p_; ++j) z.c_[(p_ - j) % p_] = c_[j];
  return z;
}

CycInt CycInt::rotated(std::uint64_t j) const {
  CycInt z(p_);
  for (std::size_t i = 0; i < p_; ++i) z.c_[(i + j) % p_] = c_[i];
  return z;
}

bool operator==(const CycInt& a, const CycInt& b) {
  require(a.p_ == b.p_, Errc::Internal, "cyclotomic order mismatch");
  std::int64_t da = a.c_[a.p_ - 1], db = b.c_[b.p_ - 1];
  for (std::size_t j = 0; j < a.p_; ++j)
    if (a.c_[j] - da != b.c_[j] - db) return false;
  return true;
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  const double w = 2.0 * std::numbers::pi / static_cast<double>(p_);
  for (std::size_t j = 0; j < p_; ++j) {
    if (c_[j] == 0) continue;
    double a = w * static_cast<double>(j);
    z += static_cast<double>(c_[j]) * std::complex<double>(std::cos(a), std::sin(a));
  }
  return z;
}

std::string CycInt::to_string() const {
  CycInt z = canonical();
  if (z.is_rational_integer()) return std::to_string(z.rational_value());
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < p_; ++j) {
    if (z.c_[j] == 0) continue;
    if (!first) os << (z.c_[j] > 0 ? " + " : " - ");
    else if (z.c_[j] < 0) os << "-";
    std::int64_t a = std::llabs(z.c_[j]);
    if (a != 1 || j == 0) os << a;
    if (j > 0) {
      if (a != 1) os << "*";
      os << "z^" << j;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace csrg
