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

#include <stdexcept>
#include <string>

namespace csrg {

enum class Errc {
  NonPrime,
  NotIrreducible,
  NotPrimitive,
  TableBudgetExceeded,
  DivisionByZero,
  BadSubfield,
  LogOfZero,
  NotSemiprimitive,
  DegenerateCharacter,
  EvenCharacteristic,
  BadDivisor,
  NotTwoValued,
  EvenModulus,
  NotAPartition,
  BadModulusCongruence,
  GcdConditionViolated,
  NotOddPrimePower,
  EvenParameters,
  FrameSelectionFailed,
  HypothesisFailed,
  InconsistentIndexSets,
  SearchSpaceTooLarge,
  TooLargeForFullSweep,
  NotSymmetric,
  IrrationalSpectrumValue,
  TooLarge,
  CacheCorrupt,
  Internal,
};

const char* errc_name(Errc c);

/// Library-wide exception. `code()` distinguishes verified mathematical
/// failures (e.g. NotTwoValued) from parameter/usage problems.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// True for error codes that represent a mathematically verified negative
/// answer rather than bad input; the CLI maps these to exit code 1.
bool is_math_failure(Errc c);

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace csrg
