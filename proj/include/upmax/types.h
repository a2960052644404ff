// Copyright 2026 The upmax Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UPMAX_TYPES_H_
#define UPMAX_TYPES_H_

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace upmax {

// Variables are 1-based, as in DIMACS.
using Var = int;

// Clause weights and costs. Unweighted instances use weight 1 everywhere.
using Weight = std::int64_t;

// Weight of a mandatory clause. Every arithmetic helper below saturates at
// kTop, so kTop - w == kTop and kTop + w == kTop.
inline constexpr Weight kTop = std::numeric_limits<Weight>::max() / 4;

inline constexpr Weight AddWeight(Weight a, Weight b) {
  return (a >= kTop || b >= kTop || a + b >= kTop) ? kTop : a + b;
}

inline constexpr Weight SubWeight(Weight a, Weight b) {
  return a >= kTop ? kTop : a - b;
}

inline constexpr Weight MulWeight(Weight w, std::int64_t n) {
  if (w >= kTop) return n == 0 ? 0 : kTop;
  if (n != 0 && w > kTop / n) return kTop;
  return w * n;
}

inline constexpr bool IsTop(Weight w) { return w >= kTop; }

// A literal is a variable or its negation. Encoded as 2*(var-1)+negated so
// that literals index dense per-literal arrays directly.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Var var, bool negated)
      : code_(2 * (var - 1) + (negated ? 1 : 0)) {}

  static constexpr Literal FromCode(int code) {
    Literal l;
    l.code_ = code;
    return l;
  }
  static Literal FromDimacs(int value) {
    if (value == 0) throw std::invalid_argument("literal 0 is not a literal");
    return Literal(std::abs(value), value < 0);
  }

  constexpr Var var() const { return (code_ >> 1) + 1; }
  constexpr bool negated() const { return (code_ & 1) != 0; }
  constexpr int code() const { return code_; }
  constexpr int ToDimacs() const { return negated() ? -var() : var(); }

  constexpr Literal operator~() const { return FromCode(code_ ^ 1); }

  friend constexpr bool operator==(Literal a, Literal b) = default;
  friend constexpr auto operator<=>(Literal a, Literal b) = default;

 private:
  int code_ = 0;
};

std::string ToString(Literal l);

// Base class of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Internal consistency audit failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace upmax

#endif  // UPMAX_TYPES_H_
