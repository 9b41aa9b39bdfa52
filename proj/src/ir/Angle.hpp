// Copyright 2026 The qcc Authors
//
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

#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace qcc {

using Rational = boost::rational<std::int64_t>;

/** Process-wide numeric knobs. */
struct NumericConfig {
  double snap_tolerance = 1e-12;
  int snap_max_denominator = 64;
  unsigned unitary_qubit_cap = 10;
};
NumericConfig& numeric_config();

/**
 * Returns p/q with q <= max_den if |x - p/q| <= tol.
 */
std::optional<Rational> snap_rational(
    double x, double tol, int max_den);
std::optional<Rational> snap_rational(double x);

/**
 * A gate parameter in half-turns (multiples of pi).
 *
 * Exact values are rationals, inexact values are doubles, and symbolic values
 * are linear combinations of named symbols plus a constant. The constant is
 * kept reduced into [0, 4).
 */
class Angle {
 public:
  Angle() = default;
  Angle(Rational r);  // NOLINT(runtime/explicit)
  Angle(std::int64_t n) : Angle(Rational(n)) {}  // NOLINT
  static Angle exact(std::int64_t num, std::int64_t den = 1) {
    return Angle(Rational(num, den));
  }
  static Angle real(double half_turns);
  static Angle symbol(const std::string& name, Rational coeff = 1);

  bool is_symbolic() const { return !terms_.empty(); }
  bool is_numeric() const { return terms_.empty(); }
  bool is_exact() const { return terms_.empty() && !is_float_; }
  bool is_float() const { return terms_.empty() && is_float_; }

  /** Exact value; throws if not exact. */
  Rational exact() const;
  /** Numeric value in half-turns; throws if symbolic. */
  double value() const;
  /** Radians; throws if symbolic. */
  double radians() const;

  std::set<std::string> symbols() const;
  const std::map<std::string, Rational>& terms() const { return terms_; }

  /** True if numerically a multiple of `period` half-turns (exact check when exact). */
  bool is_multiple_of(Rational period, double tol = 1e-11) const;
  bool is_zero_mod(Rational period, double tol = 1e-11) const {
    return is_multiple_of(period, tol);
  }
  /** Exact multiple of 1/2. */
  bool is_clifford() const;

  Angle operator+(const Angle& o) const;
  Angle operator-(const Angle& o) const;
  Angle operator-() const;
  Angle operator*(Rational k) const;
  Angle& operator+=(const Angle& o) { return *this = *this + o; }

  /** Substitute bound symbols. */
  Angle substitute(const std::map<std::string, Angle>& bindings) const;

  /** Snap a float within tolerance of a small rational. */
  Angle snapped() const;

  bool operator==(const Angle& o) const;
  bool operator!=(const Angle& o) const { return !(*this == o); }
  /** Structural order used only for deterministic containers. */
  bool operator<(const Angle& o) const { return to_string() < o.to_string(); }

  /** "1/2", "3", "0.31830988618379069", "2*a + b + 1/4". */
  std::string to_string() const;
  static Angle parse(std::string_view text);

 private:
  void normalise();

  std::map<std::string, Rational> terms_;
  Rational constant_ = 0;
  double float_ = 0.;
  bool is_float_ = false;
};

std::string rational_to_string(const Rational& r);

}  // namespace qcc
