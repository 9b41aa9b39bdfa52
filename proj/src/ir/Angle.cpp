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

#include "ir/Angle.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "ir/Errors.hpp"

namespace qcc {

NumericConfig& numeric_config() {
  static NumericConfig config;
  return config;
}

std::optional<Rational> snap_rational(double x, double tol, int max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  for (int den = 1; den <= max_den; ++den) {
    double scaled = x * den;
    if (std::fabs(scaled) > 9e15) return std::nullopt;
    double num = std::round(scaled);
    if (std::fabs(x - num / den) <= tol) {
      return Rational(static_cast<std::int64_t>(num), den);
    }
  }
  return std::nullopt;
}

std::optional<Rational> snap_rational(double x) {
  const NumericConfig& cfg = numeric_config();
  return snap_rational(x, cfg.snap_tolerance, cfg.snap_max_denominator);
}

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

Rational mod4(Rational r) {
  // floor(r / 4) computed on integers
  std::int64_t num = r.numerator();
  std::int64_t den = r.denominator();
  std::int64_t period = 4 * den;
  std::int64_t rem = num % period;
  if (rem < 0) rem += period;
  return Rational(rem, den);
}

double fmod4(double x) {
  double y = std::fmod(x, 4.);
  if (y < 0) y += 4.;
  if (y >= 4.) y = 0.;
  return y;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

Angle::Angle(Rational r) : constant_(r) { normalise(); }

Angle Angle::real(double half_turns) {
  Angle a;
  a.is_float_ = true;
  a.float_ = half_turns;
  a.normalise();
  return a;
}

Angle Angle::symbol(const std::string& name, Rational coeff) {
  Angle a;
  if (coeff.numerator() != 0) a.terms_[name] = coeff;
  return a;
}

void Angle::normalise() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.numerator() == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  if (is_float_) {
    float_ = fmod4(float_);
    if (float_ == 0.) {
      is_float_ = false;
      constant_ = 0;
    }
  } else {
    constant_ = mod4(constant_);
  }
}

Rational Angle::exact() const {
  if (!is_exact()) fail(ErrorCode::InvalidArgument, "angle is not exact: " + to_string());
  return constant_;
}

double Angle::value() const {
  if (is_symbolic()) fail(ErrorCode::SymbolicParams, "angle is symbolic: " + to_string());
  if (is_float_) return float_;
  return boost::rational_cast<double>(constant_);
}

double Angle::radians() const { return value() * std::numbers::pi; }

std::set<std::string> Angle::symbols() const {
  std::set<std::string> out;
  for (const auto& [name, coeff] : terms_) out.insert(name);
  return out;
}

bool Angle::is_multiple_of(Rational period, double tol) const {
  if (is_symbolic()) return false;
  if (!is_float_) {
    return (constant_ / period).denominator() == 1;
  }
  double p = boost::rational_cast<double>(period);
  double r = float_ / p;
  return std::fabs(float_ - std::round(r) * p) <= tol;
}

bool Angle::is_clifford() const {
  return is_exact() && (constant_ * 2).denominator() == 1;
}

Angle Angle::operator+(const Angle& o) const {
  Angle a = *this;
  for (const auto& [name, coeff] : o.terms_) a.terms_[name] += coeff;
  if (is_float_ || o.is_float_) {
    double lhs = is_float_ ? float_ : boost::rational_cast<double>(constant_);
    double rhs = o.is_float_ ? o.float_ : boost::rational_cast<double>(o.constant_);
    a.is_float_ = true;
    a.float_ = lhs + rhs;
    a.constant_ = 0;
  } else {
    a.constant_ += o.constant_;
  }
  a.normalise();
  return a;
}

Angle Angle::operator-() const { return *this * Rational(-1); }

Angle Angle::operator-(const Angle& o) const { return *this + (-o); }

Angle Angle::operator*(Rational k) const {
  Angle a = *this;
  for (auto& [name, coeff] : a.terms_) coeff *= k;
  if (a.is_float_)
    a.float_ *= boost::rational_cast<double>(k);
  else
    a.constant_ *= k;
  a.normalise();
  return a;
}

Angle Angle::substitute(const std::map<std::string, Angle>& bindings) const {
  Angle out;
  out.is_float_ = is_float_;
  out.float_ = float_;
  out.constant_ = constant_;
  for (const auto& [name, coeff] : terms_) {
    auto it = bindings.find(name);
    if (it == bindings.end()) {
      out.terms_[name] += coeff;
    } else {
      out = out + it->second * coeff;
    }
  }
  out.normalise();
  return out;
}

Angle Angle::snapped() const {
  if (!is_float_) return *this;
  auto r = snap_rational(float_);
  if (!r) return *this;
  Angle a = *this;
  a.is_float_ = false;
  a.float_ = 0.;
  a.constant_ = *r;
  a.normalise();
  return a;
}

bool Angle::operator==(const Angle& o) const {
  if (terms_ != o.terms_ || is_float_ != o.is_float_) return false;
  return is_float_ ? float_ == o.float_ : constant_ == o.constant_;
}

std::string Angle::to_string() const {
  std::string out;
  for (const auto& [name, coeff] : terms_) {
    Rational mag = coeff < Rational(0) ? -coeff : coeff;
    if (out.empty()) {
      if (coeff < Rational(0)) out += "-";
    } else {
      out += coeff < Rational(0) ? " - " : " + ";
    }
    if (mag != Rational(1)) out += rational_to_string(mag) + "*";
    out += name;
  }
  bool zero_const = !is_float_ && constant_.numerator() == 0;
  if (out.empty()) {
    return is_float_ ? format_double(float_) : rational_to_string(constant_);
  }
  if (!zero_const) {
    out += " + ";
    out += is_float_ ? format_double(float_) : rational_to_string(constant_);
  }
  return out;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void bad_angle(std::string_view text) {
  fail(ErrorCode::InvalidArgument, "malformed angle '" + std::string(text) + "'");
}

// Number: integer, p/q, or decimal. Returns an Angle (exact or float).
Angle parse_number(const std::string& s, std::string_view whole) {
  if (s.empty()) bad_angle(whole);
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t used = 0;
      std::int64_t p = std::stoll(s.substr(0, slash), &used);
      if (used != slash) bad_angle(whole);
      std::string den = s.substr(slash + 1);
      std::int64_t q = std::stoll(den, &used);
      if (used != den.size() || q == 0) bad_angle(whole);
      return Angle(Rational(p, q));
    }
    if (s.find_first_of(".eE") == std::string::npos) {
      std::size_t used = 0;
      std::int64_t p = std::stoll(s, &used);
      if (used != s.size()) bad_angle(whole);
      return Angle(Rational(p));
    }
    std::size_t used = 0;
    double d = std::stod(s, &used);
    if (used != s.size()) bad_angle(whole);
    return Angle::real(d);
  } catch (const std::logic_error&) {
    bad_angle(whole);
  }
}

}  // namespace

Angle Angle::parse(std::string_view text) {
  // Split into signed terms at top-level + and -, skipping exponent signs.
  std::vector<std::pair<int, std::string>> terms;
  int sign = 1;
  std::string cur;
  bool have_content = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool exponent_sign = (c == '+' || c == '-') && i >= 2 &&
                         (text[i - 1] == 'e' || text[i - 1] == 'E') &&
                         std::isdigit(static_cast<unsigned char>(text[i - 2])) &&
                         !cur.empty() && !is_ident_start(trim(cur).empty() ? 'x' : trim(cur)[0]);
    if ((c == '+' || c == '-') && !exponent_sign) {
      if (have_content) {
        terms.emplace_back(sign, trim(cur));
        cur.clear();
        have_content = false;
        sign = 1;
      }
      if (c == '-') sign = -sign;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) have_content = true;
    cur += c;
  }
  if (have_content) terms.emplace_back(sign, trim(cur));
  if (terms.empty()) bad_angle(text);

  Angle out;
  for (auto& [sg, term] : terms) {
    Angle piece;
    auto star = term.find('*');
    if (star != std::string::npos) {
      std::string lhs = trim(term.substr(0, star));
      std::string rhs = trim(term.substr(star + 1));
      if (rhs.empty() || !is_ident_start(rhs[0])) bad_angle(text);
      for (char ch : rhs)
        if (!is_ident_char(ch)) bad_angle(text);
      Angle coeff = parse_number(lhs, text);
      if (!coeff.is_exact()) bad_angle(text);
      // Coefficients are not reduced mod 4, so reparse the raw rational.
      auto slash = lhs.find('/');
      Rational k = slash == std::string::npos
                       ? Rational(std::stoll(lhs))
                       : Rational(std::stoll(lhs.substr(0, slash)), std::stoll(lhs.substr(slash + 1)));
      piece = Angle::symbol(rhs, k);
    } else if (is_ident_start(term[0])) {
      for (char ch : term)
        if (!is_ident_char(ch)) bad_angle(text);
      piece = Angle::symbol(term);
    } else {
      piece = parse_number(term, text);
    }
    out = sg < 0 ? out - piece : out + piece;
  }
  return out;
}

}  // namespace qcc
