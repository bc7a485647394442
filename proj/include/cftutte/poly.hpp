// Copyright 2026 The Authors.
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

#ifndef CFTUTTE_POLY_HPP
#define CFTUTTE_POLY_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cft {

using Integer = boost::multiprecision::cpp_int;

Integer binomial(unsigned n, unsigned k);

/// Sparse univariate polynomial with exact integer coefficients. Zero
/// coefficients are never stored.
class UnivarPoly {
 public:
  UnivarPoly() = default;
  static UnivarPoly constant(const Integer& c);
  static UnivarPoly monomial(unsigned degree, const Integer& c = 1);

  const std::map<unsigned, Integer>& coeffs() const { return coeffs_; }
  Integer coeff(unsigned degree) const;
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<unsigned> degree() const;
  bool nonnegative() const;
  Integer evaluate(const Integer& value) const;

  void add_term(unsigned degree, const Integer& c);

  UnivarPoly& operator+=(const UnivarPoly& other);
  UnivarPoly& operator-=(const UnivarPoly& other);
  UnivarPoly& operator*=(const Integer& c);

  friend UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
  friend UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b) { return a -= b; }
  friend UnivarPoly operator*(UnivarPoly a, const Integer& c) { return a *= c; }
  friend UnivarPoly operator*(const Integer& c, UnivarPoly a) { return a *= c; }
  friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
  friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

 private:
  std::map<unsigned, Integer> coeffs_;
};

struct Exponent {
  unsigned x = 0;
  unsigned y = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse bivariate polynomial in x and y with exact integer coefficients.
class BivarPoly {
 public:
  BivarPoly() = default;
  static BivarPoly constant(const Integer& c);
  static BivarPoly monomial(unsigned dx, unsigned dy, const Integer& c = 1);
  static BivarPoly in_x(const UnivarPoly& p);
  static BivarPoly in_y(const UnivarPoly& p);

  const std::map<Exponent, Integer>& terms() const { return terms_; }
  Integer coeff(unsigned dx, unsigned dy) const;
  bool is_zero() const { return terms_.empty(); }
  bool nonnegative() const;
  Integer evaluate(const Integer& x, const Integer& y) const;
  // f(x, y) -> f(y, x)
  BivarPoly swapped() const;

  void add_term(unsigned dx, unsigned dy, const Integer& c);

  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator-=(const BivarPoly& other);
  BivarPoly& operator*=(const Integer& c);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(BivarPoly a, const Integer& c) { return a *= c; }
  friend BivarPoly operator*(const Integer& c, BivarPoly a) { return a *= c; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  std::map<Exponent, Integer> terms_;
};

inline BivarPoly scale(BivarPoly f, const Integer& c) { return f *= c; }

// p(x) * q(y), the product of a polynomial in x with one in y.
BivarPoly cross(const UnivarPoly& in_x, const UnivarPoly& in_y);

// Substitute y := 1/x and keep the strictly positive powers of x.
UnivarPoly delta_x(const BivarPoly& f);
// Substitute x := 1/y and keep the nonnegative powers of y.
UnivarPoly delta_y(const BivarPoly& f);

// Cloud of the empty set in U(r,n): sum_{0 <= i < r} C(n,i) x^(r-i).
// Requires r < n, or n = r = 0 (which gives 1).
UnivarPoly bx(unsigned n, unsigned r);
// Flock of the ground set in U(r,n): sum_{r <= i <= n} C(n,i) y^(i-r).
UnivarPoly by(unsigned n, unsigned r);

// f(x + sx, y + sy)
BivarPoly shift(const BivarPoly& f, const Integer& sx, const Integer& sy);
inline BivarPoly tutte_from_rgp(const BivarPoly& s) { return shift(s, -1, -1); }
inline BivarPoly rgp_from_tutte(const BivarPoly& t) { return shift(t, 1, 1); }

// Human-readable forms, e.g. "x^3 + 6x^2 + 15x + 18 + 2xy + 15y". Terms are
// ordered by x-degree minus y-degree (descending), then by y-degree.
std::string to_string(const BivarPoly& f);
std::string to_string(const UnivarPoly& p, char var);

// Inverse of to_string(BivarPoly). Also accepts explicit '*' separators
// ("3*x^2*y") and arbitrary whitespace. Throws ValidationError.
BivarPoly parse_bivar(std::string_view text);

}  // namespace cft

#endif  // CFTUTTE_POLY_HPP
