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

#include "cftutte/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "cftutte/errors.hpp"

namespace cft {

namespace {

template <class Key>
void accumulate(std::map<Key, Integer>& m, const Key& key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

Integer power(const Integer& base, unsigned e) {
  Integer result = 1;
  for (unsigned i = 0; i < e; ++i) result *= base;
  return result;
}

}  // namespace

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

// ---------------------------------------------------------------------------
// UnivarPoly

UnivarPoly UnivarPoly::constant(const Integer& c) { return monomial(0, c); }

UnivarPoly UnivarPoly::monomial(unsigned degree, const Integer& c) {
  UnivarPoly p;
  p.add_term(degree, c);
  return p;
}

Integer UnivarPoly::coeff(unsigned degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

std::optional<unsigned> UnivarPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

bool UnivarPoly::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return kv.second > 0; });
}

Integer UnivarPoly::evaluate(const Integer& value) const {
  Integer sum = 0;
  for (const auto& [d, c] : coeffs_) sum += c * power(value, d);
  return sum;
}

void UnivarPoly::add_term(unsigned degree, const Integer& c) {
  accumulate(coeffs_, degree, c);
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& other) {
  for (const auto& [d, c] : other.coeffs_) accumulate(coeffs_, d, c);
  return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& other) {
  for (const auto& [d, c] : other.coeffs_) accumulate(coeffs_, d, Integer(-c));
  return *this;
}

UnivarPoly& UnivarPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& kv : coeffs_) kv.second *= c;
  return *this;
}

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
  UnivarPoly out;
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) out.add_term(da + db, ca * cb);
  return out;
}

// ---------------------------------------------------------------------------
// BivarPoly

BivarPoly BivarPoly::constant(const Integer& c) { return monomial(0, 0, c); }

BivarPoly BivarPoly::monomial(unsigned dx, unsigned dy, const Integer& c) {
  BivarPoly f;
  f.add_term(dx, dy, c);
  return f;
}

BivarPoly BivarPoly::in_x(const UnivarPoly& p) {
  BivarPoly f;
  for (const auto& [d, c] : p.coeffs()) f.add_term(d, 0, c);
  return f;
}

BivarPoly BivarPoly::in_y(const UnivarPoly& p) {
  BivarPoly f;
  for (const auto& [d, c] : p.coeffs()) f.add_term(0, d, c);
  return f;
}

Integer BivarPoly::coeff(unsigned dx, unsigned dy) const {
  auto it = terms_.find(Exponent{dx, dy});
  return it == terms_.end() ? Integer(0) : it->second;
}

bool BivarPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second > 0; });
}

Integer BivarPoly::evaluate(const Integer& x, const Integer& y) const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c * power(x, e.x) * power(y, e.y);
  return sum;
}

BivarPoly BivarPoly::swapped() const {
  BivarPoly f;
  for (const auto& [e, c] : terms_) f.terms_.emplace(Exponent{e.y, e.x}, c);
  return f;
}

void BivarPoly::add_term(unsigned dx, unsigned dy, const Integer& c) {
  accumulate(terms_, Exponent{dx, dy}, c);
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, Integer(-c));
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(ea.x + eb.x, ea.y + eb.y, ca * cb);
  return out;
}

BivarPoly cross(const UnivarPoly& in_x, const UnivarPoly& in_y) {
  BivarPoly out;
  for (const auto& [dx, cx] : in_x.coeffs())
    for (const auto& [dy, cy] : in_y.coeffs()) out.add_term(dx, dy, cx * cy);
  return out;
}

UnivarPoly delta_x(const BivarPoly& f) {
  UnivarPoly out;
  for (const auto& [e, c] : f.terms())
    if (e.x > e.y) out.add_term(e.x - e.y, c);
  return out;
}

UnivarPoly delta_y(const BivarPoly& f) {
  UnivarPoly out;
  for (const auto& [e, c] : f.terms())
    if (e.y >= e.x) out.add_term(e.y - e.x, c);
  return out;
}

UnivarPoly bx(unsigned n, unsigned r) {
  if (n == 0 && r == 0) return UnivarPoly::constant(1);
  if (r >= n) {
    throw ValidationError("bx(" + std::to_string(n) + "," + std::to_string(r) +
                          "): rank must be below size");
  }
  UnivarPoly p;
  for (unsigned i = 0; i < r; ++i) p.add_term(r - i, binomial(n, i));
  return p;
}

UnivarPoly by(unsigned n, unsigned r) {
  if (n == 0 && r == 0) return UnivarPoly::constant(1);
  if (r >= n) {
    throw ValidationError("by(" + std::to_string(n) + "," + std::to_string(r) +
                          "): rank must be below size");
  }
  UnivarPoly p;
  for (unsigned i = r; i <= n; ++i) p.add_term(i - r, binomial(n, i));
  return p;
}

BivarPoly shift(const BivarPoly& f, const Integer& sx, const Integer& sy) {
  BivarPoly out;
  for (const auto& [e, c] : f.terms()) {
    for (unsigned i = 0; i <= e.x; ++i) {
      Integer cx = c * binomial(e.x, i) * power(sx, e.x - i);
      if (cx == 0) continue;
      for (unsigned j = 0; j <= e.y; ++j)
        out.add_term(i, j, cx * binomial(e.y, j) * power(sy, e.y - j));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

void append_monomial(std::ostringstream& os, const Integer& magnitude,
                     unsigned dx, unsigned dy) {
  bool unit = magnitude == 1;
  if (!unit || (dx == 0 && dy == 0)) os << magnitude;
  if (dx > 0) {
    os << 'x';
    if (dx > 1) os << '^' << dx;
  }
  if (dy > 0) {
    os << 'y';
    if (dy > 1) os << '^' << dy;
  }
}

void append_signed(std::ostringstream& os, bool first, const Integer& c,
                   unsigned dx, unsigned dy) {
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  append_monomial(os, c < 0 ? Integer(-c) : c, dx, dy);
}

}  // namespace

std::string to_string(const BivarPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Exponent, Integer>> terms(f.terms().begin(),
                                                  f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    long da = static_cast<long>(a.first.x) - a.first.y;
    long db = static_cast<long>(b.first.x) - b.first.y;
    if (da != db) return da > db;
    return a.first.y < b.first.y;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    append_signed(os, first, c, e.x, e.y);
    first = false;
  }
  return os.str();
}

std::string to_string(const UnivarPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    auto [d, c] = *it;
    append_signed(os, first, c, var == 'x' ? d : 0, var == 'x' ? 0 : d);
    first = false;
  }
  return os.str();
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  BivarPoly parse() {
    BivarPoly f;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      f.add_term(e.x, e.y, negative ? Integer(-c) : c);
      skip_space();
    }
    return f;
  }

 private:
  std::pair<Exponent, Integer> term() {
    Integer c = 1;
    bool seen = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = Integer(digits());
      seen = true;
    }
    Exponent e;
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
      }
      char v = peek();
      if (v != 'x' && v != 'y') break;
      ++pos_;
      unsigned d = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        d = static_cast<unsigned>(std::stoul(digits()));
      }
      (v == 'x' ? e.x : e.y) += d;
      seen = true;
    }
    if (!seen) fail("expected a term");
    return {e, c};
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("polynomial parse error at offset " +
                          std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_bivar(std::string_view text) { return TermParser(text).parse(); }

}  // namespace cft
