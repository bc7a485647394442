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

#ifndef CFTUTTE_PMD_HPP
#define CFTUTTE_PMD_HPP

// Perfect matroid designs: every flat of rank i has cardinality k[i].

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cftutte/condensation.hpp"
#include "cftutte/errors.hpp"
#include "cftutte/poly.hpp"

namespace cft {

using Rational = boost::multiprecision::cpp_rational;

// Strictly increasing k[0..r] with k[0] = 0.
class PmdSpec {
 public:
  static PmdSpec create(std::vector<std::uint64_t> k);

  const std::vector<std::uint64_t>& k() const { return k_; }
  unsigned rank() const { return static_cast<unsigned>(k_.size() - 1); }
  // k = (0, 1, ..., r): every element is a coloop.
  bool is_free() const;
  // Ranks whose flats are cyclic: 0, r, and every i with k[i] > k[i-1] + 1.
  std::vector<unsigned> cyclic_ranks() const;

 private:
  explicit PmdSpec(std::vector<std::uint64_t> k) : k_(std::move(k)) {}
  std::vector<std::uint64_t> k_;
};

// The product prod_{h<i} (k[j]-k[h]) / (k[i]-k[h]) kept unreduced, so a
// failing witness reads exactly as the product was formed.
struct PmdFraction {
  Integer numerator = 1;
  Integer denominator = 1;

  Rational value() const { return Rational(numerator, denominator); }
  bool integral() const { return numerator % denominator == 0; }
  std::string to_string() const;
};

// Number of rank-i flats inside a fixed rank-j flat, i <= j.
PmdFraction pmd_count_fraction(const PmdSpec& spec, unsigned i, unsigned j);
inline Rational pmd_count(const PmdSpec& spec, unsigned i, unsigned j) {
  return pmd_count_fraction(spec, i, j).value();
}

class InfeasiblePmd : public InfeasibleError {
 public:
  InfeasiblePmd(unsigned i, unsigned j, PmdFraction fraction);
  unsigned i() const { return i_; }
  unsigned j() const { return j_; }
  const PmdFraction& fraction() const { return fraction_; }

 private:
  unsigned i_;
  unsigned j_;
  PmdFraction fraction_;
};

// Blocks are the cyclic ranks in increasing order, labelled (k[i], i), with
// A(i, j) = pmd_count(i, j). Throws InfeasiblePmd on a non-integral count,
// ValidationError for the free matroid (it has no coloop-free core).
CondensedConfiguration pmd_condensed_configuration(const PmdSpec& spec);
BivarPoly pmd_rgp(const PmdSpec& spec);

struct PmdViolation {
  enum class Kind { kInvalidSequence, kNonIntegerCount, kNegativeCoefficient, kExponentOutOfRange };
  Kind kind;
  unsigned i = 0;
  unsigned j = 0;
  std::string message;
};

struct PmdReport {
  std::vector<PmdViolation> violations;
  std::vector<std::string> notes;
  bool feasible() const { return violations.empty(); }
};

// Collects every obstruction found: invalid sequence, non-integral counts,
// negative coefficients in the averaged recursion, and exponents of averaged
// cloud (flock) polynomials outside [0, rank gap] ([0, nullity gap]).
PmdReport pmd_feasibility_report(const std::vector<std::uint64_t>& k);

}  // namespace cft

#endif  // CFTUTTE_PMD_HPP
