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

#ifndef CFTUTTE_MATROID_HPP
#define CFTUTTE_MATROID_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cftutte/poly.hpp"

namespace cft {

// Subsets of the ground set {0, ..., n-1} as bitmasks; bit i is element i.
using ElementSet = std::uint64_t;

inline constexpr unsigned kMaxElements = 64;
inline constexpr unsigned kDefaultBasisValidationBound = 16;
inline constexpr unsigned kDefaultFlatBound = 20;
inline constexpr unsigned kRankTableBound = 20;

inline unsigned set_size(ElementSet s) { return static_cast<unsigned>(std::popcount(s)); }
inline bool is_subset(ElementSet a, ElementSet b) { return (a & ~b) == 0; }
inline bool contains(ElementSet s, unsigned e) { return (s >> e) & 1U; }
inline ElementSet singleton(unsigned e) { return ElementSet{1} << e; }
inline ElementSet full_set(unsigned n) {
  return n >= 64 ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
}
ElementSet make_set(std::initializer_list<unsigned> elements);
ElementSet make_set(std::span<const unsigned> elements);
std::vector<unsigned> elements_of(ElementSet s);
std::string set_to_string(ElementSet s);

struct CyclicFlatRecord {
  ElementSet set = 0;
  unsigned rank = 0;
  unsigned size() const { return set_size(set); }
  friend bool operator==(const CyclicFlatRecord&, const CyclicFlatRecord&) = default;
};

// Which axiom of the cyclic-flats scheme failed, plus the sets involved.
// Axiom 0 is reserved for malformed input (out-of-range elements,
// duplicates, rank above size).
struct AxiomViolation {
  int axiom = 0;
  std::string message;
  std::vector<ElementSet> witnesses;
};

std::optional<AxiomViolation> validate_cyclic_flats_presentation(
    unsigned n, std::span<const CyclicFlatRecord> records);

/// A matroid on the ground set {0, ..., n-1}, n <= 64.
///
/// Three backings are supported: an explicit list of bases, a presentation
/// by cyclic flats with their ranks, and the uniform matroid U(r, n). All
/// queries go through rank(); basis-list matroids with n <= 20 carry a
/// precomputed rank table.
class Matroid {
 public:
  struct BasisList {
    std::vector<ElementSet> bases;
  };
  struct CyclicFlats {
    std::vector<CyclicFlatRecord> flats;
  };
  struct Uniform {
    unsigned rank = 0;
  };
  using Backing = std::variant<BasisList, CyclicFlats, Uniform>;

  // Validates basis exchange exhaustively when n <= validation_bound.
  static Matroid from_bases(unsigned n, std::vector<ElementSet> bases,
                            unsigned validation_bound = kDefaultBasisValidationBound);
  static Matroid from_cyclic_flats(unsigned n, std::vector<CyclicFlatRecord> flats);
  static Matroid uniform(unsigned r, unsigned n);

  unsigned size() const { return n_; }
  ElementSet ground() const { return full_set(n_); }
  unsigned rank() const { return full_rank_; }
  unsigned rank(ElementSet a) const;
  ElementSet closure(ElementSet a) const;
  const Backing& backing() const { return backing_; }

 private:
  Matroid(unsigned n, Backing backing);
  unsigned rank_unchecked(ElementSet a) const;

  unsigned n_ = 0;
  Backing backing_;
  unsigned full_rank_ = 0;
  std::shared_ptr<const std::vector<std::uint8_t>> rank_table_;
};

std::vector<ElementSet> bases(const Matroid& m);
bool is_flat(const Matroid& m, ElementSet a);
bool is_cyclic(const Matroid& m, ElementSet a);
ElementSet loops(const Matroid& m);
ElementSet coloops(const Matroid& m);

// All flats, sorted by bitmask value. Throws BoundExceeded for n > bound.
std::vector<ElementSet> flats(const Matroid& m, unsigned bound = kDefaultFlatBound);
// All cyclic flats, sorted by bitmask value.
std::vector<CyclicFlatRecord> cyclic_flats(const Matroid& m,
                                           unsigned bound = kDefaultFlatBound);
// Largest cyclic flat inside the flat f (remove the coloops of m|f).
ElementSet ess(const Matroid& m, ElementSet f);

// A minor relabeled to {0, ..., n'-1}; original[i] is the element of the
// source matroid that became element i.
struct Minor {
  Matroid matroid;
  std::vector<unsigned> original;

  ElementSet to_minor(ElementSet source_set) const;
  ElementSet to_source(ElementSet minor_set) const;
};

Minor restrict(const Matroid& m, ElementSet keep);
Minor contract(const Matroid& m, ElementSet removed);
// m|upper / lower for lower a subset of upper.
Minor minor(const Matroid& m, ElementSet upper, ElementSet lower);
Matroid dual(const Matroid& m);

struct Stripped {
  Minor core;
  unsigned loops = 0;
  unsigned coloops = 0;
};

// Deletes loops and coloops. S(m) = (x+1)^coloops (y+1)^loops S(core).
Stripped strip_loops_coloops(const Matroid& m);
BivarPoly loop_coloop_factor(unsigned loops, unsigned coloops);

}  // namespace cft

#endif  // CFTUTTE_MATROID_HPP
