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

#ifndef CFTUTTE_CONDENSATION_HPP
#define CFTUTTE_CONDENSATION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cftutte/configuration.hpp"
#include "cftutte/matroid.hpp"
#include "cftutte/poly.hpp"

namespace cft {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Block labels plus the generalized adjacency matrix A, where A(b, c) counts
/// the members of block b below any fixed member of block c.
///
/// Construction checks: A is square with unit diagonal and nonnegative
/// entries, A > 0 is a partial order and a lattice on the blocks, the least
/// block is labelled (0,0), and strict relations have 0 < rank gap < size gap.
class CondensedConfiguration {
 public:
  static CondensedConfiguration create(std::vector<Label> labels, IntMatrix a);

  std::size_t size() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(std::size_t b) const { return labels_[b]; }
  const IntMatrix& matrix() const { return a_; }
  const Integer& a(std::size_t b, std::size_t c) const { return a_[b][c]; }
  bool leq(std::size_t b, std::size_t c) const { return a_[b][c] > 0; }
  bool less(std::size_t b, std::size_t c) const { return b != c && leq(b, c); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  friend bool operator==(const CondensedConfiguration&, const CondensedConfiguration&) = default;

 private:
  CondensedConfiguration() = default;

  std::vector<Label> labels_;
  IntMatrix a_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

// Blocks of node indices of a source configuration.
using Partition = std::vector<std::vector<std::size_t>>;

/// A partition of a source lattice whose blocks are condensation blocks.
/// Blocks are sorted internally and ordered by (rank, size, smallest node);
/// the representative of each block is its smallest node.
struct Condensation {
  Partition blocks;
  CondensedConfiguration condensed;
};

struct CondensationViolation {
  // 0: not a partition of the nodes, 1: label not constant on a block,
  // 2: count A(b, c) depends on the member of c.
  int condition = 0;
  std::string message;
  std::vector<std::size_t> witnesses;
};

std::optional<CondensationViolation> validate_condensation(const Configuration& source,
                                                           const Partition& partition);

// Validates, orders and measures a partition. Throws ValidationError.
Condensation make_condensation(const Configuration& source, Partition partition);
Condensation trivial_condensation(const Configuration& source);
// Refines the by-label partition until every block has constant downward
// counts against every other block.
Condensation coarsest_condensation(const Configuration& source);

// True if every block of `fine` lies inside a block of `coarse`.
bool refines(const Partition& fine, const Partition& coarse);

// A permutation of the ground set: image[e] is where element e goes.
using Permutation = std::vector<unsigned>;

ElementSet apply(const Permutation& g, ElementSet s);

// Orbits of the group generated by `generators` acting on the cyclic flats.
// Each generator must map cyclic flats to cyclic flats of the same rank
// (equivalently, be an automorphism); otherwise ValidationError.
Condensation orbits_from_generators(const CyclicFlatLattice& lattice, const Matroid& m,
                                    std::span<const Permutation> generators);

/// Averaged cloud and flock polynomials for every pair b <= c of blocks:
///
///   cloud(b, c) = A(b, c) bx(n, r) - delta_x(S(b, c))
///   flock(b, c) = A(b, c) by(n, r) - delta_y(S(b, c))
///   S(b, c)     = sum over d strictly between b and c of cloud(d, c) flock(b, d)
///
/// with n, r the size and rank gaps between the two block labels.
class AvgCloudFlockTable {
 public:
  // strict: throw InfeasibleError at the first negative coefficient.
  // Otherwise the recursion runs to completion and records each offending
  // pair in negative_entries().
  explicit AvgCloudFlockTable(const CondensedConfiguration& cc, bool strict = true);

  std::size_t size() const { return blocks_; }
  bool defined(std::size_t b, std::size_t c) const { return defined_[b * blocks_ + c] != 0; }
  // Throws std::out_of_range unless b <= c.
  const UnivarPoly& cloud(std::size_t b, std::size_t c) const;
  const UnivarPoly& flock(std::size_t b, std::size_t c) const;
  const std::vector<std::pair<std::size_t, std::size_t>>& negative_entries() const {
    return negative_;
  }

 private:
  std::size_t blocks_ = 0;
  std::vector<char> defined_;
  std::vector<UnivarPoly> cloud_;
  std::vector<UnivarPoly> flock_;
  std::vector<std::pair<std::size_t, std::size_t>> negative_;
};

inline AvgCloudFlockTable avg_cloud_flock(const CondensedConfiguration& cc) {
  return AvgCloudFlockTable(cc);
}

// sum over blocks b of cloud(b, top) * flock(bottom, b).
BivarPoly rgp_from_condensed(const CondensedConfiguration& cc);
BivarPoly rgp_from_table(const CondensedConfiguration& cc, const AvgCloudFlockTable& table);

}  // namespace cft

#endif  // CFTUTTE_CONDENSATION_HPP
