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

#ifndef CFTUTTE_CONFIGURATION_HPP
#define CFTUTTE_CONFIGURATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cftutte/matroid.hpp"

namespace cft {

// (cardinality, rank) of a cyclic flat.
struct Label {
  unsigned size = 0;
  unsigned rank = 0;
  friend auto operator<=>(const Label&, const Label&) = default;
};

using NodePair = std::pair<std::size_t, std::size_t>;

/// Abstract lattice of cyclic flats with (cardinality, rank) labels.
///
/// Construction checks that the relation is a partial order forming a
/// lattice, that the bottom is labelled (0,0), and that every strict
/// relation X < Y satisfies 0 < rank(Y)-rank(X) < size(Y)-size(X).
class Configuration {
 public:
  // `relation` may be any generating set of the order (covering pairs
  // suffice); its reflexive-transitive closure is taken.
  static Configuration from_relation(std::vector<Label> nodes,
                                     std::span<const NodePair> relation);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<Label>& nodes() const { return nodes_; }
  const Label& label(std::size_t i) const { return nodes_[i]; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * nodes_.size() + j] != 0; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t join(std::size_t i, std::size_t j) const;
  std::size_t meet(std::size_t i, std::size_t j) const;
  // Covering pairs (i, j), sorted.
  std::vector<NodePair> covers() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  Configuration() = default;

  std::vector<Label> nodes_;
  std::vector<std::uint8_t> leq_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

// Renumbers the nodes canonically: by (rank, size), then by the sorted
// positions of each node's strict down-set. Ties keep their input order.
// permutation[new_index] = old_index.
struct Canonical {
  Configuration config;
  std::vector<std::size_t> permutation;
};
Canonical canonicalize(const Configuration& c);

// The cyclic flats of a matroid together with their configuration;
// sets[i] is the cyclic flat behind node i.
struct CyclicFlatLattice {
  Configuration config;
  std::vector<ElementSet> sets;
};

// Requires a loop- and coloop-free matroid. Nodes are in canonical order.
CyclicFlatLattice cyclic_flat_lattice(const Matroid& m, unsigned bound = kDefaultFlatBound);
Configuration extract_configuration(const Matroid& m, unsigned bound = kDefaultFlatBound);

// Interval [lo, hi] relabelled relative to lo; the configuration of the
// minor M|hi / lo. source[i] is the parent node behind node i.
struct IntervalView {
  Configuration config;
  std::vector<std::size_t> source;
};
IntervalView interval(const Configuration& c, std::size_t lo, std::size_t hi);

}  // namespace cft

#endif  // CFTUTTE_CONFIGURATION_HPP
