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

#include "cftutte/condensation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "cftutte/errors.hpp"

namespace cft {

// ---------------------------------------------------------------------------
// CondensedConfiguration

CondensedConfiguration CondensedConfiguration::create(std::vector<Label> labels, IntMatrix a) {
  const std::size_t m = labels.size();
  if (m == 0) throw ValidationError("condensed configuration has no blocks");
  if (a.size() != m) throw ValidationError("matrix row count does not match block count");
  for (const auto& row : a) {
    if (row.size() != m) throw ValidationError("matrix is not square");
    for (const auto& v : row)
      if (v < 0) throw ValidationError("matrix has a negative entry");
  }
  for (std::size_t b = 0; b < m; ++b)
    if (a[b][b] != 1) throw ValidationError("diagonal entry " + std::to_string(b) + " is not 1");

  CondensedConfiguration cc;
  cc.labels_ = std::move(labels);
  cc.a_ = std::move(a);
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t c = 0; c < m; ++c) {
      if (!cc.less(b, c)) continue;
      if (cc.leq(c, b))
        throw ValidationError("blocks " + std::to_string(b) + " and " + std::to_string(c) +
                              " are mutually related");
      for (std::size_t d = 0; d < m; ++d)
        if (cc.leq(c, d) && !cc.leq(b, d))
          throw ValidationError("block order is not transitive at " + std::to_string(b) + " < " +
                                std::to_string(c) + " < " + std::to_string(d));
      const Label& lb = cc.labels_[b];
      const Label& lc = cc.labels_[c];
      if (lc.size <= lb.size || lc.rank <= lb.rank || lc.rank - lb.rank >= lc.size - lb.size)
        throw ValidationError("blocks " + std::to_string(b) + " < " + std::to_string(c) +
                              " need 0 < rank gap < size gap");
    }
  }

  std::optional<std::size_t> bottom, top;
  for (std::size_t b = 0; b < m; ++b) {
    bool below_all = true, above_all = true;
    for (std::size_t c = 0; c < m; ++c) {
      below_all = below_all && cc.leq(b, c);
      above_all = above_all && cc.leq(c, b);
    }
    if (below_all) bottom = b;
    if (above_all) top = b;
  }
  if (!bottom || !top) throw ValidationError("block order lacks a least or greatest block");
  if (cc.labels_[*bottom] != Label{0, 0}) throw ValidationError("least block must be labelled (0,0)");
  if (cc.a_[*bottom][*top] != 1) throw ValidationError("least block must have a single member");
  cc.bottom_ = *bottom;
  cc.top_ = *top;

  // Lattice: every pair of blocks has a least common upper bound.
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t c = b + 1; c < m; ++c) {
      std::optional<std::size_t> best;
      for (std::size_t d = 0; d < m; ++d)
        if (cc.leq(b, d) && cc.leq(c, d) && (!best || cc.leq(d, *best))) best = d;
      for (std::size_t d = 0; d < m; ++d)
        if (cc.leq(b, d) && cc.leq(c, d) && !cc.leq(*best, d))
          throw ValidationError("blocks " + std::to_string(b) + " and " + std::to_string(c) +
                                " have no join");
    }
  }
  return cc;
}

// ---------------------------------------------------------------------------
// Condensations of a source lattice

std::optional<CondensationViolation> validate_condensation(const Configuration& source,
                                                           const Partition& partition) {
  const std::size_t m = source.size();
  std::vector<int> owner(m, -1);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) return CondensationViolation{0, "empty block", {}};
    for (std::size_t x : partition[b]) {
      if (x >= m) return CondensationViolation{0, "node out of range", {x}};
      if (owner[x] != -1) return CondensationViolation{0, "node in two blocks", {x}};
      owner[x] = static_cast<int>(b);
    }
  }
  for (std::size_t x = 0; x < m; ++x)
    if (owner[x] == -1) return CondensationViolation{0, "node in no block", {x}};

  for (const auto& block : partition)
    for (std::size_t x : block)
      if (source.label(x) != source.label(block.front()))
        return CondensationViolation{1, "cardinality or rank differs within a block",
                                     {block.front(), x}};

  for (std::size_t b = 0; b < partition.size(); ++b) {
    for (const auto& target : partition) {
      std::optional<std::size_t> expected;
      for (std::size_t y : target) {
        std::size_t count = 0;
        for (std::size_t x : partition[b]) count += source.leq(x, y);
        if (!expected) {
          expected = count;
        } else if (*expected != count) {
          return CondensationViolation{
              2,
              "block " + std::to_string(b) + " has " + std::to_string(*expected) + " members below node " +
                  std::to_string(target.front()) + " but " + std::to_string(count) + " below node " +
                  std::to_string(y),
              {target.front(), y}};
        }
      }
    }
  }
  return std::nullopt;
}

Condensation make_condensation(const Configuration& source, Partition partition) {
  if (auto violation = validate_condensation(source, partition))
    throw ValidationError("not a condensation (condition " + std::to_string(violation->condition) +
                          "): " + violation->message);
  for (auto& block : partition) std::sort(block.begin(), block.end());
  std::sort(partition.begin(), partition.end(), [&](const auto& p, const auto& q) {
    const Label& lp = source.label(p.front());
    const Label& lq = source.label(q.front());
    return std::tie(lp.rank, lp.size, p.front()) < std::tie(lq.rank, lq.size, q.front());
  });

  const std::size_t k = partition.size();
  std::vector<Label> labels;
  labels.reserve(k);
  IntMatrix a(k, std::vector<Integer>(k, 0));
  for (std::size_t b = 0; b < k; ++b) {
    labels.push_back(source.label(partition[b].front()));
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t rep = partition[c].front();
      std::size_t count = 0;
      for (std::size_t x : partition[b]) count += source.leq(x, rep);
      a[b][c] = count;
    }
  }
  return {std::move(partition), CondensedConfiguration::create(std::move(labels), std::move(a))};
}

Condensation trivial_condensation(const Configuration& source) {
  Partition p;
  for (std::size_t x = 0; x < source.size(); ++x) p.push_back({x});
  return make_condensation(source, std::move(p));
}

Condensation coarsest_condensation(const Configuration& source) {
  const std::size_t m = source.size();
  std::vector<std::size_t> block_of(m);
  std::size_t count = 0;
  {
    std::map<Label, std::size_t> by_label;
    for (std::size_t x = 0; x < m; ++x) {
      auto [it, inserted] = by_label.try_emplace(source.label(x), by_label.size());
      block_of[x] = it->second;
    }
    count = by_label.size();
  }

  for (;;) {
    // Signature of y: its current block followed by, for each block, the
    // number of members below y.
    std::map<std::vector<std::size_t>, std::size_t> by_signature;
    std::vector<std::size_t> next(m);
    for (std::size_t y = 0; y < m; ++y) {
      std::vector<std::size_t> signature(count + 1, 0);
      signature[0] = block_of[y];
      for (std::size_t x = 0; x < m; ++x)
        if (source.leq(x, y)) ++signature[block_of[x] + 1];
      auto [it, inserted] = by_signature.try_emplace(std::move(signature), by_signature.size());
      next[y] = it->second;
    }
    const std::size_t next_count = by_signature.size();
    block_of = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }

  Partition p(count);
  for (std::size_t x = 0; x < m; ++x) p[block_of[x]].push_back(x);
  if (auto violation = validate_condensation(source, p))
    throw InternalError("refinement fixpoint is not a condensation: " + violation->message);
  return make_condensation(source, std::move(p));
}

bool refines(const Partition& fine, const Partition& coarse) {
  std::unordered_map<std::size_t, std::size_t> owner;
  for (std::size_t b = 0; b < coarse.size(); ++b)
    for (std::size_t x : coarse[b]) owner[x] = b;
  for (const auto& block : fine) {
    if (block.empty()) continue;
    auto first = owner.find(block.front());
    if (first == owner.end()) return false;
    for (std::size_t x : block) {
      auto it = owner.find(x);
      if (it == owner.end() || it->second != first->second) return false;
    }
  }
  return true;
}

ElementSet apply(const Permutation& g, ElementSet s) {
  ElementSet out = 0;
  for (unsigned e : elements_of(s)) out |= singleton(g.at(e));
  return out;
}

Condensation orbits_from_generators(const CyclicFlatLattice& lattice, const Matroid& m,
                                    std::span<const Permutation> generators) {
  const std::size_t k = lattice.sets.size();
  std::unordered_map<ElementSet, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(lattice.sets[i], i);

  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const Permutation& g = generators[gi];
    if (g.size() != m.size())
      throw ValidationError("generator " + std::to_string(gi) + " has the wrong length");
    std::vector<char> hit(m.size(), 0);
    for (unsigned e : g) {
      if (e >= m.size() || hit[e]) throw ValidationError("generator " + std::to_string(gi) + " is not a permutation");
      hit[e] = 1;
    }
    for (std::size_t i = 0; i < k; ++i) {
      auto it = index.find(apply(g, lattice.sets[i]));
      if (it == index.end() || lattice.config.label(it->second) != lattice.config.label(i))
        throw ValidationError("generator " + std::to_string(gi) + " is not an automorphism: " +
                              set_to_string(lattice.sets[i]) + " is not mapped to a cyclic flat of equal rank");
      std::size_t a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < k; ++i) orbits[find(i)].push_back(i);
  Partition p;
  for (auto& [root, members] : orbits) p.push_back(std::move(members));
  if (auto violation = validate_condensation(lattice.config, p))
    throw InternalError("orbit partition is not a condensation: " + violation->message);
  return make_condensation(lattice.config, std::move(p));
}

// ---------------------------------------------------------------------------
// Averaged cloud/flock recursion

AvgCloudFlockTable::AvgCloudFlockTable(const CondensedConfiguration& cc, bool strict)
    : blocks_(cc.size()),
      defined_(blocks_ * blocks_, 0),
      cloud_(blocks_ * blocks_),
      flock_(blocks_ * blocks_) {
  const std::size_t k = blocks_;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> pairs;
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t c = 0; c < k; ++c) {
      if (!cc.leq(b, c)) continue;
      std::size_t width = 0;
      for (std::size_t d = 0; d < k; ++d) width += cc.leq(b, d) && cc.leq(d, c);
      pairs.emplace_back(width, b, c);
    }
  }
  std::sort(pairs.begin(), pairs.end());

  for (auto [width, b, c] : pairs) {
    const std::size_t at = b * k + c;
    defined_[at] = 1;
    if (b == c) {
      cloud_[at] = UnivarPoly::constant(1);
      flock_[at] = UnivarPoly::constant(1);
      continue;
    }
    BivarPoly s;
    for (std::size_t d = 0; d < k; ++d)
      if (cc.less(b, d) && cc.less(d, c)) s += cross(cloud_[d * k + c], flock_[b * k + d]);
    const unsigned n = cc.label(c).size - cc.label(b).size;
    const unsigned r = cc.label(c).rank - cc.label(b).rank;
    UnivarPoly cl = cc.a(b, c) * bx(n, r) - delta_x(s);
    UnivarPoly fl = cc.a(b, c) * by(n, r) - delta_y(s);
    if (!strict && !(cl.nonnegative() && fl.nonnegative())) negative_.emplace_back(b, c);
    for (const auto* p : {&cl, &fl}) {
      if (strict && !p->nonnegative()) {
        bool is_cloud = p == &cl;
        throw InfeasibleError(std::string("negative coefficient in averaged ") +
                              (is_cloud ? "cloud" : "flock") + " polynomial for blocks (" +
                              std::to_string(b) + "," + std::to_string(c) +
                              "): " + to_string(*p, is_cloud ? 'x' : 'y'));
      }
    }
    cloud_[at] = std::move(cl);
    flock_[at] = std::move(fl);
  }
}

const UnivarPoly& AvgCloudFlockTable::cloud(std::size_t b, std::size_t c) const {
  if (b >= blocks_ || c >= blocks_ || !defined(b, c)) throw std::out_of_range("blocks not comparable");
  return cloud_[b * blocks_ + c];
}

const UnivarPoly& AvgCloudFlockTable::flock(std::size_t b, std::size_t c) const {
  if (b >= blocks_ || c >= blocks_ || !defined(b, c)) throw std::out_of_range("blocks not comparable");
  return flock_[b * blocks_ + c];
}

BivarPoly rgp_from_table(const CondensedConfiguration& cc, const AvgCloudFlockTable& table) {
  BivarPoly s;
  for (std::size_t b = 0; b < cc.size(); ++b)
    s += cross(table.cloud(b, cc.top()), table.flock(cc.bottom(), b));
  return s;
}

BivarPoly rgp_from_condensed(const CondensedConfiguration& cc) {
  return rgp_from_table(cc, AvgCloudFlockTable(cc));
}

}  // namespace cft
