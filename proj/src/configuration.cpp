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

#include "cftutte/configuration.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "cftutte/errors.hpp"

namespace cft {

namespace {

std::string node_name(std::size_t i, const Label& l) {
  return "node " + std::to_string(i) + " (" + std::to_string(l.size) + "," +
         std::to_string(l.rank) + ")";
}

}  // namespace

Configuration Configuration::from_relation(std::vector<Label> nodes,
                                           std::span<const NodePair> relation) {
  const std::size_t m = nodes.size();
  if (m == 0) throw ValidationError("configuration has no nodes");
  Configuration c;
  c.nodes_ = std::move(nodes);
  c.leq_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) c.leq_[i * m + i] = 1;
  for (auto [i, j] : relation) {
    if (i >= m || j >= m) throw ValidationError("order relation refers to a missing node");
    c.leq_[i * m + j] = 1;
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (c.leq_[i * m + k])
        for (std::size_t j = 0; j < m; ++j)
          if (c.leq_[k * m + j]) c.leq_[i * m + j] = 1;

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!c.less(i, j)) continue;
      if (c.leq(j, i)) throw ValidationError("order relation has a cycle through " + node_name(i, c.nodes_[i]));
      const Label& a = c.nodes_[i];
      const Label& b = c.nodes_[j];
      if (b.size <= a.size || b.rank <= a.rank || b.rank - a.rank >= b.size - a.size)
        throw ValidationError(node_name(i, a) + " < " + node_name(j, b) +
                              " needs 0 < rank gap < size gap");
    }
  }

  std::optional<std::size_t> bottom, top;
  for (std::size_t i = 0; i < m; ++i) {
    bool below_all = true, above_all = true;
    for (std::size_t j = 0; j < m; ++j) {
      below_all = below_all && c.leq(i, j);
      above_all = above_all && c.leq(j, i);
    }
    if (below_all) bottom = i;
    if (above_all) top = i;
  }
  if (!bottom) throw ValidationError("configuration has no least element");
  if (!top) throw ValidationError("configuration has no greatest element");
  if (c.nodes_[*bottom] != Label{0, 0}) throw ValidationError("least element must be labelled (0,0)");
  c.bottom_ = *bottom;
  c.top_ = *top;

  // With a top element, pairwise meets imply pairwise joins; check both for
  // a clearer message.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      c.join(i, j);
      c.meet(i, j);
    }
  }
  return c;
}

std::size_t Configuration::join(std::size_t i, std::size_t j) const {
  const std::size_t m = size();
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < m; ++k)
    if (leq(i, k) && leq(j, k) && (!best || leq(k, *best))) best = k;
  for (std::size_t k = 0; k < m; ++k)
    if (leq(i, k) && leq(j, k) && !leq(*best, k))
      throw ValidationError("nodes " + std::to_string(i) + " and " + std::to_string(j) + " have no join");
  return *best;
}

std::size_t Configuration::meet(std::size_t i, std::size_t j) const {
  const std::size_t m = size();
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < m; ++k)
    if (leq(k, i) && leq(k, j) && (!best || leq(*best, k))) best = k;
  for (std::size_t k = 0; k < m; ++k)
    if (leq(k, i) && leq(k, j) && !leq(k, *best))
      throw ValidationError("nodes " + std::to_string(i) + " and " + std::to_string(j) + " have no meet");
  return *best;
}

std::vector<NodePair> Configuration::covers() const {
  std::vector<NodePair> out;
  const std::size_t m = size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!less(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < m && covered; ++k) covered = !(less(i, k) && less(k, j));
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

Canonical canonicalize(const Configuration& c) {
  const std::size_t m = c.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Label& la = c.label(a);
    const Label& lb = c.label(b);
    return std::pair(la.rank, la.size) < std::pair(lb.rank, lb.size);
  });

  // Strict down-sets only contain nodes of smaller rank, which are already
  // placed when a (rank, size) group is sorted.
  std::vector<std::size_t> position(m, 0);
  for (std::size_t begin = 0; begin < m;) {
    std::size_t end = begin;
    const Label group = c.label(order[begin]);
    while (end < m && c.label(order[end]) == group) ++end;
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keyed;
    for (std::size_t k = begin; k < end; ++k) {
      std::vector<std::size_t> signature;
      for (std::size_t j = 0; j < m; ++j)
        if (c.less(j, order[k])) signature.push_back(position[j]);
      std::sort(signature.begin(), signature.end());
      keyed.emplace_back(std::move(signature), order[k]);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = begin; k < end; ++k) {
      order[k] = keyed[k - begin].second;
      position[order[k]] = k;
    }
    begin = end;
  }

  std::vector<Label> nodes;
  nodes.reserve(m);
  for (std::size_t old : order) nodes.push_back(c.label(old));
  std::vector<NodePair> relation;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (c.less(order[i], order[j])) relation.emplace_back(i, j);
  return {Configuration::from_relation(std::move(nodes), relation), std::move(order)};
}

CyclicFlatLattice cyclic_flat_lattice(const Matroid& m, unsigned bound) {
  if (loops(m) != 0 || coloops(m) != 0)
    throw ValidationError("configuration requires a matroid without loops and coloops");
  std::vector<CyclicFlatRecord> records = cyclic_flats(m, bound);
  std::vector<Label> nodes;
  nodes.reserve(records.size());
  for (const auto& z : records) nodes.push_back({z.size(), z.rank});
  std::vector<NodePair> relation;
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t j = 0; j < records.size(); ++j)
      if (i != j && is_subset(records[i].set, records[j].set)) relation.emplace_back(i, j);
  Canonical canon = canonicalize(Configuration::from_relation(std::move(nodes), relation));
  std::vector<ElementSet> sets;
  sets.reserve(records.size());
  for (std::size_t old : canon.permutation) sets.push_back(records[old].set);
  return {std::move(canon.config), std::move(sets)};
}

Configuration extract_configuration(const Matroid& m, unsigned bound) {
  return cyclic_flat_lattice(m, bound).config;
}

IntervalView interval(const Configuration& c, std::size_t lo, std::size_t hi) {
  if (lo >= c.size() || hi >= c.size() || !c.leq(lo, hi))
    throw ValidationError("interval endpoints are not ordered");
  std::vector<std::size_t> source;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c.leq(lo, k) && c.leq(k, hi)) source.push_back(k);
  const Label base = c.label(lo);
  std::vector<Label> nodes;
  nodes.reserve(source.size());
  for (std::size_t k : source) nodes.push_back({c.label(k).size - base.size, c.label(k).rank - base.rank});
  std::vector<NodePair> relation;
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < source.size(); ++j)
      if (c.less(source[i], source[j])) relation.emplace_back(i, j);
  return {Configuration::from_relation(std::move(nodes), relation), std::move(source)};
}

}  // namespace cft
