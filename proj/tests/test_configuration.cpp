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


#include <algorithm>

#include <doctest.h>

#include "cftutte/configuration.hpp"
#include "cftutte/corpus.hpp"
#include "cftutte/errors.hpp"

using namespace cft;

namespace {

Configuration chain(std::vector<Label> labels) {
  std::vector<NodePair> rel;
  for (std::size_t i = 1; i < labels.size(); ++i) rel.emplace_back(i - 1, i);
  return Configuration::from_relation(std::move(labels), rel);
}

// Label-preserving order isomorphism by brute force. Small inputs only.
bool isomorphic(const Configuration& p, const Configuration& q) {
  if (p.size() != q.size()) return false;
  std::vector<std::size_t> perm(q.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) {
      if (p.label(i) != q.label(perm[i])) ok = false;
      for (std::size_t j = 0; j < p.size() && ok; ++j)
        if (p.leq(i, j) != q.leq(perm[i], perm[j])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("configurations of the six-element examples") {
  const Configuration c1 = extract_configuration(corpus::m1());
  REQUIRE(c1.size() == 4);
  CHECK(c1.label(0) == Label{0, 0});
  CHECK(c1.label(1) == Label{3, 2});
  CHECK(c1.label(2) == Label{3, 2});
  CHECK(c1.label(3) == Label{6, 3});
  CHECK(c1.covers() == std::vector<NodePair>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(c1.leq(1, 2));
  CHECK(c1.bottom() == 0);
  CHECK(c1.top() == 3);
  CHECK(c1.join(1, 2) == 3);
  CHECK(c1.meet(1, 2) == 0);
  CHECK(extract_configuration(corpus::m2()) == c1);

  const Configuration u = extract_configuration(Matroid::uniform(2, 3));
  CHECK(u == chain({{0, 0}, {3, 2}}));
}

TEST_CASE("constructed eight-element pair shares a configuration") {
  const Matroid p = corpus::three_lines_concurrent();
  const Matroid q = corpus::three_lines_mixed();
  CHECK(extract_configuration(p) == extract_configuration(q));
  CHECK(bases(p) != bases(q));
}

TEST_CASE("intervals") {
  const Configuration c1 = extract_configuration(corpus::m1());
  const IntervalView upper = interval(c1, 1, 3);
  CHECK(upper.config == chain({{0, 0}, {3, 1}}));
  CHECK(upper.source == std::vector<std::size_t>{1, 3});
  CHECK(interval(c1, 0, 1).config == chain({{0, 0}, {3, 2}}));
  CHECK(interval(c1, 2, 2).config == chain({{0, 0}}));
  CHECK(interval(c1, 0, 3).config == c1);
  CHECK_THROWS_AS(interval(c1, 1, 2), ValidationError);
}

TEST_CASE("intervals are configurations of minors") {
  std::vector<Matroid> pool{corpus::m1(), corpus::fano(), corpus::three_lines_concurrent(),
                            corpus::three_lines_mixed(), corpus::affine_plane(3), dual(corpus::m1())};
  for (auto& nm : corpus::random_corpus(303, 20, 9)) pool.push_back(nm.matroid);
  for (const Matroid& m : pool) {
    const CyclicFlatLattice lat = cyclic_flat_lattice(m);
    for (std::size_t lo = 0; lo < lat.sets.size(); ++lo) {
      for (std::size_t hi = 0; hi < lat.sets.size(); ++hi) {
        if (!lat.config.leq(lo, hi)) continue;
        const IntervalView view = interval(lat.config, lo, hi);
        const Minor mn = minor(m, lat.sets[hi], lat.sets[lo]);
        const Configuration direct = extract_configuration(mn.matroid);
        CHECK(view.config.size() == direct.size());
        CHECK((view.config == direct || isomorphic(view.config, direct)));
      }
    }
  }
}

TEST_CASE("labels along strict relations") {
  for (auto& nm : corpus::named_corpus()) {
    if (nm.matroid.size() > 13) continue;
    const Configuration c = extract_configuration(strip_loops_coloops(nm.matroid).core.matroid);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j)
        if (c.less(i, j)) {
          CHECK(c.label(i).size < c.label(j).size);
          CHECK(c.label(i).rank < c.label(j).rank);
          CHECK(c.label(j).rank - c.label(i).rank < c.label(j).size - c.label(i).size);
        }
  }
}

TEST_CASE("construction rejects bad relations") {
  // Not antisymmetric.
  std::vector<NodePair> cyc{{0, 1}, {1, 2}, {2, 1}};
  CHECK_THROWS_AS(Configuration::from_relation({{0, 0}, {3, 2}, {4, 3}}, cyc), ValidationError);
  // Bottom label.
  std::vector<NodePair> one{{0, 1}};
  CHECK_THROWS_AS(Configuration::from_relation({{1, 0}, {3, 2}}, one), ValidationError);
  // Rank gap not below size gap.
  CHECK_THROWS_AS(Configuration::from_relation({{0, 0}, {2, 2}}, one), ValidationError);
  // Two maximal nodes.
  std::vector<NodePair> vee{{0, 1}, {0, 2}};
  CHECK_THROWS_AS(Configuration::from_relation({{0, 0}, {3, 2}, {3, 2}}, vee), ValidationError);
  // Two atoms below two coatoms: no join.
  std::vector<NodePair> bow{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  CHECK_THROWS_AS(Configuration::from_relation({{0, 0}, {2, 1}, {2, 1}, {5, 3}, {5, 3}, {9, 5}}, bow),
                  ValidationError);
  // Index out of range.
  std::vector<NodePair> far{{0, 7}};
  CHECK_THROWS_AS(Configuration::from_relation({{0, 0}, {3, 2}}, far), ValidationError);
}

TEST_CASE("canonical order is independent of the input order") {
  const Configuration c1 = extract_configuration(corpus::m1());
  std::vector<Label> labels{{6, 3}, {3, 2}, {0, 0}, {3, 2}};
  std::vector<NodePair> rel{{2, 1}, {2, 3}, {1, 0}, {3, 0}};
  const Configuration shuffled = Configuration::from_relation(labels, rel);
  const Canonical canon = canonicalize(shuffled);
  CHECK(canon.config == c1);
  CHECK(canon.permutation[0] == 2);
  CHECK(canon.permutation[3] == 0);
}

TEST_CASE("cyclic flat lattice needs a loop- and coloop-free matroid") {
  CHECK_THROWS_AS(cyclic_flat_lattice(Matroid::uniform(3, 3)), ValidationError);
  const CyclicFlatLattice lat = cyclic_flat_lattice(corpus::fano());
  CHECK(lat.sets.size() == 9);
  CHECK(lat.sets.front() == 0);
  CHECK(lat.sets.back() == full_set(7));
}
