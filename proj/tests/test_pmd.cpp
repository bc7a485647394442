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


#include <doctest.h>

#include "cftutte/condensation.hpp"
#include "cftutte/configuration.hpp"
#include "cftutte/corpus.hpp"
#include "cftutte/errors.hpp"
#include "cftutte/oracle.hpp"
#include "cftutte/pmd.hpp"

using namespace cft;

namespace {

IntMatrix M(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix out;
  for (auto row : rows) out.emplace_back(row.begin(), row.end());
  return out;
}

PmdSpec K(std::vector<std::uint64_t> k) { return PmdSpec::create(std::move(k)); }

}  // namespace

TEST_CASE("counting formula") {
  CHECK(pmd_count(K({0, 1, 3, 7}), 2, 3) == 7);
  CHECK(pmd_count(K({0, 1, 3, 7}), 1, 3) == 7);
  CHECK(pmd_count(K({0, 1, 3, 7}), 1, 2) == 3);
  const PmdFraction f = pmd_count_fraction(K({0, 1, 3, 8}), 2, 3);
  CHECK(f.numerator == 56);
  CHECK(f.denominator == 6);
  CHECK_FALSE(f.integral());
  CHECK(f.to_string() == "56/6");
  CHECK(pmd_count(K({0, 1, 3, 8}), 2, 3) == Rational(28, 3));
  for (const auto& k : std::vector<std::vector<std::uint64_t>>{{0, 1, 3, 7}, {0, 1, 4, 13}, {0, 1, 3, 8}, {0, 2, 5}}) {
    const PmdSpec spec = K(k);
    for (unsigned j = 0; j <= spec.rank(); ++j) {
      CHECK(pmd_count(spec, 0, j) == 1);
      CHECK(pmd_count(spec, j, j) == 1);
    }
  }
  CHECK_THROWS_AS(pmd_count(K({0, 1, 3, 7}), 3, 2), ValidationError);
}

TEST_CASE("sequence validation") {
  CHECK_THROWS_AS(K({}), ValidationError);
  CHECK_THROWS_AS(K({1, 2, 3}), ValidationError);
  CHECK_THROWS_AS(K({0, 3, 3}), ValidationError);
  CHECK_THROWS_AS(K({0, 1, 3, 4}), ValidationError);
  CHECK(K({0, 1, 2, 3}).is_free());
  CHECK_FALSE(K({0, 1, 3, 7}).is_free());
  CHECK(K({0, 1, 3, 7}).cyclic_ranks() == std::vector<unsigned>{0, 2, 3});
  CHECK(K({0, 1, 2, 9}).cyclic_ranks() == std::vector<unsigned>{0, 3});
}

TEST_CASE("condensed configurations of designs") {
  const CondensedConfiguration fano = pmd_condensed_configuration(K({0, 1, 3, 7}));
  CHECK(fano.labels() == std::vector<Label>{{0, 0}, {3, 2}, {7, 3}});
  CHECK(fano.matrix() == M({{1, 1, 1}, {0, 1, 7}, {0, 0, 1}}));
  for (std::uint64_t n = 3; n <= 10; ++n) {
    const CondensedConfiguration u = pmd_condensed_configuration(K({0, 1, n}));
    CHECK(u.labels() == std::vector<Label>{{0, 0}, {static_cast<unsigned>(n), 2}});
    CHECK(u.matrix() == M({{1, 1}, {0, 1}}));
  }
  try {
    pmd_condensed_configuration(K({0, 1, 3, 8}));
    FAIL("expected InfeasiblePmd");
  } catch (const InfeasiblePmd& e) {
    CHECK(e.i() == 2);
    CHECK(e.j() == 3);
    CHECK(e.fraction().to_string() == "56/6");
    CHECK(std::string(e.what()).find("(i,j)=(2,3)") != std::string::npos);
    CHECK(std::string(e.what()).find("56/6") != std::string::npos);
  }
  CHECK_THROWS_AS(pmd_condensed_configuration(K({0, 1, 2})), ValidationError);
}

TEST_CASE("design polynomials match brute force") {
  CHECK(pmd_rgp(K({0, 1, 3, 7})) == rgp_bruteforce(corpus::fano()));
  CHECK(pmd_rgp(K({0, 1, 3, 7})).evaluate(1, 1) == 128);
  CHECK(pmd_rgp(K({0, 1, 4, 13})) == rgp_bruteforce(corpus::projective_plane(3)));
  CHECK(pmd_rgp(K({0, 1, 3, 9})) == rgp_bruteforce(corpus::affine_plane(3)));
  for (unsigned n = 2; n <= 10; ++n) {
    for (unsigned r = 1; r < n; ++r) {
      std::vector<std::uint64_t> k;
      for (unsigned i = 0; i < r; ++i) k.push_back(i);
      k.push_back(n);
      CHECK(pmd_rgp(K(k)) == rgp_bruteforce(Matroid::uniform(r, n)));
    }
  }
  CHECK(pmd_rgp(K({0, 1, 2, 3})) == rgp_bruteforce(Matroid::uniform(3, 3)));
  CHECK(pmd_rgp(K({0})) == BivarPoly::constant(1));
}

TEST_CASE("rank blocks of a realization form the design condensation") {
  const std::vector<std::pair<std::vector<std::uint64_t>, Matroid>> designs{
      {{0, 1, 3, 7}, corpus::fano()},
      {{0, 1, 4, 13}, corpus::projective_plane(3)},
      {{0, 1, 3, 9}, corpus::affine_plane(3)},
      {{0, 1, 2, 6}, Matroid::uniform(3, 6)}};
  for (const auto& [k, m] : designs) {
    const PmdSpec spec = K(k);
    const CyclicFlatLattice lat = cyclic_flat_lattice(m);
    const std::vector<unsigned> ranks = spec.cyclic_ranks();
    Partition by_rank(ranks.size());
    for (std::size_t x = 0; x < lat.sets.size(); ++x) {
      for (std::size_t b = 0; b < ranks.size(); ++b)
        if (lat.config.label(x).rank == ranks[b]) by_rank[b].push_back(x);
    }
    CHECK_FALSE(validate_condensation(lat.config, by_rank));
    const Condensation c = make_condensation(lat.config, by_rank);
    CHECK(c.condensed == pmd_condensed_configuration(spec));
    for (std::size_t b = 0; b < ranks.size(); ++b)
      CHECK(pmd_count(spec, ranks[b], spec.rank()) == Rational(c.blocks[b].size()));
  }
}

TEST_CASE("feasibility report") {
  CHECK(pmd_feasibility_report({0, 1, 3, 7}).feasible());
  CHECK(pmd_feasibility_report({0, 1, 4, 13}).feasible());

  const PmdReport bad = pmd_feasibility_report({0, 1, 3, 8});
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].kind == PmdViolation::Kind::kNonIntegerCount);
  CHECK(bad.violations[0].i == 2);
  CHECK(bad.violations[0].j == 3);
  CHECK(bad.violations[0].message.find("56/6") != std::string::npos);

  const PmdReport uniform = pmd_feasibility_report({0, 1, 2, 5});
  CHECK(uniform.feasible());
  REQUIRE(uniform.notes.size() == 1);
  CHECK(uniform.notes[0].find("U(3,5)") != std::string::npos);

  CHECK(pmd_feasibility_report({0, 1, 2}).feasible());
  CHECK_FALSE(pmd_feasibility_report({0, 1, 2}).notes.empty());

  const PmdReport invalid = pmd_feasibility_report({0, 2, 2});
  REQUIRE(invalid.violations.size() == 1);
  CHECK(invalid.violations[0].kind == PmdViolation::Kind::kInvalidSequence);

  // Integral counts, but no rank-4 design has 3-point lines, 4-point planes
  // and 7 points: the averaged cloud of the whole lattice goes negative.
  const PmdReport neg = pmd_feasibility_report({0, 1, 3, 4, 7});
  REQUIRE_FALSE(neg.feasible());
  CHECK(neg.violations[0].kind == PmdViolation::Kind::kNegativeCoefficient);
  CHECK(neg.violations[0].i == 0);
  CHECK(neg.violations[0].j == 4);
  CHECK_THROWS_AS(pmd_rgp(K({0, 1, 3, 4, 7})), InfeasibleError);
}
