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

#include "cftutte/corpus.hpp"
#include "cftutte/errors.hpp"
#include "cftutte/oracle.hpp"

using namespace cft;

namespace {

UnivarPoly U(std::initializer_list<std::pair<unsigned, int>> terms) {
  UnivarPoly p;
  for (auto [d, c] : terms) p.add_term(d, c);
  return p;
}

std::vector<corpus::NamedMatroid> pool() {
  std::vector<corpus::NamedMatroid> out;
  for (auto& nm : corpus::named_corpus())
    if (nm.matroid.size() <= 9) out.push_back(nm);
  for (auto& nm : corpus::random_corpus(202, 15, 9)) out.push_back(nm);
  return out;
}

}  // namespace

TEST_CASE("brute force examples") {
  CHECK(rgp_bruteforce(Matroid::uniform(2, 3)) == parse_bivar("x^2 + 3x + 3 + y"));
  CHECK(rgp_bruteforce(Matroid::uniform(1, 2)) == parse_bivar("x + 2 + y"));
  const BivarPoly s = rgp_bruteforce(corpus::m1());
  CHECK(s == parse_bivar("x^3 + 6x^2 + 15x + 18 + 2xy + 15y + 6y^2 + y^3"));
  CHECK(s.evaluate(1, 1) == 64);
  CHECK_THROWS_AS(rgp_bruteforce(Matroid::uniform(2, 30)), BoundExceeded);
}

TEST_CASE("brute force does not depend on the worker count") {
  const Matroid pg = corpus::projective_plane(3);
  const BivarPoly one = rgp_bruteforce(pg, 1);
  for (unsigned jobs : {2U, 3U, 7U, 16U}) CHECK(rgp_bruteforce(pg, jobs) == one);
  CHECK(one.evaluate(1, 1) == 8192);
}

TEST_CASE("direct cloud and flock") {
  const Matroid u = Matroid::uniform(2, 3);
  CHECK(cloud_direct(u, 0) == U({{2, 1}, {1, 3}}));
  CHECK(flock_direct(u, u.ground()) == U({{0, 3}, {1, 1}}));
  for (const auto& [name, m] : pool()) {
    CAPTURE(name);
    if (loops(m) != 0) continue;
    CHECK(cloud_direct(m, m.ground()) == U({{0, 1}}));
    CHECK(flock_direct(m, 0) == U({{0, 1}}));
  }
  const Matroid m1 = corpus::m1();
  CHECK(cloud_direct(m1, 0) == U({{3, 1}, {2, 6}, {1, 9}}));
  CHECK(flock_direct(m1, m1.ground()) == U({{0, 18}, {1, 15}, {2, 6}, {3, 1}}));
  CHECK_THROWS_AS(cloud_direct(m1, make_set({0, 1})), ValidationError);
  CHECK_THROWS_AS(flock_direct(m1, singleton(5)), ValidationError);
}

TEST_CASE("cloud/flock formula") {
  for (const auto& [name, m] : pool()) {
    CAPTURE(name);
    BivarPoly sum;
    for (const auto& z : cyclic_flats(m)) sum += cross(cloud_direct(m, z.set), flock_direct(m, z.set));
    CHECK(sum == rgp_bruteforce(m));
  }
}

TEST_CASE("fibers of closure then ess partition all subsets") {
  for (const auto& [name, m] : pool()) {
    CAPTURE(name);
    const auto z = cyclic_flats(m);
    std::vector<std::uint64_t> hits(z.size(), 0);
    for (ElementSet x = 0; x <= m.ground(); ++x) {
      ElementSet target = ess(m, m.closure(x));
      std::size_t found = 0;
      for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i].set == target) {
          ++hits[i];
          ++found;
        }
      CHECK(found == 1);
    }
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      // Fiber size equals cloud(1) * flock(1).
      CHECK(Integer(hits[i]) == cloud_direct(m, z[i].set).evaluate(1) * flock_direct(m, z[i].set).evaluate(1));
      total += hits[i];
    }
    CHECK(total == (std::uint64_t{1} << m.size()));
  }
}

TEST_CASE("delta maps recover the uniform polynomials") {
  for (const auto& [name, m] : pool()) {
    CAPTURE(name);
    const BivarPoly s = rgp_bruteforce(m);
    CHECK(delta_x(s) == bx(m.size(), m.rank()));
    CHECK(delta_y(s) == by(m.size(), m.rank()));
  }
}

TEST_CASE("duality swaps the variables") {
  for (const auto& [name, m] : pool()) {
    CAPTURE(name);
    CHECK(rgp_bruteforce(dual(m)) == rgp_bruteforce(m).swapped());
  }
}
