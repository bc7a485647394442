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

#ifndef CFTUTTE_CORPUS_HPP
#define CFTUTTE_CORPUS_HPP

// Named matroids and random generators used by tests and the CLI.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cftutte/matroid.hpp"

namespace cft::corpus {

// Rank 3 on {a..f} = {0..5}.
// m1: lines abc and ade meet in a; m2: lines abc and def are disjoint.
Matroid m1();
Matroid m2();

// PG(2, q) and AG(2, q) for prime q, presented by their lines.
Matroid projective_plane(unsigned q);
Matroid affine_plane(unsigned q);
inline Matroid fano() { return projective_plane(2); }

// Rank 3 on 8 points with three 3-point lines: concurrent through point 0
// versus two lines through 0 plus a third disjoint line. Non-isomorphic with
// equal configurations.
Matroid three_lines_concurrent();
Matroid three_lines_mixed();

// Column matroid of a random rank-r matrix over GF(p), resampled until it has
// rank r and neither loops nor coloops. Requires 1 <= r < n.
Matroid random_linear(std::mt19937_64& rng, unsigned n, unsigned r, unsigned p);

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

// U(r,n) for 1 <= r < n <= 8, m1, m2, Fano, PG(2,3), AG(2,3), the 8-point
// pair, and the dual of each.
std::vector<NamedMatroid> named_corpus();
// `count` loop/coloop-free random linear matroids with 2 <= n <= max_n.
std::vector<NamedMatroid> random_corpus(std::uint64_t seed, unsigned count, unsigned max_n);

}  // namespace cft::corpus

#endif  // CFTUTTE_CORPUS_HPP
