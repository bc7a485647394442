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


#ifndef CFTUTTE_TESTS_SUPPORT_HPP
#define CFTUTTE_TESTS_SUPPORT_HPP

// Helpers shared by the unit and acceptance tests.

#include <array>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <algorithm>
#include <numeric>
#include <vector>

#include "cftutte/condensation.hpp"
#include "cftutte/configuration.hpp"
#include "cftutte/io.hpp"
#include "cftutte/matroid.hpp"
#include "cftutte/oracle.hpp"
#include "cftutte/poly.hpp"

namespace cft::testing {

inline std::string data_path(const std::string& name) { return std::string(CFTUTTE_DATA_DIR) + "/" + name; }

inline io::Json load_data(const std::string& name) {
  std::ifstream in(data_path(name));
  return io::read_json(in);
}

// Columns of a generator matrix of the extended binary Golay code: the
// cyclic [23,12] code generated by 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11,
// extended by an overall parity row. Column e is a 12-bit word.
inline std::array<std::uint16_t, 24> golay_columns() {
  constexpr std::uint32_t g = (1U << 0) | (1U << 2) | (1U << 4) | (1U << 5) | (1U << 6) | (1U << 10) | (1U << 11);
  std::array<std::uint32_t, 12> rows{};
  for (unsigned i = 0; i < 12; ++i) {
    std::uint32_t row = g << i;
    if (__builtin_popcount(row) % 2) row |= 1U << 23;
    rows[i] = row;
  }
  std::array<std::uint16_t, 24> cols{};
  for (unsigned e = 0; e < 24; ++e)
    for (unsigned i = 0; i < 12; ++i)
      if ((rows[i] >> e) & 1U) cols[e] |= static_cast<std::uint16_t>(1U << i);
  return cols;
}

// Number of codewords of each weight in the row space of golay_columns().
inline std::array<std::uint64_t, 25> golay_weights() {
  const auto cols = golay_columns();
  std::array<std::uint64_t, 25> w{};
  for (std::uint32_t msg = 0; msg < (1U << 12); ++msg) {
    unsigned weight = 0;
    for (auto c : cols) weight += __builtin_popcount(msg & c) % 2;
    ++w[weight];
  }
  return w;
}

namespace detail {

struct Gf2Basis {
  std::array<std::uint16_t, 12> pivot{};  // pivot[b] has leading bit b
  unsigned rank = 0;

  void insert(std::uint16_t v) {
    for (int b = 11; b >= 0 && v; --b) {
      if (!((v >> b) & 1U)) continue;
      if (!pivot[b]) {
        pivot[b] = v;
        ++rank;
        return;
      }
      v ^= pivot[b];
    }
  }
};

inline void golay_walk(const std::array<std::uint16_t, 24>& cols, unsigned next, unsigned size,
                       const Gf2Basis& basis, std::uint64_t (&counts)[13][13]) {
  if (next == 24) {
    ++counts[12 - basis.rank][size - basis.rank];
    return;
  }
  golay_walk(cols, next + 1, size, basis, counts);
  Gf2Basis with = basis;
  with.insert(cols[next]);
  golay_walk(cols, next + 1, size + 1, with, counts);
}

}  // namespace detail

// Rank generating polynomial of the Golay code matroid by walking all 2^24
// column subsets.
inline BivarPoly golay_rgp_bruteforce() {
  std::uint64_t counts[13][13] = {};
  detail::golay_walk(golay_columns(), 0, 0, detail::Gf2Basis{}, counts);
  BivarPoly s;
  for (unsigned cx = 0; cx <= 12; ++cx)
    for (unsigned ny = 0; ny <= 12; ++ny)
      if (counts[cx][ny]) s.add_term(cx, ny, Integer(counts[cx][ny]));
  return s;
}

// Every permutation of the ground set that maps bases to bases. Only for
// very small matroids.
inline std::vector<Permutation> automorphisms(const Matroid& m) {
  const std::vector<ElementSet> list = bases(m);
  std::vector<Permutation> out;
  Permutation g(m.size());
  std::iota(g.begin(), g.end(), 0U);
  do {
    bool ok = true;
    for (ElementSet b : list) {
      if (!std::binary_search(list.begin(), list.end(), cft::apply(g, b))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

// Checks the averaged table of a condensation against direct sums over the
// source lattice, for every comparable block pair and every member Y of the
// upper block:
//   cloud(b, c) = sum over X in b below Y of cloud of X in m|Y
//   flock(b, c) = sum over X in b below Y of flock of Y-X in m|Y/X
// Returns the number of mismatching entries.
inline std::size_t averaged_table_mismatches(const Matroid& m, const CyclicFlatLattice& lattice,
                                             const Condensation& c) {
  const AvgCloudFlockTable table(c.condensed);
  std::size_t bad = 0;
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    for (std::size_t k = 0; k < c.blocks.size(); ++k) {
      if (!c.condensed.leq(b, k)) continue;
      for (std::size_t y : c.blocks[k]) {
        const ElementSet upper = lattice.sets[y];
        const Minor r = restrict(m, upper);
        UnivarPoly cloud;
        UnivarPoly flock;
        for (std::size_t x : c.blocks[b]) {
          const ElementSet lower = lattice.sets[x];
          if (!is_subset(lower, upper)) continue;
          cloud += cloud_direct(r.matroid, r.to_minor(lower));
          const Minor q = minor(m, upper, lower);
          flock += flock_direct(q.matroid, q.matroid.ground());
        }
        bad += cloud != table.cloud(b, k);
        bad += flock != table.flock(b, k);
      }
    }
  }
  return bad;
}

// cloud of the empty set and flock of the ground set recomputed from the
// direct polynomials of the other cyclic flats, compared with their own
// direct polynomials. Needs a loop- and coloop-free matroid with at least
// two cyclic flats. Returns the number of mismatches (0, 1 or 2).
inline int boundary_recovery_mismatches(const Matroid& m) {
  BivarPoly inner;
  for (const auto& z : cyclic_flats(m)) {
    if (z.set == 0 || z.set == m.ground()) continue;
    inner += cross(cloud_direct(m, z.set), flock_direct(m, z.set));
  }
  const UnivarPoly cloud = bx(m.size(), m.rank()) - delta_x(inner);
  const UnivarPoly flock = by(m.size(), m.rank()) - delta_y(inner);
  return (cloud != cloud_direct(m, 0)) + (flock != flock_direct(m, m.ground()));
}

}  // namespace cft::testing

#endif  // CFTUTTE_TESTS_SUPPORT_HPP
