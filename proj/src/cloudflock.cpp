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

#include "cftutte/cloudflock.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "cftutte/errors.hpp"

namespace cft {

namespace {

void require_nonnegative(const UnivarPoly& p, const char* which, std::size_t lo,
                         std::size_t hi) {
  if (p.nonnegative()) return;
  throw InfeasibleError(std::string("negative coefficient in ") + which + " of interval [" +
                        std::to_string(lo) + "," + std::to_string(hi) +
                        "]: " + to_string(p, which[0] == 'c' ? 'x' : 'y') +
                        "; not the configuration of a matroid");
}

}  // namespace

CloudFlockTable cloud_flock_from_configuration(const Configuration& c) {
  const std::size_t m = c.size();
  // Interval tables: cloud of lo and flock of hi in the minor [lo, hi].
  std::vector<UnivarPoly> cloud(m * m), flock(m * m);

  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> pairs;
  for (std::size_t lo = 0; lo < m; ++lo) {
    for (std::size_t hi = 0; hi < m; ++hi) {
      if (!c.leq(lo, hi)) continue;
      std::size_t width = 0;
      for (std::size_t k = 0; k < m; ++k) width += c.leq(lo, k) && c.leq(k, hi);
      pairs.emplace_back(width, lo, hi);
    }
  }
  std::sort(pairs.begin(), pairs.end());

  for (auto [width, lo, hi] : pairs) {
    if (lo == hi) {
      cloud[lo * m + hi] = UnivarPoly::constant(1);
      flock[lo * m + hi] = UnivarPoly::constant(1);
      continue;
    }
    BivarPoly interior;
    for (std::size_t z = 0; z < m; ++z)
      if (c.less(lo, z) && c.less(z, hi)) interior += cross(cloud[z * m + hi], flock[lo * m + z]);
    const unsigned n = c.label(hi).size - c.label(lo).size;
    const unsigned r = c.label(hi).rank - c.label(lo).rank;
    UnivarPoly cl = bx(n, r) - delta_x(interior);
    UnivarPoly fl = by(n, r) - delta_y(interior);
    require_nonnegative(cl, "cloud", lo, hi);
    require_nonnegative(fl, "flock", lo, hi);
    cloud[lo * m + hi] = std::move(cl);
    flock[lo * m + hi] = std::move(fl);
  }

  CloudFlockTable table;
  table.cloud.reserve(m);
  table.flock.reserve(m);
  for (std::size_t z = 0; z < m; ++z) {
    table.cloud.push_back(cloud[z * m + c.top()]);
    table.flock.push_back(flock[c.bottom() * m + z]);
  }
  return table;
}

BivarPoly rgp_from_configuration(const Configuration& c) {
  CloudFlockTable table = cloud_flock_from_configuration(c);
  BivarPoly s;
  for (std::size_t z = 0; z < c.size(); ++z) s += cross(table.cloud[z], table.flock[z]);
  return s;
}

}  // namespace cft
