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

#include "cftutte/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "cftutte/errors.hpp"

namespace cft {

namespace {

// counts[corank * (n + 1) + nullity]
using CountTable = std::vector<std::uint64_t>;

void count_range(const Matroid& m, std::uint64_t begin, std::uint64_t end,
                 CountTable& counts) {
  const unsigned n = m.size();
  const unsigned r = m.rank();
  for (std::uint64_t s = begin; s < end; ++s) {
    unsigned rs = m.rank(s);
    counts[(r - rs) * (n + 1) + (set_size(s) - rs)] += 1;
  }
}

}  // namespace

BivarPoly rgp_bruteforce(const Matroid& m, unsigned jobs, unsigned bound) {
  const unsigned n = m.size();
  if (n > bound)
    throw BoundExceeded("brute force limited to " + std::to_string(bound) + " elements");
  const std::uint64_t total = std::uint64_t{1} << n;
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));
  const std::size_t cells = static_cast<std::size_t>(m.rank() + 1) * (n + 1);

  std::vector<CountTable> partial(jobs, CountTable(cells, 0));
  if (jobs == 1) {
    count_range(m, 0, total, partial[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
      std::uint64_t begin = total * j / jobs;
      std::uint64_t end = total * (j + 1) / jobs;
      workers.emplace_back(count_range, std::cref(m), begin, end, std::ref(partial[j]));
    }
    for (auto& w : workers) w.join();
  }

  BivarPoly out;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    Integer sum = 0;
    for (const auto& table : partial) sum += table[cell];
    out.add_term(static_cast<unsigned>(cell / (n + 1)), static_cast<unsigned>(cell % (n + 1)), sum);
  }
  return out;
}

UnivarPoly cloud_direct(const Matroid& m, ElementSet z, unsigned bound) {
  if (!is_flat(m, z) || !is_cyclic(m, z))
    throw ValidationError(set_to_string(z) + " is not a cyclic flat");
  UnivarPoly out;
  for (ElementSet f : flats(m, bound))
    if (is_subset(z, f) && ess(m, f) == z) out.add_term(m.rank() - m.rank(f), 1);
  return out;
}

UnivarPoly flock_direct(const Matroid& m, ElementSet z, unsigned bound) {
  if (!is_flat(m, z) || !is_cyclic(m, z))
    throw ValidationError(set_to_string(z) + " is not a cyclic flat");
  if (set_size(z) > bound)
    throw BoundExceeded("flock enumeration limited to " + std::to_string(bound) + " elements");
  // Every Y with closure z lies inside z; walk the submasks of z.
  UnivarPoly out;
  ElementSet y = z;
  for (;;) {
    if (m.closure(y) == z) out.add_term(set_size(y) - m.rank(y), 1);
    if (y == 0) break;
    y = (y - 1) & z;
  }
  return out;
}

}  // namespace cft
