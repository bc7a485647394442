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

#ifndef CFTUTTE_CLOUDFLOCK_HPP
#define CFTUTTE_CLOUDFLOCK_HPP

#include <vector>

#include "cftutte/configuration.hpp"
#include "cftutte/poly.hpp"

namespace cft {

// cloud[i] / flock[i] are the cloud and flock polynomials of node i.
struct CloudFlockTable {
  std::vector<UnivarPoly> cloud;
  std::vector<UnivarPoly> flock;
};

/// Computes cloud and flock polynomials of every node from the
/// configuration alone.
///
/// For an interval [lo, hi] (the minor M|hi/lo) with n = size gap and
/// r = rank gap, the cloud of lo and flock of hi are recovered from the
/// strictly interior nodes Z:
///
///   cloud(lo) = bx(n, r) - delta_x(sum_Z cloud_[Z,hi](Z) * flock_[lo,Z](Z))
///   flock(hi) = by(n, r) - delta_y(same sum)
///
/// Intervals are processed by increasing size so every term on the right is
/// already known. Throws InfeasibleError naming the interval if a negative
/// coefficient appears; no matroid has that configuration.
CloudFlockTable cloud_flock_from_configuration(const Configuration& c);

// Sum over nodes of cloud * flock.
BivarPoly rgp_from_configuration(const Configuration& c);

}  // namespace cft

#endif  // CFTUTTE_CLOUDFLOCK_HPP
