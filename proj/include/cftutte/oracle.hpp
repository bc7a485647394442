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

#ifndef CFTUTTE_ORACLE_HPP
#define CFTUTTE_ORACLE_HPP

// Definitional engines. Everything here enumerates subsets or flats
// directly and is meant to be obviously correct rather than fast.

#include "cftutte/matroid.hpp"
#include "cftutte/poly.hpp"

namespace cft {

inline constexpr unsigned kDefaultOracleBound = 28;

// Sum over all subsets X of x^(r(E)-r(X)) y^(|X|-r(X)). The subset range is
// split evenly across `jobs` threads; the result does not depend on it.
BivarPoly rgp_bruteforce(const Matroid& m, unsigned jobs = 1,
                         unsigned bound = kDefaultOracleBound);

// Sum of x^(r(E)-r(Y)) over flats Y with ess(Y) = z.
UnivarPoly cloud_direct(const Matroid& m, ElementSet z,
                        unsigned bound = kDefaultFlatBound);
// Sum of y^(|Y|-r(Y)) over subsets Y with closure(Y) = z.
UnivarPoly flock_direct(const Matroid& m, ElementSet z,
                        unsigned bound = kDefaultOracleBound);

}  // namespace cft

#endif  // CFTUTTE_ORACLE_HPP
