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

#include "cftutte/corpus.hpp"

#include <array>

#include "cftutte/errors.hpp"

namespace cft::corpus {

namespace {

Matroid planes_from_lines(unsigned n, const std::vector<ElementSet>& lines) {
  std::vector<CyclicFlatRecord> records{{0, 0}};
  for (ElementSet l : lines) records.push_back({l, 2});
  records.push_back({full_set(n), 3});
  return Matroid::from_cyclic_flats(n, std::move(records));
}

bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Rank of the columns picked by `columns` in an r x n matrix over GF(p).
unsigned column_rank(const std::vector<std::vector<unsigned>>& matrix, ElementSet columns,
                     unsigned p) {
  const auto cols = elements_of(columns);
  const std::size_t rows = matrix.size();
  std::vector<std::vector<unsigned>> a(rows, std::vector<unsigned>(cols.size()));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) a[i][j] = matrix[i][cols[j]];

  unsigned rank = 0;
  for (std::size_t col = 0; col < cols.size() && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    // Inverse by Fermat's little theorem.
    unsigned inv = 1;
    for (unsigned e = 0; e < p - 2; ++e) inv = inv * a[rank][col] % p;
    for (std::size_t j = col; j < cols.size(); ++j) a[rank][j] = a[rank][j] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      unsigned factor = a[i][col];
      for (std::size_t j = col; j < cols.size(); ++j)
        a[i][j] = (a[i][j] + p * p - factor * a[rank][j] % p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Matroid m1() {
  return Matroid::from_cyclic_flats(
      6, {{0, 0}, {make_set({0, 1, 2}), 2}, {make_set({0, 3, 4}), 2}, {full_set(6), 3}});
}

Matroid m2() {
  return Matroid::from_cyclic_flats(
      6, {{0, 0}, {make_set({0, 1, 2}), 2}, {make_set({3, 4, 5}), 2}, {full_set(6), 3}});
}

Matroid projective_plane(unsigned q) {
  if (!is_prime(q)) throw ValidationError("projective_plane needs a prime order");
  // Points are nonzero vectors of GF(q)^3 whose first nonzero entry is 1.
  std::vector<std::array<unsigned, 3>> points;
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      for (unsigned c = 0; c < q; ++c) {
        std::array<unsigned, 3> v{a, b, c};
        unsigned lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead == 1) points.push_back(v);
      }
  std::vector<ElementSet> lines;
  for (const auto& normal : points) {
    ElementSet line = 0;
    for (unsigned i = 0; i < points.size(); ++i) {
      const auto& p = points[i];
      if ((p[0] * normal[0] + p[1] * normal[1] + p[2] * normal[2]) % q == 0) line |= singleton(i);
    }
    lines.push_back(line);
  }
  return planes_from_lines(static_cast<unsigned>(points.size()), lines);
}

Matroid affine_plane(unsigned q) {
  if (!is_prime(q) || q < 3) throw ValidationError("affine_plane needs a prime order >= 3");
  auto index = [q](unsigned x, unsigned y) { return x * q + y; };
  std::vector<ElementSet> lines;
  for (unsigned slope = 0; slope < q; ++slope) {
    for (unsigned c = 0; c < q; ++c) {
      ElementSet line = 0;
      for (unsigned x = 0; x < q; ++x) line |= singleton(index(x, (slope * x + c) % q));
      lines.push_back(line);
    }
  }
  for (unsigned c = 0; c < q; ++c) {
    ElementSet line = 0;
    for (unsigned y = 0; y < q; ++y) line |= singleton(index(c, y));
    lines.push_back(line);
  }
  return planes_from_lines(q * q, lines);
}

Matroid three_lines_concurrent() {
  return planes_from_lines(8, {make_set({0, 1, 2}), make_set({0, 3, 4}), make_set({0, 5, 6})});
}

Matroid three_lines_mixed() {
  return planes_from_lines(8, {make_set({0, 1, 2}), make_set({0, 3, 4}), make_set({5, 6, 7})});
}

Matroid random_linear(std::mt19937_64& rng, unsigned n, unsigned r, unsigned p) {
  if (r < 1 || r >= n) throw ValidationError("random_linear needs 1 <= r < n");
  if (!is_prime(p)) throw ValidationError("random_linear needs a prime field");
  std::uniform_int_distribution<unsigned> entry(0, p - 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::vector<unsigned>> matrix(r, std::vector<unsigned>(n));
    for (auto& row : matrix)
      for (auto& v : row) v = entry(rng);
    std::vector<ElementSet> found;
    for (ElementSet s = 0; s < (ElementSet{1} << n); ++s)
      if (set_size(s) == r && column_rank(matrix, s, p) == r) found.push_back(s);
    if (found.empty()) continue;
    Matroid m = Matroid::from_bases(n, std::move(found));
    if (loops(m) == 0 && coloops(m) == 0) return m;
  }
  throw InternalError("random_linear: no loop/coloop-free sample found");
}

std::vector<NamedMatroid> named_corpus() {
  std::vector<NamedMatroid> base;
  for (unsigned n = 2; n <= 8; ++n)
    for (unsigned r = 1; r < n; ++r)
      base.push_back({"U(" + std::to_string(r) + "," + std::to_string(n) + ")", Matroid::uniform(r, n)});
  base.push_back({"M1", m1()});
  base.push_back({"M2", m2()});
  base.push_back({"Fano", fano()});
  base.push_back({"PG(2,3)", projective_plane(3)});
  base.push_back({"AG(2,3)", affine_plane(3)});
  base.push_back({"three-lines-concurrent", three_lines_concurrent()});
  base.push_back({"three-lines-mixed", three_lines_mixed()});
  std::vector<NamedMatroid> out = base;
  for (const auto& [name, m] : base) out.push_back({name + "*", dual(m)});
  return out;
}

std::vector<NamedMatroid> random_corpus(std::uint64_t seed, unsigned count, unsigned max_n) {
  std::mt19937_64 rng(seed);
  std::vector<NamedMatroid> out;
  const std::array<unsigned, 3> fields{2, 3, 5};
  for (unsigned i = 0; i < count; ++i) {
    unsigned n = std::uniform_int_distribution<unsigned>(2, max_n)(rng);
    unsigned r = std::uniform_int_distribution<unsigned>(1, n - 1)(rng);
    unsigned p = fields[std::uniform_int_distribution<std::size_t>(0, fields.size() - 1)(rng)];
    out.push_back({"random-" + std::to_string(i) + "-GF" + std::to_string(p) + "-r" + std::to_string(r) +
                       "-n" + std::to_string(n),
                   random_linear(rng, n, r, p)});
  }
  return out;
}

}  // namespace cft::corpus
