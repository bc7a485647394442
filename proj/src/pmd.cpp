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

#include "cftutte/pmd.hpp"

#include <optional>
#include <sstream>

#include "cftutte/matroid.hpp"

namespace cft {

namespace {

std::string sequence_to_string(const std::vector<std::uint64_t>& k) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << ')';
  return os.str();
}

std::optional<std::string> sequence_problem(const std::vector<std::uint64_t>& k) {
  if (k.empty()) return "empty cardinality sequence";
  if (k[0] != 0) return "k[0] must be 0 (loopless)";
  for (std::size_t i = 1; i < k.size(); ++i)
    if (k[i] <= k[i - 1]) return "sequence must be strictly increasing at rank " + std::to_string(i);
  if (k.size() > 1 && k.back() == k[k.size() - 2] + 1 && k.back() != k.size() - 1)
    return "k[r] = k[r-1] + 1 makes every element a coloop, which forces k[i] = i";
  return std::nullopt;
}

}  // namespace

PmdSpec PmdSpec::create(std::vector<std::uint64_t> k) {
  if (auto problem = sequence_problem(k)) throw ValidationError(*problem + " in " + sequence_to_string(k));
  return PmdSpec(std::move(k));
}

bool PmdSpec::is_free() const { return rank() > 0 && k_.back() == rank(); }

std::vector<unsigned> PmdSpec::cyclic_ranks() const {
  std::vector<unsigned> out{0};
  const unsigned r = rank();
  for (unsigned i = 1; i < r; ++i)
    if (k_[i] > k_[i - 1] + 1) out.push_back(i);
  if (r > 0) out.push_back(r);
  return out;
}

std::string PmdFraction::to_string() const {
  std::ostringstream os;
  os << numerator << '/' << denominator;
  return os.str();
}

PmdFraction pmd_count_fraction(const PmdSpec& spec, unsigned i, unsigned j) {
  if (i > j || j > spec.rank()) throw ValidationError("pmd_count needs 0 <= i <= j <= r");
  const auto& k = spec.k();
  PmdFraction f;
  for (unsigned h = 0; h < i; ++h) {
    f.numerator *= k[j] - k[h];
    f.denominator *= k[i] - k[h];
  }
  return f;
}

InfeasiblePmd::InfeasiblePmd(unsigned i, unsigned j, PmdFraction fraction)
    : InfeasibleError("infeasible PMD sequence: count of rank-" + std::to_string(i) +
                      " flats in a rank-" + std::to_string(j) + " flat is " + fraction.to_string() +
                      ", not an integer (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")"),
      i_(i),
      j_(j),
      fraction_(std::move(fraction)) {}

CondensedConfiguration pmd_condensed_configuration(const PmdSpec& spec) {
  if (spec.is_free())
    throw ValidationError("k = (0,1,...,r) is the free matroid; all elements are coloops");
  const std::vector<unsigned> ranks = spec.cyclic_ranks();
  const std::size_t m = ranks.size();
  std::vector<Label> labels;
  IntMatrix a(m, std::vector<Integer>(m, 0));
  for (std::size_t b = 0; b < m; ++b) {
    labels.push_back({static_cast<unsigned>(spec.k()[ranks[b]]), ranks[b]});
    for (std::size_t c = b; c < m; ++c) {
      PmdFraction f = pmd_count_fraction(spec, ranks[b], ranks[c]);
      if (!f.integral()) throw InfeasiblePmd(ranks[b], ranks[c], f);
      a[b][c] = f.numerator / f.denominator;
    }
  }
  return CondensedConfiguration::create(std::move(labels), std::move(a));
}

BivarPoly pmd_rgp(const PmdSpec& spec) {
  if (spec.is_free()) return loop_coloop_factor(0, spec.rank());
  return rgp_from_condensed(pmd_condensed_configuration(spec));
}

PmdReport pmd_feasibility_report(const std::vector<std::uint64_t>& k) {
  PmdReport report;
  if (auto problem = sequence_problem(k)) {
    report.violations.push_back({PmdViolation::Kind::kInvalidSequence, 0, 0, *problem});
    return report;
  }
  const PmdSpec spec = PmdSpec::create(k);
  const unsigned r = spec.rank();

  for (unsigned j = 0; j <= r; ++j) {
    for (unsigned i = 0; i <= j; ++i) {
      PmdFraction f = pmd_count_fraction(spec, i, j);
      if (!f.integral()) {
        report.violations.push_back({PmdViolation::Kind::kNonIntegerCount, i, j,
                                     "rank-" + std::to_string(i) + " flats in a rank-" +
                                         std::to_string(j) + " flat: " + f.to_string()});
      }
    }
  }
  if (!report.violations.empty()) return report;

  if (spec.is_free()) {
    report.notes.push_back("k = (0,1,...,r): the free matroid, every element is a coloop");
    return report;
  }
  const std::vector<unsigned> ranks = spec.cyclic_ranks();
  if (ranks.size() == 2) {
    report.notes.push_back("only the empty set and the ground set are cyclic: the design is U(" +
                           std::to_string(r) + "," + std::to_string(k.back()) + ")");
  }
  if (ranks.size() == 1) report.notes.push_back("rank 0: the empty matroid");

  const CondensedConfiguration cc = pmd_condensed_configuration(spec);
  const AvgCloudFlockTable table(cc, false);
  for (auto [b, c] : table.negative_entries()) {
    report.violations.push_back({PmdViolation::Kind::kNegativeCoefficient, ranks[b], ranks[c],
                                 "averaged cloud " + to_string(table.cloud(b, c), 'x') +
                                     ", flock " + to_string(table.flock(b, c), 'y')});
  }
  for (std::size_t b = 0; b < cc.size(); ++b) {
    for (std::size_t c = b; c < cc.size(); ++c) {
      const unsigned rank_gap = cc.label(c).rank - cc.label(b).rank;
      const unsigned nullity_gap = (cc.label(c).size - cc.label(b).size) - rank_gap;
      auto cloud_degree = table.cloud(b, c).degree();
      auto flock_degree = table.flock(b, c).degree();
      if (cloud_degree && *cloud_degree > rank_gap) {
        report.violations.push_back({PmdViolation::Kind::kExponentOutOfRange, ranks[b], ranks[c],
                                     "averaged cloud " + to_string(table.cloud(b, c), 'x') +
                                         " has a term of degree above the rank gap " +
                                         std::to_string(rank_gap)});
      }
      if (flock_degree && *flock_degree > nullity_gap) {
        report.violations.push_back({PmdViolation::Kind::kExponentOutOfRange, ranks[b], ranks[c],
                                     "averaged flock " + to_string(table.flock(b, c), 'y') +
                                         " has a term of degree above the nullity gap " +
                                         std::to_string(nullity_gap)});
      }
    }
  }
  return report;
}

}  // namespace cft
