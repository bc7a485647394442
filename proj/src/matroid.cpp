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

#include "cftutte/matroid.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "cftutte/errors.hpp"

namespace cft {

namespace {

// Calls fn(mask) for every k-subset of {0, ..., m-1} in increasing order.
template <class Fn>
void for_each_k_subset(unsigned m, unsigned k, Fn&& fn) {
  if (k > m) return;
  if (k == 0) {
    fn(ElementSet{0});
    return;
  }
  if (m >= 64) throw BoundExceeded("subset enumeration over 64 elements");
  const ElementSet limit = ElementSet{1} << m;
  ElementSet s = (ElementSet{1} << k) - 1;
  while (s < limit) {
    fn(s);
    ElementSet c = s & (~s + 1);
    ElementSet r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

// Maps a mask over positions 0..|positions|-1 onto the listed elements.
ElementSet expand(ElementSet mask, const std::vector<unsigned>& positions) {
  ElementSet out = 0;
  for (unsigned i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1U) out |= singleton(positions[i]);
  return out;
}

std::shared_ptr<const std::vector<std::uint8_t>> build_rank_table(
    unsigned n, const std::vector<ElementSet>& bases) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint8_t> independent(count, 0);
  for (ElementSet b : bases) independent[b] = 1;
  for (std::size_t a = count; a-- > 0;) {
    if (independent[a]) continue;
    for (unsigned e = 0; e < n; ++e) {
      if (!contains(a, e) && independent[a | singleton(e)]) {
        independent[a] = 1;
        break;
      }
    }
  }
  auto table = std::make_shared<std::vector<std::uint8_t>>(count, 0);
  auto& rank = *table;
  for (std::size_t a = 1; a < count; ++a) {
    if (independent[a]) {
      rank[a] = static_cast<std::uint8_t>(set_size(a));
      continue;
    }
    std::uint8_t best = 0;
    for (ElementSet rest = a; rest != 0; rest &= rest - 1) {
      ElementSet e = rest & (~rest + 1);
      best = std::max(best, rank[a & ~e]);
    }
    rank[a] = best;
  }
  return table;
}

void validate_bases(unsigned n, const std::vector<ElementSet>& bases) {
  std::unordered_set<ElementSet> lookup(bases.begin(), bases.end());
  for (ElementSet b1 : bases) {
    for (ElementSet b2 : bases) {
      for (ElementSet rest = b1 & ~b2; rest != 0; rest &= rest - 1) {
        ElementSet x = rest & (~rest + 1);
        bool exchanged = false;
        for (ElementSet cand = b2 & ~b1; cand != 0 && !exchanged; cand &= cand - 1) {
          ElementSet y = cand & (~cand + 1);
          exchanged = lookup.count((b1 & ~x) | y) > 0;
        }
        if (!exchanged) {
          throw ValidationError("basis exchange fails for " + set_to_string(b1) +
                                " and " + set_to_string(b2) + " on ground set of size " +
                                std::to_string(n));
        }
      }
    }
  }
}

}  // namespace

ElementSet make_set(std::initializer_list<unsigned> elements) {
  return make_set(std::span<const unsigned>(elements.begin(), elements.size()));
}

ElementSet make_set(std::span<const unsigned> elements) {
  ElementSet s = 0;
  for (unsigned e : elements) {
    if (e >= kMaxElements) throw ValidationError("element " + std::to_string(e) + " out of range");
    s |= singleton(e);
  }
  return s;
}

std::vector<unsigned> elements_of(ElementSet s) {
  std::vector<unsigned> out;
  out.reserve(set_size(s));
  for (unsigned e = 0; s != 0; ++e, s >>= 1)
    if (s & 1U) out.push_back(e);
  return out;
}

std::string set_to_string(ElementSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (unsigned e : elements_of(s)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Cyclic-flats axioms

std::optional<AxiomViolation> validate_cyclic_flats_presentation(
    unsigned n, std::span<const CyclicFlatRecord> records) {
  if (records.empty()) return AxiomViolation{0, "no cyclic flats given", {}};
  const ElementSet ground = full_set(n);
  std::unordered_set<ElementSet> seen;
  for (const auto& z : records) {
    if (!is_subset(z.set, ground))
      return AxiomViolation{0, "set exceeds the ground set", {z.set}};
    if (!seen.insert(z.set).second) return AxiomViolation{0, "duplicate set", {z.set}};
    if (z.rank > z.size()) return AxiomViolation{0, "rank exceeds size", {z.set}};
  }

  const std::size_t m = records.size();
  auto leq = [&](std::size_t i, std::size_t j) { return is_subset(records[i].set, records[j].set); };
  // Least common upper bound / greatest common lower bound inside the
  // collection, if one exists.
  auto bound = [&](std::size_t i, std::size_t j, bool upper) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < m; ++k) {
      bool is_bound = upper ? (leq(i, k) && leq(j, k)) : (leq(k, i) && leq(k, j));
      if (!is_bound) continue;
      if (!best || (upper ? leq(k, *best) : leq(*best, k))) best = k;
    }
    if (!best) return std::nullopt;
    for (std::size_t k = 0; k < m; ++k) {
      bool is_bound = upper ? (leq(i, k) && leq(j, k)) : (leq(k, i) && leq(k, j));
      if (is_bound && !(upper ? leq(*best, k) : leq(k, *best))) return std::nullopt;
    }
    return best;
  };

  std::vector<std::size_t> join(m * m), meet(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto up = bound(i, j, true);
      auto down = bound(i, j, false);
      if (!up || !down) {
        return AxiomViolation{1, std::string("no ") + (up ? "meet" : "join") + " inside the collection",
                              {records[i].set, records[j].set}};
      }
      join[i * m + j] = *up;
      meet[i * m + j] = *down;
    }
  }

  std::size_t bottom = 0;
  for (std::size_t k = 1; k < m; ++k) bottom = meet[bottom * m + k];
  if (records[bottom].rank != 0)
    return AxiomViolation{2, "minimum has nonzero rank", {records[bottom].set}};

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto& x = records[i];
      const auto& y = records[j];
      if (i != j && leq(i, j)) {
        long dr = static_cast<long>(y.rank) - x.rank;
        long ds = static_cast<long>(y.size()) - x.size();
        if (!(0 < dr && dr < ds))
          return AxiomViolation{3, "rank gap must lie strictly between 0 and size gap", {x.set, y.set}};
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (leq(i, j) || leq(j, i)) continue;
      const auto& x = records[i];
      const auto& y = records[j];
      const auto& up = records[join[i * m + j]];
      const auto& down = records[meet[i * m + j]];
      unsigned extra = set_size((x.set & y.set) & ~down.set);
      if (x.rank + y.rank < up.rank + down.rank + extra)
        return AxiomViolation{4, "submodular inequality fails", {x.set, y.set}};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Matroid

Matroid::Matroid(unsigned n, Backing backing) : n_(n), backing_(std::move(backing)) {
  if (auto* list = std::get_if<BasisList>(&backing_); list && n_ <= kRankTableBound)
    rank_table_ = build_rank_table(n_, list->bases);
  full_rank_ = rank_unchecked(ground());
}

Matroid Matroid::from_bases(unsigned n, std::vector<ElementSet> bases,
                            unsigned validation_bound) {
  if (n > kMaxElements) throw ValidationError("at most 64 elements supported");
  if (bases.empty()) throw ValidationError("a matroid needs at least one basis");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const unsigned r = set_size(bases.front());
  for (ElementSet b : bases) {
    if (!is_subset(b, full_set(n))) throw ValidationError("basis " + set_to_string(b) + " exceeds ground set");
    if (set_size(b) != r) throw ValidationError("bases have different sizes");
  }
  if (n <= validation_bound) validate_bases(n, bases);
  return Matroid(n, BasisList{std::move(bases)});
}

Matroid Matroid::from_cyclic_flats(unsigned n, std::vector<CyclicFlatRecord> flats) {
  if (n > kMaxElements) throw ValidationError("at most 64 elements supported");
  if (auto violation = validate_cyclic_flats_presentation(n, flats)) {
    throw ValidationError("cyclic flats axiom " + std::to_string(violation->axiom) +
                          " violated: " + violation->message);
  }
  std::sort(flats.begin(), flats.end(),
            [](const CyclicFlatRecord& a, const CyclicFlatRecord& b) { return a.set < b.set; });
  return Matroid(n, CyclicFlats{std::move(flats)});
}

Matroid Matroid::uniform(unsigned r, unsigned n) {
  if (n > kMaxElements) throw ValidationError("at most 64 elements supported");
  if (r > n) throw ValidationError("uniform matroid needs r <= n");
  return Matroid(n, Uniform{r});
}

unsigned Matroid::rank(ElementSet a) const {
  if (!is_subset(a, ground())) throw ValidationError("element out of range in " + set_to_string(a));
  return rank_unchecked(a);
}

unsigned Matroid::rank_unchecked(ElementSet a) const {
  if (rank_table_) return (*rank_table_)[a];
  struct Visitor {
    ElementSet a;
    unsigned operator()(const BasisList& list) const {
      unsigned best = 0;
      for (ElementSet b : list.bases) best = std::max(best, set_size(a & b));
      return best;
    }
    unsigned operator()(const CyclicFlats& cf) const {
      unsigned best = set_size(a);
      for (const auto& z : cf.flats) best = std::min(best, z.rank + set_size(a & ~z.set));
      return best;
    }
    unsigned operator()(const Uniform& u) const { return std::min(set_size(a), u.rank); }
  };
  return std::visit(Visitor{a}, backing_);
}

ElementSet Matroid::closure(ElementSet a) const {
  const unsigned ra = rank(a);
  ElementSet out = a;
  for (unsigned e = 0; e < n_; ++e)
    if (!contains(a, e) && rank_unchecked(a | singleton(e)) == ra) out |= singleton(e);
  return out;
}

// ---------------------------------------------------------------------------
// Derived queries

std::vector<ElementSet> bases(const Matroid& m) {
  if (auto* list = std::get_if<Matroid::BasisList>(&m.backing())) return list->bases;
  std::vector<ElementSet> out;
  const unsigned r = m.rank();
  for_each_k_subset(m.size(), r, [&](ElementSet s) {
    if (m.rank(s) == r) out.push_back(s);
  });
  return out;
}

bool is_flat(const Matroid& m, ElementSet a) { return m.closure(a) == a; }

bool is_cyclic(const Matroid& m, ElementSet a) {
  const unsigned ra = m.rank(a);
  for (ElementSet rest = a; rest != 0; rest &= rest - 1) {
    ElementSet e = rest & (~rest + 1);
    if (m.rank(a & ~e) < ra) return false;
  }
  return true;
}

ElementSet loops(const Matroid& m) {
  ElementSet out = 0;
  for (unsigned e = 0; e < m.size(); ++e)
    if (m.rank(singleton(e)) == 0) out |= singleton(e);
  return out;
}

ElementSet coloops(const Matroid& m) {
  ElementSet out = 0;
  for (unsigned e = 0; e < m.size(); ++e)
    if (m.rank(m.ground() & ~singleton(e)) < m.rank()) out |= singleton(e);
  return out;
}

std::vector<ElementSet> flats(const Matroid& m, unsigned bound) {
  if (m.size() > bound)
    throw BoundExceeded("flat enumeration limited to " + std::to_string(bound) + " elements");
  std::unordered_set<ElementSet> found;
  std::deque<ElementSet> queue;
  const ElementSet start = m.closure(0);
  found.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    ElementSet f = queue.front();
    queue.pop_front();
    for (unsigned e = 0; e < m.size(); ++e) {
      if (contains(f, e)) continue;
      ElementSet g = m.closure(f | singleton(e));
      if (found.insert(g).second) queue.push_back(g);
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CyclicFlatRecord> cyclic_flats(const Matroid& m, unsigned bound) {
  if (auto* cf = std::get_if<Matroid::CyclicFlats>(&m.backing())) return cf->flats;
  std::vector<CyclicFlatRecord> out;
  for (ElementSet f : flats(m, bound))
    if (is_cyclic(m, f)) out.push_back({f, m.rank(f)});
  return out;
}

ElementSet ess(const Matroid& m, ElementSet f) {
  if (!is_flat(m, f)) throw ValidationError(set_to_string(f) + " is not a flat");
  const unsigned rf = m.rank(f);
  ElementSet out = f;
  for (ElementSet rest = f; rest != 0; rest &= rest - 1) {
    ElementSet e = rest & (~rest + 1);
    if (m.rank(f & ~e) < rf) out &= ~e;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Minors

ElementSet Minor::to_minor(ElementSet source_set) const {
  ElementSet out = 0;
  for (unsigned i = 0; i < original.size(); ++i)
    if (contains(source_set, original[i])) out |= singleton(i);
  return out;
}

ElementSet Minor::to_source(ElementSet minor_set) const { return expand(minor_set, original); }

Minor restrict(const Matroid& m, ElementSet keep) {
  if (!is_subset(keep, m.ground())) throw ValidationError("restriction set out of range");
  std::vector<unsigned> positions = elements_of(keep);
  const auto size = static_cast<unsigned>(positions.size());
  if (auto* u = std::get_if<Matroid::Uniform>(&m.backing()))
    return {Matroid::uniform(std::min(u->rank, size), size), positions};
  if (keep == m.ground()) {
    return {m, positions};
  }
  const unsigned k = m.rank(keep);
  std::vector<ElementSet> out;
  for_each_k_subset(size, k, [&](ElementSet s) {
    if (m.rank(expand(s, positions)) == k) out.push_back(s);
  });
  return {Matroid::from_bases(size, std::move(out), 0), positions};
}

Minor contract(const Matroid& m, ElementSet removed) {
  if (!is_subset(removed, m.ground())) throw ValidationError("contraction set out of range");
  std::vector<unsigned> positions = elements_of(m.ground() & ~removed);
  const auto size = static_cast<unsigned>(positions.size());
  if (auto* u = std::get_if<Matroid::Uniform>(&m.backing())) {
    unsigned r = u->rank - std::min(u->rank, set_size(removed));
    return {Matroid::uniform(r, size), positions};
  }
  if (removed == 0) return {m, positions};
  const unsigned base_rank = m.rank(removed);
  const unsigned k = m.rank() - base_rank;
  std::vector<ElementSet> out;
  for_each_k_subset(size, k, [&](ElementSet s) {
    if (m.rank(expand(s, positions) | removed) - base_rank == k) out.push_back(s);
  });
  return {Matroid::from_bases(size, std::move(out), 0), positions};
}

Minor minor(const Matroid& m, ElementSet upper, ElementSet lower) {
  if (!is_subset(lower, upper)) throw ValidationError("minor requires lower within upper");
  Minor restricted = restrict(m, upper);
  Minor contracted = contract(restricted.matroid, restricted.to_minor(lower));
  std::vector<unsigned> original;
  original.reserve(contracted.original.size());
  for (unsigned i : contracted.original) original.push_back(restricted.original[i]);
  return {std::move(contracted.matroid), std::move(original)};
}

Matroid dual(const Matroid& m) {
  const ElementSet ground = m.ground();
  struct Visitor {
    const Matroid& m;
    ElementSet ground;
    Matroid operator()(const Matroid::BasisList& list) const {
      std::vector<ElementSet> out;
      out.reserve(list.bases.size());
      for (ElementSet b : list.bases) out.push_back(ground & ~b);
      return Matroid::from_bases(m.size(), std::move(out), 0);
    }
    Matroid operator()(const Matroid::CyclicFlats& cf) const {
      std::vector<CyclicFlatRecord> out;
      out.reserve(cf.flats.size());
      for (const auto& z : cf.flats) {
        ElementSet c = ground & ~z.set;
        out.push_back({c, set_size(c) + z.rank - m.rank()});
      }
      return Matroid::from_cyclic_flats(m.size(), std::move(out));
    }
    Matroid operator()(const Matroid::Uniform& u) const {
      return Matroid::uniform(m.size() - u.rank, m.size());
    }
  };
  return std::visit(Visitor{m, ground}, m.backing());
}

Stripped strip_loops_coloops(const Matroid& m) {
  const ElementSet l = loops(m);
  const ElementSet c = coloops(m);
  return {restrict(m, m.ground() & ~(l | c)), set_size(l), set_size(c)};
}

BivarPoly loop_coloop_factor(unsigned loops, unsigned coloops) {
  BivarPoly f = BivarPoly::constant(1);
  const BivarPoly x1 = BivarPoly::monomial(1, 0) + BivarPoly::constant(1);
  const BivarPoly y1 = BivarPoly::monomial(0, 1) + BivarPoly::constant(1);
  for (unsigned i = 0; i < coloops; ++i) f = f * x1;
  for (unsigned i = 0; i < loops; ++i) f = f * y1;
  return f;
}

}  // namespace cft
