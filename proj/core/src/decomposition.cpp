#include "multiring/decomposition.hpp"

#include <algorithm>

#include "multiring/ideals.hpp"

namespace multiring {

std::string_view to_string(SumMode mode) noexcept {
  return mode == SumMode::kUnion ? "union" : "additive";
}

std::string_view to_string(DecompositionRoute route) noexcept {
  return route == DecompositionRoute::kIdempotent ? "idempotent" : "search";
}

namespace {

// Both selections are already known to be ideal subspaces of the space
// whose full selection is `whole`.
bool sum_holds(const MultiRingSpace& m, const SubsetSelection& whole, const SubsetSelection& i1,
               const SubsetSelection& i2, SumMode mode) {
  if (mode == SumMode::kUnion) {
    return (i1.elements | i2.elements) == whole.elements &&
           (i1.elements & i2.elements).is_subset_of(m.zero_set());
  }
  const auto& ring = m.ring(whole.ops.front());
  ElementSet zero(m.universe().size());
  zero.insert(ring.zero());
  if ((i1.elements & i2.elements) != zero) return false;
  const auto sums = sum_set(ring, i1.elements.to_list(), i2.elements.to_list());
  return ElementSet(m.universe().size(), sums) == whole.elements;
}

std::optional<SubsetSelection> remap_into(const SubsetSelection& whole,
                                          const SubsetSelection& s) {
  SubsetSelection out{s.elements, {}};
  for (auto k : s.ops) {
    auto it = std::find(whole.ops.begin(), whole.ops.end(), k);
    if (it == whole.ops.end()) return std::nullopt;
    out.ops.push_back(static_cast<RingIndex>(it - whole.ops.begin()));
  }
  return out;
}

}  // namespace

bool directed_sum_check(const MultiRingSpace& m, const SubsetSelection& whole,
                        const SubsetSelection& i1, const SubsetSelection& i2, SumMode mode) {
  check_selection(m, whole);
  check_selection(m, i1);
  check_selection(m, i2);
  if (mode == SumMode::kAdditive) {
    if (whole.ops.size() != 1 || i1.ops != whole.ops || i2.ops != whole.ops) {
      throw Error(ErrorCode::kMixedModeMismatch,
                  "additive sums need every component inside the same single ring");
    }
  }
  auto space = restrict_space(m, whole);
  if (!space) throw Error(ErrorCode::kNotIdealSubspace, "whole is not a multi-ring subspace");
  for (const auto* part : {&i1, &i2}) {
    auto mapped = remap_into(whole, *part);
    if (!part->elements.is_subset_of(whole.elements) || !mapped ||
        !is_ideal_subspace_t23(*space, *mapped)) {
      throw Error(ErrorCode::kNotIdealSubspace,
                  "component is not an ideal subspace of the whole");
    }
  }
  return sum_holds(m, whole, i1, i2, mode);
}

bool is_non_reducible(const MultiRingSpace& m, const SubsetSelection& i, const Limits& limits) {
  check_selection(m, i);
  if (!is_ideal_subspace_t23(m, i)) {
    throw Error(ErrorCode::kNotIdealSubspace, "selection is not an ideal subspace");
  }
  auto space = restrict_space(m, i);
  if (!space) throw Error(ErrorCode::kNotIdealSubspace, "selection is not a subspace");
  const auto mode = i.ops.size() == 1 ? SumMode::kAdditive : SumMode::kUnion;
  const auto whole = space->full_selection();
  const auto subs = enumerate_ideal_subspaces(*space, limits);
  const std::uint64_t pairs = subs.size() * (subs.size() + 1) / 2;
  if (pairs > limits.subset_budget) {
    throw Error(ErrorCode::kCapExceeded, std::to_string(pairs) +
                                             " candidate pairs exceed the subset budget");
  }
  for (std::size_t a = 0; a < subs.size(); ++a) {
    if (subs[a].elements == whole.elements) continue;
    for (std::size_t b = a; b < subs.size(); ++b) {
      if (subs[b].elements == whole.elements) continue;
      if (mode == SumMode::kAdditive && (subs[a].ops != whole.ops || subs[b].ops != whole.ops)) {
        continue;
      }
      if (sum_holds(*space, whole, subs[a], subs[b], mode)) return false;
    }
  }
  return true;
}

namespace {

// Splits `part` (an ideal of `ring`, itself a ring) into non-reducible
// ideals by taking the first nontrivial additive split in canonical
// order and recursing into both halves.
void split_search(const FiniteRing& ring, const ElementList& part, const Limits& limits,
                  std::vector<ElementList>& out) {
  const auto sub = ring.restricted(part);
  const auto ideals = enumerate_ideals(sub, IdealMethod::kAuto, limits);
  const ElementList zero{sub.zero()};
  for (std::size_t a = 0; a < ideals.size(); ++a) {
    if (ideals[a] == part || ideals[a] == zero) continue;
    for (std::size_t b = a + 1; b < ideals.size(); ++b) {
      if (ideals[b] == part || ideals[b] == zero) continue;
      ElementList common;
      std::set_intersection(ideals[a].begin(), ideals[a].end(), ideals[b].begin(),
                            ideals[b].end(), std::back_inserter(common));
      if (common != zero || sum_set(sub, ideals[a], ideals[b]) != part) continue;
      split_search(sub, ideals[a], limits, out);
      split_search(sub, ideals[b], limits, out);
      return;
    }
  }
  out.push_back(part);
}

}  // namespace

DirectedSumDecomposition decompose_artin(const MultiRingSpace& m, const Limits& limits) {
  DirectedSumDecomposition d;
  const auto usize = m.universe().size();
  for (RingIndex k = 0; k < m.ring_count(); ++k) {
    const auto& ring = m.ring(k);
    std::vector<ElementList> parts;
    if (ring.unit()) {
      d.routes.push_back(DecompositionRoute::kIdempotent);
      const auto es = decompose_unit(ring);
      for (auto e : es) parts.push_back(idempotent_component(ring, e));
      d.per_ring_idempotents.emplace(k, es);
    } else {
      d.routes.push_back(DecompositionRoute::kSearch);
      split_search(ring, ring.carrier(), limits, parts);
      std::sort(parts.begin(), parts.end(),
                [](const ElementList& a, const ElementList& b) { return lex_less(a, b); });
    }
    if (parts.empty()) {
      throw Error(ErrorCode::kNoDecomposition, "ring " + std::to_string(k + 1) +
                                                   " produced no components");
    }
    for (auto& p : parts) {
      if (!d.components.empty()) {
        d.joins.push_back(d.component_ring.back() == k ? SumMode::kAdditive : SumMode::kUnion);
      }
      d.components.push_back({ElementSet(usize, p), {k}});
      d.component_ring.push_back(k);
    }
  }
  auto check = verify_decomposition(m, d, limits);
  if (!check.ok) throw Error(ErrorCode::kNoDecomposition, check.failures.front());
  return d;
}

DecompositionCheck verify_decomposition(const MultiRingSpace& m,
                                        const DirectedSumDecomposition& d,
                                        const Limits& limits) {
  DecompositionCheck out;
  auto fail = [&](std::string why) {
    out.ok = false;
    out.failures.push_back(std::move(why));
  };
  const auto usize = m.universe().size();
  if (d.components.size() != d.component_ring.size() ||
      d.joins.size() + 1 != std::max<std::size_t>(d.components.size(), 1)) {
    fail("component bookkeeping is inconsistent");
    return out;
  }

  for (const auto& [k, es] : d.per_ring_idempotents) {
    const auto& ring = m.ring(k);
    ElementId total = ring.zero();
    for (std::size_t a = 0; a < es.size(); ++a) {
      if (ring.mul(es[a], es[a]) != es[a]) fail("ring " + std::to_string(k + 1) + ": e not idempotent");
      for (std::size_t b = 0; b < es.size(); ++b) {
        if (a != b && ring.mul(es[a], es[b]) != ring.zero()) {
          fail("ring " + std::to_string(k + 1) + ": idempotents not orthogonal");
        }
      }
      total = ring.add(total, es[a]);
    }
    if (!ring.unit() || total != *ring.unit()) {
      fail("ring " + std::to_string(k + 1) + ": idempotents do not sum to the unit");
    }
  }

  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto& comp = d.components[c];
    if (comp.ops != std::vector<RingIndex>{d.component_ring[c]} ||
        !is_ideal_subspace_t23(m, comp)) {
      fail("component " + std::to_string(c + 1) + " is not an ideal subspace of its ring");
      continue;
    }
    if (!is_non_reducible(m, comp, limits)) {
      fail("component " + std::to_string(c + 1) + " is reducible");
    }
    for (std::size_t c2 = c + 1; c2 < d.components.size(); ++c2) {
      const auto common = comp.elements & d.components[c2].elements;
      if (d.component_ring[c2] == d.component_ring[c]) {
        ElementSet zero(usize);
        zero.insert(m.ring(d.component_ring[c]).zero());
        if (common != zero) fail("components in one ring meet outside zero");
      } else if (!common.is_subset_of(m.zero_set())) {
        fail("components of different rings meet outside the zero set");
      }
    }
  }
  // Additive joins inside a ring, union joins across rings.
  ElementSet all(usize);
  for (RingIndex k = 0; k < m.ring_count(); ++k) {
    const auto& ring = m.ring(k);
    ElementList acc{ring.zero()};
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      if (d.component_ring[c] == k) acc = sum_set(ring, acc, d.components[c].elements.to_list());
    }
    if (acc != ring.carrier()) fail("ring " + std::to_string(k + 1) + " is not the sum of its components");
    all |= ElementSet(usize, acc);
  }
  if (all != m.carrier()) fail("components do not cover the carrier");
  for (std::size_t c = 0; c + 1 < d.components.size(); ++c) {
    const auto expected =
        d.component_ring[c] == d.component_ring[c + 1] ? SumMode::kAdditive : SumMode::kUnion;
    if (d.joins[c] != expected) fail("join " + std::to_string(c + 1) + " has the wrong mode");
  }
  return out;
}

}  // namespace multiring
