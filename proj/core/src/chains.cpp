#include "multiring/chains.hpp"

#include <algorithm>

#include "multiring/ideals.hpp"

namespace multiring {

OperationOrder OperationOrder::from(std::vector<RingIndex> order, std::size_t ring_count) {
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  bool permutation = sorted.size() == ring_count;
  for (std::size_t k = 0; permutation && k < sorted.size(); ++k) permutation = sorted[k] == k;
  if (!permutation) {
    throw Error(ErrorCode::kMalformedTable,
                "operation order must list each of the " + std::to_string(ring_count) +
                    " rings exactly once");
  }
  return OperationOrder{std::move(order)};
}

OperationOrder OperationOrder::identity(std::size_t ring_count) {
  std::vector<RingIndex> order(ring_count);
  for (RingIndex k = 0; k < ring_count; ++k) order[k] = k;
  return OperationOrder{std::move(order)};
}

std::vector<ElementList> max_ideal_chain(const FiniteRing& ring, const Limits& limits) {
  std::vector<ElementList> chain{ring.carrier()};
  auto current = ring;
  while (current.size() > 1) {
    auto next = maximal_ideals(current, limits).front();
    current = current.restricted(next);
    chain.push_back(std::move(next));
  }
  return chain;
}

namespace {

// `next` viewed inside restrict_space(m, prev): ring k of that space is
// prev.ops[k]. Returns nullopt when next keeps an operation prev dropped.
std::optional<SubsetSelection> remap_ops(const SubsetSelection& prev,
                                         const SubsetSelection& next) {
  SubsetSelection out{next.elements, {}};
  for (auto k : next.ops) {
    auto it = std::find(prev.ops.begin(), prev.ops.end(), k);
    if (it == prev.ops.end()) return std::nullopt;
    out.ops.push_back(static_cast<RingIndex>(it - prev.ops.begin()));
  }
  return out;
}

// Empty string when `next` is a maximal ideal subspace of `prev`,
// otherwise the reason it is not.
std::string step_defect(const MultiRingSpace& m, const SubsetSelection& prev,
                        const SubsetSelection& next, const Limits& limits) {
  if (!next.elements.is_proper_subset_of(prev.elements)) return "not strictly descending";
  auto space = restrict_space(m, prev);
  if (!space) return "predecessor is not a multi-ring subspace";
  auto mapped = remap_ops(prev, next);
  if (!mapped) return "term keeps an operation its predecessor dropped";
  if (!is_ideal_subspace_t23(*space, *mapped)) {
    return "term is not an ideal subspace of its predecessor";
  }
  if (!ideal_subspaces_between(*space, next.elements, prev.elements, limits).empty()) {
    return "an ideal subspace lies strictly between the terms";
  }
  return {};
}

}  // namespace

IdealChain ideal_subspace_chain(const MultiRingSpace& m, const OperationOrder& order,
                                const ChainOptions& options) {
  const auto checked = OperationOrder::from(order.order, m.ring_count());
  IdealChain chain;
  chain.order = checked;
  chain.terms.push_back(m.full_selection());
  if (options.record_alternatives) chain.alternatives.emplace_back();

  for (auto active : checked.order) {
    chain.stage_boundaries.push_back(chain.terms.size());
    const auto& ring = m.ring(active);
    const auto part = (chain.terms.back().elements & m.ring_carrier(active)).to_list();
    if (part.empty() || !is_subring(ring, part)) {
      throw StepInvalidError("ring " + std::to_string(active + 1) +
                                 " no longer meets the chain in a subring",
                             chain.terms.back());
    }
    const auto component = ring.restricted(part);
    const auto descent = max_ideal_chain(component, options.limits);
    for (std::size_t step = 1; step < descent.size(); ++step) {
      const auto& prev = chain.terms.back();
      SubsetSelection next = prev;
      for (auto e : descent[step - 1]) next.elements.erase(e);
      for (auto e : descent[step]) next.elements.insert(e);

      for (RingIndex q = 0; q < m.ring_count(); ++q) {
        if (q == active) continue;
        if ((next.elements & m.ring_carrier(q)) != (prev.elements & m.ring_carrier(q))) {
          throw StepInvalidError("descending ring " + std::to_string(active + 1) +
                                     " changes the part in ring " + std::to_string(q + 1),
                                 next);
        }
      }
      if (auto defect = step_defect(m, prev, next, options.limits); !defect.empty()) {
        throw StepInvalidError(defect, next);
      }
      if (options.record_alternatives) {
        chain.alternatives.push_back(
            maximal_ideals(component.restricted(descent[step - 1]), options.limits));
      }
      chain.terms.push_back(std::move(next));
    }
  }
  return chain;
}

bool chain_is_valid(const MultiRingSpace& m, const IdealChain& chain, const Limits& limits) {
  if (chain.terms.empty()) return false;
  for (const auto& t : chain.terms) check_selection(m, t);
  for (std::size_t k = 1; k < chain.terms.size(); ++k) {
    if (!step_defect(m, chain.terms[k - 1], chain.terms[k], limits).empty()) return false;
  }
  return true;
}

ArtinReport is_artin(const MultiRingSpace& m, const Limits& limits) {
  ArtinReport report;
  for (const auto& r : m.rings()) {
    report.ring_chain_lengths.push_back(max_ideal_chain(r, limits).size() - 1);
  }
  report.witness = ideal_subspace_chain(m, OperationOrder::identity(m.ring_count()),
                                        ChainOptions{limits, false});
  // Every ring is finite, so every descending ideal chain is finite.
  report.artin = true;
  return report;
}

}  // namespace multiring
