#pragma once

#include <map>
#include <string>
#include <vector>

#include "multiring/element.hpp"
#include "multiring/multispace.hpp"

namespace multiring {

// How two ideal subspaces combine into a directed sum.
//   kUnion:    whole = I1 u I2, and I1 n I2 holds only elements that are
//              the additive zero of every ring containing them.
//   kAdditive: within a single ring k, whole = {a +_k b}, I1 n I2 = {0_k}.
enum class SumMode { kUnion, kAdditive };

std::string_view to_string(SumMode mode) noexcept;

// Throws kNotIdealSubspace unless i1 and i2 are ideal subspaces of the
// space named by `whole`; kMixedModeMismatch when additive mode is asked
// for selections that do not all keep exactly the same single ring.
bool directed_sum_check(const MultiRingSpace& m, const SubsetSelection& whole,
                        const SubsetSelection& i1, const SubsetSelection& i2, SumMode mode);

// No directed sum I = I1 (+) I2 of ideal subspaces of I exists with both
// I1 and I2 different from I. Additive mode applies when `i` keeps one
// operation, union mode otherwise. Throws kNotIdealSubspace, kCapExceeded.
bool is_non_reducible(const MultiRingSpace& m, const SubsetSelection& i,
                      const Limits& limits = {});

enum class DecompositionRoute { kIdempotent, kSearch };

std::string_view to_string(DecompositionRoute route) noexcept;

struct DirectedSumDecomposition {
  // Grouped by ring, canonical order inside each ring.
  std::vector<SubsetSelection> components;
  std::vector<RingIndex> component_ring;
  // Orthogonal idempotents e_ij of the rings that took the idempotent route.
  std::map<RingIndex, ElementList> per_ring_idempotents;
  std::vector<DecompositionRoute> routes;  // one per ring
  // joins[k] combines components k and k + 1.
  std::vector<SumMode> joins;
};

struct DecompositionCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// Replays every structural claim of a decomposition against the tables:
// idempotency, orthogonality, unit sums, per-ring additive reconstruction
// with trivial pairwise intersections, union reconstruction of the
// carrier with intersections inside the zero set, ideality, and
// non-reducibility of every component.
DecompositionCheck verify_decomposition(const MultiRingSpace& m,
                                        const DirectedSumDecomposition& d,
                                        const Limits& limits = {});

// Unital rings split along decompose_unit into the additive spans of
// (R e) u (e R); other rings are split by exhaustive search into
// non-reducible ideals. The result is verified before it is returned;
// a failed verification raises kNoDecomposition.
DirectedSumDecomposition decompose_artin(const MultiRingSpace& m, const Limits& limits = {});

}  // namespace multiring
