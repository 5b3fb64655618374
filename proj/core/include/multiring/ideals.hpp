#pragma once

#include <span>
#include <vector>

#include "multiring/element.hpp"
#include "multiring/ring.hpp"

namespace multiring {

// Nonempty, closed under x + (-y) and under multiplication.
// Throws kForeignElement when `s` leaves the carrier.
bool is_subring(const FiniteRing& ring, std::span<const ElementId> s);

// Additive subgroup absorbing multiplication from both sides.
bool is_ideal(const FiniteRing& ring, std::span<const ElementId> s);

enum class IdealMethod {
  kAuto,        // exhaustive filtering up to 16 elements, closure above
  kClosure,     // principal ideals closed under ideal sums
  kExhaustive,  // every subset of the carrier, filtered by is_ideal
};

// All ideals, sorted by size and then lexicographically.
// Throws kCapExceeded above limits.max_ring_size, or when exhaustive
// filtering would visit more than limits.subset_budget subsets.
std::vector<ElementList> enumerate_ideals(const FiniteRing& ring,
                                          IdealMethod method = IdealMethod::kAuto,
                                          const Limits& limits = {});

// Proper ideals maximal under inclusion, in lexicographic order so the
// first entry is the canonically smallest.
std::vector<ElementList> maximal_ideals(const FiniteRing& ring, const Limits& limits = {});

// Every e with e * e = e, canonical order. Always contains zero.
ElementList idempotents(const FiniteRing& ring);

// Primitive orthogonal idempotents summing to the unit, sorted. The unit
// is split repeatedly, always at the canonically first nonzero idempotent
// f for which e - f completes an orthogonal pair. In the zero ring the
// result is {zero}, which equals the unit. Throws kNoUnit.
ElementList decompose_unit(const FiniteRing& ring);

// True when e is a nonzero idempotent that cannot be written as f + g
// with f, g nonzero orthogonal idempotents.
bool is_primitive_idempotent(const FiniteRing& ring, ElementId e);

// Additive subgroup generated by a set of elements.
ElementList additive_span(const FiniteRing& ring, std::span<const ElementId> gens);

// Two-sided ideal generated by a set of elements.
ElementList ideal_generated(const FiniteRing& ring, std::span<const ElementId> gens);

// Peirce component: additive span of (R e) together with (e R).
ElementList idempotent_component(const FiniteRing& ring, ElementId e);

// {a + b : a in lhs, b in rhs}.
ElementList sum_set(const FiniteRing& ring, std::span<const ElementId> lhs,
                    std::span<const ElementId> rhs);

namespace detail {
// Mask-level closures over carrier positions.
LocalMask additive_closure(const FiniteRing& ring, LocalMask gens);
LocalMask ideal_closure(const FiniteRing& ring, LocalMask gens);
LocalMask sum_mask(const FiniteRing& ring, LocalMask lhs, LocalMask rhs);
bool is_ideal_mask(const FiniteRing& ring, LocalMask mask);
}  // namespace detail

}  // namespace multiring
