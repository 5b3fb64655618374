#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "multiring/element.hpp"
#include "multiring/ring.hpp"

namespace multiring {

// Ring indices are 0-based in the library; the command line shows them
// 1-based.
using RingIndex = std::size_t;

// Candidate sub-multi-space: a set of elements plus the operation pairs
// (ring indices) it keeps.
struct SubsetSelection {
  ElementSet elements;
  std::vector<RingIndex> ops;  // sorted, unique, nonempty

  friend bool operator==(const SubsetSelection&, const SubsetSelection&) = default;
};

namespace law {
inline constexpr std::string_view kAddAssociativity = "mixed-add-associativity";
inline constexpr std::string_view kMulAssociativity = "mixed-mul-associativity";
inline constexpr std::string_view kLeftDistributivity = "mixed-left-distributivity";
inline constexpr std::string_view kRightDistributivity = "mixed-right-distributivity";
}  // namespace law

// A mixed-law instance (i, j, x, y, z) that evaluates to two different
// elements. For the associativity laws the two sides are
//   (x op_i y) op_j z  and  x op_i (y op_j z);
// for left distributivity
//   x *_i (y +_j z)  and  (x *_i y) +_j (x *_i z);
// for right distributivity
//   (y +_j z) *_i x  and  (y *_i x) +_j (z *_i x).
struct MixedLawViolation {
  std::string law;
  RingIndex i = 0;
  RingIndex j = 0;
  ElementId x, y, z;

  friend bool operator==(const MixedLawViolation&, const MixedLawViolation&) = default;
};

class MixedLawError : public Error {
 public:
  explicit MixedLawError(MixedLawViolation v);
  const MixedLawViolation& violation() const noexcept { return violation_; }

 private:
  MixedLawViolation violation_;
};

class RingInvalidError : public Error {
 public:
  RingInvalidError(RingIndex index, const std::string& what, ValidationReport report)
      : Error(ErrorCode::kRingInvalid, what), index_(index), report_(std::move(report)) {}
  RingIndex ring_index() const noexcept { return index_; }
  const ValidationReport& report() const noexcept { return report_; }

 private:
  RingIndex index_;
  ValidationReport report_;
};

class MultiRingSpace {
 public:
  const Universe& universe() const noexcept { return universe_; }
  std::size_t ring_count() const noexcept { return rings_.size(); }
  const FiniteRing& ring(RingIndex i) const { return rings_.at(i); }
  const std::vector<FiniteRing>& rings() const noexcept { return rings_; }
  const ElementSet& carrier() const noexcept { return carrier_; }
  const ElementSet& ring_carrier(RingIndex i) const { return ring_carriers_.at(i); }

  // Number of fully defined mixed-law instances that were checked.
  std::size_t mixed_law_instances() const noexcept { return mixed_law_instances_; }
  bool carriers_disjoint() const;

  // Elements that are the additive zero of every ring containing them.
  ElementSet zero_set() const;
  // The selection holding every element with every operation.
  SubsetSelection full_selection() const;
  std::vector<RingIndex> all_ops() const;

  friend bool operator==(const MultiRingSpace& a, const MultiRingSpace& b) {
    return a.universe_ == b.universe_ && a.rings_ == b.rings_;
  }

 private:
  friend MultiRingSpace build_multispace(Universe, std::vector<FiniteRing>);

  Universe universe_;
  std::vector<FiniteRing> rings_;
  std::vector<ElementSet> ring_carriers_;
  ElementSet carrier_;
  std::size_t mixed_law_instances_ = 0;
};

// Scans every applicable mixed-law instance in canonical order (i, j, law,
// x, y, z) and returns the first violation. `instances` receives the
// number of fully defined instances evaluated.
std::optional<MixedLawViolation> find_mixed_law_violation(
    const std::vector<FiniteRing>& rings, std::size_t* instances = nullptr);

// Re-evaluates a violation against the rings; true when the two sides
// are defined and differ.
bool replays(const std::vector<FiniteRing>& rings, const MixedLawViolation& v);

// Throws kEmptyFamily, kForeignElement (ring element outside the
// universe), MixedLawError.
MultiRingSpace build_multispace(Universe universe, std::vector<FiniteRing> rings);
// Validates each table set first; invalid tables raise RingInvalidError.
MultiRingSpace build_multispace(Universe universe, const std::vector<RingTables>& rings);

// Subspace criteria. All three agree on every selection; they are kept
// as independent routes so each can check the others.
//   direct: each selected ring's part, with the restricted operations,
//           passes the full ring-axiom validator (or is empty);
//   t21:    each selected ring's part is a subring (or empty);
//   t22:    each selected ring's part is an additive subgroup closed
//           under multiplication (or empty).
// All require every selected element to lie in a selected ring and some
// selected ring to meet the selection. Malformed selections throw
// kEmptyOps / kForeignElement.
enum class SubspaceCriterion { kDirect, kT21, kT22 };
// Ideal-subspace criteria.
//   direct: additive subgroup (or empty) per selected ring, plus
//           absorption r *_k a, a *_k r for every defined product;
//   t23:    each selected ring's part is an ideal (or empty).
enum class IdealCriterion { kDirect, kT23 };

// A decision with a human-readable reason when it fails.
struct Verdict {
  bool holds = true;
  std::string reason;
};

Verdict subspace_verdict(const MultiRingSpace& m, const SubsetSelection& s,
                         SubspaceCriterion criterion);
Verdict ideal_subspace_verdict(const MultiRingSpace& m, const SubsetSelection& s,
                               IdealCriterion criterion);

bool is_subspace_direct(const MultiRingSpace& m, const SubsetSelection& s);
bool is_subspace_t21(const MultiRingSpace& m, const SubsetSelection& s);
bool is_subspace_t22(const MultiRingSpace& m, const SubsetSelection& s);

bool is_ideal_subspace_direct(const MultiRingSpace& m, const SubsetSelection& s);
bool is_ideal_subspace_t23(const MultiRingSpace& m, const SubsetSelection& s);

// Renders a set as {l1, l2, ...} using universe labels.
std::string format_set(const Universe& u, const ElementList& elements);

bool is_field(const FiniteRing& ring);
bool is_multi_field(const MultiRingSpace& m);

// The sub-multi-space named by `s`: one ring per index in s.ops, each the
// restriction of that ring to s.elements. Returns nullopt when some
// restriction is empty or not a subring. Ring k of the result corresponds
// to s.ops[k].
std::optional<MultiRingSpace> restrict_space(const MultiRingSpace& m,
                                             const SubsetSelection& s);

// Every element set that is an ideal subspace of `m` for some choice of
// operations, found by combining per-ring ideals (or the empty set) over
// every nonempty operation subset. Each set is reported once, paired with
// the first valid operation subset in decreasing-size order; results are
// sorted by size, then lexicographically. Throws kCapExceeded when the
// number of combinations exceeds limits.subset_budget.
std::vector<SubsetSelection> enumerate_ideal_subspaces(const MultiRingSpace& m,
                                                       const Limits& limits = {});

// Ideal subspaces J of `m` with lower < J < upper (strict inclusions of
// element sets). Only combinations containing `lower` are generated.
std::vector<SubsetSelection> ideal_subspaces_between(const MultiRingSpace& m,
                                                     const ElementSet& lower,
                                                     const ElementSet& upper,
                                                     const Limits& limits = {});

// Builds a selection from element labels and 0-based ring indices.
SubsetSelection make_selection(const MultiRingSpace& m,
                               const std::vector<std::string>& labels,
                               std::vector<RingIndex> ops);
SubsetSelection make_selection(const MultiRingSpace& m, const ElementList& elements,
                               std::vector<RingIndex> ops);

// Throws kEmptyOps / kForeignElement for malformed selections.
void check_selection(const MultiRingSpace& m, const SubsetSelection& s);

}  // namespace multiring
