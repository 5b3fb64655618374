#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multiring/element.hpp"
#include "multiring/error.hpp"

namespace multiring {

// Raw, unvalidated Cayley tables of a candidate ring. Tables are n x n,
// row-major, entry (x, y) at index x * n + y where x and y are positions
// in `carrier`. The carrier may be in any order; FiniteRing re-sorts it
// into canonical order.
struct RingTables {
  std::string name;
  std::vector<ElementId> carrier;
  std::vector<ElementId> add;
  std::vector<ElementId> mul;

  std::size_t size() const noexcept { return carrier.size(); }
  ElementId add_at(std::size_t x, std::size_t y) const { return add[x * size() + y]; }
  ElementId mul_at(std::size_t x, std::size_t y) const { return mul[x * size() + y]; }

  friend bool operator==(const RingTables&, const RingTables&) = default;
};

// Axiom names used in validation reports.
namespace axiom {
inline constexpr std::string_view kAddClosure = "add-closure";
inline constexpr std::string_view kMulClosure = "mul-closure";
inline constexpr std::string_view kAddIdentity = "add-identity";
inline constexpr std::string_view kAddCommutativity = "add-commutativity";
inline constexpr std::string_view kAddAssociativity = "add-associativity";
inline constexpr std::string_view kAddInverse = "add-inverse";
inline constexpr std::string_view kMulAssociativity = "mul-associativity";
inline constexpr std::string_view kLeftDistributivity = "left-distributivity";
inline constexpr std::string_view kRightDistributivity = "right-distributivity";
}  // namespace axiom

struct AxiomFailure {
  std::string axiom;
  // One to three elements; arity depends on the axiom.
  std::vector<ElementId> witness;

  friend bool operator==(const AxiomFailure&, const AxiomFailure&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<AxiomFailure> failures;
};

// Exhaustive axiom check. At most one failure is reported per axiom: the
// first witness in canonical (carrier position) order. Closure failures
// stop further checks since the remaining axioms cannot be evaluated.
// Throws kMalformedTable when the table shapes do not match the carrier.
ValidationReport validate_ring(const RingTables& tables);

// Re-evaluates a reported failure directly against the tables; true when
// the witness still exhibits the violation.
bool replays(const RingTables& tables, const AxiomFailure& failure);

class AxiomViolationError : public Error {
 public:
  AxiomViolationError(const std::string& what, ValidationReport report)
      : Error(ErrorCode::kAxiomViolation, what), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

// Ring-local subsets are bitmasks over carrier positions.
using LocalMask = std::uint64_t;

// A validated finite ring stored extensionally. Immutable once built.
class FiniteRing {
 public:
  // Validates and throws AxiomViolationError on failure, kCapExceeded above
  // the ring size ceiling, kMalformedTable for ill-shaped tables.
  static FiniteRing from_tables(RingTables tables);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  const ElementList& carrier() const noexcept { return carrier_; }
  bool contains(ElementId x) const noexcept;

  ElementId zero() const noexcept { return carrier_[zero_]; }
  std::optional<ElementId> unit() const;
  bool is_commutative() const noexcept;

  ElementId add(ElementId x, ElementId y) const;
  ElementId mul(ElementId x, ElementId y) const;
  ElementId neg(ElementId x) const;

  // Position-level access; positions index `carrier()`.
  std::size_t position(ElementId x) const;  // throws kForeignElement
  std::size_t add_pos(std::size_t x, std::size_t y) const { return add_[x * size() + y]; }
  std::size_t mul_pos(std::size_t x, std::size_t y) const { return mul_[x * size() + y]; }
  std::size_t neg_pos(std::size_t x) const { return neg_[x]; }
  std::size_t zero_pos() const noexcept { return zero_; }
  std::optional<std::size_t> unit_pos() const noexcept { return unit_; }

  LocalMask full_mask() const noexcept;
  LocalMask to_mask(std::span<const ElementId> elements) const;  // kForeignElement
  ElementList to_list(LocalMask mask) const;

  RingTables tables() const;

  // Same structure on a different carrier; carrier[k] replaces the k-th
  // element. The new carrier must be duplicate-free.
  FiniteRing relabeled(const std::vector<ElementId>& new_carrier) const;
  // Restriction to a subset closed under both operations; validated.
  FiniteRing restricted(std::span<const ElementId> subset) const;

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.carrier_ == b.carrier_ && a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  FiniteRing() = default;

  std::string name_;
  ElementList carrier_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::int16_t> position_of_;  // indexed by ElementId value
  std::size_t zero_ = 0;
  std::optional<std::size_t> unit_;
};

ValidationReport validate_ring(const FiniteRing& ring);

// Z_n on carrier {0, .., n-1} (or `carrier` when given, in residue order).
FiniteRing make_cyclic_ring(std::size_t n, const Limits& limits = {});
FiniteRing make_cyclic_ring(std::size_t n, const std::vector<ElementId>& carrier,
                            const Limits& limits = {});

// Componentwise product on fresh elements 0 .. |a||b|-1; the pair (i, j)
// of carrier positions becomes element i * |b| + j.
FiniteRing make_product_ring(const FiniteRing& a, const FiniteRing& b,
                             const Limits& limits = {});

// Builds a ring over `universe` from label tables. Rows and columns follow
// `carrier_labels`. Throws kMalformedTable for ragged tables or labels
// outside the carrier, AxiomViolationError when the tables are not a ring.
FiniteRing make_ring_from_tables(
    const Universe& universe, const std::vector<std::string>& carrier_labels,
    const std::vector<std::vector<std::string>>& add_table,
    const std::vector<std::vector<std::string>>& mul_table,
    std::string name = {});

// Convenience form whose universe is exactly `labels`.
FiniteRing make_ring_from_tables(
    const std::vector<std::string>& labels,
    const std::vector<std::vector<std::string>>& add_table,
    const std::vector<std::vector<std::string>>& mul_table,
    std::string name = {});

}  // namespace multiring
