#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace multiring {

// Index of one element of a Universe. Canonical element order is index
// order, which is the order the universe labels were declared in.
struct ElementId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

constexpr ElementId element(std::uint32_t v) noexcept { return ElementId{v}; }

// Sorted, duplicate-free list of elements. Ring-level results use this
// form; lexicographic comparison of two lists is the canonical tie-break.
using ElementList = std::vector<ElementId>;

ElementList make_list(std::initializer_list<std::uint32_t> ids);
ElementList normalized(ElementList list);

// Caps shared by every exhaustive procedure.
struct Limits {
  std::size_t max_ring_size = 64;
  std::uint64_t subset_budget = std::uint64_t{1} << 20;
};

// Hard ceiling: ring-local subsets are 64-bit masks.
inline constexpr std::size_t kMaxRingSizeCeiling = 64;

class Universe {
 public:
  Universe() = default;

  // Throws kDuplicateLabel for repeated labels and kMalformedTable for an
  // empty label.
  static Universe from_labels(std::vector<std::string> labels);
  // Labels prefix0 .. prefix(n-1).
  static Universe numbered(const std::string& prefix, std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(ElementId id) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<ElementId> find(const std::string& label) const;
  // Throws kForeignElement for unknown labels.
  ElementId at(const std::string& label) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ElementId> index_;
};

// Subset of a universe, stored as a bitset of universe size.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe_size) : bits_(universe_size) {}
  ElementSet(std::size_t universe_size, std::span<const ElementId> ids);

  static ElementSet full(std::size_t universe_size);

  std::size_t universe_size() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(ElementId id) const {
    return id.value < bits_.size() && bits_.test(id.value);
  }
  void insert(ElementId id) { bits_.set(id.value); }
  void erase(ElementId id) { bits_.reset(id.value); }

  bool is_subset_of(const ElementSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool is_proper_subset_of(const ElementSet& other) const {
    return bits_.is_proper_subset_of(other.bits_);
  }
  bool intersects(const ElementSet& other) const {
    return bits_.intersects(other.bits_);
  }

  ElementSet& operator|=(const ElementSet& o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(const ElementSet& o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator-=(const ElementSet& o) { bits_ -= o.bits_; return *this; }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_;
  }

  ElementList to_list() const;

  // Canonical order: lexicographic on the sorted element lists.
  friend bool lex_less(const ElementSet& a, const ElementSet& b);

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

bool lex_less(const ElementList& a, const ElementList& b);

}  // namespace multiring
