#include "multiring/element.hpp"

#include <algorithm>

#include "multiring/error.hpp"

namespace multiring {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kMalformedTable: return "MalformedTable";
    case ErrorCode::kAxiomViolation: return "AxiomViolation";
    case ErrorCode::kForeignElement: return "ForeignElement";
    case ErrorCode::kNoUnit: return "NoUnit";
    case ErrorCode::kRingInvalid: return "RingInvalid";
    case ErrorCode::kMixedLawViolation: return "MixedLawViolation";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kEmptyOps: return "EmptyOps";
    case ErrorCode::kStepInvalid: return "StepInvalid";
    case ErrorCode::kNotIdealSubspace: return "NotIdealSubspace";
    case ErrorCode::kMixedModeMismatch: return "MixedModeMismatch";
    case ErrorCode::kNoDecomposition: return "NoDecomposition";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kUnknownKey: return "UnknownKey";
    case ErrorCode::kTableShape: return "TableShape";
  }
  return "Unknown";
}

ElementList make_list(std::initializer_list<std::uint32_t> ids) {
  ElementList out;
  out.reserve(ids.size());
  for (auto v : ids) out.push_back(ElementId{v});
  return normalized(std::move(out));
}

ElementList normalized(ElementList list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  return list;
}

bool lex_less(const ElementList& a, const ElementList& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Universe Universe::from_labels(std::vector<std::string> labels) {
  Universe u;
  u.index_.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) {
      throw Error(ErrorCode::kMalformedTable,
                  "empty universe label at position " + std::to_string(i));
    }
    auto [it, fresh] = u.index_.emplace(
        labels[i], ElementId{static_cast<std::uint32_t>(i)});
    if (!fresh) {
      throw Error(ErrorCode::kDuplicateLabel,
                  "label '" + labels[i] + "' declared twice");
    }
  }
  u.labels_ = std::move(labels);
  return u;
}

Universe Universe::numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return from_labels(std::move(labels));
}

const std::string& Universe::label(ElementId id) const {
  if (id.value >= labels_.size()) {
    throw Error(ErrorCode::kForeignElement,
                "element #" + std::to_string(id.value) + " outside universe");
  }
  return labels_[id.value];
}

std::optional<ElementId> Universe::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Universe::at(const std::string& label) const {
  auto id = find(label);
  if (!id) throw Error(ErrorCode::kForeignElement, "unknown label '" + label + "'");
  return *id;
}

ElementSet::ElementSet(std::size_t universe_size, std::span<const ElementId> ids)
    : bits_(universe_size) {
  for (auto id : ids) {
    if (id.value >= universe_size) {
      throw Error(ErrorCode::kForeignElement,
                  "element #" + std::to_string(id.value) + " outside universe");
    }
    bits_.set(id.value);
  }
}

ElementSet ElementSet::full(std::size_t universe_size) {
  ElementSet s(universe_size);
  s.bits_.set();
  return s;
}

ElementList ElementSet::to_list() const {
  ElementList out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != decltype(bits_)::npos;
       i = bits_.find_next(i)) {
    out.push_back(ElementId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  // Walk both bitsets in ascending order; the first differing position
  // decides, and a proper prefix is smaller.
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  auto i = a.bits_.find_first();
  auto j = b.bits_.find_first();
  while (i != Bits::npos && j != Bits::npos) {
    if (i != j) return i < j;
    i = a.bits_.find_next(i);
    j = b.bits_.find_next(j);
  }
  return i == Bits::npos && j != Bits::npos;
}

}  // namespace multiring
