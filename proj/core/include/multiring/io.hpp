#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multiring/error.hpp"
#include "multiring/multispace.hpp"

namespace multiring::io {

inline constexpr std::string_view kFormatTag = "multiring-space/1";

struct RingDescription {
  std::string name;
  std::vector<std::string> elements;
  // Either the cyclic shorthand (elements listed in residue order) or
  // explicit tables whose rows and columns follow `elements`.
  std::optional<std::size_t> cyclic;
  std::vector<std::vector<std::string>> add;
  std::vector<std::vector<std::string>> mul;

  friend bool operator==(const RingDescription&, const RingDescription&) = default;
};

struct SpaceDocument {
  std::vector<std::string> universe;
  std::vector<RingDescription> rings;

  friend bool operator==(const SpaceDocument&, const SpaceDocument&) = default;
};

// Parse failure with a location: `line`/`column` are 1-based and 0 when
// unknown; `field` is a path such as "rings[1].add[4]".
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::size_t line,
             std::size_t column, std::string field);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& field() const noexcept { return field_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
  std::string field_;
};

// Throws ParseError with kSyntaxError, kDuplicateLabel, kUnknownKey or
// kTableShape.
SpaceDocument parse_spec(std::string_view text);

// Canonical text form; parse_spec(serialize(d)) == d.
std::string serialize(const SpaceDocument& doc);

// Explicit-table description of a built space.
SpaceDocument describe(const MultiRingSpace& m);

// Resolves labels and hands the rings to build_multispace. Ring errors
// surface as RingInvalidError / MixedLawError; oversized rings as
// kCapExceeded; ring elements missing from the universe as
// kForeignElement.
MultiRingSpace build(const SpaceDocument& doc, const Limits& limits = {});

}  // namespace multiring::io
