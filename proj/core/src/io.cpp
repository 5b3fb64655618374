#include "multiring/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace multiring::io {

using nlohmann::json;

ParseError::ParseError(ErrorCode code, const std::string& message, std::size_t line,
                       std::size_t column, std::string field)
    : Error(code, (line ? "line " + std::to_string(line) + ": " : std::string()) +
                      (field.empty() ? std::string() : field + ": ") + message),
      message_(message),
      line_(line),
      column_(column),
      field_(std::move(field)) {}

namespace {

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Line of the n-th (1-based) quoted occurrence of `label`, or 0.
std::size_t line_of_label(std::string_view text, const std::string& label, std::size_t n) {
  const auto needle = json(label).dump();
  std::size_t pos = 0;
  for (std::size_t seen = 0; (pos = text.find(needle, pos)) != std::string_view::npos;
       pos += needle.size()) {
    if (++seen == n) return line_col(text, pos).first;
  }
  return 0;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(ErrorCode code, const std::string& field, const std::string& msg,
                         std::size_t line = 0) const {
    throw ParseError(code, msg, line, 0, field);
  }

  void only_keys(const json& obj, const std::string& field,
                 std::initializer_list<std::string_view> allowed) const {
    for (const auto& [key, _] : obj.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        fail(ErrorCode::kUnknownKey, field, "unknown key '" + key + "'",
             line_of_label(text_, key, 1));
      }
    }
  }

  const json& require(const json& obj, const std::string& key, const std::string& field) const {
    if (!obj.contains(key)) fail(ErrorCode::kSyntaxError, field, "missing key '" + key + "'");
    return obj.at(key);
  }

  std::string string(const json& j, const std::string& field) const {
    if (!j.is_string()) fail(ErrorCode::kSyntaxError, field, "expected a string");
    return j.get<std::string>();
  }

  std::vector<std::string> strings(const json& j, const std::string& field) const {
    if (!j.is_array()) fail(ErrorCode::kSyntaxError, field, "expected an array of labels");
    std::vector<std::string> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
      out.push_back(string(j[k], field + "[" + std::to_string(k) + "]"));
    }
    return out;
  }

  // Rejects repeated labels, reporting the line of the second occurrence.
  void distinct(const std::vector<std::string>& labels, const std::string& field) const {
    std::set<std::string> seen;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k].empty()) fail(ErrorCode::kSyntaxError, field, "empty label");
      if (!seen.insert(labels[k]).second) {
        fail(ErrorCode::kDuplicateLabel, field + "[" + std::to_string(k) + "]",
             "label '" + labels[k] + "' listed twice", line_of_label(text_, labels[k], 2));
      }
    }
  }

  std::vector<std::vector<std::string>> table(const json& j, const std::string& field,
                                              std::size_t n) const {
    if (!j.is_array()) fail(ErrorCode::kSyntaxError, field, "expected an array of rows");
    if (j.size() != n) {
      fail(ErrorCode::kTableShape, field,
           "has " + std::to_string(j.size()) + " rows, expected " + std::to_string(n));
    }
    std::vector<std::vector<std::string>> out;
    for (std::size_t r = 0; r < n; ++r) {
      const auto row_field = field + "[" + std::to_string(r) + "]";
      auto row = strings(j[r], row_field);
      if (row.size() != n) {
        fail(ErrorCode::kTableShape, row_field,
             "has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
      }
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  std::string_view text_;
};

}  // namespace

SpaceDocument parse_spec(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(ErrorCode::kSyntaxError, "malformed document", line, col, "");
  }
  Reader in(text);
  if (!root.is_object()) in.fail(ErrorCode::kSyntaxError, "", "expected a top-level object");
  in.only_keys(root, "", {"format", "universe", "rings"});
  if (in.string(in.require(root, "format", ""), "format") != kFormatTag) {
    in.fail(ErrorCode::kSyntaxError, "format",
            "unsupported format, expected '" + std::string(kFormatTag) + "'");
  }

  SpaceDocument doc;
  doc.universe = in.strings(in.require(root, "universe", ""), "universe");
  in.distinct(doc.universe, "universe");

  const auto& rings = in.require(root, "rings", "");
  if (!rings.is_array()) in.fail(ErrorCode::kSyntaxError, "rings", "expected an array");
  for (std::size_t k = 0; k < rings.size(); ++k) {
    const auto field = "rings[" + std::to_string(k) + "]";
    const auto& r = rings[k];
    if (!r.is_object()) in.fail(ErrorCode::kSyntaxError, field, "expected an object");
    in.only_keys(r, field, {"name", "elements", "cyclic", "add", "mul"});
    RingDescription ring;
    if (r.contains("name")) ring.name = in.string(r.at("name"), field + ".name");
    ring.elements = in.strings(in.require(r, "elements", field), field + ".elements");
    in.distinct(ring.elements, field + ".elements");
    const auto n = ring.elements.size();
    if (n == 0) in.fail(ErrorCode::kTableShape, field + ".elements", "a ring needs an element");

    const bool has_tables = r.contains("add") || r.contains("mul");
    if (r.contains("cyclic")) {
      if (has_tables) {
        in.fail(ErrorCode::kSyntaxError, field, "give either 'cyclic' or 'add'/'mul', not both");
      }
      const auto& c = r.at("cyclic");
      if (!c.is_number_unsigned() || c.get<std::size_t>() == 0) {
        in.fail(ErrorCode::kSyntaxError, field + ".cyclic", "expected a positive integer");
      }
      ring.cyclic = c.get<std::size_t>();
      if (*ring.cyclic != n) {
        in.fail(ErrorCode::kTableShape, field + ".elements",
                "cyclic " + std::to_string(*ring.cyclic) + " needs " +
                    std::to_string(*ring.cyclic) + " elements, got " + std::to_string(n));
      }
    } else {
      ring.add = in.table(in.require(r, "add", field), field + ".add", n);
      ring.mul = in.table(in.require(r, "mul", field), field + ".mul", n);
    }
    doc.rings.push_back(std::move(ring));
  }
  return doc;
}

namespace {

std::string quoted(const std::string& s) { return json(s).dump(); }

void write_labels(std::ostringstream& out, const std::vector<std::string>& labels) {
  out << '[';
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k) out << ", ";
    out << quoted(labels[k]);
  }
  out << ']';
}

void write_table(std::ostringstream& out, const std::vector<std::vector<std::string>>& t) {
  out << "[\n";
  for (std::size_t r = 0; r < t.size(); ++r) {
    out << "        ";
    write_labels(out, t[r]);
    out << (r + 1 < t.size() ? ",\n" : "\n");
  }
  out << "      ]";
}

}  // namespace

std::string serialize(const SpaceDocument& doc) {
  std::ostringstream out;
  out << "{\n  \"format\": " << quoted(std::string(kFormatTag)) << ",\n  \"universe\": ";
  write_labels(out, doc.universe);
  out << ",\n  \"rings\": [";
  for (std::size_t k = 0; k < doc.rings.size(); ++k) {
    const auto& r = doc.rings[k];
    out << (k ? ",\n" : "\n") << "    {\n      \"name\": " << quoted(r.name)
        << ",\n      \"elements\": ";
    write_labels(out, r.elements);
    if (r.cyclic) {
      out << ",\n      \"cyclic\": " << *r.cyclic << "\n    }";
    } else {
      out << ",\n      \"add\": ";
      write_table(out, r.add);
      out << ",\n      \"mul\": ";
      write_table(out, r.mul);
      out << "\n    }";
    }
  }
  out << (doc.rings.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

SpaceDocument describe(const MultiRingSpace& m) {
  SpaceDocument doc;
  doc.universe = m.universe().labels();
  for (const auto& ring : m.rings()) {
    RingDescription d;
    d.name = ring.name();
    for (auto e : ring.carrier()) d.elements.push_back(m.universe().label(e));
    const auto n = ring.size();
    d.add.assign(n, std::vector<std::string>(n));
    d.mul.assign(n, std::vector<std::string>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        d.add[x][y] = m.universe().label(ring.carrier()[ring.add_pos(x, y)]);
        d.mul[x][y] = m.universe().label(ring.carrier()[ring.mul_pos(x, y)]);
      }
    }
    doc.rings.push_back(std::move(d));
  }
  return doc;
}

MultiRingSpace build(const SpaceDocument& doc, const Limits& limits) {
  auto universe = Universe::from_labels(doc.universe);
  const auto cap = std::min(limits.max_ring_size, kMaxRingSizeCeiling);
  std::vector<RingTables> tables;
  for (std::size_t k = 0; k < doc.rings.size(); ++k) {
    const auto& d = doc.rings[k];
    const auto n = d.elements.size();
    if (n > cap) {
      throw Error(ErrorCode::kCapExceeded, "ring " + std::to_string(k + 1) + " has " +
                                               std::to_string(n) + " elements, cap is " +
                                               std::to_string(cap));
    }
    std::vector<ElementId> ids;
    for (const auto& l : d.elements) ids.push_back(universe.at(l));
    if (d.cyclic) {
      auto t = make_cyclic_ring(n, ids, limits).tables();
      if (!d.name.empty()) t.name = d.name;
      tables.push_back(std::move(t));
      continue;
    }
    RingTables t;
    t.name = d.name;
    t.carrier = ids;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t.add.push_back(universe.at(d.add.at(x).at(y)));
        t.mul.push_back(universe.at(d.mul.at(x).at(y)));
      }
    }
    tables.push_back(std::move(t));
  }
  return build_multispace(std::move(universe), tables);
}

}  // namespace multiring::io
