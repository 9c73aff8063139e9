#include "demyanov/family_io.hpp"

#include <json.hpp>

#include "demyanov/errors.hpp"

namespace demyanov {

namespace {

using json = nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

Rational read_coordinate(const json& value, const std::string& where) {
  if (!value.is_string()) schema_error(where, "coordinate must be a string literal");
  try {
    return Rational::parse(value.get_ref<const std::string&>());
  } catch (const ParseError& e) {
    schema_error(where, e.what());
  }
}

}  // namespace

Collection parse_family(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte count read so far; the error sits at the last byte
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(column),
                     line, column);
  }

  if (!doc.is_object()) schema_error("document", "expected an object");
  const auto version = doc.find("version");
  if (version == doc.end() || !version->is_string()) {
    schema_error("version", "missing or not a string");
  }
  if (version->get_ref<const std::string&>() != kFamilyFormatVersion) {
    schema_error("version", "unsupported format version \"" +
                                version->get_ref<const std::string&>() + "\"");
  }
  const auto polytopes = doc.find("polytopes");
  if (polytopes == doc.end() || !polytopes->is_array()) {
    schema_error("polytopes", "missing or not an array");
  }
  if (polytopes->empty()) throw EmptyInput("family document lists no polytopes");

  std::vector<Polytope> members;
  for (std::size_t i = 0; i < polytopes->size(); ++i) {
    const json& list = (*polytopes)[i];
    const std::string where = "polytopes[" + std::to_string(i) + "]";
    if (!list.is_array() || list.empty()) schema_error(where, "expected a nonempty vertex list");
    std::vector<Point> points;
    for (std::size_t j = 0; j < list.size(); ++j) {
      const json& vertex = list[j];
      const std::string vwhere = where + "[" + std::to_string(j) + "]";
      if (!vertex.is_array() || vertex.size() != 2) schema_error(vwhere, "expected [x, y]");
      points.push_back(
          {read_coordinate(vertex[0], vwhere + "[0]"), read_coordinate(vertex[1], vwhere + "[1]")});
    }
    members.push_back(convex_hull(points));
  }
  return Collection(std::move(members));
}

std::string serialize_family(const Collection& omega) {
  std::string out = "{\n  \"version\": \"";
  out += kFamilyFormatVersion;
  out += "\",\n  \"polytopes\": [\n";
  for (std::size_t i = 0; i < omega.size(); ++i) {
    out += "    [";
    const auto& vs = omega.members()[i].vertices();
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (j) out += ", ";
      out += "[\"" + vs[j].x.to_string() + "\", \"" + vs[j].y.to_string() + "\"]";
    }
    out += i + 1 < omega.size() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace demyanov
