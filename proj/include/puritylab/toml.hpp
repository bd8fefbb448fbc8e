#pragma once

// A small TOML subset: [tables], [[array tables]], key = value with strings,
// integers, booleans, arrays (may span lines) and inline tables. Keys keep
// their file order. Errors are reported as ParseError with a line number.

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

namespace puritylab {

using OrderedJson = nlohmann::ordered_json;

struct TomlDocument {
  OrderedJson root = OrderedJson::object();
  /// Line of each key, addressed by JSON pointer (e.g. "/module/M/ring").
  std::map<std::string, std::size_t> lines;

  std::size_t lineOf(const std::string& pointer) const;
};

TomlDocument parseToml(std::string_view text);

}  // namespace puritylab
