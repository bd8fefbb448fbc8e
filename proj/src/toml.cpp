#include "puritylab/toml.hpp"

#include <cctype>
#include <set>

#include "puritylab/error.hpp"

namespace puritylab {

std::size_t TomlDocument::lineOf(const std::string& pointer) const {
  // Fall back to the nearest enclosing entry that has a recorded line.
  std::string p = pointer;
  while (!p.empty()) {
    if (auto it = lines.find(p); it != lines.end()) return it->second;
    p = p.substr(0, p.rfind('/'));
  }
  return 0;
}

namespace {

std::string escapePointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TomlDocument run() {
    std::vector<std::string> tablePath;
    OrderedJson* table = &doc_.root;
    std::string tablePointer;
    while (true) {
      skipBlankAndComments();
      if (atEnd()) break;
      if (peek() == '[') {
        const std::size_t headerLine = line_;
        bool arrayTable = false;
        get();
        if (peek() == '[') {
          get();
          arrayTable = true;
        }
        skipSpaces();
        auto path = parseKeyPath();
        skipSpaces();
        expect(']');
        if (arrayTable) expect(']');
        endOfLine();
        table = &openTable(path, arrayTable, headerLine, tablePointer);
        continue;
      }
      parseKeyValue(*table, tablePointer);
      endOfLine();
    }
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_) + ": " + msg);
  }

  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return atEnd() ? '\0' : text_[pos_]; }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }
  void skipSpaces() {
    while (!atEnd() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) get();
  }
  void skipComment() {
    if (peek() == '#')
      while (!atEnd() && peek() != '\n') get();
  }
  void skipBlankAndComments() {
    while (!atEnd()) {
      skipSpaces();
      skipComment();
      if (peek() == '\n') {
        get();
        continue;
      }
      break;
    }
  }
  /// Inside arrays and inline tables newlines are insignificant.
  void skipWhitespaceMultiline() { skipBlankAndComments(); }
  void endOfLine() {
    skipSpaces();
    skipComment();
    if (atEnd()) return;
    if (peek() != '\n') fail("unexpected text after value");
    get();
  }

  static bool bareKeyChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }

  std::string parseKey() {
    if (peek() == '"') return parseString();
    std::string key;
    while (!atEnd() && bareKeyChar(peek())) key += get();
    if (key.empty()) fail("expected a key");
    return key;
  }

  std::vector<std::string> parseKeyPath() {
    std::vector<std::string> path{parseKey()};
    skipSpaces();
    while (peek() == '.') {
      get();
      skipSpaces();
      path.push_back(parseKey());
      skipSpaces();
    }
    return path;
  }

  OrderedJson& openTable(const std::vector<std::string>& path, bool arrayTable, std::size_t headerLine,
                         std::string& pointer) {
    OrderedJson* node = &doc_.root;
    pointer.clear();
    for (std::size_t i = 0; i < path.size(); ++i) {
      const bool last = i + 1 == path.size();
      pointer += "/" + escapePointer(path[i]);
      if (last && arrayTable) {
        auto& arr = (*node)[path[i]];
        if (arr.is_null()) arr = OrderedJson::array();
        if (!arr.is_array()) fail("'" + path[i] + "' is not an array of tables");
        arr.push_back(OrderedJson::object());
        pointer += "/" + std::to_string(arr.size() - 1);
        doc_.lines[pointer] = headerLine;
        return arr.back();
      }
      auto& child = (*node)[path[i]];
      if (child.is_null()) {
        child = OrderedJson::object();
        doc_.lines[pointer] = headerLine;
      } else if (last && definedTables_.count(pointer)) {
        fail("table [" + path[i] + "] defined twice");
      }
      if (child.is_array() && !child.empty() && child.back().is_object()) {
        node = &child.back();
        pointer += "/" + std::to_string(child.size() - 1);
        continue;
      }
      if (!child.is_object()) fail("'" + path[i] + "' is not a table");
      node = &child;
    }
    definedTables_.insert(pointer);
    return *node;
  }

  void parseKeyValue(OrderedJson& table, const std::string& tablePointer) {
    const std::size_t keyLine = line_;
    auto path = parseKeyPath();
    skipSpaces();
    expect('=');
    skipSpaces();
    OrderedJson* node = &table;
    std::string pointer = tablePointer;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      pointer += "/" + escapePointer(path[i]);
      auto& child = (*node)[path[i]];
      if (child.is_null()) child = OrderedJson::object();
      if (!child.is_object()) fail("'" + path[i] + "' is not a table");
      node = &child;
    }
    pointer += "/" + escapePointer(path.back());
    if (node->contains(path.back())) fail("duplicate key '" + path.back() + "'");
    (*node)[path.back()] = parseValue(pointer);
    doc_.lines[pointer] = keyLine;
  }

  OrderedJson parseValue(const std::string& pointer) {
    const char c = peek();
    if (c == '"') return parseString();
    if (c == '[') return parseArray(pointer);
    if (c == '{') return parseInlineTable(pointer);
    if (c == 't' || c == 'f') {
      std::string word;
      while (!atEnd() && std::isalpha(static_cast<unsigned char>(peek()))) word += get();
      if (word == "true") return true;
      if (word == "false") return false;
      fail("unknown literal '" + word + "'");
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) return parseInteger();
    fail("expected a value");
  }

  std::string parseString() {
    expect('"');
    std::string out;
    while (true) {
      if (atEnd() || peek() == '\n') fail("unterminated string");
      char c = get();
      if (c == '"') break;
      if (c == '\\') {
        if (atEnd()) fail("unterminated string");
        char e = get();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default: fail(std::string("unknown escape \\") + e);
        }
        continue;
      }
      out += c;
    }
    return out;
  }

  OrderedJson parseInteger() {
    std::string digits;
    if (peek() == '-' || peek() == '+') digits += get();
    while (!atEnd() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) {
      char c = get();
      if (c != '_') digits += c;
    }
    if (peek() == '.' || peek() == 'e' || peek() == 'E') fail("floating point values are not supported");
    if (digits.empty() || digits == "-" || digits == "+") fail("malformed integer");
    try {
      if (digits[0] == '-') return std::stoll(digits);
      return std::stoull(digits[0] == '+' ? digits.substr(1) : digits);
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  OrderedJson parseArray(const std::string& pointer) {
    expect('[');
    OrderedJson arr = OrderedJson::array();
    while (true) {
      skipWhitespaceMultiline();
      if (peek() == ']') {
        get();
        return arr;
      }
      arr.push_back(parseValue(pointer + "/" + std::to_string(arr.size())));
      skipWhitespaceMultiline();
      if (peek() == ',') {
        get();
        continue;
      }
      if (peek() != ']') fail("expected ',' or ']' in array");
    }
  }

  OrderedJson parseInlineTable(const std::string& pointer) {
    expect('{');
    OrderedJson obj = OrderedJson::object();
    skipWhitespaceMultiline();
    if (peek() == '}') {
      get();
      return obj;
    }
    while (true) {
      skipWhitespaceMultiline();
      const std::size_t keyLine = line_;
      auto key = parseKey();
      skipSpaces();
      expect('=');
      skipSpaces();
      if (obj.contains(key)) fail("duplicate key '" + key + "'");
      const std::string child = pointer + "/" + escapePointer(key);
      obj[key] = parseValue(child);
      doc_.lines[child] = keyLine;
      skipWhitespaceMultiline();
      if (peek() == ',') {
        get();
        continue;
      }
      if (peek() == '}') {
        get();
        return obj;
      }
      fail("expected ',' or '}' in inline table");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  TomlDocument doc_;
  std::set<std::string> definedTables_;
};

}  // namespace

TomlDocument parseToml(std::string_view text) { return Parser(text).run(); }

}  // namespace puritylab
