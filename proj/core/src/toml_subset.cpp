#include "toml_subset.hpp"

#include <cctype>
#include <nlohmann/json.hpp>

#include "mtz/errors.hpp"

namespace mtz::detail {

namespace {

class Reader {
 public:
  explicit Reader(const std::string& s) : s_(s) {}

  nlohmann::ordered_json document() {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    while (true) {
      skip_space(true);
      if (eof()) return doc;
      if (peek() == '[') fail("tables are not supported");
      std::string key = bare_key();
      skip_space(false);
      expect('=');
      skip_space(false);
      if (doc.contains(key)) fail("duplicate key '" + key + "'");
      doc[key] = value();
      skip_space(false);
      if (!eof() && peek() != '\n') fail("expected end of line");
    }
  }

 private:
  bool eof() const { return i_ >= s_.size(); }
  char peek() const { return s_[i_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    size_t line = 1, col = 1;
    for (size_t k = 0; k < i_ && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError, std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }

  void skip_space(bool newlines) {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') ++i_;
      } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        ++i_;
      } else {
        return;
      }
    }
  }

  void expect(char c) {
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  std::string bare_key() {
    size_t start = i_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) ++i_;
    if (start == i_) fail("expected a key");
    if (!eof() && peek() == '.') fail("dotted keys are not supported");
    return s_.substr(start, i_ - start);
  }

  nlohmann::ordered_json value() {
    if (eof()) fail("expected a value");
    char c = peek();
    if (c == '"') return string_value();
    if (c == '[') return array_value();
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) return integer_value();
    if (s_.compare(i_, 4, "true") == 0) {
      i_ += 4;
      return true;
    }
    if (s_.compare(i_, 5, "false") == 0) {
      i_ += 5;
      return false;
    }
    fail("unsupported value");
  }

  nlohmann::ordered_json string_value() {
    expect('"');
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      char c = s_[i_++];
      if (c == '"') return out;
      if (c == '\\') {
        if (eof()) fail("unterminated escape");
        char e = s_[i_++];
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          default: fail("unsupported escape");
        }
      } else {
        out += c;
      }
    }
  }

  nlohmann::ordered_json integer_value() {
    size_t start = i_;
    if (peek() == '-' || peek() == '+') ++i_;
    size_t digits = i_;
    while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) ++i_;
    if (digits == i_) fail("expected digits");
    if (!eof() && (peek() == '.' || peek() == 'e' || peek() == 'E')) fail("floats are not supported");
    std::string t;
    for (size_t k = start; k < i_; ++k)
      if (s_[k] != '_') t += s_[k];
    try {
      return std::stoll(t);
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  nlohmann::ordered_json array_value() {
    expect('[');
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    while (true) {
      skip_space(true);
      if (eof()) fail("unterminated array");
      if (peek() == ']') {
        ++i_;
        return arr;
      }
      arr.push_back(value());
      skip_space(true);
      if (eof()) fail("unterminated array");
      if (peek() == ',') {
        ++i_;
        continue;
      }
      if (peek() != ']') fail("expected ',' or ']'");
    }
  }

  const std::string& s_;
  size_t i_ = 0;
};

}  // namespace

std::string toml_subset_to_json(const std::string& text) { return Reader(text).document().dump(); }

}  // namespace mtz::detail
