#pragma once

// Text and JSON forms of (oriented) Steiner triple systems.
//
//   text:  optional header "sts <n>", then one triple per line, either
//          unoriented "1 2 3" or oriented "[1,2,3]" (not mixed).
//   json:  {"n":7,"triples":[[1,2,3],...]} or {"n":7,"oriented":[[1,2,3],...]}
//
// Syntax problems raise SyntaxError with a 1-based line and column; anything
// that parses is handed to validate_sts.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "steiner/design.hpp"
#include "steiner/models.hpp"

namespace steiner {

namespace detail {

class LineScanner {
 public:
  LineScanner(std::string_view text, int line) : s_(text), line_(line) {}

  void skip_space() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a positive integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  bool word(std::string_view w) {
    skip_space();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error::syntax(line_, static_cast<int>(pos_) + 1, what);
  }

 private:
  std::string_view s_;
  int line_;
  std::size_t pos_ = 0;
};

inline int infer_order(int header_n, int max_point) { return header_n > 0 ? header_n : max_point; }

}  // namespace detail

/// Parses the text form. Returns an OrientedSTS when the triples are
/// bracketed, a SteinerTripleSystem otherwise.
inline Model parse_text(std::string_view text) {
  int header_n = 0;
  int max_point = 0;
  bool saw_oriented = false;
  bool saw_plain = false;
  std::vector<OrientedTriple> oriented;
  std::vector<Triple> plain;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    detail::LineScanner sc(line, line_no);
    if (sc.at_end()) continue;
    if (sc.word("sts")) {
      if (header_n != 0 || saw_oriented || saw_plain) sc.fail("header must come first");
      header_n = sc.integer();
      if (!sc.at_end()) sc.fail("trailing characters after header");
      continue;
    }
    std::array<int, 3> p{};
    if (sc.peek('[')) {
      if (saw_plain) sc.fail("mixed oriented and unoriented triples");
      saw_oriented = true;
      sc.expect('[');
      p[0] = sc.integer();
      sc.expect(',');
      p[1] = sc.integer();
      sc.expect(',');
      p[2] = sc.integer();
      sc.expect(']');
      if (!sc.at_end()) sc.fail("trailing characters after triple");
      oriented.push_back(canonical_rotation(p));
    } else {
      if (saw_oriented) sc.fail("mixed oriented and unoriented triples");
      saw_plain = true;
      for (auto& x : p) x = sc.integer();
      if (!sc.at_end()) sc.fail("expected exactly three points");
      plain.push_back(Triple::of(p[0], p[1], p[2]));
    }
    for (int x : p) max_point = std::max(max_point, x);
    if (end == text.size()) break;
  }
  if (!saw_oriented && !saw_plain) throw Error::syntax(line_no, 1, "no triples");
  const int n = detail::infer_order(header_n, max_point);
  if (saw_oriented) return OrientedSTS::make(n, oriented);
  return validate_sts(n, std::move(plain));
}

inline std::string to_text(const SteinerTripleSystem& s) {
  std::ostringstream os;
  os << "sts " << s.order() << '\n';
  for (const auto& t : s.triples()) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return os.str();
}

inline std::string to_text(const OrientedSTS& o) {
  std::ostringstream os;
  os << "sts " << o.order() << '\n';
  for (const auto& t : o.triples()) os << '[' << t[0] << ',' << t[1] << ',' << t[2] << "]\n";
  return os.str();
}

/// "{[1,2,3], [1,4,5], ...}" on one line, as used in reports.
inline std::string to_brackets(const OrientedSTS& o) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& t : o.triples()) {
    if (!first) os << ", ";
    first = false;
    os << '[' << t[0] << ", " << t[1] << ", " << t[2] << ']';
  }
  os << '}';
  return os.str();
}

inline nlohmann::json triples_json(const OrientedSTS& o) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : o.triples()) arr.push_back({t[0], t[1], t[2]});
  return arr;
}

inline nlohmann::json to_json(const SteinerTripleSystem& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : s.triples()) arr.push_back({t[0], t[1], t[2]});
  return {{"n", s.order()}, {"triples", arr}};
}

inline nlohmann::json to_json(const OrientedSTS& o) {
  return {{"n", o.order()}, {"oriented", triples_json(o)}};
}

inline Model parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line/column
    const std::size_t off = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < off; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error::syntax(line, col, "invalid JSON");
  }
  auto bad = [](const std::string& what) { return Error::syntax(1, 1, what); };
  if (!j.is_object()) throw bad("expected an object");
  const bool has_plain = j.contains("triples");
  const bool has_oriented = j.contains("oriented");
  if (has_plain == has_oriented) throw bad("expected exactly one of \"triples\" or \"oriented\"");
  const auto& arr = has_plain ? j["triples"] : j["oriented"];
  if (!arr.is_array()) throw bad("triples must be an array");
  int max_point = 0;
  std::vector<std::array<int, 3>> raw;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 3) throw bad("each triple must be an array of 3 integers");
    std::array<int, 3> p{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!t[i].is_number_integer()) throw bad("triple entries must be integers");
      p[i] = t[i].get<int>();
      max_point = std::max(max_point, p[i]);
    }
    raw.push_back(p);
  }
  int n = max_point;
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw bad("\"n\" must be an integer");
    n = j["n"].get<int>();
  }
  if (has_oriented) {
    std::vector<OrientedTriple> o;
    for (const auto& p : raw) o.push_back(canonical_rotation(p));
    return OrientedSTS::make(n, o);
  }
  std::vector<Triple> t;
  for (const auto& p : raw) t.push_back(Triple::of(p[0], p[1], p[2]));
  return validate_sts(n, std::move(t));
}

/// Dispatches on the first non-blank character: '{' means JSON.
inline Model parse_system(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(text) : parse_text(text);
  }
  throw Error::syntax(1, 1, "empty input");
}

}  // namespace steiner
