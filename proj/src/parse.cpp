#include "resint/parse.hpp"

#include <cctype>
#include <cstdint>

namespace resint {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial expr() {
    skip();
    Polynomial acc = term();
    for (;;) {
      skip();
      if (peek() == '+') {
        ++pos_;
        acc = acc + term();
      } else if (peek() == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  void expect_end() {
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void consume(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  std::size_t pos() const { return pos_; }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    skip();
    char c = peek();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
      fail("implicit multiplication is not allowed");
    if (c == '.') fail("coefficient is not an integer");
    return acc;
  }

  Polynomial factor() {
    skip();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    Polynomial base = atom();
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer");
      std::uint64_t e = number();
      if (e > static_cast<std::uint64_t>(kMaxExponent)) fail("exponent too large");
      base = power(base, static_cast<unsigned>(e));
    }
    return base;
  }

  std::uint64_t number() {
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      if (v > (std::uint64_t{1} << 62)) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  Polynomial atom() {
    skip();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = number();
      if (peek() == '.' || peek() == '/') fail("coefficient is not an integer");
      const auto p = ring_->field().characteristic();
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v % p));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      consume(')');
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("malformed token '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const RingPtr& ring_;
};

// Splits on commas at bracket/paren depth zero.
std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_brackets(std::string_view s, const char* what) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError(std::string(what) + " must be enclosed in brackets: \"" + std::string(s) + "\"");
  return s.substr(1, s.size() - 2);
}

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  Parser p(text, ring);
  Polynomial f = p.expr();
  p.expect_end();
  return f;
}

std::vector<Polynomial> parse_poly_list(std::string_view text, const RingPtr& ring) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') body = strip_brackets(body, "list");
  std::vector<Polynomial> out;
  if (trim(body).empty()) return out;
  for (auto piece : split_top(body)) out.push_back(parse_poly(piece, ring));
  return out;
}

std::vector<std::vector<Polynomial>> parse_matrix(std::string_view text, const RingPtr& ring) {
  std::vector<std::vector<Polynomial>> rows;
  std::string_view body = strip_brackets(text, "matrix");
  for (auto row : split_top(body)) {
    auto entries = strip_brackets(row, "matrix row");
    std::vector<Polynomial> r;
    for (auto piece : split_top(entries)) r.push_back(parse_poly(piece, ring));
    if (!rows.empty() && r.size() != rows.front().size())
      throw ParseError("matrix rows have different lengths");
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace resint
