// Strict infix parser for binary forms.
//
//   expr   := [sign] term { sign term }
//   term   := factor { '*' factor }
//   factor := integer | 'x' [ '^' integer ] | 'y' [ '^' integer ]
//
// Whitespace is allowed between tokens. Every term must have the same total
// degree in x and y.

#include "thuelab/error.hpp"
#include "thuelab/forms.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace thuelab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BinaryForm parse() {
    skip();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = next() == '-';
      skip();
    }
    term(negative);
    for (;;) {
      skip();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      next();
      skip();
      term(c == '-');
    }
    const int d = *degree_;
    std::vector<Integer> coeffs(static_cast<std::size_t>(d) + 1);
    for (const auto& [xexp, c] : terms_) coeffs[static_cast<std::size_t>(d - xexp)] = c;
    return BinaryForm(std::move(coeffs));
  }

 private:
  void term(bool negative) {
    std::size_t start = pos_;
    Integer coeff = negative ? -1 : 1;
    int xexp = 0, yexp = 0;
    factor(coeff, xexp, yexp);
    for (;;) {
      skip();
      if (at_end() || peek() != '*') break;
      next();
      skip();
      factor(coeff, xexp, yexp);
    }
    if (!degree_) {
      degree_ = xexp + yexp;
    } else if (*degree_ != xexp + yexp) {
      pos_ = start;
      fail("term of degree " + std::to_string(xexp + yexp) + " in a form of degree " + std::to_string(*degree_) +
           " (not homogeneous)");
    }
    terms_[xexp] += coeff;
  }

  void factor(Integer& coeff, int& xexp, int& yexp) {
    if (at_end()) fail("expected a factor");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= integer();
    } else if (c == 'x' || c == 'y') {
      next();
      int e = 1;
      skip();
      if (!at_end() && peek() == '^') {
        next();
        skip();
        Integer v = integer();
        if (v > 100000) fail("exponent too large");
        e = static_cast<int>(v.get_si());
      }
      (c == 'x' ? xexp : yexp) += e;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    // Implicit multiplication such as "2x" is rejected.
    if (!at_end()) {
      const char n = peek();
      if (n == 'x' || n == 'y' || std::isdigit(static_cast<unsigned char>(n)))
        fail("implicit multiplication is not allowed; use '*'");
    }
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) next();
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char next() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("form syntax error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<int> degree_;
  std::map<int, Integer> terms_;
};

}  // namespace

BinaryForm parse_form_expression(std::string_view text) { return Parser(text).parse(); }

BinaryForm parse_form(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') return parse_form_json(text);
  return parse_form_expression(text);
}

}  // namespace thuelab
