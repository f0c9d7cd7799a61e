#include "nz/expression.hpp"

#include <cctype>

namespace nz {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly p = parse_sum();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("parse_poly: trailing input at position " +
                       std::to_string(pos_));
    return p;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(
                                      text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  MultiPoly parse_sum() {
    MultiPoly acc =
        consume('-') ? -parse_product() : (consume('+'), parse_product());
    for (;;) {
      if (consume('+'))
        acc = acc + parse_product();
      else if (consume('-'))
        acc = acc - parse_product();
      else
        return acc;
    }
  }

  MultiPoly parse_product() {
    MultiPoly acc = parse_power();
    while (consume('*')) acc = acc * parse_power();
    return acc;
  }

  MultiPoly parse_power() {
    MultiPoly base = parse_atom();
    if (!consume('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError("parse_poly: expected exponent");
    return base.pow(std::stoul(text_.substr(start, pos_ - start)));
  }

  MultiPoly parse_atom() {
    char c = peek();
    if (c == '(') {
      consume('(');
      MultiPoly inner = parse_sum();
      if (!consume(')')) throw ParseError("parse_poly: missing ')'");
      return inner;
    }
    if (c == '-') {
      consume('-');
      return -parse_atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return MultiPoly::constant(BigInt(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      return MultiPoly::variable(text_.substr(start, pos_ - start));
    }
    throw ParseError("parse_poly: unexpected character at position " +
                     std::to_string(pos_));
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace nz
