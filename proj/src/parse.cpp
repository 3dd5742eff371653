#include "ghrv/parse.hpp"

#include <cctype>
#include <string>

#include "ghrv/error.hpp"

namespace ghrv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyRingPtr& ring) : text_(text), ring_(ring) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) syntax("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void syntax(const std::string& what) {
    throw Error(ErrorCode::Syntax,
                "SyntaxError at position " + std::to_string(pos_) + ": " + what + " in \"" +
                    std::string(text_) + "\"",
                pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly signed_term() {
    if (accept('-')) return -term();
    return term();
  }

  Poly expr() {
    Poly acc = signed_term();
    for (;;) {
      if (accept('+')) {
        acc += signed_term();
      } else if (accept('-')) {
        acc -= signed_term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) syntax("expected exponent");
      if (pos_ - start > 6) {
        pos_ = start;
        syntax("exponent too large");
      }
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return b;
  }

  Poly base() {
    skip_ws();
    if (pos_ >= text_.size()) syntax("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) syntax("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class v(std::string(text_.substr(start, pos_ - start)));
      return Poly::constant(ring_, ring_->field()->from_mpz(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        throw Error(ErrorCode::UnknownVariable,
                    "UnknownVariable: '" + name + "' at position " + std::to_string(start), start);
      }
      return Poly::variable(ring_, *idx);
    }
    syntax("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const PolyRingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const PolyRingPtr& ring) { return Parser(text, ring).run(); }

}  // namespace ghrv
