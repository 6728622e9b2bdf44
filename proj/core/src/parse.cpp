#include "lnd/parse.hpp"

#include <cctype>
#include <string>

#include "lnd/errors.hpp"

namespace lnd {

namespace {

class ExprParser {
public:
  ExprParser(std::string_view text, RingPtr ring)
      : text_(text), ring_(std::move(ring)), free_(ring_->free_twin()) {}

  Poly run() {
    skip_ws();
    Poly e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    if (!ring_->has_relation()) return e;
    return project_to_quotient(e, ring_);
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("parse", message, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) { return pos_ < text_.size() && text_[pos_] == c; }

  bool eat(char c) {
    if (peek_is(c)) {
      ++pos_;
      skip_ws();
      return true;
    }
    return false;
  }

  Int nat() {
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a non-negative integer literal");
    std::size_t begin = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    Int v(std::string(text_.substr(begin, pos_ - begin)), 10);
    skip_ws();
    return v;
  }

  std::string identifier() {
    std::size_t begin = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(begin, pos_ - begin));
    skip_ws();
    return name;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    if (eat('-')) return -factor();
    if (eat('(')) {
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (pos_ < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Int num = nat();
      Int den(1);
      if (eat('/')) {
        den = nat();
        if (den == 0) fail("zero denominator");
      }
      Rat value(num, den);
      value.canonicalize();
      return Poly::constant(free_, value);
    }
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
         text_[pos_] == '_')) {
      std::size_t at = pos_;
      std::string name = identifier();
      auto idx = free_->variable_index(name);
      if (!idx) {
        pos_ = at;
        fail("unknown identifier \"" + name + "\"");
      }
      unsigned e = 1;
      if (eat('^')) {
        Int n = nat();
        if (!n.fits_uint_p()) fail("exponent too large");
        e = static_cast<unsigned>(n.get_ui());
      }
      Mono m(free_->nvars());
      m.exp(*idx) = e;
      return Poly::monomial(free_, std::move(m), Rat(1));
    }
    fail("expected a rational, variable, '(' or '-'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  RingPtr ring_;
  RingPtr free_;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) {
  return ExprParser(text, ring).run();
}

}  // namespace lnd
