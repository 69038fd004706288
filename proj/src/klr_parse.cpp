#include "quivkit/klr_parse.hpp"

#include <algorithm>
#include <cctype>

namespace quivkit {

namespace {

class Parser {
 public:
  Parser(const KlrAlgebra& algebra, std::string_view text)
      : algebra_(algebra), text_(text) {}

  KlrElement parse() {
    KlrElement out = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected character");
    return out;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) throw ParseError(pos_, "expected an integer");
    if (pos_ - start > 9) throw ParseError(start, "integer too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  KlrElement expr() {
    const bool negate = accept('-');
    KlrElement out = term();
    if (negate) out = out * -1;
    for (;;) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  KlrElement term() {
    KlrElement out = factor();
    while (accept('*')) out = algebra_.multiply(out, factor());
    return out;
  }

  KlrElement factor() {
    skip();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return algebra_.one() * Rational(integer());
    }
    if (c == '(') {
      ++pos_;
      KlrElement inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'x' || c == 't') {
      ++pos_;
      const long k = integer();
      const int d = algebra_.size();
      if (c == 'x') {
        if (k < 1 || k > d) throw ParseError(start, "x index out of range 1.." + std::to_string(d));
        return algebra_.x(static_cast<int>(k - 1));
      }
      if (k < 1 || k >= d) {
        throw ParseError(start, "t index out of range 1.." + std::to_string(d - 1));
      }
      return algebra_.tau(static_cast<int>(k - 1));
    }
    if (c == 'e') {
      ++pos_;
      expect('(');
      Idem i;
      do {
        i.push_back(static_cast<Vertex>(integer() - 1));
      } while (accept(','));
      expect(')');
      if (!std::binary_search(algebra_.idempotents().begin(),
                              algebra_.idempotents().end(), i)) {
        throw ParseError(start, "e(...) is not a sequence in I^beta (beta mismatch)");
      }
      return algebra_.e(i);
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  const KlrAlgebra& algebra_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

KlrElement parse_klr_expression(const KlrAlgebra& algebra, std::string_view text) {
  return Parser(algebra, text).parse();
}

}  // namespace quivkit
