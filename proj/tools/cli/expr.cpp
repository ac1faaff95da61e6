#include "expr.hpp"

#include <cctype>
#include <memory>

#include "lucastk/lucas.hpp"

namespace lucastk::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  RealFn parse() {
    RealFn e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("expression \"" + s_ + "\": " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  RealFn expr() {
    RealFn lhs = term();
    for (;;) {
      if (accept('+')) {
        RealFn rhs = term();
        lhs = [lhs, rhs](mpfr_prec_t p) { return lhs(p) + rhs(p); };
      } else if (accept('-')) {
        RealFn rhs = term();
        lhs = [lhs, rhs](mpfr_prec_t p) { return lhs(p) - rhs(p); };
      } else {
        return lhs;
      }
    }
  }

  RealFn term() {
    RealFn lhs = unary();
    for (;;) {
      if (accept('*')) {
        RealFn rhs = unary();
        lhs = [lhs, rhs](mpfr_prec_t p) { return lhs(p) * rhs(p); };
      } else if (accept('/')) {
        RealFn rhs = unary();
        lhs = [lhs, rhs](mpfr_prec_t p) {
          auto d = rhs(p);
          if (d.contains_zero()) throw InvalidArgument("division by an interval containing zero");
          return lhs(p) / d;
        };
      } else {
        return lhs;
      }
    }
  }

  RealFn unary() {
    if (accept('-')) {
      RealFn x = unary();
      return [x](mpfr_prec_t p) { return -x(p); };
    }
    RealFn base = primary();
    if (accept('^')) {
      skip();
      long e = integer_literal();
      if (e < 0) fail("negative exponent");
      return [base, e](mpfr_prec_t p) { return pow(base(p), static_cast<unsigned long>(e)); };
    }
    return base;
  }

  long integer_literal() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  RealFn primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RealFn e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
        ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return decimal_real(s_.substr(start, pos_ - start));
    }
    std::string name = identifier();
    if (name.empty()) fail("unexpected '" + std::string(1, c) + "'");
    expect('(');
    if (name == "log" || name == "sqrt") {
      RealFn x = expr();
      expect(')');
      if (name == "log") return [x](mpfr_prec_t p) { return log(x(p)); };
      return [x](mpfr_prec_t p) { return sqrt(x(p)); };
    }
    if (name == "alpha") {
      bool neg_r = accept('-');
      long r = integer_literal();
      expect(',');
      bool neg_s = accept('-');
      long s = integer_literal();
      expect(')');
      LucasPair pair(neg_r ? -r : r, neg_s ? -s : s);
      return [pair](mpfr_prec_t p) { return pair.alpha(p); };
    }
    fail("unknown function " + name);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

RealFn parse_real(const std::string& text) { return Parser(text).parse(); }

Int parse_integer_expr(const std::string& text) {
  auto caret = text.find('^');
  if (caret != std::string::npos) {
    Int base = parse_int(text.substr(0, caret));
    Int e = parse_int(text.substr(caret + 1));
    if (sgn(e) < 0 || !e.fits_ulong_p()) throw InvalidArgument("bad exponent in " + text);
    return pow_int(base, e.get_ui());
  }
  auto pos = text.find_first_of("eE");
  if (pos != std::string::npos) {
    Int mant = parse_int(text.substr(0, pos));
    Int e = parse_int(text.substr(pos + 1));
    if (sgn(e) < 0 || !e.fits_ulong_p()) throw InvalidArgument("bad exponent in " + text);
    return mant * pow_int(Int(10), e.get_ui());
  }
  return parse_int(text);
}

}  // namespace lucastk::cli
