#include "linfin/scalar/parse.hpp"

#include <cctype>
#include <string>

#include "linfin/core/errors.hpp"

namespace linfin::scalar {

namespace {

class Parser {
 public:
  Parser(const Field& f, std::string_view s) : F_(f), s_(s) {}

  Field::Elem run() {
    Field::Elem v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

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

  Field::Elem expr() {
    Field::Elem v = term();
    for (;;) {
      if (accept('+')) {
        v = F_.add(v, term());
      } else if (accept('-')) {
        v = F_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Field::Elem term() {
    Field::Elem v = factor();
    for (;;) {
      if (accept('*')) {
        v = F_.mul(v, factor());
      } else if (accept('/')) {
        const std::size_t at = pos_ - 1;
        Field::Elem d = factor();
        if (F_.is_zero(d)) throw MathError("division by zero at offset " + std::to_string(at));
        v = F_.div(v, d);
      } else {
        return v;
      }
    }
  }

  Field::Elem factor() {
    Field::Elem v = base();
    if (accept('^')) {
      skip();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("expected a nonnegative integer exponent");
      v = F_.pow(v, integer());
    }
    return v;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Field::Elem base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '-') {
      ++pos_;
      return F_.neg(base());
    }
    if (c == '(') {
      ++pos_;
      Field::Elem v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return F_.from_integer(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      const auto& vars = F_.var_names();
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == id) return F_.variable(i);
      if (F_.kind() == FieldKind::AlgebraicFunctionField && id == F_.generator_name()) return F_.generator();
      if (F_.base().has_generator() && id == F_.base().generator_name())
        return F_.from_base(F_.base().generator());
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Field& F_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Field::Elem parse_elem(const Field& field, std::string_view text) { return Parser(field, text).run(); }

Scalar parse_scalar(const FieldPtr& field, std::string_view text) {
  return Scalar(field, parse_elem(*field, text));
}

}  // namespace linfin::scalar
