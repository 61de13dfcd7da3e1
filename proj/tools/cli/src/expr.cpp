#include <jacder/cli/expr.hpp>
#include <jacder/error.hpp>

#include <cctype>
#include <limits>

namespace jacder::cli {

namespace {

class Parser {
 public:
  Parser(std::string_view src, std::string_view variables) : src_(src), vars_(variables) {}

  ExprAst parse() {
    ExprAst root = poly();
    skip_ws();
    if (pos_ != src_.size()) fail("'+', '-', '*' or end of input");
    return root;
  }

 private:
  ExprAst poly() {
    ExprAst sum;
    sum.kind = ExprAst::Kind::Sum;
    sum.position = position();
    sum.children.push_back(term());
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        sum.children.push_back(term());
      } else if (peek() == '-') {
        const std::size_t at = pos_++;
        ExprAst neg;
        neg.kind = ExprAst::Kind::Negation;
        neg.position = at;
        neg.children.push_back(term());
        sum.children.push_back(std::move(neg));
      } else {
        break;
      }
    }
    return sum.children.size() == 1 ? std::move(sum.children.front()) : sum;
  }

  ExprAst term() {
    skip_ws();
    const std::size_t at = pos_;
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    ExprAst product;
    product.kind = ExprAst::Kind::Product;
    product.position = at;
    product.children.push_back(factor());
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      product.children.push_back(factor());
    }
    ExprAst body = product.children.size() == 1 ? std::move(product.children.front()) : product;
    if (!negate) return body;
    ExprAst neg;
    neg.kind = ExprAst::Kind::Negation;
    neg.position = at;
    neg.children.push_back(std::move(body));
    return neg;
  }

  ExprAst factor() {
    skip_ws();
    const std::size_t at = pos_;
    const char c = peek();
    ExprAst base;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      base.kind = ExprAst::Kind::Constant;
      base.position = at;
      base.value = rational();
      return base;  // no exponent on literals: 3/2^2 would be ambiguous
    }
    if (c != 0 && vars_.find(c) != std::string_view::npos) {
      ++pos_;
      base.kind = ExprAst::Kind::Variable;
      base.variable = c;
      base.position = at;
    } else if (c == '(') {
      ++pos_;
      base = poly();
      skip_ws();
      if (peek() != ')') fail("')'");
      ++pos_;
    } else {
      fail(expected_factor());
    }
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    ExprAst power;
    power.kind = ExprAst::Kind::Power;
    power.position = at;
    power.exponent = natural();
    power.children.push_back(std::move(base));
    return power;
  }

  Rational rational() {
    const std::size_t start = pos_;
    digits();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("positive integer denominator");
      const std::size_t den_start = pos_;
      digits();
      std::string text;
      for (std::size_t i = start; i < pos_; ++i) {
        if (!std::isspace(static_cast<unsigned char>(src_[i]))) text.push_back(src_[i]);
      }
      if (Integer(std::string(src_.substr(den_start, pos_ - den_start)), 10) == 0) {
        pos_ = den_start;
        fail("positive integer denominator");
      }
      return parse_rational(text);
    }
    std::string text(src_.substr(start, pos_ - start));
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return parse_rational(text);
  }

  unsigned natural() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("non-negative integer exponent");
    const std::size_t start = pos_;
    digits();
    Integer value(std::string(src_.substr(start, pos_ - start)), 10);
    if (value > std::numeric_limits<unsigned short>::max()) {
      pos_ = start;
      fail("exponent no larger than 65535");
    }
    return static_cast<unsigned>(value.get_ui());
  }

  void digits() {
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string expected_factor() const {
    std::string out = "number, ";
    for (char v : vars_) {
      out += '\'';
      out += v;
      out += "', ";
    }
    return out + "or '('";
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  std::size_t position() {
    skip_ws();
    return pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'" : "end of input";
    throw Error(ErrorCode::ParseError, "column " + std::to_string(pos_ + 1) + ": expected " + expected +
                                           ", found " + found);
  }

  std::string_view src_;
  std::string_view vars_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprAst parse_expr(std::string_view src, std::string_view variables) {
  return Parser(src, variables).parse();
}

BivarPoly lower(const ExprAst& ast) {
  switch (ast.kind) {
    case ExprAst::Kind::Constant:
      return BivarPoly(ast.value);
    case ExprAst::Kind::Variable:
      return ast.variable == 'y' ? BivarPoly::y() : BivarPoly::x();
    case ExprAst::Kind::Sum: {
      BivarPoly acc;
      for (const auto& c : ast.children) acc += lower(c);
      return acc;
    }
    case ExprAst::Kind::Product: {
      BivarPoly acc(1);
      for (const auto& c : ast.children) acc *= lower(c);
      return acc;
    }
    case ExprAst::Kind::Power:
      return pow(lower(ast.children.front()), ast.exponent);
    case ExprAst::Kind::Negation:
      return -lower(ast.children.front());
  }
  return {};
}

BivarPoly parse_poly(std::string_view src) { return lower(parse_expr(src, "xy")); }

UnivarPoly parse_univar(std::string_view src) {
  const BivarPoly p = lower(parse_expr(src, "t"));
  std::vector<Rational> coeffs(p.is_zero() ? 0 : p.degree() + 1);
  for (const auto& [m, c] : p.terms()) coeffs[m.ex] = c;
  return UnivarPoly(std::move(coeffs));
}

}  // namespace jacder::cli
