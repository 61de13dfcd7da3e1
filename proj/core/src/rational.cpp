#include <jacder/error.hpp>
#include <jacder/rational.hpp>

#include <cctype>

namespace jacder {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (sgn(d) == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return make_rational(n, d);
}

}  // namespace jacder
