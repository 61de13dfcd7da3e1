#include <jacder/error.hpp>
#include <jacder/rational_function.hpp>

namespace jacder {

RationalFunction1::RationalFunction1(const UnivarPoly& num) : num_(num), den_(1) {}

RationalFunction1::RationalFunction1(const UnivarPoly& num, const UnivarPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UnivarPoly(1);
    return;
  }
  UnivarPoly g = gcd(num, den);
  num_ = divmod(num, g).first;
  den_ = divmod(den, g).first;
  const Rational lc = den_.leading_coeff();
  num_ *= Rational(1 / lc);
  den_ *= Rational(1 / lc);
}

RationalFunction1 operator+(const RationalFunction1& a, const RationalFunction1& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction1 operator-(const RationalFunction1& a, const RationalFunction1& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction1 operator*(const RationalFunction1& a, const RationalFunction1& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction1 operator/(const RationalFunction1& a, const RationalFunction1& b) {
  return {a.num_ * b.den_, a.den_ * b.num_};
}

}  // namespace jacder
