#pragma once

#include <jacder/univar_poly.hpp>

namespace jacder {

// Element num/den of K(t), kept with gcd(num, den) = 1 and den monic.
class RationalFunction1 {
 public:
  RationalFunction1() : den_(1) {}
  RationalFunction1(const UnivarPoly& num);  // NOLINT(google-explicit-constructor)
  // Throws Error(DivisionByZero) when den is zero.
  RationalFunction1(const UnivarPoly& num, const UnivarPoly& den);

  const UnivarPoly& num() const { return num_; }
  const UnivarPoly& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RationalFunction1 operator+(const RationalFunction1& a, const RationalFunction1& b);
  friend RationalFunction1 operator-(const RationalFunction1& a, const RationalFunction1& b);
  friend RationalFunction1 operator*(const RationalFunction1& a, const RationalFunction1& b);
  friend RationalFunction1 operator/(const RationalFunction1& a, const RationalFunction1& b);
  friend bool operator==(const RationalFunction1&, const RationalFunction1&) = default;

 private:
  UnivarPoly num_;
  UnivarPoly den_;
};

}  // namespace jacder
