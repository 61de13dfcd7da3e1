#pragma once

#include <jacder/bivar_poly.hpp>
#include <jacder/rational.hpp>

#include <utility>
#include <vector>

namespace jacder {

// Dense polynomial in one indeterminate t; coeffs()[i] is the coefficient of
// t^i. Trailing zeros are stripped so the zero polynomial has no coefficients.
class UnivarPoly {
 public:
  UnivarPoly() = default;
  UnivarPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UnivarPoly(long c) : UnivarPoly(Rational(c)) {}  // NOLINT
  explicit UnivarPoly(std::vector<Rational> coeffs);

  static UnivarPoly t();
  static UnivarPoly monomial(unsigned degree, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;
  Rational coeff(unsigned i) const;
  // Precondition: !is_zero().
  const Rational& leading_coeff() const { return coeffs_.back(); }

  UnivarPoly& operator+=(const UnivarPoly& o);
  UnivarPoly& operator-=(const UnivarPoly& o);
  UnivarPoly& operator*=(const Rational& c);

  friend UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
  friend UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b) { return a -= b; }
  friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
  UnivarPoly operator-() const;

  friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

  Rational evaluate(const Rational& t) const;
  UnivarPoly derivative() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

UnivarPoly scale(UnivarPoly f, const Rational& c);
UnivarPoly make_monic(const UnivarPoly& f);

// Euclidean division over the rationals; throws Error(DivisionByZero).
std::pair<UnivarPoly, UnivarPoly> divmod(const UnivarPoly& a, const UnivarPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UnivarPoly gcd(UnivarPoly a, UnivarPoly b);

// theta(p) by Horner iteration.
BivarPoly compose(const UnivarPoly& theta, const BivarPoly& p);

// theta(a·t + b).
UnivarPoly compose_affine(const UnivarPoly& theta, const Rational& a, const Rational& b);

}  // namespace jacder
