#pragma once

#include <jacder/rational.hpp>

#include <climits>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace jacder {

// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = INT_MIN;

struct Monomial {
  std::uint32_t ex = 0;
  std::uint32_t ey = 0;

  int degree() const { return static_cast<int>(ex + ey); }
  bool divides(const Monomial& other) const {
    return ex <= other.ex && ey <= other.ey;
  }
  Monomial operator*(const Monomial& o) const { return {ex + o.ex, ey + o.ey}; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded-lex with x > y: higher total degree first, then higher x exponent.
// Returns true when a sorts strictly before b, i.e. a is the larger monomial.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.ex > b.ex;
  }
};

// Graded-lex comparison: positive when a > b.
int grlex_compare(const Monomial& a, const Monomial& b);

// Sparse polynomial in K[x, y] with exact rational coefficients. Zero
// coefficients are never stored; iteration runs from the graded-lex leading
// term downwards.
class BivarPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  BivarPoly() = default;
  BivarPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  BivarPoly(long c) : BivarPoly(Rational(c)) {}  // NOLINT

  static BivarPoly x();
  static BivarPoly y();
  static BivarPoly monomial(Monomial m, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;

  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff({0, 0}); }
  // Preconditions: !is_zero().
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coeff() const { return terms_.begin()->second; }

  // Adds c·m in place; drops the term if the sum cancels.
  void add_term(const Monomial& m, const Rational& c);

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BivarPoly& o);
  BivarPoly& operator*=(const Rational& c);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly operator-() const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.terms_ == b.terms_;
  }

  Rational evaluate(const Rational& x, const Rational& y) const;

 private:
  TermMap terms_;
};

BivarPoly add(const BivarPoly& a, const BivarPoly& b);
BivarPoly sub(const BivarPoly& a, const BivarPoly& b);
BivarPoly mul(const BivarPoly& a, const BivarPoly& b);
BivarPoly pow(const BivarPoly& base, unsigned exponent);
BivarPoly scale(BivarPoly f, const Rational& c);

BivarPoly partial_x(const BivarPoly& f);
BivarPoly partial_y(const BivarPoly& f);

// Term-wise antiderivatives with zero integration constant.
BivarPoly integrate_x(const BivarPoly& f);
BivarPoly integrate_y(const BivarPoly& f);

// q with a = q·b, or nullopt when b does not divide a. Throws
// Error(DivisionByZero) when b is zero.
std::optional<BivarPoly> exact_divide(const BivarPoly& a, const BivarPoly& b);

// Greatest common divisor scaled so its graded-lex leading coefficient is 1.
// Throws Error(BothZero) if a and b are both zero.
BivarPoly gcd_bivar(const BivarPoly& a, const BivarPoly& b);

// Scales f so its leading coefficient is 1 (zero stays zero).
BivarPoly make_monic(const BivarPoly& f);

// All monomials of total degree in [min_degree, max_degree], ordered by
// ascending graded-lex (1, y, x, y^2, xy, x^2, ...).
std::vector<Monomial> monomials_up_to(int max_degree, int min_degree = 0);

}  // namespace jacder

template <>
struct std::hash<jacder::Monomial> {
  std::size_t operator()(const jacder::Monomial& m) const noexcept {
    return (static_cast<std::size_t>(m.ex) << 32) ^ m.ey;
  }
};
