#pragma once

#include <jacder/bivar_poly.hpp>

#include <optional>

namespace jacder {

// P·∂x + Q·∂y, an element of the Lie algebra of polynomial vector fields.
struct Derivation {
  BivarPoly P;
  BivarPoly Q;

  bool is_zero() const { return P.is_zero() && Q.is_zero(); }

  friend bool operator==(const Derivation&, const Derivation&) = default;
  friend Derivation operator+(const Derivation& a, const Derivation& b) {
    return {a.P + b.P, a.Q + b.Q};
  }
  friend Derivation operator-(const Derivation& a, const Derivation& b) {
    return {a.P - b.P, a.Q - b.Q};
  }
  friend Derivation operator*(const BivarPoly& a, const Derivation& d) {
    return {a * d.P, a * d.Q};
  }
};

inline Derivation partial_x_field() { return {BivarPoly(1), BivarPoly()}; }
inline Derivation partial_y_field() { return {BivarPoly(), BivarPoly(1)}; }

// P·h_x + Q·h_y.
BivarPoly apply(const Derivation& d, const BivarPoly& h);

// D_f(h) = det J(f, h) = f_x·h_y - f_y·h_x, i.e. D_f = -f_y ∂x + f_x ∂y.
Derivation jacobian_derivation(const BivarPoly& f);

// [D1, D2] = (D1(P2) - D2(P1)) ∂x + (D1(Q2) - D2(Q1)) ∂y.
Derivation bracket(const Derivation& d1, const Derivation& d2);

BivarPoly divergence(const Derivation& t);

// g with D_g = t and g(0,0) = 0, or nullopt when div t != 0.
std::optional<BivarPoly> potential(const Derivation& t);

// a·d1 + b·d2.
Derivation scale_and_combine(const BivarPoly& a, const Derivation& d1,
                             const BivarPoly& b, const Derivation& d2);

}  // namespace jacder
