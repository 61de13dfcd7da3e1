#include <jacder/derivation.hpp>

namespace jacder {

BivarPoly apply(const Derivation& d, const BivarPoly& h) {
  return d.P * partial_x(h) + d.Q * partial_y(h);
}

Derivation jacobian_derivation(const BivarPoly& f) {
  return {-partial_y(f), partial_x(f)};
}

Derivation bracket(const Derivation& d1, const Derivation& d2) {
  return {apply(d1, d2.P) - apply(d2, d1.P), apply(d1, d2.Q) - apply(d2, d1.Q)};
}

BivarPoly divergence(const Derivation& t) { return partial_x(t.P) + partial_y(t.Q); }

std::optional<BivarPoly> potential(const Derivation& t) {
  if (!divergence(t).is_zero()) return std::nullopt;
  // g_x = Q and -g_y = P. Integrate Q in x, then recover the y-only part
  // from the remaining P-condition; it has no x once div t = 0.
  BivarPoly g = integrate_x(t.Q);
  BivarPoly rest = -t.P - partial_y(g);
  g += integrate_y(rest);
  return g;
}

Derivation scale_and_combine(const BivarPoly& a, const Derivation& d1, const BivarPoly& b,
                             const Derivation& d2) {
  return {a * d1.P + b * d2.P, a * d1.Q + b * d2.Q};
}

}  // namespace jacder
