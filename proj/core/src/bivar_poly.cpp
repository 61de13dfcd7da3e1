#include <jacder/bivar_poly.hpp>
#include <jacder/error.hpp>
#include <jacder/univar_poly.hpp>

#include <algorithm>

namespace jacder {

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a == b) return 0;
  return GrlexGreater{}(a, b) ? 1 : -1;
}

BivarPoly::BivarPoly(const Rational& c) {
  if (!jacder::is_zero(c)) terms_.emplace(Monomial{0, 0}, c);
}

BivarPoly BivarPoly::x() { return monomial({1, 0}); }
BivarPoly BivarPoly::y() { return monomial({0, 1}); }

BivarPoly BivarPoly::monomial(Monomial m, const Rational& c) {
  BivarPoly p;
  p.add_term(m, c);
  return p;
}

bool BivarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int BivarPoly::degree() const {
  return terms_.empty() ? kMinusInfinity : terms_.begin()->first.degree();
}

Rational BivarPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivarPoly::add_term(const Monomial& m, const Rational& c) {
  if (jacder::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (jacder::is_zero(it->second)) terms_.erase(it);
  }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(ma * mb, prod);
    }
  }
  return out;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) {
  *this = *this * o;
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& c) {
  if (jacder::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Rational BivarPoly::evaluate(const Rational& xv, const Rational& yv) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::uint32_t i = 0; i < m.ex; ++i) term *= xv;
    for (std::uint32_t i = 0; i < m.ey; ++i) term *= yv;
    sum += term;
  }
  return sum;
}

BivarPoly add(const BivarPoly& a, const BivarPoly& b) { return a + b; }
BivarPoly sub(const BivarPoly& a, const BivarPoly& b) { return a - b; }
BivarPoly mul(const BivarPoly& a, const BivarPoly& b) { return a * b; }

BivarPoly pow(const BivarPoly& base, unsigned exponent) {
  BivarPoly result(1);
  BivarPoly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

BivarPoly scale(BivarPoly f, const Rational& c) { return f *= c; }

BivarPoly partial_x(const BivarPoly& f) {
  BivarPoly out;
  for (const auto& [m, c] : f.terms()) {
    if (m.ex == 0) continue;
    out.add_term({m.ex - 1, m.ey}, c * m.ex);
  }
  return out;
}

BivarPoly partial_y(const BivarPoly& f) {
  BivarPoly out;
  for (const auto& [m, c] : f.terms()) {
    if (m.ey == 0) continue;
    out.add_term({m.ex, m.ey - 1}, c * m.ey);
  }
  return out;
}

BivarPoly integrate_x(const BivarPoly& f) {
  BivarPoly out;
  for (const auto& [m, c] : f.terms()) {
    out.add_term({m.ex + 1, m.ey}, c / (m.ex + 1));
  }
  return out;
}

BivarPoly integrate_y(const BivarPoly& f) {
  BivarPoly out;
  for (const auto& [m, c] : f.terms()) {
    out.add_term({m.ex, m.ey + 1}, c / (m.ey + 1));
  }
  return out;
}

std::optional<BivarPoly> exact_divide(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact_divide by zero polynomial");
  const Monomial lm = b.leading_monomial();
  const Rational& lc = b.leading_coeff();
  BivarPoly rem = a;
  BivarPoly quot;
  // In any monomial order LT(q·b) = LT(q)·LT(b), so exact division must be
  // able to cancel the remainder's leading term at every step.
  while (!rem.is_zero()) {
    const Monomial rm = rem.leading_monomial();
    if (!lm.divides(rm)) return std::nullopt;
    BivarPoly step = BivarPoly::monomial({rm.ex - lm.ex, rm.ey - lm.ey},
                                         Rational(rem.leading_coeff() / lc));
    rem -= step * b;
    quot += step;
  }
  return quot;
}

BivarPoly make_monic(const BivarPoly& f) {
  if (f.is_zero()) return f;
  return scale(f, Rational(1 / f.leading_coeff()));
}

namespace {

// f as a polynomial in x with coefficients in K[y].
using XCoeffs = std::vector<UnivarPoly>;

XCoeffs to_x_coeffs(const BivarPoly& f) {
  XCoeffs out;
  std::vector<std::vector<Rational>> raw;
  for (const auto& [m, c] : f.terms()) {
    if (raw.size() <= m.ex) raw.resize(m.ex + 1);
    auto& row = raw[m.ex];
    if (row.size() <= m.ey) row.resize(m.ey + 1);
    row[m.ey] = c;
  }
  out.reserve(raw.size());
  for (auto& row : raw) out.emplace_back(std::move(row));
  return out;
}

BivarPoly from_x_coeffs(const XCoeffs& coeffs) {
  BivarPoly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& c = coeffs[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
      out.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, c[j]);
    }
  }
  return out;
}

void trim(XCoeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UnivarPoly content(const XCoeffs& a) {
  UnivarPoly g;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

XCoeffs primitive_part(const XCoeffs& a) {
  UnivarPoly c = content(a);
  XCoeffs out;
  out.reserve(a.size());
  for (const auto& coeff : a) out.push_back(divmod(coeff, c).first);
  return out;
}

// lc(b)^k·a mod b in K[y][x].
XCoeffs pseudo_remainder(XCoeffs a, const XCoeffs& b) {
  const std::size_t db = b.size() - 1;
  const UnivarPoly& lc = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const UnivarPoly lead = a.back();
    for (auto& c : a) c = c * lc;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= lead * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

BivarPoly gcd_bivar(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);

  XCoeffs ca = to_x_coeffs(a);
  XCoeffs cb = to_x_coeffs(b);
  UnivarPoly cont = gcd(content(ca), content(cb));
  XCoeffs pa = primitive_part(ca);
  XCoeffs pb = primitive_part(cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    XCoeffs r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    pb = r.empty() ? XCoeffs{} : primitive_part(r);
  }
  // A primitive gcd with no x is a unit.
  if (pa.size() <= 1) pa = XCoeffs{UnivarPoly(1)};
  else pa = primitive_part(pa);
  for (auto& c : pa) c = c * cont;
  return make_monic(from_x_coeffs(pa));
}

std::vector<Monomial> monomials_up_to(int max_degree, int min_degree) {
  std::vector<Monomial> out;
  for (int d = std::max(min_degree, 0); d <= max_degree; ++d) {
    for (int ex = 0; ex <= d; ++ex) {
      out.push_back({static_cast<std::uint32_t>(ex), static_cast<std::uint32_t>(d - ex)});
    }
  }
  return out;
}

}  // namespace jacder
