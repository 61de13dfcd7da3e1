#include <jacder/error.hpp>
#include <jacder/univar_poly.hpp>

namespace jacder {

UnivarPoly::UnivarPoly(const Rational& c) {
  if (!jacder::is_zero(c)) coeffs_.push_back(c);
}

UnivarPoly::UnivarPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UnivarPoly UnivarPoly::t() { return monomial(1); }

UnivarPoly UnivarPoly::monomial(unsigned degree, const Rational& c) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return UnivarPoly(std::move(coeffs));
}

void UnivarPoly::trim() {
  while (!coeffs_.empty() && jacder::is_zero(coeffs_.back())) coeffs_.pop_back();
}

int UnivarPoly::degree() const {
  return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1;
}

Rational UnivarPoly::coeff(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UnivarPoly& UnivarPoly::operator*=(const Rational& c) {
  if (jacder::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (jacder::is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::operator-() const {
  UnivarPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Rational UnivarPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UnivarPoly UnivarPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UnivarPoly(std::move(out));
}

UnivarPoly scale(UnivarPoly f, const Rational& c) { return f *= c; }

UnivarPoly make_monic(const UnivarPoly& f) {
  if (f.is_zero()) return f;
  return scale(f, Rational(1 / f.leading_coeff()));
}

std::pair<UnivarPoly, UnivarPoly> divmod(const UnivarPoly& a, const UnivarPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "univariate division by zero");
  if (a.degree() < b.degree()) return {UnivarPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(rem.size() - b.coeffs().size() + 1);
  const std::size_t db = b.coeffs().size() - 1;
  const Rational& lc = b.leading_coeff();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational factor = rem[k + db] / lc;
    quot[k] = factor;
    if (jacder::is_zero(factor)) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= factor * b.coeffs()[i];
  }
  rem.resize(db);
  return {UnivarPoly(std::move(quot)), UnivarPoly(std::move(rem))};
}

UnivarPoly gcd(UnivarPoly a, UnivarPoly b) {
  while (!b.is_zero()) {
    UnivarPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

BivarPoly compose(const UnivarPoly& theta, const BivarPoly& p) {
  BivarPoly acc;
  const auto& c = theta.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * p;
    acc += BivarPoly(*it);
  }
  return acc;
}

UnivarPoly compose_affine(const UnivarPoly& theta, const Rational& a, const Rational& b) {
  const UnivarPoly inner(std::vector<Rational>{b, a});
  UnivarPoly acc;
  const auto& c = theta.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + UnivarPoly(*it);
  return acc;
}

}  // namespace jacder
