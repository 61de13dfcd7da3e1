#include <jacder/derivation.hpp>
#include <jacder/eigen.hpp>
#include <jacder/error.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "random_poly.hpp"

namespace jacder {
namespace {

const BivarPoly X = BivarPoly::x();
const BivarPoly Y = BivarPoly::y();

BivarPoly example_f() { return X * (X - BivarPoly(1)) * Y; }

UnivarPoly from_roots(const std::vector<Rational>& roots) {
  UnivarPoly out(1);
  for (const auto& r : roots) out = out * UnivarPoly(std::vector<Rational>{-r, 1});
  return out;
}

// det(lambda I - A) by fraction-exact Gaussian elimination.
Rational det_shifted(const RationalMatrix& a, const Rational& lambda) {
  RationalMatrix m = a;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? lambda : Rational(0)) - a[i][j];
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m[piv][c])) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

bool contains(const std::vector<EigenPair>& pairs, const BivarPoly& g, const Rational& lambda) {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const EigenPair& e) { return e.g == g && e.lambda == lambda; });
}

// Whether h is a linear combination of the given polynomials.
bool in_span(const BivarPoly& h, const std::vector<BivarPoly>& span) {
  std::set<Monomial, GrlexGreater> monos;
  for (const auto& [m, c] : h.terms()) monos.insert(m);
  for (const auto& s : span) {
    for (const auto& [m, c] : s.terms()) monos.insert(m);
  }
  LinearSystem sys;
  for (const auto& m : monos) {
    RationalVector row;
    for (const auto& s : span) row.push_back(s.coeff(m));
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(h.coeff(m));
  }
  if (span.empty()) return h.is_zero();
  try {
    (void)solve_linear(sys);
    return true;
  } catch (const Error&) {
    return false;
  }
}

TEST(CharacteristicPolynomial, SmallExamples) {
  EXPECT_EQ(characteristic_polynomial({}), UnivarPoly(1));
  // [[2, 1], [0, 3]] -> (t - 2)(t - 3)
  EXPECT_EQ(characteristic_polynomial({{2, 1}, {0, 3}}), from_roots({2, 3}));
  // Rotation block: t^2 + 1
  EXPECT_EQ(characteristic_polynomial({{0, -1}, {1, 0}}), UnivarPoly(std::vector<Rational>{1, 0, 1}));
}

TEST(CharacteristicPolynomial, MatchesDeterminantOracle) {
  testing::PolyGen gen(51);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen.uniform(1, 6);
    RationalMatrix a(n, RationalVector(n));
    for (auto& row : a) {
      for (auto& v : row) v = gen.coin(0.6) ? gen.small_rational() : Rational(0);
    }
    const UnivarPoly chi = characteristic_polynomial(a);
    ASSERT_EQ(chi.degree(), n);
    EXPECT_EQ(chi.leading_coeff(), 1);
    for (int k = -3; k <= 3; ++k) {
      const Rational lambda = make_rational(k, 2);
      EXPECT_EQ(chi.evaluate(lambda), det_shifted(a, lambda));
    }
  }
}

TEST(RationalRoots, Examples) {
  const std::vector<Rational> roots{-2, 0, 1, make_rational(3, 2)};
  EXPECT_EQ(rational_roots(from_roots(roots)), roots);
  EXPECT_EQ(rational_roots(from_roots({1, 1, 1})), std::vector<Rational>{1});
  EXPECT_TRUE(rational_roots(UnivarPoly(std::vector<Rational>{1, 0, 1})).empty());
  EXPECT_TRUE(rational_roots(UnivarPoly(5)).empty());
  // Large numerator exercises factoring beyond trial division.
  const Rational big = make_rational(Integer("1000003") * Integer("998244353"), Integer(89));
  EXPECT_EQ(rational_roots(from_roots({big, -1})), (std::vector<Rational>{-1, big}));
}

TEST(RationalRoots, RandomFactoredPolynomials) {
  testing::PolyGen gen(52);
  for (int trial = 0; trial < 40; ++trial) {
    std::set<Rational> expected;
    std::vector<Rational> roots;
    for (int i = gen.uniform(1, 5); i > 0; --i) {
      roots.push_back(gen.small_rational());
      expected.insert(roots.back());
    }
    // An irreducible quadratic factor contributes no rational root.
    UnivarPoly f = from_roots(roots) * UnivarPoly(std::vector<Rational>{2, 0, 1});
    f = scale(f, gen.nonzero_rational());
    EXPECT_EQ(rational_roots(f), std::vector<Rational>(expected.begin(), expected.end()));
  }
}

TEST(Eigen, Examples) {
  const BivarPoly f = example_f();
  const BivarPoly g = X * X * X * (X - BivarPoly(1)) * Y * Y;
  EXPECT_TRUE(contains(eigen_search(f, 6), g, 1));
  EXPECT_TRUE(contains(eigen_search(f, 3), X * X * Y, 1));
  EXPECT_TRUE(eigen_search(X * X, 6).empty());
  EXPECT_THROW(eigen_search(BivarPoly(2), 4), Error);
}

TEST(Eigen, ConsistencyAndPowerClosure) {
  const std::vector<std::pair<BivarPoly, int>> cases{
      {example_f(), 6}, {X * Y, 4}, {X * Y + X, 4}, {X * X * Y, 5}, {Y * Y - X * X * X, 6}};
  for (const auto& [f, bound] : cases) {
    const Derivation df = jacobian_derivation(f);
    const auto pairs = eigen_search(f, bound);
    for (const auto& e : pairs) {
      EXPECT_FALSE(is_zero(e.lambda));
      EXPECT_FALSE(e.g.is_constant());
      EXPECT_EQ(e.g.leading_coeff(), 1);
      EXPECT_EQ(apply(df, e.g), scale(e.g, e.lambda));
    }
    for (const auto& e : pairs) {
      BivarPoly power = e.g;
      for (int k = 2; e.g.degree() * k <= bound; ++k) {
        power = power * e.g;
        std::vector<BivarPoly> space;
        for (const auto& other : pairs) {
          if (other.lambda == e.lambda * k) space.push_back(other.g);
        }
        EXPECT_TRUE(in_span(power, space)) << "power " << k << " missing";
      }
    }
  }
}

TEST(Eigen, LinearHamiltonianEigenvalues) {
  // D_{xy} = -x d/dx + y d/dy: x^a y^b has eigenvalue b - a.
  const auto pairs = eigen_search(X * Y, 3);
  for (const auto& e : pairs) {
    ASSERT_EQ(e.g.size(), 1u);
    const Monomial m = e.g.leading_monomial();
    EXPECT_EQ(e.lambda, Rational(static_cast<long>(m.ey) - static_cast<long>(m.ex)));
  }
  EXPECT_TRUE(contains(pairs, X, -1));
  EXPECT_TRUE(contains(pairs, Y * Y * Y, 3));
  // lambda is sorted ascending
  for (std::size_t i = 1; i < pairs.size(); ++i) EXPECT_LE(pairs[i - 1].lambda, pairs[i].lambda);
}

}  // namespace
}  // namespace jacder
