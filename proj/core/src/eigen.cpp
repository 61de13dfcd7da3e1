#include <jacder/derivation.hpp>
#include <jacder/eigen.hpp>
#include <jacder/error.hpp>

#include "coefficient_space.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace jacder {

UnivarPoly characteristic_polynomial(RationalMatrix h) {
  const std::size_t n = h.size();
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && is_zero(h[i][m - 1])) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    for (std::size_t j = m + 1; j < n; ++j) {
      if (is_zero(h[j][m - 1])) continue;
      const Rational u = h[j][m - 1] / h[m][m - 1];
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(h[m][k])) h[j][k] -= u * h[m][k];
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(h[k][j])) h[k][m] += u * h[k][j];
      }
    }
  }

  // Leading principal minors p_m of t·I - H, built by the Hessenberg recurrence.
  std::vector<UnivarPoly> p;
  p.reserve(n + 1);
  p.emplace_back(1);
  const UnivarPoly t = UnivarPoly::t();
  for (std::size_t m = 1; m <= n; ++m) {
    UnivarPoly next = (t - UnivarPoly(h[m - 1][m - 1])) * p[m - 1];
    Rational prod = 1;
    for (std::size_t i = 1; i < m; ++i) {
      prod *= h[m - i][m - i - 1];
      if (is_zero(prod)) break;
      const Rational c = prod * h[m - i - 1][m - 1];
      if (!is_zero(c)) next -= scale(p[m - i - 1], c);
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

namespace {

void factor_into(Integer n, std::map<Integer, unsigned>& out);

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long batch = 128;
    unsigned long r = 1;
    auto step = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
          y = step(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::map<Integer, unsigned> factors;
  factor_into(abs(n), factors);
  std::vector<Integer> divs{1};
  for (const auto& [prime, mult] : factors) {
    const std::size_t count = divs.size();
    Integer power = 1;
    for (unsigned e = 1; e <= mult; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * power);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const UnivarPoly& f) {
  if (f.degree() <= 0) return {};
  UnivarPoly sq = divmod(f, gcd(f, f.derivative())).first;

  std::vector<Rational> roots;
  if (is_zero(sq.coeff(0))) {
    roots.emplace_back(0);
    sq = divmod(sq, UnivarPoly::t()).first;
  }
  if (sq.degree() >= 1) {
    // Integer coefficients for the rational root theorem.
    Integer lcm = 1;
    for (const auto& c : sq.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : sq.coeffs()) ints.push_back(Integer(c * lcm));
    const std::vector<Integer> nums = positive_divisors(ints.front());
    const std::vector<Integer> dens = positive_divisors(ints.back());
    std::set<Rational> seen;
    for (const auto& a : nums) {
      for (const auto& b : dens) {
        for (int sign : {1, -1}) {
          Rational cand = make_rational(Integer(a * sign), b);
          if (!seen.insert(cand).second) continue;
          if (is_zero(sq.evaluate(cand))) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

struct Subspace {
  std::vector<RationalVector> vectors;
  std::vector<std::size_t> free_columns;
};

// Basis of the largest subspace of span(basis) mapped into itself, as
// nullspace vectors of the accumulated constraints.
Subspace invariant_subspace(const std::vector<Monomial>& basis,
                            const std::vector<BivarPoly>& images) {
  const std::size_t n = basis.size();
  std::map<Monomial, std::size_t, GrlexGreater> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(basis[i], i);

  // low[i][j]: coefficient of basis[i] in images[j]; high rows are constraints.
  RationalMatrix low(n, RationalVector(n));
  std::map<Monomial, RationalVector, GrlexGreater> high;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [m, c] : images[j].terms()) {
      auto it = index.find(m);
      if (it != index.end()) {
        low[it->second][j] = c;
      } else {
        auto& row = high.try_emplace(m, RationalVector(n)).first->second;
        row[j] = c;
      }
    }
  }

  RationalMatrix constraints;
  for (auto& [m, row] : high) constraints.push_back(std::move(row));
  std::size_t rank = 0;
  while (true) {
    RationalMatrix reduced = constraints;
    const std::size_t new_rank = rref(reduced, n).size();
    if (new_rank == rank && rank != 0) break;
    if (new_rank == 0) break;  // span(basis) is already invariant
    rank = new_rank;
    reduced.resize(new_rank);
    constraints = reduced;
    // v must also satisfy c(M v) = 0 for every current constraint c.
    for (const auto& c : reduced) {
      RationalVector pulled(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(c[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!is_zero(low[i][j])) pulled[j] += c[i] * low[i][j];
        }
      }
      constraints.push_back(std::move(pulled));
    }
  }
  Subspace out;
  if (constraints.empty()) {
    out.vectors = nullspace({}, n);
    for (std::size_t j = 0; j < n; ++j) out.free_columns.push_back(j);
    return out;
  }
  LinearSystem sys{std::move(constraints), {}};
  sys.rhs.assign(sys.matrix.size(), Rational(0));
  LinearSolution sol = solve_linear(sys);
  std::vector<bool> pivot(n, false);
  for (auto c : sol.pivot_columns) pivot[c] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (!pivot[j]) out.free_columns.push_back(j);
  }
  out.vectors = std::move(sol.nullspace);
  return out;
}

}  // namespace

std::vector<EigenPair> eigen_search(const BivarPoly& f, int degree_bound) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantInput, "eigen_search needs a nonconstant f");
  const Derivation df = jacobian_derivation(f);
  const std::vector<Monomial> basis = monomials_up_to(degree_bound);
  const std::size_t n = basis.size();
  std::vector<BivarPoly> images;
  images.reserve(n);
  for (const auto& m : basis) images.push_back(apply(df, BivarPoly::monomial(m)));

  const Subspace w = invariant_subspace(basis, images);
  if (w.vectors.empty()) return {};

  // Nullspace vectors carry the identity on their free columns, so the
  // coordinates of any element of W are its entries at those columns.
  const std::vector<std::size_t>& free_cols = w.free_columns;
  const std::size_t m = w.vectors.size();
  RationalMatrix restricted(m, RationalVector(m));
  for (std::size_t j = 0; j < m; ++j) {
    BivarPoly image = apply(df, detail::from_coordinates(basis, w.vectors[j]));
    for (std::size_t k = 0; k < m; ++k) restricted[k][j] = image.coeff(basis[free_cols[k]]);
  }

  std::vector<EigenPair> out;
  for (const Rational& lambda : rational_roots(characteristic_polynomial(restricted))) {
    if (is_zero(lambda)) continue;
    std::vector<BivarPoly> shifted;
    shifted.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      shifted.push_back(images[j] - BivarPoly::monomial(basis[j], lambda));
    }
    const auto eig = nullspace(detail::matrix_of_images(shifted), n);

    // Reduced echelon form with the leading monomial as first column.
    RationalMatrix rows;
    for (const auto& v : eig) rows.emplace_back(v.rbegin(), v.rend());
    const std::size_t rank = rref(rows, n).size();
    std::vector<Monomial> descending(basis.rbegin(), basis.rend());
    for (std::size_t i = 0; i < rank; ++i) {
      out.push_back({detail::from_coordinates(descending, rows[i]), lambda});
    }
  }
  return out;
}

}  // namespace jacder
