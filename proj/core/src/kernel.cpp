#include <jacder/derivation.hpp>
#include <jacder/error.hpp>
#include <jacder/kernel.hpp>
#include <jacder/linear_solve.hpp>

#include "coefficient_space.hpp"

#include <unordered_map>

namespace jacder {

using detail::from_coordinates;
using detail::grlex_less;
using detail::matrix_of_images;

BivarPoly normalize_generator(const BivarPoly& p) {
  BivarPoly shifted = p - BivarPoly(p.constant_term());
  return make_monic(shifted);
}

KernelBasis kernel_generator(const BivarPoly& f) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantInput, "kernel_generator needs a nonconstant f");
  const Derivation df = jacobian_derivation(f);
  const int deg_f = f.degree();

  std::unordered_map<Monomial, BivarPoly> image_cache;
  for (int d = 1; d <= deg_f; ++d) {
    const std::vector<Monomial> basis = monomials_up_to(d, 1);
    std::vector<BivarPoly> images;
    images.reserve(basis.size());
    for (const auto& m : basis) {
      auto it = image_cache.find(m);
      if (it == image_cache.end()) it = image_cache.emplace(m, apply(df, BivarPoly::monomial(m))).first;
      images.push_back(it->second);
    }
    auto kernel = nullspace(matrix_of_images(images), basis.size());
    if (kernel.empty()) continue;

    BivarPoly best;
    bool have = false;
    for (const auto& v : kernel) {
      BivarPoly candidate = normalize_generator(from_coordinates(basis, v));
      if (!have || grlex_less(candidate, best)) {
        best = std::move(candidate);
        have = true;
      }
    }
    return {best, deg_f};
  }
  throw Error(ErrorCode::InternalInconsistency, "f itself must lie in Ker D_f");
}

std::optional<UnivarPoly> membership(const BivarPoly& h, const BivarPoly& p) {
  if (p.is_constant()) throw Error(ErrorCode::ConstantP, "membership needs a nonconstant p");
  if (h.is_zero()) return UnivarPoly();
  const int n = h.degree() / p.degree();

  std::vector<BivarPoly> powers;
  powers.reserve(n + 1);
  powers.emplace_back(1);
  for (int i = 1; i <= n; ++i) powers.push_back(powers.back() * p);

  std::vector<BivarPoly> columns = powers;
  columns.push_back(h);
  RationalMatrix aug = matrix_of_images(columns);
  LinearSystem sys;
  for (auto& row : aug) {
    sys.rhs.push_back(row.back());
    row.pop_back();
    sys.matrix.push_back(std::move(row));
  }
  try {
    LinearSolution sol = solve_linear(sys);
    return UnivarPoly(std::move(sol.particular));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Inconsistent) return std::nullopt;
    throw;
  }
}

Decomposition decompose(const BivarPoly& f) {
  KernelBasis kb = kernel_generator(f);
  auto theta = membership(f, kb.p);
  if (!theta) throw Error(ErrorCode::InternalInconsistency, "f is not a polynomial in its kernel generator");
  return {std::move(kb.p), std::move(*theta)};
}

bool is_closed(const BivarPoly& f) { return decompose(f).theta.degree() == 1; }

}  // namespace jacder
