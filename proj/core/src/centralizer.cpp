#include <jacder/centralizer.hpp>
#include <jacder/error.hpp>
#include <jacder/kernel.hpp>
#include <jacder/linear_solve.hpp>

#include "coefficient_space.hpp"

#include <algorithm>

namespace jacder {

bool commute_check(const Derivation& t, const Derivation& d) { return bracket(t, d).is_zero(); }

CriterionReport criterion_check(const Derivation& t, const BivarPoly& f) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantInput, "criterion_check needs a nonconstant f");
  Decomposition dec = decompose(f);
  CriterionReport report;
  report.p = dec.p;
  report.theta = dec.theta;
  report.psi = membership(apply(t, dec.p), dec.p);
  if (!report.psi) return report;

  const UnivarPoly theta1 = dec.theta.derivative();
  const UnivarPoly theta2 = theta1.derivative();
  report.lhs = compose(theta2, dec.p) * compose(*report.psi, dec.p);
  report.rhs = compose(theta1, dec.p) * (divergence(t) - compose(report.psi->derivative(), dec.p));
  report.commutes = *report.lhs == *report.rhs;
  return report;
}

bool closed_criterion_check(const Derivation& t, const BivarPoly& f) {
  if (!is_closed(f)) throw Error(ErrorCode::NotClosed, "closed_criterion_check needs a closed f");
  auto psi = membership(apply(t, f), f);
  if (!psi) return false;
  return divergence(t) == compose(psi->derivative(), f);
}

std::vector<Derivation> commuting_fields(const Derivation& d, int degree_bound) {
  const std::vector<Monomial> basis = monomials_up_to(degree_bound);
  const std::size_t n = basis.size();

  // Unknowns: coefficients of P over `basis`, then of Q. [T, d] is linear in T.
  std::vector<BivarPoly> img_p;
  std::vector<BivarPoly> img_q;
  img_p.reserve(2 * n);
  img_q.reserve(2 * n);
  for (int comp = 0; comp < 2; ++comp) {
    for (const auto& m : basis) {
      Derivation unit;
      (comp == 0 ? unit.P : unit.Q) = BivarPoly::monomial(m);
      Derivation br = bracket(unit, d);
      img_p.push_back(std::move(br.P));
      img_q.push_back(std::move(br.Q));
    }
  }
  RationalMatrix mat = detail::matrix_of_images(img_p);
  RationalMatrix mq = detail::matrix_of_images(img_q);
  mat.insert(mat.end(), std::make_move_iterator(mq.begin()), std::make_move_iterator(mq.end()));

  std::vector<Derivation> out;
  for (const auto& v : nullspace(mat, 2 * n)) {
    out.push_back({detail::from_coordinates(basis, v, 0), detail::from_coordinates(basis, v, n)});
  }
  return out;
}

int default_degree_bound(const BivarPoly& f) { return 2 * std::max(f.degree(), 0); }

namespace {

RationalVector field_coordinates(const Derivation& t, const std::vector<Monomial>& basis) {
  RationalVector v(2 * basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    v[i] = t.P.coeff(basis[i]);
    v[basis.size() + i] = t.Q.coeff(basis[i]);
  }
  return v;
}

}  // namespace

CentralizerResult centralizer_solve(const BivarPoly& f, int degree_bound) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantInput, "centralizer_solve needs a nonconstant f");
  if (degree_bound < f.degree()) {
    throw Error(ErrorCode::BoundTooSmall, "degree bound " + std::to_string(degree_bound) +
                                              " is below deg f = " + std::to_string(f.degree()));
  }
  const Decomposition dec = decompose(f);
  const Derivation df = jacobian_derivation(f);

  CentralizerResult result;
  result.p = dec.p;
  result.generator_dp = jacobian_derivation(dec.p);
  result.degree_bound = degree_bound;

  const std::vector<Derivation> fields = commuting_fields(df, degree_bound);
  result.solution_dimension = fields.size();

  std::vector<UnivarPoly> psis;
  int max_deg = -1;
  for (const auto& t : fields) {
    auto psi = membership(apply(t, dec.p), dec.p);
    if (!psi) throw Error(ErrorCode::InternalInconsistency, "commuting field does not preserve K[p]");
    max_deg = std::max(max_deg, psi->degree());
    psis.push_back(std::move(*psi));
  }
  if (max_deg < 0) return result;  // every solution kills p: only multiples of D_p

  // Rows [psi_i high-to-low | coordinates of T_i]. Echelon form on the psi
  // block leaves the minimal-degree psi in the last pivot row and the fields
  // with psi = 0 in the rows below the pivots.
  const std::vector<Monomial> basis = monomials_up_to(degree_bound);
  const std::size_t psi_cols = static_cast<std::size_t>(max_deg) + 1;
  RationalMatrix rows;
  rows.reserve(fields.size());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    RationalVector row(psi_cols);
    for (std::size_t k = 0; k < psi_cols; ++k) row[k] = psis[i].coeff(static_cast<unsigned>(max_deg - k));
    RationalVector coords = field_coordinates(fields[i], basis);
    row.insert(row.end(), coords.begin(), coords.end());
    rows.push_back(std::move(row));
  }
  const std::vector<std::size_t> pivots = rref(rows, psi_cols);
  const std::size_t last = pivots.size() - 1;

  std::vector<Rational> psi_coeffs(psi_cols);
  for (std::size_t k = 0; k < psi_cols; ++k) psi_coeffs[max_deg - k] = rows[last][k];
  RationalVector t0(rows[last].begin() + psi_cols, rows[last].end());

  // Canonical representative of T0 modulo the psi = 0 solutions.
  RationalMatrix zero_psi;
  for (std::size_t i = pivots.size(); i < rows.size(); ++i) {
    zero_psi.emplace_back(rows[i].begin() + psi_cols, rows[i].end());
  }
  const std::vector<std::size_t> zpivots = rref(zero_psi, t0.size());
  for (std::size_t i = 0; i < zpivots.size(); ++i) {
    const Rational factor = t0[zpivots[i]];
    if (is_zero(factor)) continue;
    for (std::size_t j = 0; j < t0.size(); ++j) {
      if (!is_zero(zero_psi[i][j])) t0[j] -= factor * zero_psi[i][j];
    }
  }

  Derivation witness{detail::from_coordinates(basis, t0, 0),
                     detail::from_coordinates(basis, t0, basis.size())};
  UnivarPoly psi0(std::move(psi_coeffs));
  if (!commute_check(witness, df) || apply(witness, dec.p) != compose(psi0, dec.p) || psi0.is_zero()) {
    throw Error(ErrorCode::InternalInconsistency, "rank-two witness failed verification");
  }
  result.rank = 2;
  result.generator_t0 = std::move(witness);
  result.psi0 = std::move(psi0);
  result.certified = RankCertificate::RankTwoCertified;
  return result;
}

BasisCoordinates basis_decompose(const Derivation& t, const CentralizerResult& result,
                                 const BivarPoly& f) {
  if (!commute_check(t, jacobian_derivation(f))) {
    throw Error(ErrorCode::NotInCentralizer, "field does not commute with D_f");
  }
  const BivarPoly& p = result.p;
  auto psi = membership(apply(t, p), p);
  if (!psi) throw Error(ErrorCode::DivisibilityViolation, "T(p) is not a polynomial in p");

  BasisCoordinates out;
  Derivation rest = t;
  if (!psi->is_zero()) {
    if (!result.generator_t0 || !result.psi0) {
      throw Error(ErrorCode::DivisibilityViolation,
                  "T(p) != 0 but no rank-two witness was found within the degree bound");
    }
    auto [q, r] = divmod(*psi, *result.psi0);
    if (!r.is_zero()) throw Error(ErrorCode::DivisibilityViolation, "psi_T is not divisible by psi_0");
    out.q = std::move(q);
    rest = rest - compose(out.q, p) * *result.generator_t0;
  }

  if (!rest.is_zero()) {
    const Derivation& dp = result.generator_dp;
    const bool use_p = !dp.P.is_zero();
    auto phi = exact_divide(use_p ? rest.P : rest.Q, use_p ? dp.P : dp.Q);
    if (!phi) throw Error(ErrorCode::DivisibilityViolation, "remainder is not a polynomial multiple of D_p");
    auto delta = membership(*phi, p);
    if (!delta) throw Error(ErrorCode::DivisibilityViolation, "remainder coefficient is not in K[p]");
    out.delta = std::move(*delta);
  }

  Derivation rebuilt = compose(out.delta, p) * result.generator_dp;
  if (result.generator_t0) rebuilt = rebuilt + compose(out.q, p) * *result.generator_t0;
  if (!(rebuilt == t)) throw Error(ErrorCode::DivisibilityViolation, "basis reconstruction mismatch");
  return out;
}

Derivation commuting_pair_construct(const BivarPoly& f, const BivarPoly& g) {
  const Derivation df = jacobian_derivation(f);
  if (!(apply(df, g) == g) || g.is_zero()) {
    throw Error(ErrorCode::NotUnitEigenpair, "D_f(g) = g does not hold");
  }
  const Derivation dg = jacobian_derivation(g);
  Derivation out = scale_and_combine(f, dg, -g, df);
  if (!commute_check(out, dg)) throw Error(ErrorCode::InternalInconsistency, "f D_g - g D_f does not commute with D_g");
  return out;
}

}  // namespace jacder
