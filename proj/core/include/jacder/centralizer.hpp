#pragma once

#include <jacder/bivar_poly.hpp>
#include <jacder/derivation.hpp>
#include <jacder/univar_poly.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace jacder {

// Outcome of testing θ''(p)ψ(p) = θ'(p)(div T - ψ'(p)) for a pair (T, f)
// with f = θ(p).
struct CriterionReport {
  bool commutes = false;
  BivarPoly p;
  UnivarPoly theta;
  std::optional<UnivarPoly> psi;  // nullopt: T(p) is not in K[p]
  std::optional<BivarPoly> lhs;   // θ''(p)ψ(p)
  std::optional<BivarPoly> rhs;   // θ'(p)(div T - ψ'(p))
};

enum class RankCertificate { RankTwoCertified, RankOneUpToBound };

// Free K[p]-basis of the centralizer of D_f, relative to a degree bound on
// the components of the searched fields.
struct CentralizerResult {
  int rank = 1;
  BivarPoly p;
  Derivation generator_dp;
  std::optional<Derivation> generator_t0;
  std::optional<UnivarPoly> psi0;  // T0(p) = psi0(p), monic, minimal degree
  int degree_bound = 0;
  RankCertificate certified = RankCertificate::RankOneUpToBound;
  // Dimension over K of the bounded solution space.
  std::size_t solution_dimension = 0;
};

bool commute_check(const Derivation& t, const Derivation& d);

// Throws Error(ConstantInput).
CriterionReport criterion_check(const Derivation& t, const BivarPoly& f);

// Closed-f specialization: T(f) = ψ(f) and div T = ψ'(f). Throws
// Error(NotClosed) when f is not closed.
bool closed_criterion_check(const Derivation& t, const BivarPoly& f);

// K-basis of {T : [T, d] = 0, deg P, deg Q <= degree_bound}.
std::vector<Derivation> commuting_fields(const Derivation& d, int degree_bound);

int default_degree_bound(const BivarPoly& f);

// Throws Error(ConstantInput) and Error(BoundTooSmall).
CentralizerResult centralizer_solve(const BivarPoly& f, int degree_bound);

struct BasisCoordinates {
  UnivarPoly q;
  UnivarPoly delta;
};

// Writes t = q(p)·T0 + delta(p)·D_p. Throws Error(NotInCentralizer) when t
// does not commute with D_f and Error(DivisibilityViolation) when t cannot be
// expressed in the returned basis.
BasisCoordinates basis_decompose(const Derivation& t, const CentralizerResult& result,
                                 const BivarPoly& f);

// f·D_g - g·D_f for D_f(g) = g. Throws Error(NotUnitEigenpair).
Derivation commuting_pair_construct(const BivarPoly& f, const BivarPoly& g);

}  // namespace jacder
