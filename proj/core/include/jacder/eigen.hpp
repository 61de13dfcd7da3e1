#pragma once

#include <jacder/bivar_poly.hpp>
#include <jacder/linear_solve.hpp>
#include <jacder/univar_poly.hpp>

#include <vector>

namespace jacder {

// D_f(g) = lambda·g with lambda a nonzero rational.
struct EigenPair {
  BivarPoly g;
  Rational lambda;
};

// Rational eigenpairs of D_f on polynomials of degree <= degree_bound. For
// each nonzero rational eigenvalue the eigenspace is returned as a reduced
// echelon basis: every g has leading coefficient 1 and no other basis vector
// of the same eigenvalue has a term at g's leading monomial. Pairs are sorted
// by ascending lambda, then by descending leading monomial.
// Throws Error(ConstantInput).
std::vector<EigenPair> eigen_search(const BivarPoly& f, int degree_bound);

// det(t·I - m) via reduction to upper Hessenberg form.
UnivarPoly characteristic_polynomial(RationalMatrix m);

// Distinct rational roots in ascending order.
std::vector<Rational> rational_roots(const UnivarPoly& f);

}  // namespace jacder
