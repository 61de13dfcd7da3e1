#pragma once

#include <jacder/bivar_poly.hpp>
#include <jacder/linear_solve.hpp>

#include <map>
#include <vector>

namespace jacder::detail {

// Row-major matrix of a linear map given by the images of its basis vectors;
// rows are the monomials occurring in any image, leading monomial first.
inline RationalMatrix matrix_of_images(const std::vector<BivarPoly>& images) {
  std::map<Monomial, std::size_t, GrlexGreater> row_of;
  for (const auto& img : images) {
    for (const auto& [m, c] : img.terms()) row_of.try_emplace(m, 0);
  }
  std::size_t next = 0;
  for (auto& [m, idx] : row_of) idx = next++;
  RationalMatrix mat(row_of.size(), RationalVector(images.size()));
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (const auto& [m, c] : images[j].terms()) mat[row_of.at(m)][j] = c;
  }
  return mat;
}

inline BivarPoly from_coordinates(const std::vector<Monomial>& basis, const RationalVector& v,
                                  std::size_t offset = 0) {
  BivarPoly out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], v[offset + i]);
  return out;
}

// Total order on polynomials: term by term from the leading term, monomials
// first, then coefficients.
inline bool grlex_less(const BivarPoly& a, const BivarPoly& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    int mc = grlex_compare(ia->first, ib->first);
    if (mc != 0) return mc < 0;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

}  // namespace jacder::detail
