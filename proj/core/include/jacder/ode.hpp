#pragma once

#include <jacder/bivar_poly.hpp>
#include <jacder/derivation.hpp>

#include <optional>
#include <vector>

namespace jacder {

// dx/dt = rhs_x, dy/dt = rhs_y.
struct OdeSystem {
  BivarPoly rhs_x;
  BivarPoly rhs_y;
  std::vector<BivarPoly> first_integrals;
  std::vector<Derivation> commuting_fields;
};

// Divergence-free fields D = D_g get the kernel generator of g as a first
// integral; with a bound they also get the centralizer generators of D_g.
OdeSystem ode_export(const Derivation& d, std::optional<int> degree_bound = std::nullopt);

}  // namespace jacder
