#pragma once

#include <jacder/bivar_poly.hpp>
#include <jacder/univar_poly.hpp>

#include <optional>

namespace jacder {

struct KernelBasis {
  BivarPoly p;       // generator of Ker D_f, leading coefficient 1, p(0,0) = 0
  int degree_bound;  // total degree up to which the kernel was searched
};

// f = theta(p) with p a generative closed polynomial for f.
struct Decomposition {
  BivarPoly p;
  UnivarPoly theta;
};

// Minimal-degree nonconstant solution of D_f(p) = 0, found by solving the
// kernel condition over polynomials of degree 1, 2, ..., deg f in turn.
// Throws Error(ConstantInput) for constant f.
KernelBasis kernel_generator(const BivarPoly& f);

// Throws Error(ConstantInput); Error(InternalInconsistency) if f is not a
// polynomial in the kernel generator.
Decomposition decompose(const BivarPoly& f);

// psi with psi(p) = h, or nullopt if h is not in K[p]. Throws
// Error(ConstantP) when p is constant.
std::optional<UnivarPoly> membership(const BivarPoly& h, const BivarPoly& p);

// K[f] integrally closed, i.e. f is its own generative closed polynomial up
// to an affine change. Throws Error(ConstantInput).
bool is_closed(const BivarPoly& f);

// Scales and shifts p to the canonical generator of K[p]: leading
// coefficient 1 and zero constant term.
BivarPoly normalize_generator(const BivarPoly& p);

}  // namespace jacder
