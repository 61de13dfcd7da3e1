#include <jacder/centralizer.hpp>
#include <jacder/kernel.hpp>
#include <jacder/ode.hpp>

namespace jacder {

OdeSystem ode_export(const Derivation& d, std::optional<int> degree_bound) {
  OdeSystem sys{d.P, d.Q, {}, {}};
  auto g = potential(d);
  if (!g || g->is_constant()) return sys;

  // D = D_g, and Ker D_g = K[p] for the generative closed polynomial p of g.
  sys.first_integrals.push_back(kernel_generator(*g).p);
  if (degree_bound) {
    CentralizerResult c = centralizer_solve(*g, *degree_bound);
    sys.commuting_fields.push_back(c.generator_dp);
    if (c.generator_t0) sys.commuting_fields.push_back(*c.generator_t0);
  }
  return sys;
}

}  // namespace jacder
