#pragma once
// Skein-valued wavefunctions of genus-1 branes: the one-leg topological
// vertex in every framing as a module-side Baxter flow, the canoe face
// relation that annihilates it, the inverse-Baxter identity, the framing
// conjugation of P_{(0,n)}, and the unknot-conormal solution.

#include <stdexcept>
#include <utility>

#include "skein/annulus.hpp"
#include "skein/coeff.hpp"
#include "skein/partitions.hpp"

namespace skein {

// q^{p kappa_lambda / 2} s_lambda(q^rho), the one-leg vertex in framing p
inline ScalarQ topological_vertex(const Partition& lam, int p) {
  return ScalarQ::variable(Var::s, p * static_cast<int>(kappa_of(lam))) *
         principal_specialization(lam);
}

// Q_{(p,1)}(a^{-p}) applied to the vacuum; the W_lambda coefficient is the
// framing-(p-1) vertex.
inline ModuleVector wavefunction_framed(int p, int max_boxes) {
  return apply_baxter_module({p, 1}, ScalarQ::variable(Var::a, -p), false,
                             max_boxes, ModuleVector::vacuum());
}

// Face relation of the genus-1 canoe applied to the vertex wavefunction:
//   (a^{-1} O - a^{-1} P_{(1,0)} + P_{(0,1)}) Psi, Psi = Q_{(0,1)}(1) 1.
// Exact through max_boxes, and identically zero there.
inline ModuleVector canoe_face_residual(int max_boxes) {
  if (max_boxes < 0) throw std::invalid_argument("negative box cutoff");
  const ModuleVector psi = wavefunction_framed(0, max_boxes + 1);
  const ScalarQ ainv = ScalarQ::variable(Var::a, -1);
  ModuleVector r = (ainv * unknot_value()) * psi;
  r -= ainv * act_generator(1, 0, psi);
  r += act_generator(0, 1, psi);
  return r.truncated(max_boxes);
}

// Q_{(p,1)}(-t)^{-1} 1 = Q_{(p+1,1)}(t a^{-1}) 1, with t := g kept symbolic;
// the t-power of every W_lambda coefficient equals its box count, so the box
// cutoff is also the t-order.
inline bool inverse_identity_check(int p, int max_boxes) {
  const ScalarQ g = ScalarQ::variable(Var::g, 1);
  const ModuleVector lhs =
      apply_baxter_module({p, 1}, -g, true, max_boxes, ModuleVector::vacuum());
  const ModuleVector rhs =
      apply_baxter_module({p + 1, 1}, g * ScalarQ::variable(Var::a, -1), false,
                          max_boxes, ModuleVector::vacuum());
  return lhs == rhs;
}

// Wavefunction of the unknot conormal,
//   Psi_L = Q_{(0,1)}(-g a^{-1}) Q_{(0,1)}(-g a)^{-1} 1,
// in the module whose framing weight is aL; a is the ambient variable and the
// monomial gamma stays symbolic as g.
inline ModuleVector unknot_wavefunction(int max_boxes) {
  const ScalarQ g = ScalarQ::variable(Var::g, 1);
  const ModuleVector inner =
      apply_baxter_module({0, 1}, -g * ScalarQ::variable(Var::a, 1), true,
                          max_boxes, ModuleVector::vacuum(), Var::aL);
  return apply_baxter_module({0, 1}, -g * ScalarQ::variable(Var::a, -1), false,
                             max_boxes, inner, Var::aL);
}

// (O - P_{(1,0)} - g aL a^{-1} P_{(0,1)} + g a P_{(1,1)}) Psi_L, exact through
// box count (equivalently g-order) gamma_order; identically zero.
inline ModuleVector unknot_residual(int gamma_order) {
  if (gamma_order < 0) throw std::invalid_argument("negative box cutoff");
  const ModuleVector psi = unknot_wavefunction(gamma_order);
  const ScalarQ g = ScalarQ::variable(Var::g, 1);
  ModuleVector r = unknot_value(Var::aL) * psi;
  r -= act_generator(1, 0, psi, Var::aL);
  r -= g * ScalarQ::variable(Var::aL, 1) * ScalarQ::variable(Var::a, -1) *
       act_generator(0, 1, psi, Var::aL);
  r += g * ScalarQ::variable(Var::a, 1) * act_generator(1, 1, psi, Var::aL);
  return r.truncated(gamma_order);
}

// Ad_{q^{p kappa/2}} P_{(0,n)} = a^{-pn} P_{(pn,n)} on every W_lambda with
// |lambda| <= max_boxes.
inline bool ad_kappa_check(int p, int n, int max_boxes) {
  if (n < 1) throw std::invalid_argument("winding must be positive");
  for (int b = 0; b <= max_boxes; ++b) {
    for (const Partition& lam : all_partitions(b)) {
      const ModuleVector w = ModuleVector::basis(lam);
      const ModuleVector lhs = apply_kappa(p, act_generator(0, n, apply_kappa(-p, w)));
      const ModuleVector rhs =
          ScalarQ::variable(Var::a, -p * n) * act_generator(p * n, n, w);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace skein
