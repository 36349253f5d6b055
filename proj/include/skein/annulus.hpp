#pragma once
// Action of the torus generators P_{(m,n)} on the solid-torus module with
// basis W_lambda, plus the framing twist and the module-side Baxter operator.
//
// The framing variable of the annulus is a parameter: Var::a for the standard
// module, Var::aL for a second solid torus carrying its own framing weight.

#include <stdexcept>
#include <utility>

#include "skein/coeff.hpp"
#include "skein/partitions.hpp"

namespace skein {

using FramingVar = Var;

// 1/{mn} with the index collapsed through {k} = -{-k}; m != 0, n > 0
inline ScalarQ hybrid_prefactor(int m, int n, FramingVar fv) {
  return ScalarQ::variable(fv, m) * qbrace(m) * ScalarQ::inv_brace(m * n);
}

// P_{(m,n)} W_lambda:
//   n = 0:  ((A^m - A^{-m})/{m} + A^m {m} sum_{x in lambda} q^{m c(x)}) W_lambda
//   m = 0:  sum_{mu in lambda+n} (-1)^{ht(mu/lambda)} W_mu
//   else:   A^m ({m}/{mn}) sum_mu (-1)^{ht} (sum_{x in mu/lambda} q^{m c(x)}) W_mu
inline ModuleVector act_generator(int m, int n, const ModuleVector& v,
                                  FramingVar fv = Var::a) {
  if (m == 0 && n == 0) throw std::invalid_argument("P_(0,0) is not a generator");
  if (n < 0) throw std::domain_error("negative winding does not act on this module");
  ModuleVector out;
  if (n == 0) {
    for (const auto& [lam, c] : v.coeffs()) {
      ScalarQ content_sum(0);
      for (int i = 1; i <= static_cast<int>(lam.size()); ++i)
        for (int j = 1; j <= lam[i - 1]; ++j)
          content_sum += ScalarQ::variable(Var::s, 2 * m * (j - i));
      ScalarQ eig = (ScalarQ::variable(fv, m) - ScalarQ::variable(fv, -m)) *
                        ScalarQ::inv_brace(m) +
                    ScalarQ::variable(fv, m) * qbrace(m) * content_sum;
      out.add(lam, c * eig);
    }
    return out;
  }
  for (const auto& [lam, c] : v.coeffs()) {
    for (const auto& strip : strip_additions(lam, n)) {
      ScalarQ w(strip.height % 2 == 0 ? 1 : -1);
      if (m != 0) {
        ScalarQ content_sum(0);
        for (int cx : strip.contents)
          content_sum += ScalarQ::variable(Var::s, 2 * m * cx);
        w = w * hybrid_prefactor(m, n, fv) * content_sum;
      }
      out.add(strip.result, c * w);
    }
  }
  return out;
}

// framing twist: W_lambda -> s^{p kappa_lambda} W_lambda
inline ModuleVector apply_kappa(int p, const ModuleVector& v) {
  return v.map_coeffs([&](const Partition& lam, const ScalarQ& c) {
    return ScalarQ::variable(Var::s, p * static_cast<int>(kappa_of(lam))) * c;
  });
}

// value of the zero-framed unknot in the annulus: (A - A^{-1})/{1}
inline ScalarQ unknot_value(FramingVar fv = Var::a) {
  return (ScalarQ::variable(fv, 1) - ScalarQ::variable(fv, -1)) *
         ScalarQ::inv_brace(1);
}

// exp(+-Theta_x(t)) v truncated to at most max_boxes boxes, where
// Theta_x(t) = sum_{k>=1} (-1)^{k+1} t^k/(k{k}) P_{kx} and x = (m,n), n >= 1.
// Each P_{kx} adds kn boxes, so the box cutoff makes every sum finite.
inline ModuleVector apply_baxter_module(std::pair<int, int> x, const ScalarQ& t,
                                        bool invert, int max_boxes,
                                        const ModuleVector& v,
                                        FramingVar fv = Var::a) {
  const auto [m, n] = x;
  if (n < 1) throw std::domain_error("Baxter direction needs positive winding");
  if (max_boxes < 0) throw std::invalid_argument("negative box cutoff");
  std::vector<ScalarQ> coef;  // coef[k-1] multiplies P_{(km,kn)}
  {
    ScalarQ tk(1);
    for (int k = 1; k * n <= max_boxes; ++k) {
      tk *= t;
      ScalarQ c = tk * ScalarQ(Rational(k % 2 == 1 ? 1 : -1, k)) * ScalarQ::inv_brace(k);
      coef.push_back(invert ? -c : c);
    }
  }
  auto theta = [&](const ModuleVector& w) {
    ModuleVector r;
    for (int k = 1; k <= static_cast<int>(coef.size()); ++k) {
      if (coef[k - 1].is_zero()) continue;
      r += coef[k - 1] * act_generator(k * m, k * n, w, fv).truncated(max_boxes);
    }
    return r;
  };
  ModuleVector result = v.truncated(max_boxes);
  ModuleVector term = result;
  for (int j = 1; !term.is_zero(); ++j) {
    term = ScalarQ(Rational(1, j)) * theta(term);
    result += term;
  }
  return result;
}

}  // namespace skein
