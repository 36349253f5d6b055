#pragma once
// Rank-N reductions of the torus algebra: the symmetric Laurent-polynomial
// representation in N variables, where the vertical generator multiplies by
// e_1 and the horizontal one is the t=q Macdonald difference operator (exact,
// via Vandermonde conjugation), the rank-2 character-variety relation, the
// q-Whittaker basis with its Toda realization inside a rank-4 quantum torus,
// and the abelianized Baxter operators as triple dilogarithm products.

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skein/annulus.hpp"
#include "skein/coeff.hpp"
#include "skein/partitions.hpp"
#include "skein/quantum_cluster.hpp"

namespace skein {

using ExpVec = std::vector<int>;
using MonoMap = std::map<ExpVec, ScalarQ>;

inline bool exp_dominant(const ExpVec& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

inline int exp_total(const ExpVec& v) {
  int t = 0;
  for (int e : v) t += e;
  return t;
}

namespace detail {

// visit every permutation of {0,..,n-1} together with its sign
template <class F>
void for_each_perm(int n, F&& f) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    f(p, inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
}

inline void mono_add(MonoMap& m, const ExpVec& k, const ScalarQ& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = m.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

inline MonoMap mono_mul(const MonoMap& a, const MonoMap& b) {
  MonoMap r;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      ExpVec w(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
      mono_add(r, w, cu * cv);
    }
  return r;
}

// signed orbit sum_w sgn(w) x^{w(mu)}; entries of mu must be distinct
inline MonoMap alternant(const ExpVec& mu) {
  MonoMap r;
  for_each_perm(static_cast<int>(mu.size()), [&](const std::vector<int>& p, int sg) {
    ExpVec v(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) v[i] = mu[p[i]];
    mono_add(r, v, ScalarQ(sg));
  });
  return r;
}

inline MonoMap vandermonde(int n) {
  ExpVec delta(n);
  for (int i = 0; i < n; ++i) delta[i] = n - 1 - i;
  return alternant(delta);
}

// peel an alternating Laurent polynomial into alternant coefficients; the
// quotient by the Vandermonde is exact iff no leading exponent ever ties
inline std::map<ExpVec, ScalarQ> alternant_coeffs(MonoMap g, int n) {
  std::map<ExpVec, ScalarQ> out;
  while (!g.empty()) {
    const ExpVec mu = std::prev(g.end())->first;
    const ScalarQ c = std::prev(g.end())->second;
    for (int i = 0; i + 1 < n; ++i)
      if (mu[i] <= mu[i + 1])
        throw std::logic_error("division by the Vandermonde left a remainder");
    ExpVec lam(n);
    for (int i = 0; i < n; ++i) lam[i] = mu[i] - (n - 1 - i);
    out.emplace(std::move(lam), c);
    for (const auto& [v, sg] : alternant(mu)) mono_add(g, v, -(sg * c));
  }
  return out;
}

// full monomial expansion of the Schur polynomial of a partition shape,
// by semistandard tableau enumeration
inline MonoMap schur_expansion(const std::vector<int>& shape, int n) {
  MonoMap out;
  std::vector<std::vector<int>> tab(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) tab[r].assign(shape[r], 0);
  ExpVec weight(n, 0);
  auto rec = [&](auto&& self, int row, int col) -> void {
    if (row == static_cast<int>(shape.size())) {
      mono_add(out, weight, ScalarQ(1));
      return;
    }
    if (col == shape[row]) {
      self(self, row + 1, 0);
      return;
    }
    // weakly increasing along rows, strictly increasing down columns
    int lo = 0;
    if (col > 0) lo = std::max(lo, tab[row][col - 1]);
    if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);
    for (int e = lo; e < n; ++e) {
      tab[row][col] = e;
      ++weight[e];
      self(self, row, col + 1);
      --weight[e];
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace detail

// Symmetric Laurent polynomial in a fixed number of variables, stored by
// dominant (weakly decreasing) exponent orbit representatives.
class SymPolyN {
 public:
  explicit SymPolyN(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("need at least one variable");
  }
  static SymPolyN zero(int n) { return SymPolyN(n); }
  static SymPolyN one(int n) {
    SymPolyN r(n);
    r.add(ExpVec(n, 0), ScalarQ(1));
    return r;
  }
  // symmetrized monomial orbit of x^lam
  static SymPolyN monomial(int n, ExpVec lam, const ScalarQ& c = ScalarQ(1)) {
    SymPolyN r(n);
    r.add(std::move(lam), c);
    return r;
  }
  // full monomial data; rejects non-symmetric input
  static SymPolyN from_monomials(int n, const MonoMap& full) {
    SymPolyN r(n);
    for (const auto& [k, c] : full) {
      if (static_cast<int>(k.size()) != n)
        throw std::invalid_argument("exponent length mismatch");
      if (exp_dominant(k) && !c.is_zero()) r.terms_.emplace(k, c);
    }
    for (const auto& [lam, c] : r.terms_) {
      ExpVec v = lam;
      std::sort(v.begin(), v.end());
      do {
        auto it = full.find(v);
        if (it == full.end() || !(it->second == c))
          throw std::invalid_argument("monomial data is not symmetric");
      } while (std::next_permutation(v.begin(), v.end()));
    }
    for (const auto& [k, c] : full) {
      if (c.is_zero()) continue;
      ExpVec d = k;
      std::sort(d.rbegin(), d.rend());
      if (r.terms_.find(d) == r.terms_.end())
        throw std::invalid_argument("monomial data is not symmetric");
    }
    return r;
  }
  // Schur Laurent polynomial: lam weakly decreasing with at most n parts;
  // negative parts enter through a determinant-power twist
  static SymPolyN schur(int n, ExpVec lam) {
    for (std::size_t i = n; i < lam.size(); ++i)
      if (lam[i] != 0) throw std::invalid_argument("more parts than variables");
    lam.resize(n, 0);
    if (!exp_dominant(lam))
      throw std::invalid_argument("shape is not weakly decreasing");
    const int c0 = std::min(lam.back(), 0);
    std::vector<int> shape;
    for (int v : lam)
      if (v - c0 > 0) shape.push_back(v - c0);
    SymPolyN r(n);
    for (const auto& [k, c] : detail::schur_expansion(shape, n)) {
      if (!exp_dominant(k)) continue;
      ExpVec sh = k;
      for (int& e : sh) e += c0;
      r.terms_.emplace(std::move(sh), c);
    }
    return r;
  }

  int vars() const { return n_; }
  const std::map<ExpVec, ScalarQ>& terms() const& { return terms_; }
  std::map<ExpVec, ScalarQ> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  ScalarQ coeff(ExpVec mu) const {
    std::sort(mu.rbegin(), mu.rend());
    auto it = terms_.find(mu);
    return it == terms_.end() ? ScalarQ(0) : it->second;
  }

  void add(ExpVec lam, const ScalarQ& c) {
    if (static_cast<int>(lam.size()) != n_)
      throw std::invalid_argument("exponent length mismatch");
    if (c.is_zero()) return;
    std::sort(lam.rbegin(), lam.rend());
    auto [it, fresh] = terms_.emplace(std::move(lam), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SymPolyN& operator+=(const SymPolyN& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  SymPolyN& operator-=(const SymPolyN& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend SymPolyN operator+(SymPolyN a, const SymPolyN& b) { return a += b; }
  friend SymPolyN operator-(SymPolyN a, const SymPolyN& b) { return a -= b; }
  friend SymPolyN operator*(const ScalarQ& c, const SymPolyN& f) {
    SymPolyN r(f.n_);
    for (const auto& [k, cc] : f.terms_) r.add(k, c * cc);
    return r;
  }
  friend SymPolyN operator*(const SymPolyN& a, const SymPolyN& b) {
    a.check(b);
    const MonoMap full = detail::mono_mul(a.expanded(), b.expanded());
    SymPolyN r(a.n_);
    for (const auto& [k, c] : full)
      if (exp_dominant(k)) r.terms_.emplace(k, c);
    return r;
  }
  bool operator==(const SymPolyN& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  SymPolyN truncated(int max_total) const {
    SymPolyN r(n_);
    for (const auto& [k, c] : terms_)
      if (exp_total(k) <= max_total) r.terms_.emplace(k, c);
    return r;
  }

  MonoMap expanded() const {
    MonoMap full;
    for (const auto& [lam, c] : terms_) {
      ExpVec v = lam;
      std::sort(v.begin(), v.end());
      do {
        full.emplace(v, c);
      } while (std::next_permutation(v.begin(), v.end()));
    }
    return full;
  }

  // expansion into Schur polynomials, exact via alternant peeling
  std::map<ExpVec, ScalarQ> to_schur() const {
    return detail::alternant_coeffs(
        detail::mono_mul(expanded(), detail::vandermonde(n_)), n_);
  }

 private:
  void check(const SymPolyN& o) const {
    if (n_ != o.n_) throw std::logic_error("variable count mismatch");
  }

  int n_;
  std::map<ExpVec, ScalarQ> terms_;
};

// first Macdonald difference operator at t=q: conjugate the sum of q-shift
// multipliers by the Vandermonde; Schur polynomials are eigenvectors with
// eigenvalue sum_k q^{lam_k + N - k}
inline SymPolyN macdonald_M1(const SymPolyN& f) {
  const int n = f.vars();
  MonoMap shifted;
  for (const auto& [mu, c] :
       detail::mono_mul(f.expanded(), detail::vandermonde(n))) {
    ScalarQ mult(0);
    for (int e : mu) mult += ScalarQ::variable(Var::s, 2 * e);
    detail::mono_add(shifted, mu, c * mult);
  }
  SymPolyN out = SymPolyN::zero(n);
  for (const auto& [lam, c] : detail::alternant_coeffs(std::move(shifted), n))
    out += c * SymPolyN::schur(n, lam);
  return out;
}

// action of the five small torus generators on the rank-N representation;
// the framing weight is pinned to s^N throughout
inline SymPolyN act_rank(std::pair<int, int> which, const SymPolyN& f) {
  const int n = f.vars();
  if (which == std::pair<int, int>{0, 1}) {
    ExpVec e1(n, 0);
    e1[0] = 1;
    return f * SymPolyN::monomial(n, e1);
  }
  if (which == std::pair<int, int>{1, 0})
    return ScalarQ::variable(Var::s, 1 - n) * macdonald_M1(f);
  if (which != std::pair<int, int>{1, 1} && which != std::pair<int, int>{2, 0} &&
      which != std::pair<int, int>{0, 2})
    throw std::invalid_argument("unsupported generator");

  const std::map<Var, LaurentPoly> bind{{Var::a, LaurentPoly::variable(Var::s, n)}};
  SymPolyN out = SymPolyN::zero(n);
  for (const auto& [lam, c] : f.to_schur()) {
    const int c0 = std::min(lam.back(), 0);
    Partition mu;
    for (int v : lam)
      if (v - c0 > 0) mu.push_back(v - c0);
    const ModuleVector acted =
        act_generator(which.first, which.second, ModuleVector::basis(mu));
    for (const auto& [nu, d] : acted.coeffs()) {
      if (static_cast<int>(nu.size()) > n) continue;
      ExpVec glam(nu.begin(), nu.end());
      glam.resize(n, 0);
      for (int& e : glam) e += c0;
      out += (c * d.substitute(bind) *
              ScalarQ::variable(Var::s, 2 * c0 * which.first)) *
             SymPolyN::schur(n, glam);
    }
  }
  return out;
}

// second-fundamental trace along a doubled primitive direction,
// (P_x^2 - P_{2x})/2
inline SymPolyN e_second(std::pair<int, int> which2x, const SymPolyN& f) {
  std::pair<int, int> x;
  if (which2x == std::pair<int, int>{2, 0})
    x = {1, 0};
  else if (which2x == std::pair<int, int>{0, 2})
    x = {0, 1};
  else
    throw std::invalid_argument("doubled direction must be (2,0) or (0,2)");
  return ScalarQ(Rational(1, 2)) *
         (act_rank(x, act_rank(x, f)) - act_rank(which2x, f));
}

// the rank-2 quantum relation cutting out the character variety:
//   q^{1/2} E_{(0,2)} P_{(1,0)}^2 + q^{-1/2} P_{(1,1)}^2
//   + q^{-1/2} P_{(0,1)}^2 E_{(2,0)} - q^{-1} P_{(1,0)} P_{(0,1)} P_{(1,1)}
//   - 2 (q^{1/2} + q^{-1/2}) E_{(0,2)} E_{(2,0)}
inline SymPolyN charvar_relation_apply(const SymPolyN& f) {
  if (f.vars() != 2) throw std::invalid_argument("relation lives in rank 2");
  auto P = [](int m, int k, const SymPolyN& g) { return act_rank({m, k}, g); };
  const ScalarQ s1 = ScalarQ::variable(Var::s, 1);
  const ScalarQ sm1 = ScalarQ::variable(Var::s, -1);
  SymPolyN r = s1 * e_second({0, 2}, P(1, 0, P(1, 0, f)));
  r += sm1 * P(1, 1, P(1, 1, f));
  r += sm1 * P(0, 1, P(0, 1, e_second({2, 0}, f)));
  r -= ScalarQ::variable(Var::s, -2) * P(1, 0, P(0, 1, P(1, 1, f)));
  r -= (ScalarQ(2) * (s1 + sm1)) * e_second({0, 2}, e_second({2, 0}, f));
  return r;
}

inline SymPolyN charvar_relation_residual(int max_boxes) {
  SymPolyN r = SymPolyN::zero(2);
  for (int b = 0; b <= max_boxes; ++b)
    for (const Partition& lam : all_partitions(b)) {
      if (static_cast<int>(lam.size()) > 2) continue;
      r += charvar_relation_apply(
          SymPolyN::schur(2, ExpVec(lam.begin(), lam.end())));
    }
  return r;
}

// product of one-variable dilogarithm series, truncated by total degree
inline SymPolyN qde_wavefunction(int n, int degree) {
  if (n < 1) throw std::invalid_argument("need at least one variable");
  if (degree < 0) throw std::invalid_argument("negative degree cutoff");
  const auto phi = dilog_coeffs_product(degree);
  MonoMap psi{{ExpVec(n, 0), ScalarQ(1)}};
  for (int k = 0; k < n; ++k) {
    MonoMap factor;
    for (int j = 0; j <= degree; ++j) {
      ExpVec v(n, 0);
      v[k] = j;
      factor.emplace(std::move(v), phi[j]);
    }
    MonoMap next;
    for (const auto& [u, cu] : detail::mono_mul(psi, factor))
      if (exp_total(u) <= degree) detail::mono_add(next, u, cu);
    psi = std::move(next);
  }
  return SymPolyN::from_monomials(n, psi);
}

// residual of ([N] - q^{(1-N)/2} M_1 + q^{N/2} e_1) on the dilogarithm
// wavefunction, exact through the degree cutoff
inline SymPolyN face_qde_residual(int n, int degree) {
  const SymPolyN psi = qde_wavefunction(n, degree);
  SymPolyN r = qint(n) * psi;
  r -= ScalarQ::variable(Var::s, 1 - n) * macdonald_M1(psi);
  r += ScalarQ::variable(Var::s, n) * act_rank({0, 1}, psi);
  return r.truncated(degree);
}

// --- q-Whittaker basis (rank 2) ----------------------------------------------

namespace detail {

inline Partition two_row(int l1, int l2) {
  if (l2 > 0) return Partition{l1, l2};
  if (l1 > 0) return Partition{l1};
  return Partition{};
}

// one-box Pieri within two rows
inline ModuleVector pieri_row2(const ModuleVector& v) {
  ModuleVector r;
  for (const auto& [lam, c] : v.coeffs()) {
    const int l1 = lam.empty() ? 0 : lam[0];
    const int l2 = lam.size() > 1 ? lam[1] : 0;
    r += ModuleVector::basis(two_row(l1 + 1, l2), c);
    if (l2 + 1 <= l1) r += ModuleVector::basis(two_row(l1, l2 + 1), c);
  }
  return r;
}

// column twist: one box on both rows
inline ModuleVector column_row2(const ModuleVector& v) {
  ModuleVector r;
  for (const auto& [lam, c] : v.coeffs()) {
    const int l1 = lam.empty() ? 0 : lam[0];
    const int l2 = lam.size() > 1 ? lam[1] : 0;
    r += ModuleVector::basis(two_row(l1 + 1, l2 + 1), c);
  }
  return r;
}

}  // namespace detail

// q-Whittaker element R_{(l1,l2)} in the Schur basis, characterized by
// R_{(0,0)} = 1 and the Pieri rules
//   e1 R_l = R_{l+(1,0)} + (1-q^{l1-l2}) R_{l+(0,1)},  e2 R_l = R_{l+(1,1)}
inline ModuleVector whittaker_r(int l1, int l2) {
  if (l1 < l2 || l2 < 0) throw std::domain_error("outside the partition cone");
  static std::map<std::array<int, 2>, ModuleVector> memo;
  const std::array<int, 2> key{l1, l2};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  ModuleVector r;
  if (l1 == 0 && l2 == 0) {
    r = ModuleVector::vacuum();
  } else if (l2 > 0) {
    r = detail::column_row2(whittaker_r(l1 - 1, l2 - 1));
  } else {
    r = detail::pieri_row2(whittaker_r(l1 - 1, 0));
    if (l1 >= 2) {
      // 1-q^k = -s^k {k}
      const ScalarQ c = -(ScalarQ::variable(Var::s, l1 - 1) * qbrace(l1 - 1));
      r -= c * whittaker_r(l1 - 1, 1);
    }
  }
  memo.emplace(key, r);
  return r;
}

// finitely supported coefficient functions on the two-row partition cone
class WhittakerCoeffs {
 public:
  using Key = std::array<int, 2>;

  WhittakerCoeffs() = default;
  static WhittakerCoeffs delta(int l1, int l2, const ScalarQ& c = ScalarQ(1)) {
    WhittakerCoeffs r;
    r.add(l1, l2, c);
    return r;
  }

  const std::map<Key, ScalarQ>& support() const& { return support_; }
  std::map<Key, ScalarQ> support() && { return std::move(support_); }
  bool is_zero() const { return support_.empty(); }

  ScalarQ coeff(int l1, int l2) const {
    auto it = support_.find(Key{l1, l2});
    return it == support_.end() ? ScalarQ(0) : it->second;
  }

  void add(int l1, int l2, const ScalarQ& c) {
    if (l1 < l2) throw std::domain_error("outside the partition cone");
    if (c.is_zero()) return;
    auto [it, fresh] = support_.emplace(Key{l1, l2}, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) support_.erase(it);
    }
  }

  WhittakerCoeffs& operator+=(const WhittakerCoeffs& o) {
    for (const auto& [k, c] : o.support_) add(k[0], k[1], c);
    return *this;
  }
  friend WhittakerCoeffs operator+(WhittakerCoeffs a, const WhittakerCoeffs& b) {
    return a += b;
  }
  friend WhittakerCoeffs operator*(const ScalarQ& c, const WhittakerCoeffs& v) {
    WhittakerCoeffs r;
    for (const auto& [k, cc] : v.support_) r.add(k[0], k[1], c * cc);
    return r;
  }
  bool operator==(const WhittakerCoeffs& o) const {
    return support_ == o.support_;
  }

 private:
  std::map<Key, ScalarQ> support_;
};

inline ModuleVector whittaker_to_schur(const WhittakerCoeffs& phi) {
  ModuleVector r;
  for (const auto& [l, c] : phi.support()) {
    if (l[1] < 0) throw std::domain_error("negative row is outside the module");
    r += c * whittaker_r(l[0], l[1]);
  }
  return r;
}

// triangular solve against the unitriangular change of basis; input must be
// supported on partitions with at most two rows
inline WhittakerCoeffs schur_to_whittaker(const ModuleVector& v) {
  WhittakerCoeffs phi;
  ModuleVector rest = v;
  while (!rest.is_zero()) {
    std::array<int, 2> best{-1, -1};
    ScalarQ c(0);
    for (const auto& [lam, cc] : rest.coeffs()) {
      if (lam.size() > 2) throw std::invalid_argument("more than two rows");
      const std::array<int, 2> key{lam.empty() ? 0 : lam[0],
                                   lam.size() > 1 ? lam[1] : 0};
      if (key > best) {
        best = key;
        c = cc;
      }
    }
    phi.add(best[0], best[1], c);
    rest -= c * whittaker_r(best[0], best[1]);
  }
  return phi;
}

inline SymPolyN to_sympoly(const ModuleVector& v, int n) {
  SymPolyN r = SymPolyN::zero(n);
  for (const auto& [lam, c] : v.coeffs()) {
    if (static_cast<int>(lam.size()) > n) continue;
    r += c * SymPolyN::schur(n, ExpVec(lam.begin(), lam.end()));
  }
  return r;
}

inline ModuleVector to_module_vector(const SymPolyN& f) {
  ModuleVector r;
  for (const auto& [lam, c] : f.to_schur()) {
    if (lam.back() < 0) throw std::domain_error("negative part has no partition");
    Partition p;
    for (int e : lam)
      if (e > 0) p.push_back(e);
    r += ModuleVector::basis(p, c);
  }
  return r;
}

// expands the two-variable dilogarithm wavefunction in the q-Whittaker basis:
// support must collapse to single rows, with coefficients solving
// (1-q^n) c_n = -q^{1/2} c_{n-1}, c_0 = 1
inline bool whittaker_wavefunction_check(int max_n) {
  const WhittakerCoeffs phi =
      schur_to_whittaker(to_module_vector(qde_wavefunction(2, max_n)));
  for (const auto& [l, c] : phi.support())
    if (l[1] != 0) return false;
  if (!(phi.coeff(0, 0) == ScalarQ(1))) return false;
  for (int k = 1; k <= max_n; ++k) {
    const ScalarQ lhs =
        -(ScalarQ::variable(Var::s, k) * qbrace(k)) * phi.coeff(k, 0);
    const ScalarQ rhs = -(ScalarQ::variable(Var::s, 1) * phi.coeff(k - 1, 0));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// --- rank-4 quantum torus of shift and scaling operators ----------------------

constexpr int kU1 = 0;
constexpr int kU2 = 1;
constexpr int kV1 = 2;
constexpr int kV2 = 3;

inline const QLattice& uv_lattice() {
  static const QLattice lat(
      {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}},
      {"U1", "U2", "V1", "V2"});
  return lat;
}

// ordered product of generator powers, left to right
inline QTElement uv_mono(const ScalarQ& c,
                         const std::vector<std::pair<int, int>>& factors) {
  QTElement r = QTElement::one(uv_lattice());
  for (const auto& [g, p] : factors) {
    LVec v(4, 0);
    v.at(g) = p;
    r = r * QTElement::X(uv_lattice(), v);
  }
  return c * r;
}

// U_i scales row i by q^{lam_i}; V_i shifts row i down in the argument, so on
// delta functions X_{(a,b)} delta_mu = s^{2 a.mu + a.b} delta_{mu+b}. Strict
// mode rejects results leaking out of the cone; clip discards them, which is
// the right reading for operators defined only on the renormalized model.
inline WhittakerCoeffs apply_uv(const QTElement& op, const WhittakerCoeffs& phi,
                                bool clip = false) {
  std::map<WhittakerCoeffs::Key, ScalarQ> acc;
  for (const auto& [v, c] : op.terms())
    for (const auto& [mu, d] : phi.support()) {
      const int tw = 2 * (v[kU1] * mu[0] + v[kU2] * mu[1]) +
                     v[kU1] * v[kV1] + v[kU2] * v[kV2];
      const ScalarQ term = c * d * ScalarQ::variable(Var::s, tw);
      auto [it, fresh] =
          acc.emplace(WhittakerCoeffs::Key{mu[0] + v[kV1], mu[1] + v[kV2]}, term);
      if (!fresh) it->second += term;
    }
  WhittakerCoeffs out;
  for (const auto& [k, c] : acc) {
    if (c.is_zero()) continue;
    if (clip && k[0] < k[1]) continue;
    out.add(k[0], k[1], c);
  }
  return out;
}

// Toda Hamiltonians realizing the two Pieri multiplications
inline std::pair<QTElement, QTElement> toda_ops() {
  const QTElement h1 = uv_mono(ScalarQ(1), {{kV1, 1}}) +
                       uv_mono(ScalarQ(1), {{kV2, 1}}) +
                       uv_mono(-ScalarQ::variable(Var::s, 2),
                               {{kU1, 1}, {kU2, -1}, {kV2, 1}});
  const QTElement h2 = uv_mono(ScalarQ(1), {{kV1, 1}, {kV2, 1}});
  return {h1, h2};
}

// images of the three torus generators in the rank-4 torus
inline QTElement uv_image(std::pair<int, int> which) {
  const ScalarQ s1 = ScalarQ::variable(Var::s, 1);
  if (which == std::pair<int, int>{1, 0})
    return uv_mono(-s1, {{kV2, -1}, {kV1, 1}, {kU1, 1}}) +
           uv_mono(ScalarQ::variable(Var::s, -1), {{kU2, 1}}) +
           uv_mono(-s1, {{kV1, -1}, {kV2, 1}, {kU2, 1}});
  if (which == std::pair<int, int>{0, 1})
    return uv_mono(ScalarQ(1), {{kV1, 1}}) + uv_mono(ScalarQ(1), {{kV2, 1}}) +
           uv_mono(ScalarQ(-1), {{kU1, 1}, {kV1, 2}, {kV2, -1}, {kU2, -1}});
  if (which == std::pair<int, int>{1, 1})
    return uv_mono(ScalarQ(1), {{kU1, 1}, {kV1, 1}}) +
           uv_mono(ScalarQ(1), {{kV2, 1}, {kU2, 1}}) +
           uv_mono(-ScalarQ::variable(Var::s, 2),
                   {{kV1, -1}, {kV2, 2}, {kU2, 1}});
  throw std::invalid_argument("unsupported generator");
}

// rescale by prod_{k=1}^{l1-l2} (1-q^k), the intertwiner between the two
// presentations of the annihilator ideal
inline WhittakerCoeffs renormalize_whittaker(const WhittakerCoeffs& phi,
                                             bool invert) {
  WhittakerCoeffs out;
  for (const auto& [l, c] : phi.support()) {
    ScalarQ f(1);
    for (int k = 1; k <= l[0] - l[1]; ++k)
      f = invert
              ? f * (-(ScalarQ::variable(Var::s, -k) * ScalarQ::inv_brace(k)))
              : f * (-(ScalarQ::variable(Var::s, k) * qbrace(k)));
    out.add(l[0], l[1], c * f);
  }
  return out;
}

// single-row coefficient function solving the annihilator recursion
inline WhittakerCoeffs wavefunction_uv_coeffs(int order) {
  const auto c = dilog_coeffs_product(order);
  WhittakerCoeffs phi;
  for (int n = 0; n <= order; ++n) phi.add(n, 0, c[n]);
  return phi;
}

// the embedded generators close the torus relation, and the two displayed
// annihilator generators kill the wavefunction coefficients
inline bool uv_embedding_check(int order) {
  const QTElement p10 = uv_image({1, 0});
  const QTElement p01 = uv_image({0, 1});
  if (!((p10 * p01 - p01 * p10) == qbrace(1) * uv_image({1, 1}))) return false;

  const WhittakerCoeffs psi = wavefunction_uv_coeffs(order);
  const QTElement one = QTElement::one(uv_lattice());
  if (!apply_uv(uv_mono(ScalarQ(1), {{kU2, 1}}) - one, psi).is_zero())
    return false;
  const QTElement g1 = one - uv_mono(ScalarQ(1), {{kU1, 1}}) +
                       uv_mono(ScalarQ::variable(Var::s, 1), {{kV1, 1}});
  const WhittakerCoeffs leak = apply_uv(g1, psi);
  for (const auto& [l, c] : leak.support())
    if (l[0] <= order) return false;  // only the cutoff boundary may survive
  return true;
}

// the three Baxter operators as triple dilogarithm products
inline std::vector<QTElement> baxter_uv_args(std::pair<int, int> which) {
  const ScalarQ s1 = ScalarQ::variable(Var::s, 1);
  if (which == std::pair<int, int>{1, 0})
    return {uv_mono(-s1, {{kV1, -1}, {kV2, 1}, {kU2, 1}}),
            uv_mono(ScalarQ::variable(Var::s, -1), {{kU2, 1}}),
            uv_mono(-s1, {{kV2, -1}, {kV1, 1}, {kU1, 1}})};
  if (which == std::pair<int, int>{0, 1})
    return {uv_mono(ScalarQ(1), {{kV1, 1}}),
            uv_mono(ScalarQ(-1), {{kU1, 1}, {kV1, 2}, {kV2, -1}, {kU2, -1}}),
            uv_mono(ScalarQ(1), {{kV2, 1}})};
  if (which == std::pair<int, int>{1, 1})
    return {uv_mono(ScalarQ(1), {{kU1, 1}, {kV1, 1}}),
            uv_mono(-ScalarQ::variable(Var::s, 2),
                    {{kV1, -1}, {kV2, 2}, {kU2, 1}}),
            uv_mono(ScalarQ(1), {{kV2, 1}, {kU2, 1}})};
  throw std::invalid_argument("unsupported generator");
}

// truncated by a weighted lattice grading; every argument must sit in strictly
// positive grade for the truncation to be sound
inline QTSeries abelian_baxter(std::pair<int, int> which, int order,
                               const LVec& weights = {1, 1, 1, 1}) {
  QTSeries prod = QTSeries::one(uv_lattice(), weights, order);
  for (const QTElement& arg : baxter_uv_args(which)) {
    const auto& [v, c] = *arg.terms().begin();
    long g = 0;
    for (int i = 0; i < 4; ++i) g += static_cast<long>(weights[i]) * v[i];
    if (g <= 0) throw std::invalid_argument("dilog argument needs positive grade");
    const auto phi = dilog_coeffs_product(static_cast<int>(order / g));
    QTSeries factor(uv_lattice(), weights, order);
    LVec kv(4, 0);
    ScalarQ ck(1);
    for (int k = 0; k * g <= order; ++k) {
      factor.add(kv, phi[k] * ck);
      kv = lvec_add(kv, v);
      ck = ck * c;
    }
    prod = prod * factor;
  }
  return prod;
}

inline bool uv_pentagon_check(int order, const LVec& weights = {1, 1, 1, 1}) {
  const QTSeries q10 = abelian_baxter({1, 0}, order, weights);
  const QTSeries q01 = abelian_baxter({0, 1}, order, weights);
  const QTSeries q11 = abelian_baxter({1, 1}, order, weights);
  return q10 * q01 == q01 * (q11 * q10);
}

}  // namespace skein
