#pragma once
// The closed-torus skein algebra: generators P_v, v in Z^2 \ {0}, subject to
// [P_u, P_v] = {det(u|v)} P_{u+v}. Elements are kept in PBW normal form with
// letters sorted by slope. On top of that sit the Baxter operators
// Q_x(t) = exp(sum_k (-1)^{k+1} t^k / (k{k}) P_{kx}) as truncated series, their
// adjoint action, the pentagon identity, and the rank-1 reduction onto the
// quantum torus with form det (which sends Q_x(t) to the dilogarithm series).

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/coeff.hpp"
#include "skein/quantum_cluster.hpp"

namespace skein {

using Vec2 = std::array<int, 2>;

inline Vec2 vadd(Vec2 a, Vec2 b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 vscale(int k, Vec2 a) { return {k * a[0], k * a[1]}; }
inline int det2(Vec2 a, Vec2 b) { return a[0] * b[1] - a[1] * b[0]; }
inline bool is_zero_vec(Vec2 a) { return a[0] == 0 && a[1] == 0; }

// Strict slope order: angle in [0, 2pi) ascending, ties broken by length.
// Equal vectors compare false both ways, so they end up adjacent in a word.
inline bool slope_less(Vec2 a, Vec2 b) {
  if (is_zero_vec(a) || is_zero_vec(b))
    throw std::invalid_argument("zero vector has no slope");
  auto upper = [](Vec2 v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0) ? 0 : 1; };
  if (upper(a) != upper(b)) return upper(a) < upper(b);
  const int cr = det2(a, b);
  if (cr != 0) return cr > 0;
  return a[0] * a[0] + a[1] * a[1] < b[0] * b[0] + b[1] * b[1];
}

using Word = std::vector<Vec2>;

inline bool word_sorted(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (slope_less(w[i + 1], w[i])) return false;
  return true;
}

inline Vec2 word_degree(const Word& w) {
  Vec2 d{0, 0};
  for (Vec2 v : w) d = vadd(d, v);
  return d;
}

// Element in PBW normal form: every stored word is slope-sorted and every
// stored coefficient is nonzero.
class SkeinElement {
 public:
  SkeinElement() = default;

  static SkeinElement one() {
    SkeinElement e;
    e.terms_[Word{}] = ScalarQ(1);
    return e;
  }
  static SkeinElement p(Vec2 v, ScalarQ c = ScalarQ(1)) {
    return from_word(Word{v}, std::move(c));
  }
  static SkeinElement from_word(const Word& w, ScalarQ c = ScalarQ(1));

  const std::map<Word, ScalarQ>& terms() const& { return terms_; }
  std::map<Word, ScalarQ> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  ScalarQ coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ScalarQ(0) : it->second;
  }

  void add_sorted(const Word& w, const ScalarQ& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SkeinElement& operator+=(const SkeinElement& o) {
    for (const auto& [w, c] : o.terms_) add_sorted(w, c);
    return *this;
  }
  SkeinElement& operator-=(const SkeinElement& o) {
    for (const auto& [w, c] : o.terms_) add_sorted(w, -c);
    return *this;
  }
  friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
  friend SkeinElement operator-(SkeinElement a, const SkeinElement& b) { return a -= b; }
  friend SkeinElement operator*(const ScalarQ& c, const SkeinElement& e) {
    SkeinElement r;
    for (const auto& [w, cw] : e.terms_) r.add_sorted(w, c * cw);
    return r;
  }
  friend SkeinElement operator*(const SkeinElement& a, const SkeinElement& b);
  bool operator==(const SkeinElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const SkeinElement& o) const { return !(*this == o); }

  std::string to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_text() + ")";
      for (Vec2 v : w)
        out += " P[" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "]";
    }
    return out;
  }

 private:
  std::map<Word, ScalarQ> terms_;
};

// Rewrites an arbitrary word into PBW normal form with
// P_b P_a = P_a P_b + {det(b|a)} P_{a+b}. A swap lowers the inversion count at
// fixed length and a merge lowers the length, so the worklist terminates. The
// merged letter a+b cannot be zero: antiparallel letters have det = 0, which
// kills the bracket term first.
inline SkeinElement normal_order(const Word& word, const ScalarQ& coeff) {
  for (Vec2 v : word)
    if (is_zero_vec(v)) throw std::invalid_argument("zero vector is not a letter");
  SkeinElement out;
  if (coeff.is_zero()) return out;
  std::vector<std::pair<Word, ScalarQ>> work{{word, coeff}};
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    std::size_t i = 0;
    while (i + 1 < w.size() && !slope_less(w[i + 1], w[i])) ++i;
    if (i + 1 >= w.size()) {
      out.add_sorted(w, c);
      continue;
    }
    const int d = det2(w[i], w[i + 1]);
    if (d != 0) {
      Word merged(w.begin(), w.begin() + i);
      merged.push_back(vadd(w[i], w[i + 1]));
      merged.insert(merged.end(), w.begin() + i + 2, w.end());
      work.emplace_back(std::move(merged), c * qbrace(d));
    }
    std::swap(w[i], w[i + 1]);
    work.emplace_back(std::move(w), std::move(c));
  }
  return out;
}

inline SkeinElement SkeinElement::from_word(const Word& w, ScalarQ c) {
  return normal_order(w, c);
}

inline SkeinElement operator*(const SkeinElement& a, const SkeinElement& b) {
  SkeinElement r;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r += normal_order(w, ca * cb);
    }
  }
  return r;
}

// Series in two formal central variables v, w with skein coefficients,
// truncated to total degree <= order.
class BiSeries {
 public:
  explicit BiSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
  }
  static BiSeries one(int order) {
    BiSeries s(order);
    s.add(0, 0, SkeinElement::one());
    return s;
  }

  int order() const { return order_; }
  const std::map<std::pair<int, int>, SkeinElement>& coeffs() const& { return coeffs_; }
  std::map<std::pair<int, int>, SkeinElement> coeffs() && { return std::move(coeffs_); }

  SkeinElement coeff(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? SkeinElement() : it->second;
  }

  void add(int i, int j, const SkeinElement& e) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative series exponent");
    if (i + j > order_ || e.is_zero()) return;
    auto [it, fresh] = coeffs_.emplace(std::make_pair(i, j), e);
    if (!fresh) {
      it->second += e;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  BiSeries& operator+=(const BiSeries& o) {
    check(o);
    for (const auto& [ij, e] : o.coeffs_) add(ij.first, ij.second, e);
    return *this;
  }
  BiSeries& operator-=(const BiSeries& o) {
    check(o);
    for (const auto& [ij, e] : o.coeffs_) add(ij.first, ij.second, ScalarQ(-1) * e);
    return *this;
  }
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    a.check(b);
    BiSeries r(a.order_);
    for (const auto& [ij, e] : a.coeffs_)
      for (const auto& [kl, f] : b.coeffs_) {
        if (ij.first + kl.first + ij.second + kl.second > a.order_) continue;
        r.add(ij.first + kl.first, ij.second + kl.second, e * f);
      }
    return r;
  }
  bool operator==(const BiSeries& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
  }

 private:
  void check(const BiSeries& o) const {
    if (order_ != o.order_) throw std::logic_error("truncation order mismatch");
  }
  int order_;
  std::map<std::pair<int, int>, SkeinElement> coeffs_;
};

// t^n coefficients of Q_x(t)^{sign} = exp(sign * Theta_x(t)), n <= order.
inline std::vector<SkeinElement> baxter_coeffs(Vec2 x, int sign, int order) {
  if (is_zero_vec(x)) throw std::invalid_argument("zero vector is not a letter");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  std::vector<SkeinElement> theta(order + 1);
  for (int k = 1; k <= order; ++k) {
    const int s = (k % 2 == 1) ? sign : -sign;
    theta[k] = SkeinElement::p(vscale(k, x),
                               ScalarQ(Rational(s, k)) * ScalarQ::inv_brace(k));
  }
  std::vector<SkeinElement> out(order + 1), pow(order + 1);
  out[0] = SkeinElement::one();
  pow[0] = SkeinElement::one();
  for (int j = 1; j <= order; ++j) {
    std::vector<SkeinElement> next(order + 1);
    for (int n = j; n <= order; ++n)
      for (int k = 1; k <= n - (j - 1); ++k)
        if (!pow[n - k].is_zero() && !theta[k].is_zero())
          next[n] += pow[n - k] * theta[k];
    const ScalarQ inv_j = ScalarQ(Rational(1, j));
    for (int n = 0; n <= order; ++n) {
      pow[n] = inv_j * next[n];
      out[n] += pow[n];
    }
  }
  return out;
}

// Q_x(v^{pv} w^{pw})^{sign} as a BiSeries.
inline BiSeries baxter_factor(Vec2 x, int pv, int pw, int sign, int order) {
  if (pv < 0 || pw < 0 || pv + pw == 0)
    throw std::invalid_argument("factor needs a nonzero monomial in v, w");
  BiSeries s(order);
  const auto qc = baxter_coeffs(x, sign, order / (pv + pw));
  for (int n = 0; n < static_cast<int>(qc.size()); ++n) s.add(n * pv, n * pw, qc[n]);
  return s;
}

// Q_x(v)^{s1} Q_y(w)^{s2}.
inline BiSeries baxter_biseries(Vec2 x, Vec2 y, std::pair<int, int> signs, int order) {
  return baxter_factor(x, 1, 0, signs.first, order) *
         baxter_factor(y, 0, 1, signs.second, order);
}

// Coefficients of Ad_{Q_x(t)^{sign}} P_y = sum_n qbinom(sign*d, n) t^n P_{y+nx},
// d = det(x|y).
inline std::vector<ScalarQ> ad_closed(Vec2 x, Vec2 y, int order, int sign = 1) {
  if (is_zero_vec(x) || is_zero_vec(y))
    throw std::invalid_argument("zero vector is not a letter");
  const int d = sign * det2(x, y);
  std::vector<ScalarQ> out;
  out.reserve(order + 1);
  for (int n = 0; n <= order; ++n) out.push_back(qbinom(d, n));
  return out;
}

// Ad_{Q_x(t)^{sign}} e = exp(ad_{sign*Theta_x(t)}) e computed with nothing but
// the bracket; coefficient of t^n in slot n.
inline std::vector<SkeinElement> ad_series(Vec2 x, const SkeinElement& e, int order,
                                           int sign = 1) {
  if (is_zero_vec(x)) throw std::invalid_argument("zero vector is not a letter");
  std::vector<SkeinElement> theta(order + 1);
  for (int k = 1; k <= order; ++k) {
    const int s = (k % 2 == 1) ? sign : -sign;
    theta[k] = SkeinElement::p(vscale(k, x),
                               ScalarQ(Rational(s, k)) * ScalarQ::inv_brace(k));
  }
  std::vector<SkeinElement> total(order + 1), cur(order + 1);
  total[0] = e;
  cur[0] = e;
  for (int j = 1; j <= order; ++j) {
    std::vector<SkeinElement> next(order + 1);
    for (int n = j; n <= order; ++n)
      for (int k = 1; k <= n - (j - 1); ++k)
        if (!cur[n - k].is_zero())
          next[n] += theta[k] * cur[n - k] - cur[n - k] * theta[k];
    const ScalarQ inv_j = ScalarQ(Rational(1, j));
    for (int n = 0; n <= order; ++n) {
      cur[n] = inv_j * next[n];
      total[n] += cur[n];
    }
  }
  return total;
}

// Scalar extraction of ad_series on a single letter; rejects any term the
// closed form does not predict, so agreement with ad_closed is meaningful.
inline std::vector<ScalarQ> ad_series_oracle(Vec2 x, Vec2 y, int order, int sign = 1) {
  const auto full = ad_series(x, SkeinElement::p(y), order, sign);
  std::vector<ScalarQ> out;
  out.reserve(order + 1);
  for (int n = 0; n <= order; ++n) {
    const Word expect{vadd(y, vscale(n, x))};
    for (const auto& [w, c] : full[n].terms())
      if (w != expect) throw std::logic_error("adjoint action left the P_{y+nx} line");
    out.push_back(full[n].coeff(expect));
  }
  return out;
}

// Ad_{Q_x(v^{pv} w^{pw})^{sign}} applied coefficientwise to a BiSeries.
inline BiSeries ad_biseries(Vec2 x, int pv, int pw, const BiSeries& bs, int sign = 1) {
  if (pv < 0 || pw < 0 || pv + pw == 0)
    throw std::invalid_argument("factor needs a nonzero monomial in v, w");
  BiSeries out(bs.order());
  for (const auto& [ij, e] : bs.coeffs()) {
    const int room = (bs.order() - ij.first - ij.second) / (pv + pw);
    const auto shifted = ad_series(x, e, room, sign);
    for (int n = 0; n < static_cast<int>(shifted.size()); ++n)
      out.add(ij.first + n * pv, ij.second + n * pw, shifted[n]);
  }
  return out;
}

struct PentagonReport {
  bool pass = false;
  int order = 0;
  int checked = 0;
  std::optional<std::pair<int, int>> first_fail;
};

namespace detail {
inline PentagonReport compare_biseries(const BiSeries& lhs, const BiSeries& rhs,
                                       int order) {
  PentagonReport rep;
  rep.order = order;
  rep.checked = (order + 1) * (order + 2) / 2;
  rep.pass = true;
  for (int d = 0; d <= order && rep.pass; ++d)
    for (int i = 0; i <= d && rep.pass; ++i)
      if (lhs.coeff(i, d - i) != rhs.coeff(i, d - i)) {
        rep.pass = false;
        rep.first_fail = std::make_pair(i, d - i);
      }
  return rep;
}
}  // namespace detail

// Pentagon identity for det(x|y) = 1:
//   Q_x(v) Q_y(w) = Q_y(w) Q_{x+y}(vw) Q_x(v).
// `swapped` exchanges the outer factors of the right-hand side, which is the
// standard counterexample shape (it fails at (1,1)).
inline PentagonReport pentagon_check(Vec2 x, Vec2 y, int order, bool swapped = false) {
  if (det2(x, y) != 1) throw std::invalid_argument("pentagon requires det(x|y) = 1");
  const BiSeries lhs =
      baxter_factor(x, 1, 0, 1, order) * baxter_factor(y, 0, 1, 1, order);
  const Vec2 xy = vadd(x, y);
  const BiSeries rhs =
      swapped ? baxter_factor(x, 1, 0, 1, order) * baxter_factor(xy, 1, 1, 1, order) *
                    baxter_factor(y, 0, 1, 1, order)
              : baxter_factor(y, 0, 1, 1, order) * baxter_factor(xy, 1, 1, 1, order) *
                    baxter_factor(x, 1, 0, 1, order);
  return detail::compare_biseries(lhs, rhs, order);
}

// Same identity read through the adjoint action,
//   Ad_{Q_x(v)} Ad_{Q_y(w)} = Ad_{Q_y(w)} Ad_{Q_{x+y}(wv)} Ad_{Q_x(v)},
// checked on the four generators P_{+-x}, P_{+-y}.
inline PentagonReport adjoint_pentagon_check(Vec2 x, Vec2 y, int order) {
  if (det2(x, y) != 1) throw std::invalid_argument("pentagon requires det(x|y) = 1");
  const Vec2 xy = vadd(x, y);
  PentagonReport rep;
  rep.order = order;
  rep.pass = true;
  for (Vec2 g : {x, Vec2{-x[0], -x[1]}, y, Vec2{-y[0], -y[1]}}) {
    BiSeries seed(order);
    seed.add(0, 0, SkeinElement::p(g));
    const BiSeries lhs = ad_biseries(x, 1, 0, ad_biseries(y, 0, 1, seed));
    const BiSeries rhs =
        ad_biseries(y, 0, 1, ad_biseries(xy, 1, 1, ad_biseries(x, 1, 0, seed)));
    const PentagonReport one = detail::compare_biseries(lhs, rhs, order);
    rep.checked += one.checked;
    if (!one.pass && rep.pass) {
      rep.pass = false;
      rep.first_fail = one.first_fail;
    }
  }
  return rep;
}

// Lattice of the linking skein: Z^2 with the determinant form.
inline QLattice linking_lattice() {
  return QLattice({{0, 1}, {-1, 0}}, {"x", "y"});
}

// Rank-1 reduction: P_{v1}...P_{vk} -> X_{v1}...X_{vk} with X_u X_v =
// s^{det(u|v)} X_{u+v}, and a -> s in every coefficient.
inline QTElement reduce_to_linking(const SkeinElement& e) {
  const QLattice lat = linking_lattice();
  const std::map<Var, LaurentPoly> bind{{Var::a, LaurentPoly::variable(Var::s, 1)}};
  QTElement out(lat);
  for (const auto& [w, c] : e.terms()) {
    QTElement m = QTElement::one(lat);
    for (Vec2 v : w) m = m * QTElement::X(lat, LVec{v[0], v[1]});
    out += c.substitute(bind) * m;
  }
  return out;
}

}  // namespace skein
