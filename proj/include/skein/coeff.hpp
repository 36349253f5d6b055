#pragma once
// Exact coefficient arithmetic for skein computations.
//
// LaurentPoly: Laurent polynomials over Q in the four central variables
//   s  (s^2 = q), a, aL, g.
// ScalarQ: fractions num/den where den is restricted to
//   (monomial) * (positive integer) * prod_{k>=1} {k}^{e_k},  {k} = s^k - s^{-k}.
// Every denominator needed downstream ({k}, 1 - q^k = -s^k{k}, hook products,
// dilogarithm series) lies in this class, so no multivariate gcd is required.
// Units (monomials, integers) are absorbed into num on construction; the stored
// denominator is a brace multiset only.

#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skein {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class Var : int { s = 0, a = 1, aL = 2, g = 3 };
inline const char* var_name(Var v) {
  static const char* names[4] = {"s", "a", "aL", "g"};
  return names[static_cast<int>(v)];
}

struct SingularSubstitution : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BraceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Brace indices {k} are capped; override with env SKEIN_MAX_BRACE.
inline int max_brace_index() {
  static int cap = [] {
    if (const char* e = std::getenv("SKEIN_MAX_BRACE")) {
      int v = std::atoi(e);
      if (v > 0) return v;
    }
    return 128;  // covers the acceptance scales ({75} at box 5, framing 3)
  }();
  return cap;
}

// Exponent vector over (s, a, aL, g); ordered lexicographically.
struct Exp4 {
  std::array<int, 4> e{0, 0, 0, 0};
  int& operator[](Var v) { return e[static_cast<int>(v)]; }
  int operator[](Var v) const { return e[static_cast<int>(v)]; }
  auto operator<=>(const Exp4&) const = default;
  Exp4 operator+(const Exp4& o) const {
    Exp4 r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  Exp4 operator-() const {
    Exp4 r;
    for (int i = 0; i < 4; ++i) r.e[i] = -e[i];
    return r;
  }
  bool is_zero() const { return e == std::array<int, 4>{0, 0, 0, 0}; }
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exp4, Rational>;

  LaurentPoly() = default;
  LaurentPoly(int c) { if (c != 0) terms_[Exp4{}] = c; }
  LaurentPoly(const Rational& c) { if (c != 0) terms_[Exp4{}] = c; }

  static LaurentPoly monomial(const Exp4& x, const Rational& c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_[x] = c;
    return p;
  }
  static LaurentPoly variable(Var v, int k = 1) {
    Exp4 x;
    x[v] = k;
    return monomial(x);
  }

  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Exp4& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exp4& x, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(x, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [x, c] : o.terms_) add_term(x, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [x, c] : o.terms_) add_term(x, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [x, c] : terms_) r.terms_[x] = -c;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r;
    for (const auto& [xe, xc] : x.terms_)
      for (const auto& [ye, yc] : y.terms_) r.add_term(xe + ye, xc * yc);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [x, cc] : terms_) cc *= c;
    return *this;
  }
  friend LaurentPoly operator*(LaurentPoly x, const Rational& c) { return x *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly x) { return x *= c; }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  // Exact division by a divisor supported on s only (all braces are).
  // Returns nullopt when the division is not exact.
  std::optional<LaurentPoly> divide_exact_s(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero");
    for (const auto& [x, c] : d.terms_)
      if (x[Var::a] != 0 || x[Var::aL] != 0 || x[Var::g] != 0)
        throw std::invalid_argument("divisor must involve s only");
    if (is_zero()) return LaurentPoly();
    // group terms by the (a, aL, g) part; each group is univariate in s
    std::map<std::array<int, 3>, std::map<int, Rational>> groups;
    for (const auto& [x, c] : terms_)
      groups[{x[Var::a], x[Var::aL], x[Var::g]}][x[Var::s]] = c;
    std::map<int, Rational> div;
    for (const auto& [x, c] : d.terms_) div[x[Var::s]] = c;
    const int dlead = div.rbegin()->first;
    const int dlow = div.begin()->first;
    const Rational dleadc = div.rbegin()->second;
    LaurentPoly out;
    for (auto& [rest, grp] : groups) {
      // exact univariate Laurent division; quotient degrees are bounded below
      std::map<int, Rational> quo;
      while (!grp.empty()) {
        const int m = grp.rbegin()->first;
        const int low = grp.begin()->first;
        if (m - dlead < low - dlow) return std::nullopt;  // cannot terminate
        const Rational qc = grp.rbegin()->second / dleadc;
        const int qe = m - dlead;
        quo[qe] += qc;
        for (const auto& [de, dc] : div) {
          auto it = grp.emplace(de + qe, 0).first;
          it->second -= qc * dc;
          if (it->second == 0) grp.erase(it);
        }
      }
      for (const auto& [se, c] : quo) {
        if (c == 0) continue;
        Exp4 x;
        x[Var::s] = se;
        x[Var::a] = rest[0];
        x[Var::aL] = rest[1];
        x[Var::g] = rest[2];
        out.terms_[x] = c;
      }
    }
    return out;
  }

  // Substitute bound variables by Laurent polynomials. Negative powers of a
  // bound variable require the binding to be a (nonzero) monomial.
  LaurentPoly substitute(const std::map<Var, LaurentPoly>& bindings) const {
    LaurentPoly out;
    for (const auto& [x, c] : terms_) {
      LaurentPoly t = monomial(Exp4{}, c);
      Exp4 unbound;
      for (int i = 0; i < 4; ++i) {
        const Var v = static_cast<Var>(i);
        auto it = bindings.find(v);
        if (it == bindings.end()) {
          unbound[v] = x[v];
          continue;
        }
        int k = x[v];
        if (k == 0) continue;
        const LaurentPoly& b = it->second;
        if (k < 0) {
          if (!b.is_monomial())
            throw NotInvertible("negative power of bound variable needs a monomial binding");
          const auto& [be, bc] = *b.terms_.begin();
          Exp4 inv = -be;
          t *= monomial(inv, 1 / bc);
          k = -k - 1;
          for (int j = 0; j < k; ++j) t *= monomial(inv, 1 / bc);
          continue;
        }
        for (int j = 0; j < k; ++j) t *= b;
      }
      t *= monomial(unbound);
      out += t;
    }
    return out;
  }

  // Deterministic rendering, terms in descending lexicographic exponent order.
  std::string to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rational c = it->second;
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      if (c < 0) c = -c;
      first = false;
      std::string factors;
      for (int i = 0; i < 4; ++i) {
        const int k = it->first.e[i];
        if (k == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += var_name(static_cast<Var>(i));
        if (k != 1) factors += "^" + std::to_string(k);
      }
      if (factors.empty()) os << c.str();
      else if (c == 1) os << factors;
      else os << c.str() << "*" << factors;
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

// {k} = s^k - s^{-k} as a polynomial; {-k} = -{k}, {0} = 0.
inline LaurentPoly brace_poly(int k) {
  if (k == 0) return LaurentPoly();
  const Rational sign = k > 0 ? 1 : -1;
  if (k < 0) k = -k;
  if (k > max_brace_index()) throw BraceLimit("{k} index exceeds SKEIN_MAX_BRACE");
  Exp4 hi, lo;
  hi[Var::s] = k;
  lo[Var::s] = -k;
  LaurentPoly p = LaurentPoly::monomial(hi, sign);
  p += LaurentPoly::monomial(lo, -sign);
  return p;
}

class ScalarQ {
 public:
  using BraceMap = std::map<int, int>;  // k -> multiplicity, k >= 1

  ScalarQ() = default;
  ScalarQ(int c) : num_(c) {}
  ScalarQ(const Rational& c) : num_(c) {}
  ScalarQ(LaurentPoly p) : num_(std::move(p)) {}
  ScalarQ(LaurentPoly num, BraceMap den) : num_(std::move(num)), den_(std::move(den)) {
    for (auto& [k, e] : den_)
      if (k < 1 || e < 0) throw std::invalid_argument("bad denominator brace");
    reduce();
  }

  static ScalarQ variable(Var v, int k = 1) { return ScalarQ(LaurentPoly::variable(v, k)); }
  // 1 / prod {k}  for convenience
  static ScalarQ inv_brace(int k) {
    if (k == 0) throw std::invalid_argument("1/{0}");
    ScalarQ r(k > 0 ? 1 : -1);
    r.den_[std::abs(k)] = 1;
    return r;
  }

  const LaurentPoly& num() const& { return num_; }
  LaurentPoly num() && { return std::move(num_); }
  const BraceMap& den_braces() const& { return den_; }
  BraceMap den_braces() && { return std::move(den_); }
  bool is_zero() const { return num_.is_zero(); }

  LaurentPoly den_poly() const {
    LaurentPoly d(1);
    for (const auto& [k, e] : den_)
      for (int i = 0; i < e; ++i) d *= brace_poly(k);
    return d;
  }

  friend ScalarQ operator+(const ScalarQ& x, const ScalarQ& y) {
    ScalarQ r;
    r.den_ = x.den_;
    for (const auto& [k, e] : y.den_) {
      auto& m = r.den_[k];
      m = std::max(m, e);
    }
    r.num_ = x.num_ * x.cofactor(r.den_) + y.num_ * y.cofactor(r.den_);
    r.reduce();
    return r;
  }
  friend ScalarQ operator-(const ScalarQ& x, const ScalarQ& y) { return x + (-y); }
  ScalarQ operator-() const {
    ScalarQ r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend ScalarQ operator*(const ScalarQ& x, const ScalarQ& y) {
    ScalarQ r;
    r.num_ = x.num_ * y.num_;
    r.den_ = x.den_;
    for (const auto& [k, e] : y.den_) r.den_[k] += e;
    r.reduce();
    return r;
  }
  ScalarQ& operator+=(const ScalarQ& o) { return *this = *this + o; }
  ScalarQ& operator-=(const ScalarQ& o) { return *this = *this - o; }
  ScalarQ& operator*=(const ScalarQ& o) { return *this = *this * o; }

  // Inverse exists when num factors as monomial * rational * (brace quotient).
  ScalarQ invert() const {
    if (num_.is_zero()) throw NotInvertible("inverse of zero");
    auto f = factor_unit(num_);
    if (!f) throw NotInvertible("numerator is not a unit times braces");
    auto [coef, mono, pos, neg] = *f;
    ScalarQ r;
    LaurentPoly n = LaurentPoly::monomial(-mono, 1 / coef) * den_poly();
    for (const auto& [k, e] : neg)
      for (int i = 0; i < e; ++i) n *= brace_poly(k);
    r.num_ = std::move(n);
    r.den_ = pos;
    r.reduce();
    return r;
  }
  friend ScalarQ operator/(const ScalarQ& x, const ScalarQ& y) { return x * y.invert(); }

  bool operator==(const ScalarQ& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_poly() == o.num_ * den_poly();
  }

  ScalarQ substitute(const std::map<Var, LaurentPoly>& bindings) const {
    ScalarQ r;
    r.num_ = num_.substitute(bindings);
    if (bindings.count(Var::s) == 0) {
      r.den_ = den_;
      r.reduce();
      return r;
    }
    // braces involve s; substitute the expanded denominator and re-factor
    LaurentPoly d = den_poly().substitute(bindings);
    if (d.is_zero()) throw SingularSubstitution("denominator vanishes under binding");
    auto f = factor_class(d);
    if (!f) throw SingularSubstitution("denominator leaves the representable class");
    auto [coef, mono, braces] = *f;
    r.num_ = r.num_ * LaurentPoly::monomial(-mono, 1 / coef);
    r.den_ = braces;
    r.reduce();
    return r;
  }

  // Canonical text: `num / ({k1}^e1 * ...)`; plain `num` when den is trivial.
  std::string to_text() const {
    std::string n = num_.to_text();
    if (den_.empty()) return n;
    std::string d;
    for (const auto& [k, e] : den_) {
      if (!d.empty()) d += " * ";
      d += "{" + std::to_string(k) + "}";
      if (e != 1) d += "^" + std::to_string(e);
    }
    if (num_.size() > 1) n = "(" + n + ")";
    return n + " / (" + d + ")";
  }

  // JSON via any nlohmann-compatible type:
  // {num:[{exp:[i,j,k,l],coef:"p/q"},...], den:{mono:[0,0,0,0],braces:[[k,e],..],int:"1"}}
  template <class J>
  J to_json() const {
    J num = J::array();
    for (const auto& [x, c] : num_.terms()) {
      J t;
      t["exp"] = std::vector<int>(x.e.begin(), x.e.end());
      t["coef"] = rational_str(c);
      num.push_back(t);
    }
    J braces = J::array();
    for (const auto& [k, e] : den_) braces.push_back(std::vector<int>{k, e});
    J r;
    r["num"] = num;
    r["den"]["mono"] = std::vector<int>{0, 0, 0, 0};
    r["den"]["braces"] = braces;
    r["den"]["int"] = "1";
    return r;
  }

  template <class J>
  static ScalarQ from_json(const J& j) {
    LaurentPoly num;
    for (const auto& t : j.at("num")) {
      std::vector<int> e = t.at("exp").template get<std::vector<int>>();
      if (e.size() != 4) throw std::invalid_argument("exp must have 4 entries");
      Exp4 x;
      std::copy(e.begin(), e.end(), x.e.begin());
      num.add_term(x, parse_rational(t.at("coef").template get<std::string>()));
    }
    BraceMap den;
    LaurentPoly unit(1);
    if (j.contains("den")) {
      const auto& d = j.at("den");
      if (d.contains("braces"))
        for (const auto& b : d.at("braces")) {
          std::vector<int> ke = b.template get<std::vector<int>>();
          if (ke.size() != 2 || ke[0] < 1 || ke[1] < 0)
            throw std::invalid_argument("bad brace entry");
          den[ke[0]] += ke[1];
        }
      Rational c = 1;
      if (d.contains("int")) c = parse_rational(d.at("int").template get<std::string>());
      if (c <= 0) throw std::invalid_argument("den int must be positive");
      Exp4 mono;
      if (d.contains("mono")) {
        std::vector<int> e = d.at("mono").template get<std::vector<int>>();
        if (e.size() != 4) throw std::invalid_argument("mono must have 4 entries");
        std::copy(e.begin(), e.end(), mono.e.begin());
      }
      unit = LaurentPoly::monomial(-mono, 1 / c);
    }
    return ScalarQ(num * unit, den);
  }

  static std::string rational_str(const Rational& c) {
    return numerator(c).str() + "/" + denominator(c).str();
  }
  static Rational parse_rational(const std::string& str) {
    auto slash = str.find('/');
    if (slash == std::string::npos) return Rational(BigInt(str));
    return Rational(BigInt(str.substr(0, slash)), BigInt(str.substr(slash + 1)));
  }

  // Factor p as coef * monomial * prod {k}^{e} if possible.
  static std::optional<std::tuple<Rational, Exp4, BraceMap>> factor_class(
      const LaurentPoly& p) {
    if (p.is_zero()) return std::nullopt;
    auto [residual, braces] = strip_braces(p);
    if (!residual.is_monomial()) return std::nullopt;
    const auto& [x, c] = *residual.terms().begin();
    return std::tuple{c, x, braces};
  }

  // Factor p as coef * monomial * prod {k}^{e} * prod {j}^{-f} (a ring unit).
  // Negative powers are found by a bounded search: multiply the stuck residual
  // by candidate braces and retry (covers shapes like {2d}/{d} = s^d + s^{-d}).
  static std::optional<std::tuple<Rational, Exp4, BraceMap, BraceMap>> factor_unit(
      const LaurentPoly& p, int depth = 3) {
    if (p.is_zero()) return std::nullopt;
    auto [residual, pos] = strip_braces(p);
    if (residual.is_monomial()) {
      const auto& [x, c] = *residual.terms().begin();
      return std::tuple{c, x, pos, BraceMap{}};
    }
    if (depth == 0) return std::nullopt;
    // a residual {2d}/{d}-type factor has s-span 2d, so span bounds the search
    int smin = residual.terms().begin()->first[Var::s], smax = smin;
    for (const auto& [x, c] : residual.terms()) {
      smin = std::min(smin, x[Var::s]);
      smax = std::max(smax, x[Var::s]);
    }
    for (int j = 1; j <= std::min(max_brace_index(), smax - smin + 1); ++j) {
      if (auto sub = factor_unit(residual * brace_poly(j), depth - 1)) {
        auto [c, x, spos, sneg] = *sub;
        ++sneg[j];
        for (const auto& [k, e] : pos) spos[k] += e;
        for (auto it = spos.begin(); it != spos.end();) {
          auto nit = sneg.find(it->first);
          if (nit != sneg.end()) {
            const int m = std::min(it->second, nit->second);
            it->second -= m;
            nit->second -= m;
            if (nit->second == 0) sneg.erase(nit);
          }
          it = it->second == 0 ? spos.erase(it) : std::next(it);
        }
        return std::tuple{c, x, spos, sneg};
      }
    }
    return std::nullopt;
  }

 private:
  LaurentPoly num_;
  BraceMap den_;

  // Greedily divide out braces, largest candidate first; returns what is left.
  static std::pair<LaurentPoly, BraceMap> strip_braces(const LaurentPoly& p) {
    LaurentPoly cur = p;
    BraceMap braces;
    const int cap = max_brace_index();
    while (!cur.is_monomial()) {
      // the s-span of {k} * (anything) is at least 2k, bounding candidates
      int smin = cur.terms().begin()->first[Var::s], smax = smin;
      for (const auto& [x, c] : cur.terms()) {
        smin = std::min(smin, x[Var::s]);
        smax = std::max(smax, x[Var::s]);
      }
      bool found = false;
      for (int k = std::min((smax - smin) / 2, cap); k >= 1; --k) {
        if (auto q = cur.divide_exact_s(brace_poly(k))) {
          cur = std::move(*q);
          ++braces[k];
          found = true;
          break;
        }
      }
      if (!found) break;
    }
    return {cur, braces};
  }

  // prod {k}^{target_k - own_k}
  LaurentPoly cofactor(const BraceMap& target) const {
    LaurentPoly c(1);
    for (const auto& [k, e] : target) {
      auto it = den_.find(k);
      const int own = it == den_.end() ? 0 : it->second;
      for (int i = 0; i < e - own; ++i) c *= brace_poly(k);
    }
    return c;
  }

  void reduce() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = den_.rbegin(); it != den_.rend(); ++it) {
        while (it->second > 0) {
          auto q = num_.divide_exact_s(brace_poly(it->first));
          if (!q) break;
          num_ = std::move(*q);
          --it->second;
          changed = true;
        }
      }
      for (auto it = den_.begin(); it != den_.end();)
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
  }
};

// quantum integer [n] = s^{n-1} + s^{n-3} + ... + s^{1-n}; [0] = 0
inline ScalarQ qint(int n) {
  if (n < 0) throw std::invalid_argument("qint needs n >= 0");
  LaurentPoly p;
  for (int j = 0; j < n; ++j) p += LaurentPoly::variable(Var::s, n - 1 - 2 * j);
  return ScalarQ(p);
}

// brace {k} = s^k - s^{-k}, any sign of k
inline ScalarQ qbrace(int k) { return ScalarQ(brace_poly(k)); }

// balanced quantum factorial [n]! = prod_{m=1..n} [m]
inline ScalarQ qfact(int n) {
  if (n < 0) throw std::invalid_argument("qfact needs n >= 0");
  ScalarQ r(1);
  for (int m = 1; m <= n; ++m) r *= qint(m);
  return r;
}

// Balanced q-binomial: coefficient of x^k in f^(d)(x) = prod_{j=0}^{d-1}(1 + x s^{d-1-2j})
// for d >= 0, and in 1/f^(-d)(x) for d < 0 (so (-1)^k qbinom(-(l+1),k) = qbinom(k+l,l)).
inline ScalarQ qbinom(int d, int k) {
  if (k < 0) throw std::invalid_argument("qbinom needs k >= 0");
  if (k == 0) return ScalarQ(1);
  if (d < 0) {
    ScalarQ r = qbinom(k - d - 1, -d - 1);
    return k % 2 == 0 ? r : -r;
  }
  if (k > d) return ScalarQ(0);
  ScalarQ r(1);
  for (int j = 1; j <= k; ++j) r *= qbrace(d - k + j);
  for (int j = 1; j <= k; ++j) r = r / qbrace(j);
  return r;
}

}  // namespace skein
