#pragma once
// Partition combinatorics and an independent symmetric-function oracle.
//
// The oracle computes p_n * s_lambda in the Schur basis through Jacobi-Trudi
// determinants carried out in the complete homogeneous basis of the universal
// ring (faithful for every variable count >= the degree, hence "enough
// variables" by construction). It never touches the torus/annulus actions,
// so it can cross-check them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "skein/coeff.hpp"

namespace skein {

// weakly decreasing positive parts, canonical (no trailing zeros)
using Partition = std::vector<int>;

inline Partition normalized(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0 || (i + 1 < p.size() && p[i] < p[i + 1]))
      throw std::invalid_argument("not a partition");
  }
  return p;
}

inline int part_weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

inline int part_at(const Partition& p, int i) {  // 1-based, 0 past the end
  return (i >= 1 && i <= static_cast<int>(p.size())) ? p[i - 1] : 0;
}

inline Partition conjugate(const Partition& p) {
  Partition c;
  for (int j = 1; j <= part_at(p, 1); ++j) {
    int rows = 0;
    while (rows < static_cast<int>(p.size()) && p[rows] >= j) ++rows;
    c.push_back(rows);
  }
  return c;
}

// deterministic total order: weight ascending, then lexicographically
// descending, so (2) sorts before (1,1)
struct PartOrder {
  bool operator()(const Partition& x, const Partition& y) const {
    const int wx = part_weight(x), wy = part_weight(y);
    if (wx != wy) return wx < wy;
    return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
  }
};

inline std::vector<Partition> all_partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {Partition{}};
  std::vector<Partition> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (auto& rest : all_partitions(n - first, first)) {
      Partition p{first};
      p.insert(p.end(), rest.begin(), rest.end());
      out.push_back(std::move(p));
    }
  return out;
}

struct BorderStripAddition {
  Partition result;
  int height;                 // rows of the strip + 1
  std::vector<int> contents;  // c(x) = j - i over strip boxes, ascending
};

// All ways of adding a connected, 2x2-free skew strip of n boxes.
// Rows r1..r2 of the strip force mu_i = lambda_{i-1} + 1 for i in (r1, r2].
inline std::vector<BorderStripAddition> strip_additions(const Partition& lam, int n) {
  if (n < 1) throw std::invalid_argument("strip size must be >= 1");
  const int len = static_cast<int>(lam.size());
  std::vector<BorderStripAddition> out;
  for (int r1 = 1; r1 <= len + 1; ++r1) {
    for (int r2 = r1;; ++r2) {
      int forced = 0;
      bool ok = true;
      for (int i = r1 + 1; i <= r2; ++i) {
        const int mu_i = part_at(lam, i - 1) + 1;
        if (mu_i <= part_at(lam, i)) { ok = false; break; }  // cannot happen, defensive
        forced += mu_i - part_at(lam, i);
      }
      if (!ok || forced >= n) break;
      const int c1 = n - forced;
      const int mu_r1 = part_at(lam, r1) + c1;
      // first-row overflow: a taller strip leaves fewer boxes for row r1
      if (r1 > 1 && mu_r1 > part_at(lam, r1 - 1)) continue;
      Partition mu(lam);
      mu.resize(std::max(len, r2), 0);
      mu[r1 - 1] = mu_r1;
      for (int i = r1 + 1; i <= r2; ++i) mu[i - 1] = part_at(lam, i - 1) + 1;
      std::vector<int> contents;
      for (int i = r1; i <= r2; ++i)
        for (int j = part_at(lam, i) + 1; j <= mu[i - 1]; ++j)
          contents.push_back(j - i);
      std::sort(contents.begin(), contents.end());
      out.push_back({normalized(std::move(mu)), r2 - r1 + 2, std::move(contents)});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return PartOrder{}(x.result, y.result);
  });
  return out;
}

// hook lengths, contents, and kappa = sum_i lambda_i (lambda_i - 2i + 1) = 2 sum c(x)
inline std::tuple<std::vector<int>, std::vector<int>, long long>
hooks_contents_kappa(const Partition& lam) {
  const Partition conj = conjugate(lam);
  std::vector<int> hooks, contents;
  long long kappa = 0;
  for (int i = 1; i <= static_cast<int>(lam.size()); ++i) {
    kappa += static_cast<long long>(lam[i - 1]) * (lam[i - 1] - 2 * i + 1);
    for (int j = 1; j <= lam[i - 1]; ++j) {
      hooks.push_back(lam[i - 1] - i + conj[j - 1] - j + 1);
      contents.push_back(j - i);
    }
  }
  std::sort(hooks.begin(), hooks.end());
  std::sort(contents.begin(), contents.end());
  return {hooks, contents, kappa};
}

inline long long kappa_of(const Partition& lam) {
  return std::get<2>(hooks_contents_kappa(lam));
}

// Finite formal sum of basis vectors W_lambda with ScalarQ coefficients.
class ModuleVector {
 public:
  using Map = std::map<Partition, ScalarQ, PartOrder>;

  ModuleVector() = default;
  static ModuleVector basis(const Partition& lam, ScalarQ c = ScalarQ(1)) {
    ModuleVector v;
    v.add(lam, std::move(c));
    return v;
  }
  static ModuleVector vacuum() { return basis(Partition{}); }

  const Map& coeffs() const& { return coeffs_; }
  Map coeffs() && { return std::move(coeffs_); }  // keeps temporaries iterable
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }

  ScalarQ coeff(const Partition& lam) const {
    auto it = coeffs_.find(lam);
    return it == coeffs_.end() ? ScalarQ(0) : it->second;
  }

  void add(const Partition& lam, const ScalarQ& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.emplace(lam, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  ModuleVector& operator+=(const ModuleVector& o) {
    for (const auto& [lam, c] : o.coeffs_) add(lam, c);
    return *this;
  }
  ModuleVector& operator-=(const ModuleVector& o) {
    for (const auto& [lam, c] : o.coeffs_) add(lam, -c);
    return *this;
  }
  friend ModuleVector operator+(ModuleVector x, const ModuleVector& y) { return x += y; }
  friend ModuleVector operator-(ModuleVector x, const ModuleVector& y) { return x -= y; }
  friend ModuleVector operator*(const ScalarQ& c, const ModuleVector& v) {
    ModuleVector r;
    for (const auto& [lam, cc] : v.coeffs_) r.add(lam, c * cc);
    return r;
  }
  bool operator==(const ModuleVector& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (auto it = coeffs_.begin(), jt = o.coeffs_.begin(); it != coeffs_.end();
         ++it, ++jt) {
      if (it->first != jt->first || !(it->second == jt->second)) return false;
    }
    return true;
  }

  ModuleVector truncated(int max_boxes) const {
    ModuleVector r;
    for (const auto& [lam, c] : coeffs_)
      if (part_weight(lam) <= max_boxes) r.add(lam, c);
    return r;
  }

  ModuleVector map_coeffs(auto&& f) const {
    ModuleVector r;
    for (const auto& [lam, c] : coeffs_) r.add(lam, f(lam, c));
    return r;
  }

  // JSON: [{partition:[..], coeff:<ScalarQ>}, ...] sorted by partition order
  template <class J>
  J to_json() const {
    J arr = J::array();
    for (const auto& [lam, c] : coeffs_) {
      J e;
      e["partition"] = lam;
      e["coeff"] = c.template to_json<J>();
      arr.push_back(e);
    }
    return arr;
  }
  template <class J>
  static ModuleVector from_json(const J& j) {
    ModuleVector v;
    for (const auto& e : j)
      v.add(normalized(e.at("partition").template get<std::vector<int>>()),
            ScalarQ::from_json(e.at("coeff")));
    return v;
  }

 private:
  Map coeffs_;
};

namespace detail {

// Symmetric functions in the h-basis of the universal ring: keys are the
// multiset of h-indices as a partition.
using HPoly = std::map<Partition, Rational>;

inline void hp_add(HPoly& p, const Partition& k, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = p.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

inline HPoly hp_mul(const HPoly& x, const HPoly& y) {
  HPoly r;
  for (const auto& [xk, xc] : x)
    for (const auto& [yk, yc] : y) {
      Partition k = xk;
      k.insert(k.end(), yk.begin(), yk.end());
      std::sort(k.begin(), k.end(), std::greater<>());
      hp_add(r, k, xc * yc);
    }
  return r;
}

inline HPoly h_of(int k) {  // h_k; h_0 = 1, h_{<0} = 0
  if (k < 0) return {};
  if (k == 0) return {{Partition{}, 1}};
  return {{Partition{k}, 1}};
}

// det over the commutative h-ring by cofactor expansion with column-set memo
inline HPoly det_h(const std::vector<std::vector<HPoly>>& m) {
  const int n = static_cast<int>(m.size());
  std::map<std::uint32_t, HPoly> memo;
  auto rec = [&](auto&& self, std::uint32_t cols) -> HPoly {
    if (cols == 0) return {{Partition{}, 1}};
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    const int row = n - __builtin_popcount(cols);
    HPoly det;
    int sign = 1;
    for (int j = 0; j < n; ++j) {
      if (!(cols >> j & 1)) continue;
      if (!m[row][j].empty()) {
        HPoly sub = self(self, cols & ~(1u << j));
        for (auto& [k, c] : hp_mul(m[row][j], sub)) hp_add(det, k, sign * c);
      }
      sign = -sign;
    }
    return memo.emplace(cols, std::move(det)).first->second;
  };
  return rec(rec, n ? (n == 32 ? ~0u : (1u << n) - 1) : 0);
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}); memoized per thread
inline const HPoly& schur_in_h(const Partition& lam) {
  thread_local std::map<Partition, HPoly> cache;
  auto it = cache.find(lam);
  if (it != cache.end()) return it->second;
  const int n = static_cast<int>(lam.size());
  HPoly det;
  if (n == 0) {
    det = {{Partition{}, 1}};
  } else {
    std::vector<std::vector<HPoly>> m(n, std::vector<HPoly>(n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = h_of(lam[i - 1] - i + j);
    det = det_h(m);
  }
  return cache.emplace(lam, std::move(det)).first->second;
}

// Newton: p_n = n h_n - sum_{i=1}^{n-1} h_i p_{n-i}; memoized per thread
inline const HPoly& power_in_h(int n) {
  thread_local std::map<int, HPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  HPoly p = h_of(n);
  for (auto& [k, c] : p) c *= n;
  for (int i = 1; i < n; ++i) {
    for (const auto& [k, c] : hp_mul(h_of(i), power_in_h(n - i))) hp_add(p, k, -c);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

// generic JT determinant with ScalarQ entries h(k)
inline ScalarQ det_scalar(const std::vector<std::vector<ScalarQ>>& m) {
  const int n = static_cast<int>(m.size());
  std::map<std::uint32_t, ScalarQ> memo;
  auto rec = [&](auto&& self, std::uint32_t cols) -> ScalarQ {
    if (cols == 0) return ScalarQ(1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    const int row = n - __builtin_popcount(cols);
    ScalarQ det(0);
    int sign = 1;
    for (int j = 0; j < n; ++j) {
      if (!(cols >> j & 1)) continue;
      if (!m[row][j].is_zero()) {
        ScalarQ t = m[row][j] * self(self, cols & ~(1u << j));
        det += sign > 0 ? t : -t;
      }
      sign = -sign;
    }
    return memo.emplace(cols, std::move(det)).first->second;
  };
  return rec(rec, n ? (1u << n) - 1 : 0);
}

template <class HFun>
ScalarQ schur_specialized(const Partition& lam, HFun&& h) {
  const int n = static_cast<int>(lam.size());
  if (n == 0) return ScalarQ(1);
  std::vector<std::vector<ScalarQ>> m(n, std::vector<ScalarQ>(n, ScalarQ(0)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int k = lam[i - 1] - i + j;
      if (k == 0) m[i - 1][j - 1] = ScalarQ(1);
      else if (k > 0) m[i - 1][j - 1] = h(k);
    }
  return det_scalar(m);
}

}  // namespace detail

// p_n * s_lambda in the Schur basis, via Jacobi-Trudi only (annulus-free oracle).
inline ModuleVector power_times_schur(int n, const Partition& lam) {
  if (n < 1) throw std::invalid_argument("power index must be >= 1");
  using namespace detail;
  const int N = part_weight(lam) + n;
  HPoly target = hp_mul(power_in_h(n), schur_in_h(lam));
  // expand in Schur h-polynomials of degree N by exact Gaussian elimination
  std::vector<Partition> mus = all_partitions(N);
  std::sort(mus.begin(), mus.end(), PartOrder{});
  std::vector<HPoly> cols;
  cols.reserve(mus.size());
  for (const auto& mu : mus) cols.push_back(schur_in_h(mu));
  // h-monomial index
  std::map<Partition, int> rows;
  for (const auto& col : cols)
    for (const auto& [k, c] : col) rows.emplace(k, static_cast<int>(rows.size()));
  for (const auto& [k, c] : target)
    if (!rows.count(k)) throw std::logic_error("oracle basis mismatch");
  const int R = static_cast<int>(rows.size()), C = static_cast<int>(cols.size());
  std::vector<std::vector<Rational>> A(R, std::vector<Rational>(C + 1, 0));
  for (int j = 0; j < C; ++j)
    for (const auto& [k, c] : cols[j]) A[rows[k]][j] = c;
  for (const auto& [k, c] : target) A[rows[k]][C] = c;
  // Gauss
  std::vector<int> pivot_of_col(C, -1);
  int rank = 0;
  for (int j = 0; j < C && rank < R; ++j) {
    int piv = -1;
    for (int i = rank; i < R; ++i)
      if (A[i][j] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(A[piv], A[rank]);
    const Rational inv = 1 / A[rank][j];
    for (int jj = j; jj <= C; ++jj) A[rank][jj] *= inv;
    for (int i = 0; i < R; ++i) {
      if (i == rank || A[i][j] == 0) continue;
      const Rational f = A[i][j];
      for (int jj = j; jj <= C; ++jj) A[i][jj] -= f * A[rank][jj];
    }
    pivot_of_col[j] = rank++;
  }
  for (int i = rank; i < R; ++i)
    if (A[i][C] != 0) throw std::logic_error("oracle decomposition failed");
  ModuleVector out;
  for (int j = 0; j < C; ++j)
    if (pivot_of_col[j] >= 0 && A[pivot_of_col[j]][C] != 0)
      out.add(mus[j], ScalarQ(Rational(A[pivot_of_col[j]][C])));
  return out;
}

// s_lambda(q^rho), q^rho = (q^{-1/2}, q^{-3/2}, ...):
// h_k(q^rho) = s^{-k}/prod_{j<=k}(1 - q^{-j}) = s^{k(k-1)/2}/({1}{2}...{k})
inline ScalarQ principal_specialization(const Partition& lam) {
  return detail::schur_specialized(lam, [](int k) {
    ScalarQ h = ScalarQ::variable(Var::s, k * (k - 1) / 2);
    for (int j = 1; j <= k; ++j) h *= ScalarQ::inv_brace(j);
    return h;
  });
}

// s_lambda(q^{-rho}) = (-1)^{|lambda|} q^{-kappa/2} s_lambda(q^rho), both sides
// computed independently; h_k(q^{-rho}) = s^k/prod(1-q^j) = (-1)^k s^{-k(k-1)/2}/prod{j}
inline bool inverted_specialization_check(const Partition& lam) {
  ScalarQ lhs = detail::schur_specialized(lam, [](int k) {
    ScalarQ h = ScalarQ::variable(Var::s, -k * (k - 1) / 2);
    for (int j = 1; j <= k; ++j) h *= ScalarQ::inv_brace(j);
    return k % 2 == 0 ? h : -h;
  });
  ScalarQ rhs = ScalarQ::variable(Var::s, static_cast<int>(-kappa_of(lam))) *
                principal_specialization(lam);
  if (part_weight(lam) % 2 == 1) rhs = -rhs;
  return lhs == rhs;
}

}  // namespace skein
