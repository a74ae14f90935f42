// Symmetric polynomials evaluated exactly at rational alphabets: the e/h/p
// bases, Schur polynomials by three routes, Kostka numbers, Pieri's rule for
// e_k, the Sylvester pairing and Grassmannian cohomology data.
#pragma once

#include "partition.hpp"
#include "qalg.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace moyrt {

using Alphabet = std::vector<Rational>;

// ---------------------------------------------------------------------------
// elementary, complete and power sums

/// X_k(A): zero outside 0..|A|.
inline Rational elementary_eval(int k, const Alphabet& a) {
  if (k < 0 || k > static_cast<int>(a.size())) return 0;
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = 1;
  for (const auto& x : a)
    for (int j = k; j >= 1; --j) e[j] += x * e[j - 1];
  return e[k];
}

inline Rational complete_eval(int k, const Alphabet& a) {
  if (k < 0) return 0;
  std::vector<Rational> h(k + 1, Rational(0));
  h[0] = 1;
  for (const auto& x : a)
    for (int j = 1; j <= k; ++j) h[j] += x * h[j - 1];
  return h[k];
}

inline Rational power_eval(int k, const Alphabet& a) {
  if (k < 0) return 0;
  if (k == 0) return static_cast<long>(a.size());
  Rational s = 0;
  for (const auto& x : a) {
    Rational p = 1;
    for (int i = 0; i < k; ++i) p *= x;
    s += p;
  }
  return s;
}

/// Determinant by fraction-exact Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

namespace detail {

// Hessenberg matrix with row i, column j holding X_{j-i+1} (X_0 = 1 on the
// subdiagonal). With power_column the last column of row i is (k-i)X_{k-i}.
template <class T, class Get>
std::vector<std::vector<T>> e_hessenberg(int k, Get x, bool power_column) {
  std::vector<std::vector<T>> m(k, std::vector<T>(k, T(0)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int idx = j - i + 1;
      if (idx < 0) continue;
      m[i][j] = x(idx);
      if (power_column && j == k - 1) m[i][j] = x(idx) * T(k - i);
    }
  return m;
}

inline Rational e_value(const std::vector<Rational>& e, int idx) {
  if (idx == 0) return 1;
  return idx < static_cast<int>(e.size()) ? e[idx] : Rational(0);
}

}  // namespace detail

/// h_k from the determinant in the elementary values; e[j] = X_j (e[0] ignored).
inline Rational h_from_e_determinant(int k, const std::vector<Rational>& e) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  return determinant(detail::e_hessenberg<Rational>(k, [&](int i) { return detail::e_value(e, i); }, false));
}

/// p_k from the determinant in the elementary values; e[j] = X_j (e[0] ignored).
inline Rational p_from_e_determinant(int k, const std::vector<Rational>& e) {
  if (k <= 0) throw std::invalid_argument("p_from_e_determinant: k must be positive");
  return determinant(detail::e_hessenberg<Rational>(k, [&](int i) { return detail::e_value(e, i); }, true));
}

/// X_0..X_k evaluated at the alphabet.
inline std::vector<Rational> elementary_values(int k, const Alphabet& a) {
  std::vector<Rational> e(k + 1);
  for (int j = 0; j <= k; ++j) e[j] = elementary_eval(j, a);
  return e;
}

/// sum_{k=0}^{l-1} (-1)^k X_k p_{l-k} - (-1)^{l+1} l X_l; always zero.
inline Rational newton_identity_residual(int l, const Alphabet& a) {
  if (l < 1) throw std::invalid_argument("newton_identity_residual: l must be positive");
  Rational s = 0;
  for (int k = 0; k < l; ++k) s += (k % 2 ? -1 : 1) * elementary_eval(k, a) * power_eval(l - k, a);
  s -= ((l + 1) % 2 ? -1 : 1) * Rational(l) * elementary_eval(l, a);
  return s;
}

// ---------------------------------------------------------------------------
// Schur polynomials

enum class SchurRoute { bialternant, jacobi_trudi_h, jacobi_trudi_e };

namespace detail {

template <class F>
Rational toeplitz_det(const std::vector<int>& rows, F entry) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = entry(rows[i] - i + j);
  return determinant(std::move(m));
}

inline Rational rpow(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace detail

inline Rational schur_eval(const Partition& lambda, const Alphabet& a, SchurRoute route) {
  switch (route) {
    case SchurRoute::jacobi_trudi_h:
      return detail::toeplitz_det(lambda.parts(), [&](int k) { return complete_eval(k, a); });
    case SchurRoute::jacobi_trudi_e:
      return detail::toeplitz_det(lambda.conjugate().parts(), [&](int k) { return elementary_eval(k, a); });
    case SchurRoute::bialternant: {
      const int m = static_cast<int>(a.size());
      if (lambda.length() > m) throw std::invalid_argument("schur_eval: more parts than alphabet points");
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (a[i] == a[j]) throw std::domain_error("schur_eval: repeated points make the Vandermonde vanish");
      std::vector<std::vector<Rational>> num(m, std::vector<Rational>(m)), den = num;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          num[i][j] = detail::rpow(a[i], lambda.part(j + 1) + m - 1 - j);
          den[i][j] = detail::rpow(a[i], m - 1 - j);
        }
      return determinant(std::move(num)) / determinant(std::move(den));
    }
  }
  throw std::invalid_argument("schur_eval: unknown route");
}

/// S_lambda(-X) = det(h_{lambda_i - i + j}(-X)) with h_j(-X) = (-1)^j X_j.
inline Rational schur_neg_eval(const Partition& lambda, const Alphabet& a) {
  return detail::toeplitz_det(lambda.parts(),
                              [&](int k) { return (k % 2 ? Rational(-1) : Rational(1)) * elementary_eval(k, a); });
}

/// h_lambda(A) = prod_i h_{lambda_i}(A)
inline Rational complete_product_eval(const Partition& lambda, const Alphabet& a) {
  Rational r = 1;
  for (int p : lambda.parts()) r *= complete_eval(p, a);
  return r;
}

// ---------------------------------------------------------------------------
// Kostka numbers and Pieri

/// Number of semistandard tableaux of shape mu and content lambda.
inline std::uint64_t kostka(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return 0;
  const int rows = mu.length();
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(mu.part(r + 1), 0);
  std::vector<int> left = lambda.parts();
  const int letters = lambda.length();
  std::uint64_t count = 0;
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == rows) {
      ++count;
      return;
    }
    if (c == mu.part(r + 1)) return fill(r + 1, 0);
    const int lo = std::max(c > 0 ? t[r][c - 1] : 1, r > 0 ? t[r - 1][c] + 1 : 1);
    for (int v = lo; v <= letters; ++v) {
      if (left[v - 1] == 0) continue;
      --left[v - 1];
      t[r][c] = v;
      fill(r, c + 1);
      ++left[v - 1];
    }
  };
  fill(0, 0);
  return count;
}

/// Partitions mu with mu / lambda a vertical strip of size k, sorted.
inline std::vector<Partition> pieri_e(int k, const Partition& lambda) {
  if (k < 1) throw std::invalid_argument("pieri_e: k must be positive");
  const int rows = lambda.length() + k;
  std::vector<Partition> out;
  std::vector<int> mu(rows);
  std::function<void(int, int)> rec = [&](int r, int left) {
    if (r == rows) {
      if (left == 0) out.emplace_back(mu);
      return;
    }
    if (rows - r < left) return;
    for (int add = 0; add <= std::min(1, left); ++add) {
      mu[r] = lambda.part(r + 1) + add;
      if (r > 0 && mu[r] > mu[r - 1]) continue;
      rec(r + 1, left - add);
    }
  };
  rec(0, k);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Sylvester pairing and the Grassmannian

/// 1 iff lambda_j + mu_{m+1-j} = n for j = 1..m.
inline int sylvester_pair(const Partition& lambda, const Partition& mu, int m, int n) {
  if (!lambda.fits_box(m, n) || !mu.fits_box(m, n)) throw std::invalid_argument("sylvester_pair: partition outside box");
  for (int j = 1; j <= m; ++j)
    if (lambda.part(j) + mu.part(m + 1 - j) != n) return 0;
  return 1;
}

inline std::vector<Partition> grassmannian_basis(int m, int N) {
  if (m < 0 || m > N) throw std::invalid_argument("grassmannian_basis: need 0 <= m <= N");
  return partitions_in_box(m, N - m);
}

inline int grassmannian_trace(const Partition& lambda, const Partition& mu, int m, int N) {
  if (m < 0 || m > N) throw std::invalid_argument("grassmannian_trace: need 0 <= m <= N");
  return sylvester_pair(lambda, mu, m, N - m);
}

/// sum over the basis of q^{2|lambda|}
inline LaurentPoly grassmannian_poincare(int m, int N) {
  LaurentPoly p;
  for (const auto& l : grassmannian_basis(m, N)) p += LaurentPoly::q(2 * l.size());
  return p;
}

/// True iff the trace matrix on the basis is a permutation matrix.
inline bool grassmannian_pairing_is_perfect(int m, int N) {
  const auto basis = grassmannian_basis(m, N);
  std::vector<int> col_hits(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    int row_hits = 0;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (grassmannian_trace(basis[i], basis[j], m, N)) {
        ++row_hits;
        ++col_hits[j];
      }
    if (row_hits != 1) return false;
  }
  for (int c : col_hits)
    if (c != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// symbolic check of d p_{m,l} / d X_j = (-1)^{j+1} l h_{m,l-j}

/// Integer polynomial in X_1..X_m; key is the exponent vector.
class MultiPoly {
 public:
  using Terms = std::map<std::vector<int>, BigInt>;

  MultiPoly() = default;
  explicit MultiPoly(int vars) : vars_(vars) {}

  static MultiPoly constant(int vars, const BigInt& c) {
    MultiPoly p(vars);
    if (c != 0) p.terms_[std::vector<int>(vars, 0)] = c;
    return p;
  }
  /// X_i (1-based); zero if i exceeds the variable count.
  static MultiPoly variable(int vars, int i) {
    MultiPoly p(vars);
    if (i >= 1 && i <= vars) {
      std::vector<int> e(vars, 0);
      e[i - 1] = 1;
      p.terms_[e] = 1;
    }
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, -c);
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(std::max(a.vars_, b.vars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly derivative(int j) const {
    MultiPoly r(vars_);
    if (j < 1 || j > vars_) return r;
    for (const auto& [e, c] : terms_) {
      if (e[j - 1] == 0) continue;
      std::vector<int> d(e);
      --d[j - 1];
      r.add(d, c * e[j - 1]);
    }
    return r;
  }

 private:
  void add(const std::vector<int>& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, ins] = terms_.try_emplace(e, c);
    if (!ins) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int vars_ = 0;
  Terms terms_;
};

/// Laplace expansion along the first row.
inline MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m, int vars) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(vars, 1);
  if (n == 1) return m[0][0];
  MultiPoly det(vars);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].terms().empty()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    MultiPoly t = m[0][c] * determinant(minor, vars);
    det = (c % 2 == 0) ? det + t : det - t;
  }
  return det;
}

namespace detail {
inline MultiPoly e_var(int vars, int idx) {
  if (idx == 0) return MultiPoly::constant(vars, 1);
  return MultiPoly::variable(vars, idx);
}
}  // namespace detail

/// h_{m,k} as a polynomial in X_1..X_m (X_j = 0 for j > m).
inline MultiPoly h_polynomial(int m, int k) {
  if (k < 0) return MultiPoly(m);
  if (k == 0) return MultiPoly::constant(m, 1);
  auto mat = detail::e_hessenberg<MultiPoly>(k, [&](int i) { return detail::e_var(m, i); }, false);
  return determinant(mat, m);
}

/// p_{m,k} as a polynomial in X_1..X_m.
inline MultiPoly p_polynomial(int m, int k) {
  if (k <= 0) throw std::invalid_argument("p_polynomial: k must be positive");
  auto mat = detail::e_hessenberg<MultiPoly>(
      k, [&](int i) { return detail::e_var(m, i); }, false);
  for (int i = 0; i < k; ++i) mat[i][k - 1] = detail::e_var(m, k - i) * MultiPoly::constant(m, k - i);
  return determinant(mat, m);
}

inline bool power_derivative_check(int m, int l, int j) {
  if (m < 1 || l < 1 || j < 1 || j > m) throw std::invalid_argument("power_derivative_check: need 1 <= j <= m, l >= 1");
  const MultiPoly lhs = p_polynomial(m, l).derivative(j);
  const BigInt sign = (j + 1) % 2 ? -1 : 1;
  const MultiPoly rhs = h_polynomial(m, l - j) * MultiPoly::constant(m, sign * l);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------

/// Distinct random rationals with small numerators and denominators.
inline Alphabet random_alphabet(std::size_t size, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 9);
  Alphabet a;
  std::set<Rational> seen;
  while (a.size() < size) {
    Rational x(num(rng), den(rng));
    if (seen.insert(x).second) a.push_back(x);
  }
  return a;
}

}  // namespace moyrt
