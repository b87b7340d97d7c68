#pragma once

#include <optional>
#include <span>
#include <vector>

#include "discmom/moments.hpp"

namespace discmom {

/// Dense symmetric matrix; set() writes both (i,j) and (j,i).
template <class T>
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;

  explicit SymmetricMatrix(std::size_t dim, const T& fill = T{}) : dim_(dim), data_(dim * dim, fill) {}

  std::size_t dim() const { return dim_; }

  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  void set(std::size_t i, std::size_t j, const T& v) {
    data_[i * dim_ + j] = v;
    data_[j * dim_ + i] = v;
  }

  std::vector<std::vector<T>> rows() const {
    std::vector<std::vector<T>> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i].assign(data_.begin() + static_cast<long>(i * dim_),
                                                         data_.begin() + static_cast<long>((i + 1) * dim_));
    return out;
  }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<T> data_;
};

using SymmetricRationalMatrix = SymmetricMatrix<Rational>;

/// C_j from (m_0, ..., m_n): A(k) = (m_{i+l}) if j = 2k, B(k) = (m_{i+l+1}) if j = 2k+1.
template <class T>
SymmetricMatrix<T> hankel_from(std::span<const T> with_zeroth, std::size_t j) {
  if (j + 1 > with_zeroth.size()) throw ArityError("Hankel matrix C_" + std::to_string(j) + " needs m_" + std::to_string(j));
  const std::size_t k = j / 2;
  const std::size_t shift = j % 2;
  SymmetricMatrix<T> c(k + 1);
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t l = i; l <= k; ++l) c.set(i, l, with_zeroth[i + l + shift]);
  return c;
}

inline SymmetricRationalMatrix hankel(const MomentVector& m, std::size_t j) {
  const std::vector<Rational> all = m.with_zeroth();
  return hankel_from<Rational>(all, j);
}

enum class PositivityClass { PositiveDefinite, PositiveSemidefiniteSingular, Indefinite };

struct PsdResult {
  PositivityClass cls;
  /// Nonzero vector with Mv = 0 (singular case only).
  std::vector<Rational> kernel;
  /// Vector with v^T M v < 0 (indefinite case only).
  std::vector<Rational> negative_direction;
};

namespace detail {

/// Solves A x = b by Gaussian elimination; nullopt if A is singular.
inline std::optional<std::vector<Rational>> gauss_solve(std::vector<std::vector<Rational>> a,
                                                        std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

/// Lifts a vector supported on the residual index set R to one whose
/// pivoted-block part makes (Mv)_S = 0, so that v^T M v equals the Schur
/// complement quadratic form on R.
inline std::vector<Rational> lift_from_residual(const SymmetricRationalMatrix& m,
                                                const std::vector<std::size_t>& pivoted,
                                                const std::vector<std::size_t>& residual,
                                                const std::vector<Rational>& on_residual) {
  std::vector<Rational> v(m.dim());
  for (std::size_t r = 0; r < residual.size(); ++r) v[residual[r]] = on_residual[r];
  if (pivoted.empty()) return v;
  std::vector<std::vector<Rational>> a(pivoted.size(), std::vector<Rational>(pivoted.size()));
  std::vector<Rational> rhs(pivoted.size());
  for (std::size_t i = 0; i < pivoted.size(); ++i) {
    for (std::size_t j = 0; j < pivoted.size(); ++j) a[i][j] = m(pivoted[i], pivoted[j]);
    for (std::size_t r = 0; r < residual.size(); ++r) rhs[i] -= m(pivoted[i], residual[r]) * on_residual[r];
  }
  auto sol = gauss_solve(std::move(a), std::move(rhs));
  if (!sol) throw InvariantViolation("pivoted block unexpectedly singular");
  for (std::size_t i = 0; i < pivoted.size(); ++i) v[pivoted[i]] = (*sol)[i];
  return v;
}

}  // namespace detail

/// Exact three-way positivity classification by symmetric elimination with
/// diagonal pivoting. Each step pivots on the largest remaining diagonal
/// entry; a negative diagonal, or a zero diagonal whose row is not zero,
/// proves indefiniteness.
inline PsdResult psd_classify(const SymmetricRationalMatrix& m) {
  const std::size_t n = m.dim();
  SymmetricRationalMatrix work = m;
  std::vector<std::size_t> pivoted;
  std::vector<std::size_t> residual(n);
  for (std::size_t i = 0; i < n; ++i) residual[i] = i;

  while (!residual.empty()) {
    std::size_t best = residual.size();
    for (std::size_t r = 0; r < residual.size(); ++r) {
      const Rational& d = work(residual[r], residual[r]);
      if (d < 0) {
        std::vector<Rational> e(residual.size());
        e[r] = 1;
        return {PositivityClass::Indefinite, {}, detail::lift_from_residual(m, pivoted, residual, e)};
      }
      if (d > 0 && (best == residual.size() || d > work(residual[best], residual[best]))) best = r;
    }
    if (best == residual.size()) {
      // All remaining diagonal entries are zero.
      for (std::size_t a = 0; a < residual.size(); ++a) {
        for (std::size_t b = a + 1; b < residual.size(); ++b) {
          const Rational& off = work(residual[a], residual[b]);
          if (off != 0) {
            std::vector<Rational> e(residual.size());
            e[a] = 1;
            e[b] = off > 0 ? -1 : 1;
            return {PositivityClass::Indefinite, {}, detail::lift_from_residual(m, pivoted, residual, e)};
          }
        }
      }
      std::vector<Rational> e(residual.size());
      e[0] = 1;
      return {PositivityClass::PositiveSemidefiniteSingular, detail::lift_from_residual(m, pivoted, residual, e), {}};
    }
    const std::size_t p = residual[best];
    residual.erase(residual.begin() + static_cast<long>(best));
    const Rational piv = work(p, p);
    for (std::size_t a = 0; a < residual.size(); ++a) {
      const Rational fa = work(residual[a], p) / piv;
      if (fa == 0) continue;
      for (std::size_t b = a; b < residual.size(); ++b)
        work.set(residual[a], residual[b], work(residual[a], residual[b]) - fa * work(p, residual[b]));
    }
    pivoted.push_back(p);
  }
  return {PositivityClass::PositiveDefinite, {}, {}};
}

inline Rational determinant(const SymmetricRationalMatrix& m) {
  std::vector<std::vector<Rational>> a = m.rows();
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

/// Exact x with Mx = rhs; throws SingularMatrixError.
inline std::vector<Rational> hankel_linsolve(const SymmetricRationalMatrix& m, std::vector<Rational> rhs) {
  if (rhs.size() != m.dim()) throw ArityError("right-hand side has wrong length");
  auto x = detail::gauss_solve(m.rows(), std::move(rhs));
  if (!x) throw SingularMatrixError("matrix of dimension " + std::to_string(m.dim()) + " is singular");
  return *x;
}

struct VandermondeResult {
  std::vector<Rational> weights;
  /// False when the target has more entries than points and the extra
  /// equations are not satisfied (the candidate support is wrong).
  bool consistent = true;
};

/// Weights c_j with sum_j c_j x_j^k = target[k] for k < #points, where
/// target = (m_0, m_1, ...). Extra target entries are checked, not solved.
inline VandermondeResult solve_vandermonde(std::span<const Rational> points, std::span<const Rational> target) {
  const std::size_t p = points.size();
  if (target.size() < p) throw ArityError("Vandermonde target shorter than the number of points");
  std::vector<std::vector<Rational>> a(p, std::vector<Rational>(p));
  for (std::size_t j = 0; j < p; ++j) {
    Rational power = 1;
    for (std::size_t k = 0; k < p; ++k) {
      a[k][j] = power;
      power *= points[j];
    }
  }
  auto w = detail::gauss_solve(std::move(a), std::vector<Rational>(target.begin(), target.begin() + static_cast<long>(p)));
  if (!w) throw DomainError("Vandermonde points are not distinct");
  VandermondeResult result{std::move(*w), true};
  for (std::size_t k = p; k < target.size(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 0; j < p; ++j) acc += result.weights[j] * pow(points[j], k);
    if (acc != target[k]) {
      result.consistent = false;
      break;
    }
  }
  return result;
}

}  // namespace discmom
