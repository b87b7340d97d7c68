#pragma once

#include <vector>

#include "discmom/linalg.hpp"

namespace discmom {

/// Upper-triangular H(k) with H_{il} = (-1)^{l-i} binom(l, i): maps the
/// coefficients of V(x) to those of V(x - 1).
inline std::vector<std::vector<Integer>> shift_matrix(std::size_t k) {
  std::vector<std::vector<Integer>> h(k + 1, std::vector<Integer>(k + 1));
  for (std::size_t l = 0; l <= k; ++l) {
    Integer binom = 1;
    for (std::size_t i = 0; i <= l; ++i) {
      h[i][l] = (l - i) % 2 == 0 ? binom : Integer(-binom);
      binom = binom * Integer(l - i) / Integer(i + 1);
    }
  }
  return h;
}

/// D_{2k} = (H(k)^T A(k) + A(k) H(k)) / 2 and D_{2k+1} likewise with B(k),
/// over any scalar type supporting +, and * by Rational.
template <class T>
SymmetricMatrix<T> d_matrix_from(std::span<const T> with_zeroth, std::size_t j) {
  if (j == 0) throw DomainError("D_j is defined for j >= 1");
  const SymmetricMatrix<T> c = hankel_from<T>(with_zeroth, j);
  const std::size_t dim = c.dim();
  const auto h = shift_matrix(dim - 1);
  SymmetricMatrix<T> d(dim);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t l = i; l < dim; ++l) {
      T acc{};
      for (std::size_t p = 0; p < dim; ++p) {
        if (h[p][i] != 0) acc = acc + c(p, l) * (Rational(h[p][i]) * half);
        if (h[p][l] != 0) acc = acc + c(i, p) * (Rational(h[p][l]) * half);
      }
      d.set(i, l, acc);
    }
  }
  return d;
}

inline SymmetricRationalMatrix d_matrix(const MomentVector& m, std::size_t j) {
  const std::vector<Rational> all = m.with_zeroth();
  return d_matrix_from<Rational>(all, j);
}

/// True iff D_1, ..., D_n are all positive definite, which suffices for
/// I-realizability on the nonnegative integers. Not necessary.
inline bool sufficient_check(const MomentVector& m) {
  for (std::size_t j = 1; j <= m.size(); ++j)
    if (psd_classify(d_matrix(m, j)).cls != PositivityClass::PositiveDefinite) return false;
  return true;
}

}  // namespace discmom
