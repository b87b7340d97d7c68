#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "discmom/linalg.hpp"
#include "discmom/measure.hpp"

namespace discmom {

enum class Status { IRealizable, BRealizable, NotRealizable };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::IRealizable: return "I";
    case Status::BRealizable: return "B";
    case Status::NotRealizable: return "Not";
  }
  return "?";
}

/// Why a moment vector is not realizable on [0, inf).
struct StieltjesWitness {
  /// Prefix length j at which the failure is detected.
  std::size_t index = 0;
  /// v with v^T C_j v < 0 (empty when the failure is a moment recurrence).
  std::vector<Rational> direction;
  Rational quadratic_value;
  /// For a violated recurrence m_{r+k} = sum phi_i m_{k+i}: k and
  /// m_{r+k} - sum phi_i m_{k+i}.
  std::optional<std::size_t> recurrence_k;
  Rational residual;
};

/// Realizability on [0, inf) as interior (I), boundary (B), or not.
struct StieltjesVerdict {
  Status status = Status::IRealizable;
  /// First j with C_j singular (B only).
  std::size_t boundary_index = 0;
  /// (phi_0, ..., phi_{r-1}), r = floor((j+1)/2) (B only).
  std::vector<Rational> phi;
  std::optional<AlgebraicMeasure> measure;
  std::optional<StieltjesWitness> witness;
};

/// g(x) = x^r - sum_{i<r} phi_i x^i.
inline Polynomial recurrence_polynomial(const std::vector<Rational>& phi) {
  std::vector<Rational> c(phi.size() + 1);
  for (std::size_t i = 0; i < phi.size(); ++i) c[i] = -phi[i];
  c.back() = 1;
  return Polynomial(std::move(c));
}

namespace detail {

/// Row vector (values) * H^{-1} for symmetric invertible H.
inline std::vector<Rational> row_times_inverse(const SymmetricRationalMatrix& h, std::vector<Rational> row) {
  try {
    return hankel_linsolve(h, std::move(row));
  } catch (const SingularMatrixError&) {
    throw PreconditionError("Hankel matrix is singular; the moment prefix is not I-realizable on [0, inf)");
  }
}

/// Coefficients phi of the boundary recurrence for a first-singular index j,
/// computed from the moments with index < j.
inline std::vector<Rational> boundary_phi(const MomentVector& m, std::size_t j) {
  if (j % 2 == 0) {
    const std::size_t r = j / 2;
    std::vector<Rational> rhs;
    for (std::size_t i = r; i <= 2 * r - 1; ++i) rhs.push_back(m.at(i));
    return row_times_inverse(hankel(m, j - 2), std::move(rhs));
  }
  const std::size_t r = (j + 1) / 2;
  std::vector<Rational> phi{Rational(0)};
  if (r == 1) return phi;
  std::vector<Rational> rhs;
  for (std::size_t i = r; i <= 2 * r - 2; ++i) rhs.push_back(m.at(i));
  std::vector<Rational> tail = row_times_inverse(hankel(m, j - 2), std::move(rhs));
  phi.insert(phi.end(), tail.begin(), tail.end());
  return phi;
}

}  // namespace detail

/// Support polynomial of the minimal boundary extension of m^(n-1):
/// n = 2k:   g = x^k - sum_{i<k} phi_i x^i,     Phi = (m_k..m_{n-1}) A(k-1)^{-1};
/// n = 2k+1: g = x^{k+1} - sum_{1<=i<=k} phi_i x^i, Phi = (m_{k+1}..m_{n-1}) B(k-1)^{-1}.
inline Polynomial support_polynomial(const MomentVector& m, std::size_t n) {
  if (n == 0) throw DomainError("support polynomial needs n >= 1");
  if (m.size() < n - 1) throw ArityError("support polynomial needs m^(n-1)");
  return recurrence_polynomial(detail::boundary_phi(m.prefix(n - 1).extended(0), n));
}

/// Truncated Stieltjes classification following the Hankel matrices
/// C_1, ..., C_n; after the first singular C_j the remaining moments must
/// obey m_{r+k} = sum_i phi_i m_{k+i}.
inline StieltjesVerdict stieltjes_classify(const MomentVector& m) {
  const std::size_t n = m.size();
  StieltjesVerdict verdict;
  for (std::size_t j = 1; j <= n; ++j) {
    const PsdResult psd = psd_classify(hankel(m, j));
    if (psd.cls == PositivityClass::PositiveDefinite) continue;
    if (psd.cls == PositivityClass::Indefinite) {
      const SymmetricRationalMatrix c = hankel(m, j);
      Rational q = 0;
      for (std::size_t a = 0; a < c.dim(); ++a)
        for (std::size_t b = 0; b < c.dim(); ++b) q += psd.negative_direction[a] * c(a, b) * psd.negative_direction[b];
      verdict.status = Status::NotRealizable;
      verdict.witness = StieltjesWitness{j, psd.negative_direction, q, std::nullopt, 0};
      return verdict;
    }
    // First singular C_j: boundary from here on.
    std::vector<Rational> phi = detail::boundary_phi(m, j);
    const std::size_t r = phi.size();
    for (std::size_t k = 0; k + r <= n; ++k) {
      Rational predicted = 0;
      for (std::size_t i = 0; i < r; ++i) predicted += phi[i] * m.at(k + i);
      const Rational residual = m.at(r + k) - predicted;
      if (residual != 0) {
        verdict.status = Status::NotRealizable;
        verdict.witness = StieltjesWitness{std::max(r + k, j), {}, 0, k, residual};
        return verdict;
      }
    }
    verdict.status = Status::BRealizable;
    verdict.boundary_index = j;
    verdict.measure.emplace(recurrence_polynomial(phi), m);
    verdict.phi = std::move(phi);
    return verdict;
  }
  verdict.status = Status::IRealizable;
  return verdict;
}

/// Smallest m_n making (m, m_n) realizable on [0, inf), with the unique
/// measure nu realizing it. det C_n is affine in m_n with slope det C_{n-2} > 0.
inline std::pair<Rational, AlgebraicMeasure> minimal_stieltjes_extension(const MomentVector& m) {
  const std::size_t n = m.size() + 1;
  if (stieltjes_classify(m).status != Status::IRealizable)
    throw PreconditionError("minimal Stieltjes extension needs an I-realizable prefix");
  const Rational at_zero = determinant(hankel(m.extended(0), n));
  const Rational at_one = determinant(hankel(m.extended(1), n));
  const Rational slope = at_one - at_zero;
  if (slope <= 0) throw InvariantViolation("det C_n is not increasing in m_n");
  const Rational hat = -at_zero / slope;
  const MomentVector extended = m.extended(hat);
  AlgebraicMeasure nu(support_polynomial(m, n), extended);
  return {hat, std::move(nu)};
}

}  // namespace discmom
