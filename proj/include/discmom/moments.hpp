#pragma once

#include <span>
#include <vector>

#include "discmom/polynomial.hpp"

namespace discmom {

/// Truncated power moments (m_1, ..., m_n) of a probability measure; m_0 = 1
/// is implicit and returned by at(0).
class MomentVector {
 public:
  MomentVector() = default;

  explicit MomentVector(std::vector<Rational> moments) : moments_(std::move(moments)) {}

  MomentVector(std::initializer_list<Rational> moments) : moments_(moments) {}

  /// Number of given moments n (m_0 not counted).
  std::size_t size() const { return moments_.size(); }

  bool empty() const { return moments_.empty(); }

  /// m_k for 0 <= k <= n.
  Rational at(std::size_t k) const {
    if (k == 0) return 1;
    if (k > moments_.size()) {
      throw ArityError("moment m_" + std::to_string(k) + " requested but only " +
                       std::to_string(moments_.size()) + " moments are given");
    }
    return moments_[k - 1];
  }

  Rational operator[](std::size_t k) const { return at(k); }

  /// m^(j) = (m_1, ..., m_j).
  MomentVector prefix(std::size_t j) const {
    if (j > moments_.size()) throw ArityError("prefix longer than moment vector");
    return MomentVector(std::vector<Rational>(moments_.begin(), moments_.begin() + static_cast<long>(j)));
  }

  MomentVector extended(const Rational& next) const {
    std::vector<Rational> m = moments_;
    m.push_back(next);
    return MomentVector(std::move(m));
  }

  std::span<const Rational> values() const { return moments_; }

  /// (m_0, m_1, ..., m_n).
  std::vector<Rational> with_zeroth() const {
    std::vector<Rational> all{Rational(1)};
    all.insert(all.end(), moments_.begin(), moments_.end());
    return all;
  }

  friend bool operator==(const MomentVector&, const MomentVector&) = default;

 private:
  std::vector<Rational> moments_;
};

/// L_P(m) = sum_k p_k m_k with m_0 = 1.
inline Rational lform_eval(const Polynomial& p, const MomentVector& m) {
  if (p.degree() > static_cast<int>(m.size())) {
    throw ArityError("polynomial of degree " + std::to_string(p.degree()) + " needs more than " +
                     std::to_string(m.size()) + " moments");
  }
  Rational acc = 0;
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) acc += coeffs[k] * m.at(k);
  return acc;
}

/// Same as lform_eval but ignores the coefficient of x^n; used where m_n is
/// not yet fixed and only differences between monic forms matter.
inline Rational lform_eval_without_top(const Polynomial& p, const MomentVector& m, std::size_t n) {
  Rational acc = 0;
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size() && k < n; ++k) acc += coeffs[k] * m.at(k);
  return acc;
}

}  // namespace discmom
