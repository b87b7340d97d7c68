#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "discmom/rational.hpp"

namespace discmom {

/// Dense univariate polynomial with exact rational coefficients, lowest
/// degree first. A polynomial built from a root multiset remembers it;
/// arithmetic that cannot track roots drops them.
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

  static Polynomial monomial(std::size_t degree, const Rational& c = 1) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
  }

  /// leading * prod (x - r_i); the sorted root list is retained.
  static Polynomial from_roots(std::vector<Rational> roots, const Rational& leading = 1) {
    std::vector<Rational> coeffs{leading};
    for (const Rational& r : roots) {
      std::vector<Rational> next(coeffs.size() + 1);
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        next[k + 1] += coeffs[k];
        next[k] -= r * coeffs[k];
      }
      coeffs = std::move(next);
    }
    Polynomial p(std::move(coeffs));
    if (leading != 0) {
      std::sort(roots.begin(), roots.end());
      p.roots_ = std::move(roots);
    }
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  std::span<const Rational> coefficients() const { return coeffs_; }

  const std::optional<std::vector<Rational>>& roots() const { return roots_; }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    Polynomial p = *this * (Rational(1) / leading());
    if (roots_) p.roots_ = roots_;
    return p;
  }

  /// x^k * P, keeping the root list (k extra zeros).
  Polynomial shifted_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rational> c(k, Rational(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    Polynomial p(std::move(c));
    if (roots_) {
      std::vector<Rational> r(k, Rational(0));
      r.insert(r.end(), roots_->begin(), roots_->end());
      std::sort(r.begin(), r.end());
      p.roots_ = std::move(r);
    }
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    Polynomial p(std::move(c));
    if (a.roots_ && b.roots_) {
      std::vector<Rational> r = *a.roots_;
      r.insert(r.end(), b.roots_->begin(), b.roots_->end());
      std::sort(r.begin(), r.end());
      p.roots_ = std::move(r);
    }
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Rational& s) {
    std::vector<Rational> c(a.coeffs_);
    for (Rational& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
  std::optional<std::vector<Rational>> roots_;
};

inline Polynomial poly_from_roots(std::vector<Rational> roots, const Rational& leading = 1) {
  return Polynomial::from_roots(std::move(roots), leading);
}

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

inline DivisionResult divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem(num.coefficients().begin(), num.coefficients().end());
  const int dd = den.degree();
  if (num.degree() < dd) return {Polynomial{}, num};
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  const Rational lead = den.leading();
  for (int k = num.degree(); k >= dd; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - dd)] = factor;
    if (factor == 0) continue;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= factor * den.coeff(static_cast<std::size_t>(i));
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Monic greatest common divisor (zero only if both inputs are zero).
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  const Polynomial m = a.monic();
  return Polynomial(std::vector<Rational>(m.coefficients().begin(), m.coefficients().end()));
}

/// p / gcd(p, p'), made monic: same roots, each simple.
inline Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Polynomial::constant(1);
  const Polynomial g = gcd(p, p.derivative());
  const Polynomial q = divmod(p, g).quotient;
  const Polynomial m = q.monic();
  return Polynomial(std::vector<Rational>(m.coefficients().begin(), m.coefficients().end()));
}

/// Synthetic division by (x - r); throws if r is not a root.
inline Polynomial divide_out_root(const Polynomial& p, const Rational& r) {
  DivisionResult d = divmod(p, Polynomial{-r, Rational(1)});
  if (!d.remainder.is_zero()) throw DomainError(to_string(r) + " is not a root");
  return d.quotient;
}

/// Scales p by a positive rational so its coefficients are coprime integers.
inline std::vector<Integer> primitive_integer_coefficients(const Polynomial& p) {
  Integer lcm_den = 1;
  for (const Rational& c : p.coefficients()) {
    const Integer d = denominator(c);
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
  }
  std::vector<Integer> ints;
  Integer content = 0;
  for (const Rational& c : p.coefficients()) {
    ints.push_back(numerator(c) * (lcm_den / denominator(c)));
    content = boost::multiprecision::gcd(content, ints.back());
  }
  if (content != 0)
    for (Integer& v : ints) v /= boost::multiprecision::abs(content);
  return ints;
}

}  // namespace discmom
