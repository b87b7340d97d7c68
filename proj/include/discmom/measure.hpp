#pragma once

#include <optional>
#include <vector>

#include "discmom/linalg.hpp"
#include "discmom/roots.hpp"

namespace discmom {

/// Finitely many rational atoms with rational weights.
struct AtomicMeasure {
  std::vector<Rational> atoms;
  std::vector<Rational> weights;

  /// Sorted distinct atoms, positive weights summing to one.
  bool is_valid() const {
    if (atoms.size() != weights.size() || atoms.empty()) return false;
    Rational total = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (weights[i] <= 0) return false;
      if (i > 0 && !(atoms[i - 1] < atoms[i])) return false;
      total += weights[i];
    }
    return total == 1;
  }

  Rational moment(std::size_t k) const {
    Rational acc = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) acc += weights[i] * pow(atoms[i], k);
    return acc;
  }

  /// (m_1, ..., m_n).
  MomentVector moments(std::size_t n) const {
    std::vector<Rational> m;
    for (std::size_t k = 1; k <= n; ++k) m.push_back(moment(k));
    return MomentVector(std::move(m));
  }

  /// E[P(X)].
  Rational expectation(const Polynomial& p) const {
    Rational acc = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) acc += weights[i] * p(atoms[i]);
    return acc;
  }

  friend bool operator==(const AtomicMeasure&, const AtomicMeasure&) = default;
};

/// Builds a measure from unsorted atoms/weights, merging duplicates and
/// dropping zero weights.
inline AtomicMeasure make_measure(std::vector<Rational> atoms, std::vector<Rational> weights) {
  std::vector<std::size_t> order(atoms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });
  AtomicMeasure mu;
  for (std::size_t i : order) {
    if (!mu.atoms.empty() && mu.atoms.back() == atoms[i]) {
      mu.weights.back() += weights[i];
    } else {
      mu.atoms.push_back(atoms[i]);
      mu.weights.push_back(weights[i]);
    }
  }
  AtomicMeasure kept;
  for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
    if (mu.weights[i] != 0) {
      kept.atoms.push_back(mu.atoms[i]);
      kept.weights.push_back(mu.weights[i]);
    }
  }
  return kept;
}

/// The unique measure with support inside `points` matching m_0..m_{p-1}
/// (p = #points). Zero weights are dropped; a negative weight means the
/// points cannot carry a realizing measure and raises InvariantViolation.
inline AtomicMeasure measure_on_points(const std::vector<Rational>& points, const MomentVector& m) {
  const std::vector<Rational> target = m.with_zeroth();
  const VandermondeResult v = solve_vandermonde(points, std::span<const Rational>(target).first(points.size()));
  for (const Rational& w : v.weights)
    if (w < 0) throw InvariantViolation("negative weight recovered on a candidate support");
  return make_measure(points, v.weights);
}

/// Atomic measure on the roots of a square-free polynomial g whose roots are
/// all real, with weight h(y)/g'(y) at each root y. When atoms are irrational
/// the weights are too, so the measure is kept in this implicit form; all
/// moments are nevertheless rational and computed exactly.
class AlgebraicMeasure {
 public:
  /// Measure determined by g and the low moments (m_0, ..., m_{r-1}), r = deg g:
  /// h(x) = E[(g(x) - g(X)) / (x - X)].
  AlgebraicMeasure(Polynomial support, const MomentVector& m) : g_(std::move(support)) {
    const std::size_t r = static_cast<std::size_t>(g_.degree());
    if (g_.degree() < 1) throw DomainError("support polynomial must have degree >= 1");
    std::vector<Rational> h(r);
    for (std::size_t i = 1; i <= r; ++i)
      for (std::size_t a = 0; a < i; ++a) h[a] += g_.coeff(i) * m.at(i - 1 - a);
    h_ = Polynomial(std::move(h));
    atoms_ = isolate_roots(g_);
    if (atoms_.size() != r) throw InvariantViolation("support polynomial does not have deg g distinct roots in [0, inf)");
  }

  const Polynomial& support_polynomial() const { return g_; }

  const Polynomial& weight_numerator() const { return h_; }

  const std::vector<AlgebraicNumber>& atoms() const { return atoms_; }

  std::size_t size() const { return atoms_.size(); }

  bool contains_zero() const { return g_(Rational(0)) == 0; }

  bool all_atoms_rational() const {
    return std::all_of(atoms_.begin(), atoms_.end(), [](const AlgebraicNumber& a) { return a.is_rational(); });
  }

  /// sum over roots y of F(y)/g'(y): coefficient of x^{r-1} in F mod g, over lc(g).
  Rational residue_sum(const Polynomial& f) const {
    const Polynomial rem = divmod(f, g_).remainder;
    return rem.coeff(static_cast<std::size_t>(g_.degree() - 1)) / g_.leading();
  }

  Rational moment(std::size_t k) const { return residue_sum(Polynomial::monomial(k) * h_); }

  MomentVector moments(std::size_t n) const {
    std::vector<Rational> m;
    for (std::size_t k = 1; k <= n; ++k) m.push_back(moment(k));
    return MomentVector(std::move(m));
  }

  /// Sign of the weight at atom i.
  int weight_sign(std::size_t i) const {
    return atoms_[i].sign_of(h_) * atoms_[i].sign_of(g_.derivative());
  }

  Rational rational_weight(std::size_t i) const {
    return h_(atoms_[i].rational()) / g_.derivative()(atoms_[i].rational());
  }

  /// Explicit rational form, available when every atom is rational.
  std::optional<AtomicMeasure> as_rational() const {
    if (!all_atoms_rational()) return std::nullopt;
    AtomicMeasure mu;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      mu.atoms.push_back(atoms_[i].rational());
      mu.weights.push_back(rational_weight(i));
    }
    return mu;
  }

 private:
  Polynomial g_;
  Polynomial h_;
  std::vector<AlgebraicNumber> atoms_;
};

}  // namespace discmom
