#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "discmom/grid.hpp"
#include "discmom/measure.hpp"
#include "discmom/stieltjes.hpp"

namespace discmom {

/// Minimizing polynomial P_n^(m) together with L_P(m) when m_n is known.
struct MinPolyCertificate {
  Polynomial polynomial;
  std::optional<Rational> value;
};

/// The unique realizing measure and a P in P_n or P_{n-1} with L_P(m) = 0.
struct BoundaryCertificate {
  AtomicMeasure measure;
  Polynomial polynomial;
};

/// P nonnegative on the grid with L_P(m^(index)) < 0.
struct NegativityWitness {
  std::size_t index = 0;
  Polynomial polynomial;
  Rational value;
};

/// m^(index-1) is boundary with L_P = 0, but m_index differs from the unique
/// value solving L_{x^shift P}(m) = 0.
struct ForcedMismatch {
  std::size_t index = 0;
  Polynomial polynomial;
  std::size_t shift = 1;
  Rational forced;
  Rational actual;
};

using Certificate = std::variant<MinPolyCertificate, BoundaryCertificate, NegativityWitness, ForcedMismatch>;

struct Verdict {
  Status status = Status::IRealizable;
  Certificate certificate;
};

/// How P_n^(m) is built for n >= 4: closed forms (n = 4, 5 only) or the
/// degree-reducing recursion. Automatic uses closed forms where available.
enum class MinPolyMethod { Automatic, Explicit, Recursive };

struct SolverOptions {
  MinPolyMethod method = MinPolyMethod::Automatic;
  std::size_t n_max = 12;
};

struct SupportSet {
  std::vector<Rational> points;
  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

/// Monic degree-n polynomial in P_n whose roots contain `required`. Points
/// are paired in ascending order with their grid successor (predecessor if
/// the successor is taken); 0 is the lone root when n is odd; remaining
/// pairs are the lowest adjacent pairs starting above u(max required).
inline Polynomial extend_to_candidate(const std::vector<Rational>& required, std::size_t n, const Grid& grid) {
  std::vector<Rational> req = required;
  std::sort(req.begin(), req.end());
  req.erase(std::unique(req.begin(), req.end()), req.end());
  for (const Rational& p : req)
    if (!grid.contains(p)) throw DomainError(to_string(p) + " is not a grid point");

  std::vector<Rational> roots;
  auto used = [&](const Rational& x) { return std::find(roots.begin(), roots.end(), x) != roots.end(); };
  const bool odd = n % 2 == 1;
  if (odd) roots.push_back(grid.min());
  for (const Rational& p : req) {
    if (used(p)) continue;
    const Rational up = grid.next(p);
    if (!used(up)) {
      roots.push_back(p);
      roots.push_back(up);
      continue;
    }
    const std::optional<Rational> down = grid.prev(p);
    if (down && !used(*down) && !(odd && *down == grid.min())) {
      roots.push_back(*down);
      roots.push_back(p);
      continue;
    }
    throw DomainError("no pattern polynomial of degree " + std::to_string(n) + " contains the required points");
  }
  if (roots.size() > n)
    throw DomainError("no pattern polynomial of degree " + std::to_string(n) + " contains the required points");
  if (roots.size() < n) {
    Rational start = grid.min();
    if (!req.empty() || odd) {
      const Rational top = req.empty() ? grid.min() : std::max(req.back(), grid.min());
      start = grid.next(grid.next(top));
    }
    while (roots.size() < n) {
      if (used(start)) {
        start = grid.next(start);
        continue;
      }
      const Rational up = grid.next(start);
      if (used(up)) {
        start = grid.next(up);
        continue;
      }
      roots.push_back(start);
      roots.push_back(up);
      start = grid.next(up);
    }
  }
  return Polynomial::from_roots(std::move(roots));
}

/// Moments of c (x - lower)(x - upper) dsigma from those of sigma; the
/// normalizer c makes M_0 = 1. Input length L gives output length L - 2.
inline MomentVector reduce_moments(const MomentVector& m, const Rational& lower, const Rational& upper) {
  if (m.size() < 2) throw ArityError("reduce_moments needs at least two moments");
  const Rational sum = lower + upper;
  const Rational product = lower * upper;
  auto shifted = [&](std::size_t i) { return m.at(i + 2) - sum * m.at(i + 1) + product * m.at(i); };
  const Rational inverse_c = shifted(0);
  if (inverse_c <= 0)
    throw PreconditionError("reduction normalizer m2 - (l+u) m1 + l u is not positive");
  std::vector<Rational> reduced;
  for (std::size_t i = 1; i + 2 <= m.size(); ++i) reduced.push_back(shifted(i) / inverse_c);
  return MomentVector(std::move(reduced));
}

/// The unique m_n with L_{x^shift P}(m) = 0, where n = deg P + shift.
inline Rational forced_extension(const MomentVector& m, const Polynomial& p, std::size_t shift) {
  const Polynomial q = p.shifted_up(shift);
  const std::size_t n = static_cast<std::size_t>(q.degree());
  if (m.size() + 1 < n) throw ArityError("forced extension needs m^(n-1)");
  return -lform_eval_without_top(q, m, n) / q.leading();
}

namespace detail {

/// Atoms of the Stieltjes measure nu for the prefix m^(n-1); for odd n the
/// atom 0 is left out of `positive`.
struct NuSupport {
  std::vector<AlgebraicNumber> positive;
  bool on_grid = true;
};

inline NuSupport nu_support(const MomentVector& m, std::size_t n, const Grid& grid) {
  NuSupport out;
  for (AlgebraicNumber& y : isolate_roots(support_polynomial(m, n))) {
    if (n % 2 == 1 && y.is_rational() && y.rational() == 0) continue;
    if (!y.is_rational() || !grid.contains(y.rational())) out.on_grid = false;
    out.positive.push_back(std::move(y));
  }
  return out;
}

inline std::vector<Rational> rational_points(const NuSupport& nu, std::size_t n) {
  std::vector<Rational> pts;
  if (n % 2 == 1) pts.push_back(0);
  for (const AlgebraicNumber& y : nu.positive) pts.push_back(y.rational());
  return pts;
}

/// n = 1, 2, 3: x, (x - l(m1))(x - u(m1)), x (x - l(m2/m1))(x - u(m2/m1)).
inline Polynomial low_degree_min_poly(const MomentVector& m, std::size_t n, const Grid& grid) {
  switch (n) {
    case 1: return Polynomial::from_roots({Rational(0)});
    case 2: {
      const Rational m1 = m.at(1);
      return Polynomial::from_roots({grid.floor(m1), grid.next(m1)});
    }
    case 3: {
      const Rational ratio = m.at(2) / m.at(1);
      const Rational lo = grid.floor(ratio);
      if (lo == grid.min()) throw InvariantViolation("m2/m1 below the first positive grid point");
      return Polynomial::from_roots({Rational(0), lo, grid.next(ratio)});
    }
    default: throw DomainError("low-degree formula used for n > 3");
  }
}

}  // namespace detail

/// Intermediate quantities of the closed-form n = 4, 5 construction.
struct ExplicitMinPoly {
  Polynomial polynomial;
  /// nu is supported on the grid; the polynomial then just covers supp nu.
  bool nu_on_grid = false;
  Rational t1, t2, floor_t1, floor_t2;
};

/// Closed-form minimizing polynomial for n = 4 and n = 5.
inline ExplicitMinPoly explicit_min_poly(const MomentVector& m, std::size_t n, const Grid& grid) {
  if (n != 4 && n != 5) throw DomainError("closed-form minimizing polynomial exists only for n = 4, 5");
  const MomentVector prefix = m.prefix(n - 1);
  ExplicitMinPoly out;
  const detail::NuSupport nu = detail::nu_support(prefix, n, grid);
  if (nu.on_grid) {
    out.nu_on_grid = true;
    out.polynomial = extend_to_candidate(detail::rational_points(nu, n), n, grid);
    return out;
  }
  if (nu.positive.size() != 2) throw InvariantViolation("nu must have two positive atoms for n = 4, 5");
  const GridBracket b1 = grid_bracket(nu.positive[0], grid);
  const GridBracket b2 = grid_bracket(nu.positive[1], grid);
  const std::size_t s = n - 4;  // moment index shift for n = 5
  auto ratio = [&](const GridBracket& b) {
    const Rational sum = b.lower + b.upper;
    const Rational prod = b.lower * b.upper;
    const Rational num = m.at(3 + s) - sum * m.at(2 + s) + prod * m.at(1 + s);
    const Rational den = m.at(2 + s) - sum * m.at(1 + s) + prod * m.at(s);
    if (den <= 0) throw InvariantViolation("non-positive denominator in t formula");
    return num / den;
  };
  out.t1 = ratio(b2);
  out.t2 = ratio(b1);
  out.floor_t1 = grid.floor(out.t1);
  out.floor_t2 = grid.floor(out.t2);
  const Rational& lo1 = out.floor_t1;
  const Rational& lo2 = out.floor_t2;
  const Rational up1 = grid.next(lo1);
  std::vector<Rational> roots;
  if (n == 5) {
    if (lo1 == grid.min()) throw InvariantViolation("floor(t1) coincides with the root 0 for n = 5");
    roots.push_back(0);
  }
  if (up1 < lo2) {
    roots.insert(roots.end(), {lo1, up1, lo2, grid.next(lo2)});
  } else if (up1 == lo2) {
    const Rational up2 = grid.next(lo2);
    roots.insert(roots.end(), {lo1, lo2, up2, grid.next(up2)});
  } else {
    throw InvariantViolation("floor(t2) < u(floor(t1))");
  }
  out.polynomial = Polynomial::from_roots(std::move(roots));
  return out;
}

/// Support of the unique measure realizing the minimal extension of m^(n-1),
/// by the degree-reducing recursion: n <= 3 from closed forms; otherwise
/// supp nu if it lies on the grid, else for each atom y_l reduce by
/// (x - l(y_l))(x - u(y_l)), recurse at n - 2, drop branches whose support
/// meets {l(y_l), u(y_l)}, and keep the candidate with the smallest L-value
/// (ties to the smallest l).
inline SupportSet support_set(const MomentVector& m, std::size_t n, const Grid& grid) {
  if (n == 0) throw DomainError("support_set needs n >= 1");
  const MomentVector prefix = m.prefix(n - 1);
  if (n == 1) return {{grid.min()}};
  if (n <= 3) {
    // {r} or {l(r), u(r)} with r = m1 (n = 2); {0, r} or {0, l(r), u(r)} with r = m2/m1 (n = 3).
    const Rational r = n == 2 ? prefix.at(1) : prefix.at(2) / prefix.at(1);
    std::vector<Rational> points;
    if (n == 3) points.push_back(grid.min());
    if (grid.contains(r)) {
      points.push_back(r);
    } else {
      points.push_back(grid.floor(r));
      points.push_back(grid.next(r));
    }
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return {std::move(points)};
  }
  const detail::NuSupport nu = detail::nu_support(prefix, n, grid);
  if (nu.on_grid) return {detail::rational_points(nu, n)};

  std::optional<std::pair<Rational, Polynomial>> best;
  for (const AlgebraicNumber& y : nu.positive) {
    const GridBracket b = grid_bracket(y, grid);
    const MomentVector reduced = reduce_moments(prefix, b.lower, b.upper);
    SupportSet sub = support_set(reduced, n - 2, grid);
    const bool meets = std::any_of(sub.points.begin(), sub.points.end(),
                                   [&](const Rational& p) { return p == b.lower || p == b.upper; });
    if (meets) continue;
    sub.points.push_back(b.lower);
    sub.points.push_back(b.upper);
    Polynomial q = extend_to_candidate(sub.points, n, grid);
    Rational value = lform_eval_without_top(q, prefix, n);
    if (!best || value < best->first) best.emplace(std::move(value), std::move(q));
  }
  if (!best) throw InvariantViolation("every reduction index was rejected");
  return {measure_on_points(*best->second.roots(), prefix).atoms};
}

/// P_n^(m) for a prefix m^(n-1) that is I-realizable on the grid.
inline MinPolyCertificate min_poly(const MomentVector& m, std::size_t n, const Grid& grid,
                                   MinPolyMethod method = MinPolyMethod::Automatic) {
  if (n == 0) throw DomainError("min_poly needs n >= 1");
  if (m.size() + 1 < n) throw ArityError("min_poly needs m^(n-1)");
  Polynomial p;
  if (n <= 3) {
    p = detail::low_degree_min_poly(m, n, grid);
  } else if (method == MinPolyMethod::Explicit || (method == MinPolyMethod::Automatic && n <= 5)) {
    p = explicit_min_poly(m, n, grid).polynomial;
  } else {
    p = extend_to_candidate(support_set(m, n, grid).points, n, grid);
  }
  MinPolyCertificate cert{std::move(p), std::nullopt};
  if (m.size() >= n) cert.value = lform_eval(cert.polynomial, m.prefix(n));
  return cert;
}

namespace detail {

/// A polynomial in P_d for d in `degrees` (tried in order) whose roots cover
/// the support; every such P has L_P(m) = 0 for moments of that measure.
inline std::pair<Polynomial, std::size_t> covering_polynomial(const std::vector<Rational>& support,
                                                              std::initializer_list<std::size_t> degrees,
                                                              const Grid& grid) {
  for (std::size_t d : degrees) {
    if (d == 0) continue;
    try {
      return {extend_to_candidate(support, d, grid), d};
    } catch (const DomainError&) {
    }
  }
  throw InvariantViolation("no pattern polynomial covers the boundary support");
}

inline void check_grid(const Grid& grid) {
  if (grid.kind() == Grid::Kind::Bounded)
    throw DomainError("classification on {0..N} is provided by realizable_on_NN");
}

}  // namespace detail

/// Smallest m_n for which (m, m_n) is realizable on the grid, and the unique
/// measure realizing it. For a B-realizable m this is the forced value.
inline std::pair<Rational, AtomicMeasure> minimal_extension(const MomentVector& m, const Grid& grid,
                                                            MinPolyMethod method = MinPolyMethod::Automatic);

/// Inductive classification, prefix by prefix, using the
/// minimizing polynomial while the prefix is interior and the forced next
/// moment once it reaches the boundary.
inline Verdict classify(const MomentVector& m, const Grid& grid, const SolverOptions& options = {}) {
  detail::check_grid(grid);
  const std::size_t n = m.size();
  if (n == 0) throw ArityError("classification needs at least one moment");
  if (n > options.n_max)
    throw LimitExceeded(std::to_string(n) + " moments exceed the limit of " + std::to_string(options.n_max));

  Status state = Status::IRealizable;
  Polynomial poly;
  Rational value;
  AtomicMeasure mu;
  for (std::size_t j = 1; j <= n; ++j) {
    const MomentVector mj = m.prefix(j);
    if (state == Status::IRealizable) {
      poly = min_poly(mj, j, grid, options.method).polynomial;
      value = lform_eval(poly, mj);
      if (value < 0) return {Status::NotRealizable, NegativityWitness{j, poly, value}};
      if (value == 0) {
        state = Status::BRealizable;
        mu = measure_on_points(*poly.roots(), mj);
        if (mu.moment(j) != mj.at(j)) throw InvariantViolation("boundary measure misses the last moment");
      }
      continue;
    }
    auto [cover, degree] = detail::covering_polynomial(mu.atoms, {j - 1, j - 2}, grid);
    const std::size_t shift = j - degree;
    const Rational forced = forced_extension(m.prefix(j - 1), cover, shift);
    if (forced != mj.at(j)) return {Status::NotRealizable, ForcedMismatch{j, cover, shift, forced, mj.at(j)}};
  }
  if (state == Status::IRealizable) return {Status::IRealizable, MinPolyCertificate{poly, value}};
  auto [cover, degree] = detail::covering_polynomial(mu.atoms, {n, n - 1}, grid);
  return {Status::BRealizable, BoundaryCertificate{mu, cover}};
}

inline std::pair<Rational, AtomicMeasure> minimal_extension(const MomentVector& m, const Grid& grid,
                                                            MinPolyMethod method) {
  detail::check_grid(grid);
  const std::size_t n = m.size() + 1;
  if (!m.empty()) {
    const Verdict v = classify(m, grid, {method, std::max<std::size_t>(12, m.size())});
    if (v.status == Status::NotRealizable) throw PreconditionError("minimal extension needs a realizable prefix");
    if (v.status == Status::BRealizable) {
      AtomicMeasure mu = std::get<BoundaryCertificate>(v.certificate).measure;
      return {mu.moment(n), std::move(mu)};
    }
  }
  const Polynomial p = min_poly(m, n, grid, method).polynomial;
  const Rational next = -lform_eval_without_top(p, m, n);
  const MomentVector extended = m.extended(next);
  AtomicMeasure mu = measure_on_points(*p.roots(), extended);
  if (mu.moment(n) != next) throw InvariantViolation("minimal extension measure misses m_n");
  return {next, std::move(mu)};
}

}  // namespace discmom
