#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "discmom/solver.hpp"

namespace discmom {

using RootPattern = std::vector<Rational>;

enum class ConditionFamily { P, Q };

inline const char* family_name(ConditionFamily f) { return f == ConditionFamily::P ? "P" : "Q"; }

struct ConditionViolation {
  ConditionFamily family = ConditionFamily::P;
  Polynomial polynomial;
  Rational value;
};

/// Result of checking L_P(m) >= 0 over P_{n,N} and L_Q(m) >= 0 over Q_{n,N}.
struct ConditionReport {
  bool satisfied = true;
  std::optional<ConditionViolation> first_violation;
  std::size_t checked = 0;
};

namespace detail {

/// Calls visit(alpha) for each alpha in A_n on {0..N}; stops early when
/// visit returns false. Returns false if stopped.
inline bool for_each_pattern(std::size_t n, long bound, const std::function<bool(const RootPattern&)>& visit) {
  RootPattern alpha;
  long first = 0;
  if (n % 2 == 1) {
    alpha.push_back(0);
    first = 1;
  }
  const std::size_t pairs = n / 2;
  std::function<bool(std::size_t, long)> rec = [&](std::size_t left, long from) -> bool {
    if (left == 0) return visit(alpha);
    // Room for `left` pairs: last pair starts at most at bound - 1.
    for (long a = from; a + 2 * static_cast<long>(left) - 1 <= bound; ++a) {
      alpha.push_back(a);
      alpha.push_back(a + 1);
      const bool go_on = rec(left - 1, a + 2);
      alpha.pop_back();
      alpha.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return rec(pairs, first);
}

}  // namespace detail

/// Every alpha in A_n with alpha_n <= N, in lexicographic order.
inline std::vector<RootPattern> enumerate_patterns(std::size_t n, long bound) {
  if (bound < static_cast<long>(n)) throw DomainError("pattern enumeration needs N >= n");
  std::vector<RootPattern> out;
  detail::for_each_pattern(n, bound, [&](const RootPattern& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

/// Q_{n,N}: (N - x) P_alpha for alpha in A_{n-1} with alpha_{n-1} <= N - 1.
inline std::vector<Polynomial> enumerate_upper_family(std::size_t n, long bound) {
  if (n == 0) throw DomainError("Q family needs n >= 1");
  if (bound < static_cast<long>(n)) throw DomainError("pattern enumeration needs N >= n");
  const Polynomial r{Rational(bound), Rational(-1)};
  std::vector<Polynomial> out;
  detail::for_each_pattern(n - 1, bound - 1, [&](const RootPattern& a) {
    out.push_back(r * Polynomial::from_roots(a));
    return true;
  });
  return out;
}

/// Exact realizability on {0, ..., N} via the finite condition set
/// L_P(m) >= 0 (P in P_{n,N}) and L_Q(m) >= 0 (Q in Q_{n,N}).
inline ConditionReport realizable_on_NN(const MomentVector& m, long bound) {
  const std::size_t n = m.size();
  if (n == 0) throw ArityError("at least one moment is required");
  if (bound < static_cast<long>(n)) throw DomainError("oracle needs N >= n");
  ConditionReport report;
  auto check = [&](ConditionFamily family, const Polynomial& p) {
    ++report.checked;
    Rational value = lform_eval(p, m);
    if (value < 0) {
      report.satisfied = false;
      report.first_violation = ConditionViolation{family, p, std::move(value)};
      return false;
    }
    return true;
  };
  const bool p_ok = detail::for_each_pattern(n, bound, [&](const RootPattern& a) {
    return check(ConditionFamily::P, Polynomial::from_roots(a));
  });
  if (!p_ok) return report;
  const Polynomial r{Rational(bound), Rational(-1)};
  detail::for_each_pattern(n - 1, bound - 1, [&](const RootPattern& a) {
    return check(ConditionFamily::Q, r * Polynomial::from_roots(a));
  });
  return report;
}

enum class FixtureCase { A, B, C };

/// Moment vectors that satisfy all but one of the nonnegativity conditions,
/// built from the uniform measure on the points of alpha:
/// (a) alpha in A_n, m_n lowered by 1/(2n);
/// (b) alpha in A_{n-1}, m_{n-1} lowered by 1/(2(n-1));
/// (c) alpha in A_{n-1}, m_n raised by c.
inline MomentVector fixture(const RootPattern& alpha, FixtureCase which, std::size_t n, const Rational& c = 1) {
  if (n < 2 && which != FixtureCase::A) throw DomainError("fixture cases b and c need n >= 2");
  if (n == 0) throw DomainError("fixture needs n >= 1");
  const std::size_t expected = which == FixtureCase::A ? n : n - 1;
  if (alpha.size() != expected || !pattern_check(alpha, Grid::naturals()))
    throw DomainError("alpha is not a root pattern of length " + std::to_string(expected));
  if (which == FixtureCase::C && c <= 0) throw DomainError("case c needs c > 0");
  std::vector<Rational> v;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (const Rational& a : alpha) acc += pow(a, k);
    v.push_back(acc / Integer(alpha.size()));
  }
  switch (which) {
    case FixtureCase::A: v[n - 1] -= Rational(Integer(1), Integer(2 * n)); break;
    case FixtureCase::B: v[n - 2] -= Rational(Integer(1), Integer(2 * (n - 1))); break;
    case FixtureCase::C: v[n - 1] += c; break;
  }
  return MomentVector(std::move(v));
}

namespace detail {

inline bool is_pattern_polynomial(const Polynomial& p, std::size_t degree, const Grid& grid) {
  if (p.degree() != static_cast<int>(degree) || !p.roots()) return false;
  const std::vector<Rational>& roots = *p.roots();
  if (roots.size() != degree || !pattern_check(roots, grid)) return false;
  return Polynomial::from_roots(roots) == p;
}

inline bool verify(const MomentVector& m, const MinPolyCertificate& c, const Grid& grid) {
  return is_pattern_polynomial(c.polynomial, m.size(), grid) && c.value && *c.value > 0 &&
         lform_eval(c.polynomial, m) == *c.value;
}

inline bool verify(const MomentVector& m, const BoundaryCertificate& c, const Grid& grid) {
  if (!c.measure.is_valid()) return false;
  for (const Rational& a : c.measure.atoms)
    if (!grid.contains(a)) return false;
  if (!(c.measure.moments(m.size()) == m)) return false;
  const int d = c.polynomial.degree();
  if (d != static_cast<int>(m.size()) && d + 1 != static_cast<int>(m.size())) return false;
  if (d < 1 || !is_pattern_polynomial(c.polynomial, static_cast<std::size_t>(d), grid)) return false;
  return lform_eval(c.polynomial, m.prefix(static_cast<std::size_t>(d))) == 0;
}

inline bool verify(const MomentVector& m, const NegativityWitness& w, const Grid& grid) {
  if (w.index == 0 || w.index > m.size()) return false;
  const int d = w.polynomial.degree();
  if (d < 1 || d > static_cast<int>(w.index)) return false;
  if (!is_pattern_polynomial(w.polynomial, static_cast<std::size_t>(d), grid)) return false;
  const Rational value = lform_eval(w.polynomial, m.prefix(w.index));
  return value < 0 && value == w.value;
}

/// P >= 0 on the grid with L_P = 0 pins every realizing measure to the roots
/// of P, which fixes m_index = the value solving L_{x^shift P}(m) = 0.
inline bool verify(const MomentVector& m, const ForcedMismatch& f, const Grid& grid) {
  if (f.index == 0 || f.index > m.size() || f.shift < 1 || f.shift > f.index) return false;
  const std::size_t d = f.index - f.shift;
  if (d == 0 || !is_pattern_polynomial(f.polynomial, d, grid)) return false;
  if (lform_eval(f.polynomial, m.prefix(d)) != 0) return false;
  const Rational forced = forced_extension(m.prefix(f.index - 1), f.polynomial, f.shift);
  return forced == f.forced && f.actual == m.at(f.index) && forced != f.actual;
}

}  // namespace detail

/// Independent re-validation of a verdict's certificate; false on any
/// inconsistency, never throws.
inline bool verify_certificate(const MomentVector& m, const Verdict& v, const Grid& grid) {
  try {
    if (m.empty()) return false;
    switch (v.status) {
      case Status::IRealizable:
        return std::holds_alternative<MinPolyCertificate>(v.certificate) &&
               detail::verify(m, std::get<MinPolyCertificate>(v.certificate), grid);
      case Status::BRealizable:
        return std::holds_alternative<BoundaryCertificate>(v.certificate) &&
               detail::verify(m, std::get<BoundaryCertificate>(v.certificate), grid);
      case Status::NotRealizable:
        if (const auto* w = std::get_if<NegativityWitness>(&v.certificate)) return detail::verify(m, *w, grid);
        if (const auto* f = std::get_if<ForcedMismatch>(&v.certificate)) return detail::verify(m, *f, grid);
        return false;
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

}  // namespace discmom
