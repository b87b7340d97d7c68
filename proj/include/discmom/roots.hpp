#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "discmom/grid.hpp"
#include "discmom/polynomial.hpp"

namespace discmom {

using SturmChain = std::vector<Polynomial>;

/// Sturm sequence of the square-free part of p: p0 = sqf(p), p1 = p0',
/// p_{i+1} = -rem(p_{i-1}, p_i).
inline SturmChain sturm_chain(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  SturmChain chain{square_free_part(p)};
  if (p.degree() == 0) return chain;
  chain.push_back(chain[0].derivative());
  while (!chain.back().is_zero()) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(r * Rational(-1));
  }
  return chain;
}

/// Sign changes in the chain evaluated at x (zeros skipped).
inline int sign_variations(const SturmChain& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const Polynomial& p : chain) {
    const int s = sign(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

/// Number of distinct real roots in (a, b].
inline int count_roots(const SturmChain& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

/// Bound B with every real root in [-B, B].
inline Rational cauchy_bound(const Polynomial& p) {
  Rational bound = 0;
  const Rational lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    const Rational r = abs(p.coeff(static_cast<std::size_t>(k))) / lead;
    if (r > bound) bound = r;
  }
  return bound + 1;
}

/// A real algebraic number: either an exact rational, or the unique root of a
/// square-free rational polynomial inside an isolating interval (lo, hi).
/// Irrational numbers lie strictly inside their interval.
class AlgebraicNumber {
 public:
  AlgebraicNumber(const Rational& value) : exact_(value) {}  // NOLINT(implicit)

  AlgebraicNumber(Polynomial poly, Rational lo, Rational hi)
      : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    chain_ = sturm_chain(poly_);
    if (count_roots(chain_, lo_, hi_) != 1) throw InvariantViolation("interval does not isolate exactly one root");
  }

  bool is_rational() const { return exact_.has_value(); }

  const Rational& rational() const {
    if (!exact_) throw DomainError("algebraic number is irrational");
    return *exact_;
  }

  const Polynomial& polynomial() const { return poly_; }

  Rational lower() const { return exact_ ? *exact_ : lo_; }

  Rational upper() const { return exact_ ? *exact_ : hi_; }

  /// Halves the isolating interval.
  void refine() {
    if (exact_) return;
    const Rational mid = (lo_ + hi_) / 2;
    if (count_roots(chain_, lo_, mid) == 1)
      hi_ = mid;
    else
      lo_ = mid;
  }

  /// Refines until the interval is no wider than `width`.
  void refine_to(const Rational& width) {
    while (!exact_ && hi_ - lo_ > width) refine();
  }

  /// sign(y - q), exact.
  int compare(const Rational& q) const {
    if (exact_) return sign(*exact_ - q);
    if (q <= lo_) return 1;
    if (q >= hi_) return -1;
    return count_roots(chain_, lo_, q) == 1 ? -1 : 1;
  }

  /// sign(q(y)), exact; refines a private copy of the interval as needed.
  int sign_of(const Polynomial& q) const {
    if (exact_) return sign(q(*exact_));
    if (q.is_zero()) return 0;
    const Polynomial common = gcd(poly_, q);
    if (common.degree() >= 1 && count_roots(sturm_chain(common), lo_, hi_) == 1) return 0;
    const SturmChain q_chain = sturm_chain(q);
    Rational lo = lo_;
    Rational hi = hi_;
    while (count_roots(q_chain, lo, hi) != 0) {
      const Rational mid = (lo + hi) / 2;
      if (count_roots(chain_, lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    return sign(q(hi));
  }

  /// Decimal approximation for display only.
  double approx() const {
    if (exact_) return to_double(*exact_);
    AlgebraicNumber copy = *this;
    copy.refine_to(Rational(1, 1000000000000LL));
    return to_double((copy.lo_ + copy.hi_) / 2);
  }

 private:
  std::optional<Rational> exact_;
  Polynomial poly_;
  Rational lo_;
  Rational hi_;
  SturmChain chain_;
};

namespace detail {

/// If the single root of p in (lo, hi] is rational, returns it. A rational
/// root s/t of the primitive integer form of p has t dividing the leading
/// coefficient, so after narrowing the interval below 1/lc at most one
/// candidate remains to be tested.
inline std::optional<Rational> rational_root_in(const Polynomial& p, const SturmChain& chain, Rational lo,
                                                Rational hi) {
  if (p(hi) == 0) return hi;
  const std::vector<Integer> ints = primitive_integer_coefficients(p);
  const Integer lc = boost::multiprecision::abs(ints.back());
  const Rational step(Integer(1), lc);
  while (hi - lo >= step) {
    const Rational mid = (lo + hi) / 2;
    if (p(mid) == 0) return mid;
    if (count_roots(chain, lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  // Candidate multiples of 1/lc inside (lo, hi]: at most one.
  const Rational candidate = Rational(floor_integer(hi * Rational(lc)), lc);
  if (candidate > lo && p(candidate) == 0) return candidate;
  return std::nullopt;
}

}  // namespace detail

/// All distinct real roots x >= 0 of p, sorted ascending. Rational roots are
/// returned exactly.
inline std::vector<AlgebraicNumber> isolate_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<AlgebraicNumber> out;
  Polynomial q = square_free_part(p);
  if (q.degree() <= 0) return out;
  if (q(Rational(0)) == 0) {
    out.emplace_back(Rational(0));
    q = divide_out_root(q, 0);
    if (q.degree() <= 0) return out;
  }
  const SturmChain chain = sturm_chain(q);
  const Rational bound = cauchy_bound(q);

  struct Interval {
    Rational lo, hi;
  };
  std::vector<Interval> stack{{Rational(0), bound}};
  std::vector<Interval> isolated;
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    const int count = count_roots(chain, iv.lo, iv.hi);
    if (count == 0) continue;
    if (count == 1) {
      isolated.push_back(iv);
      continue;
    }
    const Rational mid = (iv.lo + iv.hi) / 2;
    stack.push_back({mid, iv.hi});
    stack.push_back({iv.lo, mid});
  }
  std::sort(isolated.begin(), isolated.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (Interval& iv : isolated) {
    if (auto r = detail::rational_root_in(q, chain, iv.lo, iv.hi)) {
      out.emplace_back(*r);
    } else {
      out.emplace_back(q, iv.lo, iv.hi);
    }
  }
  return out;
}

/// l(y) <= y < u(y) with l, u consecutive grid points; for grid members
/// lower = y and upper = u(y).
struct GridBracket {
  Rational lower;
  Rational upper;
  bool member = false;
};

/// Grid floor and successor of an algebraic number, decided by exact sign
/// tests (Sturm counts), never by decimal approximation.
inline GridBracket grid_bracket(const AlgebraicNumber& y, const Grid& grid) {
  if (y.compare(grid.min()) < 0) throw DomainError("value below the grid minimum");
  if (y.is_rational()) {
    const Rational& q = y.rational();
    const bool member = grid.contains(q);
    return {grid.floor(q), grid.next(q), member};
  }
  AlgebraicNumber tight = y;
  tight.refine_to(Rational(1));
  Rational lower = tight.lower() < 0 ? grid.min() : grid.floor(tight.lower());
  while (true) {
    const Rational candidate = grid.next(lower);
    if (y.compare(candidate) > 0)
      lower = candidate;
    else
      return {lower, candidate, false};
  }
}

}  // namespace discmom
