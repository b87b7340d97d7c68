#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "discmom/rational.hpp"

namespace discmom {

/// Discrete support set bounded below with minimum 0: the nonnegative
/// integers, {0, ..., N}, or a finite listed prefix of a general grid.
///
/// floor(y) is the largest grid element not exceeding y and next(y) the
/// smallest element strictly greater than y. For explicit grids, a query whose
/// answer may lie beyond the listed prefix throws GridExhausted.
class Grid {
 public:
  enum class Kind { Naturals, Bounded, Explicit };

  static Grid naturals() { return Grid(Kind::Naturals, 0, {}); }

  static Grid bounded(long n) {
    if (n < 1) throw DomainError("bounded grid needs N >= 1");
    return Grid(Kind::Bounded, n, {});
  }

  static Grid explicit_points(std::vector<Rational> points) {
    if (points.size() < 2) throw DomainError("explicit grid needs at least two points");
    if (points.front() != 0) throw DomainError("explicit grid must start at 0");
    for (std::size_t i = 1; i < points.size(); ++i)
      if (!(points[i - 1] < points[i])) throw DomainError("explicit grid must be strictly increasing");
    return Grid(Kind::Explicit, 0, std::move(points));
  }

  Kind kind() const { return kind_; }

  long bound() const { return bound_; }

  const std::vector<Rational>& points() const { return points_; }

  bool is_naturals() const { return kind_ == Kind::Naturals; }

  bool contains(const Rational& q) const {
    switch (kind_) {
      case Kind::Naturals: return q >= 0 && is_integer(q);
      case Kind::Bounded: return q >= 0 && q <= bound_ && is_integer(q);
      case Kind::Explicit: return std::binary_search(points_.begin(), points_.end(), q);
    }
    return false;
  }

  Rational min() const { return 0; }

  /// l(y): largest grid point <= y.
  Rational floor(const Rational& y) const {
    if (y < 0) throw DomainError(to_string(y) + " lies below the grid minimum 0");
    switch (kind_) {
      case Kind::Naturals: return discmom::floor(y);
      case Kind::Bounded: return std::min(discmom::floor(y), Rational(bound_));
      case Kind::Explicit: {
        if (y > points_.back()) throw GridExhausted("grid prefix ends at " + to_string(points_.back()) +
                                                    "; floor of " + to_string(y) + " is unknown");
        auto it = std::upper_bound(points_.begin(), points_.end(), y);
        return *std::prev(it);
      }
    }
    return 0;
  }

  /// u(y): smallest grid point > y.
  Rational next(const Rational& y) const {
    if (y < 0) return 0;
    switch (kind_) {
      case Kind::Naturals: return discmom::floor(y) + 1;
      case Kind::Bounded: {
        Rational u = discmom::floor(y) + 1;
        if (u > bound_) throw GridExhausted("no grid point above " + to_string(y) + " in {0..N}");
        return u;
      }
      case Kind::Explicit: {
        auto it = std::upper_bound(points_.begin(), points_.end(), y);
        if (it == points_.end())
          throw GridExhausted("grid prefix ends at " + to_string(points_.back()) + "; no successor of " +
                              to_string(y) + " is listed");
        return *it;
      }
    }
    return 0;
  }

  /// Largest grid point < y, if any.
  std::optional<Rational> prev(const Rational& y) const {
    if (y <= 0) return std::nullopt;
    switch (kind_) {
      case Kind::Naturals:
      case Kind::Bounded: {
        Rational f = discmom::floor(y);
        if (f == y) f -= 1;
        if (kind_ == Kind::Bounded && f > bound_) f = bound_;
        return f;
      }
      case Kind::Explicit: {
        if (y > points_.back()) throw GridExhausted("grid prefix too short for predecessor query");
        auto it = std::lower_bound(points_.begin(), points_.end(), y);
        return *std::prev(it);
      }
    }
    return std::nullopt;
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::Naturals: return "nn0";
      case Kind::Bounded: return "nn:" + std::to_string(bound_);
      case Kind::Explicit: {
        std::string s = "explicit:";
        for (std::size_t i = 0; i < points_.size(); ++i) s += (i ? "," : "") + to_string(points_[i]);
        return s;
      }
    }
    return {};
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  Grid(Kind kind, long bound, std::vector<Rational> points)
      : kind_(kind), bound_(bound), points_(std::move(points)) {}

  Kind kind_;
  long bound_;
  std::vector<Rational> points_;
};

/// Parses "nn0", "nn:N", or "explicit:0,1/2,1,...".
inline Grid parse_grid(std::string_view text) {
  if (text == "nn0") return Grid::naturals();
  if (text.starts_with("nn:")) {
    const Rational n = parse_rational(text.substr(3), 3);
    if (!is_integer(n)) throw ParseError("N must be an integer", 3);
    return Grid::bounded(numerator(n).convert_to<long>());
  }
  if (text.starts_with("explicit:")) {
    std::vector<Rational> pts;
    std::size_t start = 9;
    while (true) {
      const std::size_t comma = text.find(',', start);
      const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
      pts.push_back(parse_rational(text.substr(start, stop - start), start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return Grid::explicit_points(std::move(pts));
  }
  throw ParseError("unknown grid '" + std::string(text) + "'; expected nn0, nn:N or explicit:p0,p1,...", 0);
}

/// True iff alpha is a root pattern in A_n for this grid (n = alpha.size()):
/// grid-adjacent pairs, preceded by the single root 0 when n is odd. Such
/// P_alpha are exactly the monic polynomials with n distinct grid roots that
/// are nonnegative on the grid.
inline bool pattern_check(const std::vector<Rational>& alpha, const Grid& grid) {
  for (const Rational& a : alpha)
    if (!grid.contains(a)) throw DomainError(to_string(a) + " is not a grid point");
  for (std::size_t i = 1; i < alpha.size(); ++i)
    if (!(alpha[i - 1] < alpha[i])) return false;
  std::size_t start = 0;
  if (alpha.size() % 2 == 1) {
    if (alpha.front() != grid.min()) return false;
    start = 1;
  }
  for (std::size_t i = start; i + 1 < alpha.size(); i += 2) {
    try {
      if (grid.next(alpha[i]) != alpha[i + 1]) return false;
    } catch (const GridExhausted&) {
      return false;
    }
  }
  return true;
}

}  // namespace discmom
