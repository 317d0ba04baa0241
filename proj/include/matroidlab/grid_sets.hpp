#pragma once

// Exact symbolic subsets of the grid N x N (1-based): a finite point set,
// plus infinite "tails" contributing one point per row, minus finite
// exceptions. Every decision procedure in the library reduces to the
// deficiency profile d(n) = n - |S restricted to the first n rows|.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matroidlab/errors.hpp"

namespace matroidlab {

struct Point {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Point&, const Point&) = default;  // row-major
};

// All rows of one column from start_row on: {(r, col) : r >= start_row}.
struct ColumnTail {
  int col = 1;
  int start_row = 1;
  friend auto operator<=>(const ColumnTail&, const ColumnTail&) = default;
};

// Diagonal ray {(start.row + i, start.col + i*col_step) : i >= 0}, col_step >= 1.
// Meets every column at most once; exactly one point per row from start.row on.
struct Ray {
  Point start;
  int col_step = 1;
  friend auto operator<=>(const Ray&, const Ray&) = default;
};

using Tail = std::variant<ColumnTail, Ray>;

inline int tail_start_row(const Tail& t) {
  if (const auto* c = std::get_if<ColumnTail>(&t)) return c->start_row;
  return std::get<Ray>(t).start.row;
}

// The unique point of the tail in a given row, if the row is covered.
inline std::optional<Point> tail_point_in_row(const Tail& t, int row) {
  if (const auto* c = std::get_if<ColumnTail>(&t)) {
    if (row < c->start_row) return std::nullopt;
    return Point{row, c->col};
  }
  const Ray& r = std::get<Ray>(t);
  if (row < r.start.row) return std::nullopt;
  return Point{row, r.start.col + (row - r.start.row) * r.col_step};
}

inline bool tail_contains(const Tail& t, Point p) {
  auto q = tail_point_in_row(t, p.row);
  return q && q->col == p.col;
}

// Same infinite point set from some row on (same column, or same slope and
// intercept). Such tails coincide beyond both start rows.
inline bool tails_same_line(const Tail& a, const Tail& b) {
  const auto* ca = std::get_if<ColumnTail>(&a);
  const auto* cb = std::get_if<ColumnTail>(&b);
  if (ca && cb) return ca->col == cb->col;
  if (ca || cb) return false;
  const Ray& ra = std::get<Ray>(a);
  const Ray& rb = std::get<Ray>(b);
  return ra.col_step == rb.col_step &&
         static_cast<long long>(ra.start.col) -
                 static_cast<long long>(ra.col_step) * ra.start.row ==
             static_cast<long long>(rb.start.col) -
                 static_cast<long long>(rb.col_step) * rb.start.row;
}

// Row of the single intersection point of two non-collinear tails, if any.
inline std::optional<int> tail_intersection_row(const Tail& a, const Tail& b) {
  const int lo = std::max(tail_start_row(a), tail_start_row(b));
  const auto col_at = [](const Tail& t, long long n) -> long long {
    if (const auto* c = std::get_if<ColumnTail>(&t)) return c->col;
    const Ray& r = std::get<Ray>(t);
    return r.start.col + (n - r.start.row) * static_cast<long long>(r.col_step);
  };
  const auto slope = [](const Tail& t) -> long long {
    if (std::holds_alternative<ColumnTail>(t)) return 0;
    return std::get<Ray>(t).col_step;
  };
  const long long ds = slope(a) - slope(b);
  const long long dc = col_at(b, lo) - col_at(a, lo);
  if (ds == 0) return std::nullopt;  // parallel, not collinear
  if (dc % ds != 0) return std::nullopt;
  const long long n = lo + dc / ds;
  if (n < lo) return std::nullopt;
  return static_cast<int>(n);
}

struct SetExpr {
  std::vector<Point> finite_in;   // sorted row-major, disjoint from tails
  std::vector<Tail> tails;        // pairwise disjoint
  std::vector<Point> finite_out;  // sorted, subset of the union of tails

  friend bool operator==(const SetExpr&, const SetExpr&) = default;

  static SetExpr empty() { return SetExpr{}; }
  static SetExpr points(std::vector<Point> ps);
  static SetExpr column_tail(int col, int start_row);
  static SetExpr ray(Point start, int col_step);
};

namespace detail {

inline void sort_points(std::vector<Point>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline bool tail_order(const Tail& a, const Tail& b) {
  const auto key = [](const Tail& t) {
    if (const auto* c = std::get_if<ColumnTail>(&t))
      return std::tuple{0, c->col, c->start_row, 0};
    const Ray& r = std::get<Ray>(t);
    return std::tuple{1, r.start.col, r.start.row, r.col_step};
  };
  return key(a) < key(b);
}

inline void validate(const SetExpr& s) {
  const auto check_point = [](Point p) {
    if (p.row < 1 || p.col < 1)
      throw std::invalid_argument("grid points must have row, col >= 1");
  };
  for (Point p : s.finite_in) check_point(p);
  for (Point p : s.finite_out) check_point(p);
  for (const Tail& t : s.tails) {
    if (const auto* c = std::get_if<ColumnTail>(&t)) {
      if (c->col < 1 || c->start_row < 1)
        throw std::invalid_argument("column tail must have col, start_row >= 1");
    } else {
      const Ray& r = std::get<Ray>(t);
      check_point(r.start);
      if (r.col_step < 1) throw std::invalid_argument("ray col_step must be >= 1");
    }
  }
}

// Restart a tail strictly after `row`, returning the skipped prefix points.
inline std::vector<Point> split_tail_after(Tail& t, int row) {
  std::vector<Point> prefix;
  for (int r = tail_start_row(t); r <= row; ++r) {
    if (r < row) prefix.push_back(*tail_point_in_row(t, r));
  }
  const Point next = *tail_point_in_row(t, row + 1);
  if (std::holds_alternative<ColumnTail>(t)) {
    t = ColumnTail{next.col, next.row};
  } else {
    t = Ray{next, std::get<Ray>(t).col_step};
  }
  return prefix;
}

}  // namespace detail

inline bool contains(const SetExpr& s, Point p) {
  if (std::binary_search(s.finite_out.begin(), s.finite_out.end(), p)) return false;
  if (std::binary_search(s.finite_in.begin(), s.finite_in.end(), p)) return true;
  for (const Tail& t : s.tails)
    if (tail_contains(t, p)) return true;
  return false;
}

inline SetExpr normalize(SetExpr s) {
  detail::validate(s);

  // Make tails pairwise disjoint: merge collinear tails, and where two tails
  // cross in a single point, restart one of them past the crossing (its
  // skipped prefix moves into finite_in).
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < s.tails.size() && !changed; ++i) {
      for (size_t j = i + 1; j < s.tails.size() && !changed; ++j) {
        if (tails_same_line(s.tails[i], s.tails[j])) {
          const size_t drop =
              tail_start_row(s.tails[i]) <= tail_start_row(s.tails[j]) ? j : i;
          s.tails.erase(s.tails.begin() + static_cast<std::ptrdiff_t>(drop));
          changed = true;
        } else if (auto row = tail_intersection_row(s.tails[i], s.tails[j])) {
          auto prefix = detail::split_tail_after(s.tails[j], *row);
          s.finite_in.insert(s.finite_in.end(), prefix.begin(), prefix.end());
          changed = true;
        }
      }
    }
  }
  std::sort(s.tails.begin(), s.tails.end(), detail::tail_order);

  // finite_in: drop duplicates and points already covered by a tail.
  detail::sort_points(s.finite_in);
  std::erase_if(s.finite_in, [&](Point p) {
    for (const Tail& t : s.tails)
      if (tail_contains(t, p)) return true;
    return false;
  });

  // finite_out: points excluded from finite_in simply disappear from both
  // sides; what remains must actually lie in some tail.
  detail::sort_points(s.finite_out);
  std::vector<Point> kept_out;
  for (Point p : s.finite_out) {
    const auto it =
        std::lower_bound(s.finite_in.begin(), s.finite_in.end(), p);
    if (it != s.finite_in.end() && *it == p) {
      s.finite_in.erase(it);
      continue;
    }
    bool in_tail = false;
    for (const Tail& t : s.tails)
      if (tail_contains(t, p)) {
        in_tail = true;
        break;
      }
    if (in_tail) kept_out.push_back(p);
  }
  s.finite_out = std::move(kept_out);
  return s;
}

inline SetExpr SetExpr::points(std::vector<Point> ps) {
  SetExpr s;
  s.finite_in = std::move(ps);
  return normalize(std::move(s));
}

inline SetExpr SetExpr::column_tail(int col, int start_row) {
  SetExpr s;
  s.tails.push_back(ColumnTail{col, start_row});
  return normalize(std::move(s));
}

inline SetExpr SetExpr::ray(Point start, int col_step) {
  SetExpr s;
  s.tails.push_back(Ray{start, col_step});
  return normalize(std::move(s));
}

inline bool is_finite_set(const SetExpr& s) { return s.tails.empty(); }

// Points of S in one row, sorted by column.
inline std::vector<Point> points_in_row(const SetExpr& s, int row) {
  std::vector<Point> out;
  const auto lo = std::lower_bound(s.finite_in.begin(), s.finite_in.end(),
                                   Point{row, 1});
  for (auto it = lo; it != s.finite_in.end() && it->row == row; ++it)
    out.push_back(*it);
  for (const Tail& t : s.tails)
    if (auto p = tail_point_in_row(t, row)) out.push_back(*p);
  std::erase_if(out, [&](Point p) {
    return std::binary_search(s.finite_out.begin(), s.finite_out.end(), p);
  });
  detail::sort_points(out);
  return out;
}

// Exactly S restricted to rows 1..n.
inline std::vector<Point> materialize_rows(const SetExpr& s, int n) {
  std::vector<Point> out;
  for (Point p : s.finite_in)
    if (p.row <= n) out.push_back(p);
  for (const Tail& t : s.tails)
    for (int r = tail_start_row(t); r <= n; ++r) out.push_back(*tail_point_in_row(t, r));
  std::erase_if(out, [&](Point p) {
    return std::binary_search(s.finite_out.begin(), s.finite_out.end(), p);
  });
  detail::sort_points(out);
  return out;
}

struct DeficiencyProfile {
  enum class Eventual { Finite, PlusInfinity, Undefined };

  int stabilization_row = 1;       // N*
  std::vector<long long> values;   // d(1..N*)
  int eventual_slope = 1;          // 1 - number of tails
  Eventual kind = Eventual::PlusInfinity;
  long long eventual_value = 0;    // d-infinity, meaningful when Finite

  long long d(long long n) const {
    if (n <= stabilization_row) return values[static_cast<size_t>(n - 1)];
    return values.back() + eventual_slope * (n - stabilization_row);
  }
  long long min_value() const {
    long long m = values[0];
    for (long long v : values) m = std::min(m, v);
    return m;
  }
  bool all_nonnegative() const { return min_value() >= 0 && eventual_slope >= 0; }
};

// N* = 1 + the largest row index appearing in the structure; beyond it each
// row contributes exactly one point per tail, so d is affine.
inline DeficiencyProfile deficiency_profile(const SetExpr& s) {
  int max_row = 0;
  for (Point p : s.finite_in) max_row = std::max(max_row, p.row);
  for (Point p : s.finite_out) max_row = std::max(max_row, p.row);
  for (const Tail& t : s.tails) max_row = std::max(max_row, tail_start_row(t));

  DeficiencyProfile prof;
  prof.stabilization_row = max_row + 1;
  prof.eventual_slope = 1 - static_cast<int>(s.tails.size());
  prof.values.reserve(static_cast<size_t>(prof.stabilization_row));
  long long count = 0;
  for (int n = 1; n <= prof.stabilization_row; ++n) {
    count += static_cast<long long>(points_in_row(s, n).size());
    prof.values.push_back(n - count);
  }
  if (prof.eventual_slope > 0) {
    prof.kind = DeficiencyProfile::Eventual::PlusInfinity;
  } else if (prof.eventual_slope == 0) {
    prof.kind = DeficiencyProfile::Eventual::Finite;
    prof.eventual_value = prof.values.back();
  } else {
    prof.kind = DeficiencyProfile::Eventual::Undefined;
  }
  return prof;
}

// The unique column holding all but finitely many points, when S is infinite
// and such a column exists. Decidable from the tail structure alone.
inline std::optional<int> dominant_column(const SetExpr& s) {
  if (s.tails.empty()) return std::nullopt;
  const auto* first = std::get_if<ColumnTail>(&s.tails.front());
  if (!first) return std::nullopt;
  for (const Tail& t : s.tails) {
    const auto* c = std::get_if<ColumnTail>(&t);
    if (!c || c->col != first->col) return std::nullopt;
  }
  return first->col;
}

inline SetExpr insert(SetExpr s, Point p) {
  detail::validate(SetExpr{{p}, {}, {}});
  if (contains(s, p)) return s;
  const auto it = std::lower_bound(s.finite_out.begin(), s.finite_out.end(), p);
  if (it != s.finite_out.end() && *it == p) {
    s.finite_out.erase(it);
  } else {
    s.finite_in.push_back(p);
  }
  return normalize(std::move(s));
}

inline SetExpr remove(SetExpr s, Point p) {
  if (!contains(s, p)) return s;
  const auto it = std::lower_bound(s.finite_in.begin(), s.finite_in.end(), p);
  if (it != s.finite_in.end() && *it == p) {
    s.finite_in.erase(it);
  } else {
    s.finite_out.push_back(p);
  }
  return normalize(std::move(s));
}

// Extended nonnegative integer (value or +infinity).
struct ExtNat {
  bool infinite = false;
  long long value = 0;

  static ExtNat infinity() { return ExtNat{true, 0}; }
  static ExtNat of(long long v) { return ExtNat{false, v}; }

  friend bool operator==(const ExtNat&, const ExtNat&) = default;
  bool operator>=(long long k) const { return infinite || value >= k; }
};

namespace detail {

// Each tail of F must be matched (collinearly) by a tail of B for F \ B to
// be finite; unmatched tails meet B in finitely many points only.
inline bool all_tails_matched(const SetExpr& f, const SetExpr& b) {
  for (const Tail& tf : f.tails) {
    bool matched = false;
    for (const Tail& tb : b.tails)
      if (tails_same_line(tf, tb)) {
        matched = true;
        break;
      }
    if (!matched) return false;
  }
  return true;
}

inline int structural_row_bound(const SetExpr& a, const SetExpr& b) {
  return std::max(deficiency_profile(a).stabilization_row,
                  deficiency_profile(b).stabilization_row);
}

}  // namespace detail

inline ExtNat diff_size(const SetExpr& f, const SetExpr& b) {
  if (!detail::all_tails_matched(f, b)) return ExtNat::infinity();
  const int bound = detail::structural_row_bound(f, b);
  const auto fp = materialize_rows(f, bound);
  long long n = 0;
  for (Point p : fp)
    if (!contains(b, p)) ++n;
  return ExtNat::of(n);
}

// F \ B, exact. Finite when every tail of F is matched in B; also expressible
// when B is finite. Otherwise the result leaves the language.
inline SetExpr diff(const SetExpr& f, const SetExpr& b) {
  if (detail::all_tails_matched(f, b)) {
    const int bound = detail::structural_row_bound(f, b);
    std::vector<Point> pts;
    for (Point p : materialize_rows(f, bound))
      if (!contains(b, p)) pts.push_back(p);
    return SetExpr::points(std::move(pts));
  }
  if (is_finite_set(b)) {
    SetExpr out = f;
    for (Point p : b.finite_in) out = remove(std::move(out), p);
    return out;
  }
  throw IncomparableTails("set difference is not expressible: unmatched infinite tails");
}

}  // namespace matroidlab
