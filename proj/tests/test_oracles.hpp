#pragma once

// Independent brute-force oracles used only by tests: everything here works
// from materialized windows and greedy search, never from deficiency
// profiles, so it can cross-check the symbolic decision procedures.

#include <algorithm>
#include <random>
#include <vector>

#include "matroidlab/grid_sets.hpp"

namespace testlab {

using namespace matroidlab;

inline long long window_count(const SetExpr& s, int n) {
  return static_cast<long long>(materialize_rows(s, n).size());
}

inline long long window_deficiency(const SetExpr& s, int n) {
  return n - window_count(s, n);
}

// Prefix condition checked row by row over the window.
inline bool window_m1_independent(const SetExpr& s, int n) {
  for (int m = 1; m <= n; ++m)
    if (window_deficiency(s, m) < 0) return false;
  return true;
}

// Maximum number of points insertable within the first n rows while keeping
// every prefix deficiency nonnegative. Greedy from the bottom row upward is
// optimal: a point at a high row consumes slack in fewer prefixes.
inline long long greedy_window_capacity(const SetExpr& s, int n) {
  std::vector<long long> def(static_cast<size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) def[static_cast<size_t>(m)] = window_deficiency(s, m);
  long long added = 0;
  for (int row = n; row >= 1; --row) {
    while (true) {
      long long slack = def[static_cast<size_t>(row)];
      for (int m = row; m <= n; ++m)
        slack = std::min(slack, def[static_cast<size_t>(m)]);
      if (slack < 1) break;
      for (int m = row; m <= n; ++m) --def[static_cast<size_t>(m)];
      ++added;
    }
  }
  return added;
}

// Membership in L by the definitional search: a dominant-column-l set needs
// an M1-independent superset with at least l extra elements, i.e. greedy
// window capacity at least l.
inline bool definitional_m_independent(const SetExpr& s, int n) {
  if (!window_m1_independent(s, n)) return false;
  if (deficiency_profile(s).eventual_slope < 0) return false;
  if (is_finite_set(s)) return true;
  const auto l = dominant_column(s);
  if (!l) return true;
  return greedy_window_capacity(s, n) >= *l;
}

// First window point whose insertion keeps `independent` true.
template <typename Pred>
std::optional<Point> window_augmentation(Pred&& independent, const SetExpr& s, int n) {
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      const Point p{r, c};
      if (contains(s, p)) continue;
      if (independent(insert(s, p))) return p;
    }
  return std::nullopt;
}

// Seeded random symbolic sets: a few finite points, up to `max_tails` tails,
// and exceptions carved from the tails.
struct SetExprGen {
  std::mt19937_64 rng;
  int max_coord = 12;
  int max_tails = 2;

  explicit SetExprGen(std::uint64_t seed) : rng(seed) {}

  int coord() { return static_cast<int>(rng() % static_cast<unsigned>(max_coord)) + 1; }

  SetExpr next() {
    SetExpr s;
    const int n_points = static_cast<int>(rng() % 4);
    for (int i = 0; i < n_points; ++i) s.finite_in.push_back(Point{coord(), coord()});
    const int n_tails = static_cast<int>(rng() % static_cast<unsigned>(max_tails + 1));
    for (int i = 0; i < n_tails; ++i) {
      if (rng() % 2) {
        s.tails.push_back(ColumnTail{coord(), coord()});
      } else {
        s.tails.push_back(Ray{Point{coord(), coord()}, static_cast<int>(rng() % 3) + 1});
      }
    }
    s = normalize(std::move(s));
    const int n_out = static_cast<int>(rng() % 3);
    for (int i = 0; i < n_out; ++i) {
      for (const Tail& t : s.tails) {
        const int row = tail_start_row(t) + static_cast<int>(rng() % 6);
        s.finite_out.push_back(*tail_point_in_row(t, row));
      }
    }
    return normalize(std::move(s));
  }

  // Rejection-sample an infinite set with exactly one tail.
  SetExpr next_infinite() {
    for (;;) {
      SetExpr s = next();
      if (s.tails.size() == 1) return s;
    }
  }

  Point point() { return Point{coord(), coord()}; }
};

}  // namespace testlab
