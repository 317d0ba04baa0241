#pragma once

// Independence oracles for the grid matroids and the one-dimensional toy
// matroid, plus the constructive augmentation step between them.
//
// M1: a set is independent iff its first n rows hold at most n points, i.e.
// the deficiency d(n) = n - count(n) never goes negative.
//
// M: finite M1-independent sets; infinite M1-independent sets with no
// dominant column; and dominant-column-l sets that arise from an
// M1-independent superset by removing at least l points.

#include <optional>
#include <vector>

#include "matroidlab/errors.hpp"
#include "matroidlab/grid_sets.hpp"

namespace matroidlab {

inline bool m1_is_independent(const SetExpr& s) {
  return deficiency_profile(s).all_nonnegative();
}

// Maximum number of points addable while staying M1-independent; equals the
// eventual deficiency. Finite sets extend forever.
inline ExtNat m1_capacity(const SetExpr& s) {
  const auto prof = deficiency_profile(s);
  if (!prof.all_nonnegative())
    throw DependentInput("m1_capacity requires an M1-independent set");
  if (prof.kind == DeficiencyProfile::Eventual::PlusInfinity)
    return ExtNat::infinity();
  return ExtNat::of(prof.eventual_value);
}

inline bool m1_is_base(const SetExpr& s) {
  return m1_is_independent(s) && m1_capacity(s) == ExtNat::of(0);
}

namespace detail {

// Signed surplus of an M1-independent set over the minimum eventual
// deficiency M requires: l for dominant column l, 0 otherwise. Infinite for
// finite sets. Callers guarantee M1-independence.
inline ExtNat m_surplus(const SetExpr& s) {
  const auto cap = m1_capacity(s);
  if (cap.infinite) return cap;
  const auto l = dominant_column(s);
  const long long required = l ? *l : 0;
  return ExtNat::of(cap.value - required);  // may be negative: M-dependent
}

}  // namespace detail

inline bool m_is_independent(const SetExpr& s) {
  if (!m1_is_independent(s)) return false;
  if (is_finite_set(s)) return true;
  const auto l = dominant_column(s);
  if (!l) return true;
  return m1_capacity(s) >= *l;
}

// Points addable while staying M-independent: the slack of the eventual
// deficiency over the dominant column index (or over zero).
inline ExtNat m_capacity(const SetExpr& s) {
  if (!m_is_independent(s)) throw DependentInput("m_capacity requires an M-independent set");
  return detail::m_surplus(s);
}

inline bool m_is_base(const SetExpr& s) {
  return m_is_independent(s) && m_capacity(s) == ExtNat::of(0);
}

// I3 step: an element of B \ S whose insertion keeps S independent in M,
// scanned row-major. Returns nothing when S is already a base. An augmenting
// element always appears within the structural rows of S and B.
inline std::optional<Point> m_augment(const SetExpr& s, const SetExpr& b) {
  if (!m_is_independent(s)) throw DependentInput("m_augment: S must be M-independent");
  if (!m_is_base(b)) throw NotABase("m_augment: B must be a base of M");
  if (m_is_base(s)) return std::nullopt;

  const int row_limit = detail::structural_row_bound(s, b) + 2;
  for (int row = 1; row <= row_limit; ++row) {
    for (Point p : points_in_row(b, row)) {
      if (contains(s, p)) continue;
      if (m_is_independent(insert(s, p))) return p;
    }
  }
  throw std::logic_error("m_augment: no augmenting element found within structural rows");
}

// --- the toy matroid on N: independent iff at least two naturals missing ---

struct FiniteSubset1D {
  bool cofinite = false;
  std::vector<int> values;  // elements when finite, missing elements when cofinite

  static FiniteSubset1D finite(std::vector<int> elems) {
    for (int e : elems)
      if (e < 1) throw std::invalid_argument("toy elements are positive integers");
    detail_sort(elems);
    return FiniteSubset1D{false, std::move(elems)};
  }
  static FiniteSubset1D cofinite_missing(std::vector<int> missing) {
    for (int e : missing)
      if (e < 1) throw std::invalid_argument("toy elements are positive integers");
    detail_sort(missing);
    return FiniteSubset1D{true, std::move(missing)};
  }
  friend bool operator==(const FiniteSubset1D&, const FiniteSubset1D&) = default;

 private:
  static void detail_sort(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
};

inline bool toy_is_independent(const FiniteSubset1D& s) {
  return !s.cofinite || s.values.size() >= 2;
}

inline bool toy_is_base(const FiniteSubset1D& s) {
  return s.cofinite && s.values.size() == 2;
}

// The finitarization of the toy matroid is free.
inline bool toy_fin_is_independent(const FiniteSubset1D&) { return true; }

inline bool toy_fin_is_base(const FiniteSubset1D& s) {
  return s.cofinite && s.values.empty();
}

}  // namespace matroidlab
