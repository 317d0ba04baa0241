#pragma once

// Matroid-building combinators over the symbolic oracles: finitarization,
// truncation, deletion, direct sum, coloop contraction, and restriction to
// finite windows. Oracles are addressed by a small prefix grammar:
//
//   m | m1 | toy | trunc(K,EXPR) | del((r,c)(r,c)...,EXPR)
//     | sum(EXPR,EXPR) | fin(EXPR)
//
// Truncation is decided by the capacity criterion: an infinite set is
// independent in the k-truncation iff it is independent at finitarization
// level and the inner oracle can still absorb k more points.

#include <cctype>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "matroidlab/errors.hpp"
#include "matroidlab/finite_engine.hpp"
#include "matroidlab/grid_sets.hpp"
#include "matroidlab/matroid_core.hpp"

namespace matroidlab {

struct OracleExpr;
using OracleExprPtr = std::shared_ptr<const OracleExpr>;

struct OracleExpr {
  enum class Kind { M1, M, Toy, ToyFree, Truncate, Delete, DirectSum, Finitarize };

  Kind kind = Kind::M1;
  int level = 0;                // Truncate
  std::vector<Point> removed;   // Delete (sorted)
  OracleExprPtr left, right;

  static OracleExprPtr m1() { return make(Kind::M1); }
  static OracleExprPtr m() { return make(Kind::M); }
  static OracleExprPtr toy() { return make(Kind::Toy); }
  static OracleExprPtr toy_free() { return make(Kind::ToyFree); }
  static OracleExprPtr truncate(int k, OracleExprPtr inner) {
    if (k < 0) throw std::invalid_argument("truncation level must be >= 0");
    auto e = make(Kind::Truncate);
    e->level = k;
    e->left = std::move(inner);
    return e;
  }
  static OracleExprPtr del(std::vector<Point> d, OracleExprPtr inner) {
    auto e = make(Kind::Delete);
    detail::sort_points(d);
    e->removed = std::move(d);
    e->left = std::move(inner);
    return e;
  }
  static OracleExprPtr direct_sum(OracleExprPtr a, OracleExprPtr b) {
    auto e = make(Kind::DirectSum);
    e->left = std::move(a);
    e->right = std::move(b);
    return e;
  }
  static OracleExprPtr finitarize_of(OracleExprPtr inner) {
    auto e = make(Kind::Finitarize);
    e->left = std::move(inner);
    return e;
  }

 private:
  static std::shared_ptr<OracleExpr> make(Kind k) {
    auto e = std::make_shared<OracleExpr>();
    e->kind = k;
    return e;
  }
};

inline std::string to_string(const OracleExpr& e) {
  switch (e.kind) {
    case OracleExpr::Kind::M1: return "m1";
    case OracleExpr::Kind::M: return "m";
    case OracleExpr::Kind::Toy: return "toy";
    case OracleExpr::Kind::ToyFree: return "toyfree";
    case OracleExpr::Kind::Truncate:
      return "trunc(" + std::to_string(e.level) + "," + to_string(*e.left) + ")";
    case OracleExpr::Kind::Delete: {
      std::string pts;
      for (Point p : e.removed)
        pts += "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
      return "del(" + pts + "," + to_string(*e.left) + ")";
    }
    case OracleExpr::Kind::DirectSum:
      return "sum(" + to_string(*e.left) + "," + to_string(*e.right) + ")";
    case OracleExpr::Kind::Finitarize:
      return "fin(" + to_string(*e.left) + ")";
  }
  return "?";
}

namespace detail {

struct ExprParser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "' in oracle expression at offset " +
                       std::to_string(pos));
  }
  int parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected an integer in oracle expression");
    return std::stoi(std::string(text.substr(start, pos - start)));
  }
  std::string parse_word() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  OracleExprPtr parse_expr() {
    const std::string word = parse_word();
    if (word == "m1") return OracleExpr::m1();
    if (word == "m") return OracleExpr::m();
    if (word == "toy") return OracleExpr::toy();
    if (word == "toyfree") return OracleExpr::toy_free();
    if (word == "trunc") {
      expect('(');
      const int k = parse_int();
      expect(',');
      auto inner = parse_expr();
      expect(')');
      return OracleExpr::truncate(k, std::move(inner));
    }
    if (word == "del") {
      expect('(');
      std::vector<Point> pts;
      while (eat('(')) {
        const int r = parse_int();
        expect(',');
        const int c = parse_int();
        expect(')');
        pts.push_back(Point{r, c});
      }
      expect(',');
      auto inner = parse_expr();
      expect(')');
      return OracleExpr::del(std::move(pts), std::move(inner));
    }
    if (word == "sum") {
      expect('(');
      auto a = parse_expr();
      expect(',');
      auto b = parse_expr();
      expect(')');
      return OracleExpr::direct_sum(std::move(a), std::move(b));
    }
    if (word == "fin") {
      expect('(');
      auto inner = parse_expr();
      expect(')');
      return OracleExpr::finitarize_of(std::move(inner));
    }
    throw ParseError("unknown oracle name: '" + word + "'");
  }
};

}  // namespace detail

inline OracleExprPtr parse_oracle_expr(std::string_view text) {
  detail::ExprParser p{text};
  auto e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing characters in oracle expression");
  return e;
}

// Closed-form finitarization. Truncation keeps the finite independent sets
// of its inner oracle, so it vanishes under finitarization; M's finite
// independent sets are exactly M1's.
inline OracleExprPtr finitarize(const OracleExprPtr& e) {
  switch (e->kind) {
    case OracleExpr::Kind::M1: return OracleExpr::m1();
    case OracleExpr::Kind::M: return OracleExpr::m1();
    case OracleExpr::Kind::Toy: return OracleExpr::toy_free();
    case OracleExpr::Kind::ToyFree: return OracleExpr::toy_free();
    case OracleExpr::Kind::Truncate: return finitarize(e->left);
    case OracleExpr::Kind::Delete: return OracleExpr::del(e->removed, finitarize(e->left));
    case OracleExpr::Kind::DirectSum:
      return OracleExpr::direct_sum(finitarize(e->left), finitarize(e->right));
    case OracleExpr::Kind::Finitarize: return finitarize(e->left);
  }
  throw std::logic_error("unreachable oracle kind");
}

inline OracleExprPtr resolve_finitarizations(const OracleExprPtr& e) {
  switch (e->kind) {
    case OracleExpr::Kind::Finitarize: return finitarize(e->left);
    case OracleExpr::Kind::Truncate:
      return OracleExpr::truncate(e->level, resolve_finitarizations(e->left));
    case OracleExpr::Kind::Delete:
      return OracleExpr::del(e->removed, resolve_finitarizations(e->left));
    case OracleExpr::Kind::DirectSum:
      return OracleExpr::direct_sum(resolve_finitarizations(e->left),
                                    resolve_finitarizations(e->right));
    default: return e;
  }
}

inline bool is_grid_expr(const OracleExpr& e) {
  switch (e.kind) {
    case OracleExpr::Kind::M1:
    case OracleExpr::Kind::M: return true;
    case OracleExpr::Kind::Toy:
    case OracleExpr::Kind::ToyFree: return false;
    case OracleExpr::Kind::DirectSum: return false;
    default: return is_grid_expr(*e.left);
  }
}

// Symbolic oracle over grid-valued combinator expressions. Independence of
// an infinite set is M1-independence plus a nonnegative surplus, where the
// surplus is the eventual deficiency minus the dominant-column demand, less
// any truncation levels.
class GridOracle {
 public:
  explicit GridOracle(OracleExprPtr e) : expr_(resolve_finitarizations(e)) {
    if (!is_grid_expr(*expr_))
      throw Undecidable("oracle expression is not grid-valued: " + matroidlab::to_string(*e));
    collect_removed(*expr_);
    detail::sort_points(removed_);
  }
  explicit GridOracle(std::string_view text) : GridOracle(parse_oracle_expr(text)) {}

  const OracleExprPtr& expr() const { return expr_; }
  std::string name() const { return matroidlab::to_string(*expr_); }

  bool ground_contains(Point p) const {
    return p.row >= 1 && p.col >= 1 &&
           !std::binary_search(removed_.begin(), removed_.end(), p);
  }

  bool is_independent(const SetExpr& s) const {
    require_in_ground(s);
    if (!m1_is_independent(s)) return false;
    return surplus(*expr_, s) >= 0;
  }

  ExtNat capacity(const SetExpr& s) const {
    if (!is_independent(s))
      throw DependentInput("capacity requires an independent set");
    const long long v = surplus(*expr_, s);
    return v == kInfinite ? ExtNat::infinity() : ExtNat::of(v);
  }

  bool is_base(const SetExpr& s) const {
    return is_independent(s) && surplus(*expr_, s) == 0;
  }

 private:
  static constexpr long long kInfinite = 1ll << 60;

  void collect_removed(const OracleExpr& e) {
    if (e.kind == OracleExpr::Kind::Delete) {
      removed_.insert(removed_.end(), e.removed.begin(), e.removed.end());
    }
    if (e.left) collect_removed(*e.left);
  }

  void require_in_ground(const SetExpr& s) const {
    for (Point p : removed_)
      if (contains(s, p))
        throw NotInGround("set contains deleted ground element (" +
                          std::to_string(p.row) + "," + std::to_string(p.col) + ")");
  }

  // Signed slack of an M1-independent set; kInfinite stands for "finite set,
  // unbounded extension".
  static long long surplus(const OracleExpr& e, const SetExpr& s) {
    switch (e.kind) {
      case OracleExpr::Kind::M1: {
        const auto cap = m1_capacity(s);
        return cap.infinite ? kInfinite : cap.value;
      }
      case OracleExpr::Kind::M: {
        const auto v = detail::m_surplus(s);
        return v.infinite ? kInfinite : v.value;
      }
      case OracleExpr::Kind::Truncate: {
        const long long inner = surplus(*e.left, s);
        return inner == kInfinite ? kInfinite : inner - e.level;
      }
      case OracleExpr::Kind::Delete:
        return surplus(*e.left, s);
      default:
        throw std::logic_error("surplus: not a grid oracle");
    }
  }

  OracleExprPtr expr_;
  std::vector<Point> removed_;
};

// Finitarization of an arbitrary finite-set predicate: decidable on finite
// inputs only, by checking every subset.
template <typename Pred>
bool generic_finitarization_independent(Pred&& finite_independent, const SetExpr& s) {
  if (!is_finite_set(s))
    throw Undecidable("generic finitarization is only decidable on finite sets");
  const auto& pts = s.finite_in;
  if (pts.size() > 20)
    throw WindowTooLarge("generic finitarization limited to 20 points");
  for (std::uint32_t m = 0; m < (1u << pts.size()); ++m) {
    std::vector<Point> sub;
    for (size_t i = 0; i < pts.size(); ++i)
      if (m >> i & 1u) sub.push_back(pts[i]);
    if (!finite_independent(SetExpr::points(std::move(sub)))) return false;
  }
  return true;
}

// --- restriction to finite windows -----------------------------------------

inline std::string point_label(Point p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

// Row-major cells of the R x C window that survive the expression's deletions.
inline std::vector<Point> window_cells(const OracleExpr& e, int rows, int cols) {
  std::vector<Point> removed;
  for (const OracleExpr* cur = &e; cur; cur = cur->left.get())
    removed.insert(removed.end(), cur->removed.begin(), cur->removed.end());
  detail::sort_points(removed);
  std::vector<Point> cells;
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) {
      const Point p{r, c};
      if (!std::binary_search(removed.begin(), removed.end(), p)) cells.push_back(p);
    }
  return cells;
}

inline FiniteMatroid restrict_window(const OracleExprPtr& expr, int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("window dimensions must be >= 1");
  const auto e = resolve_finitarizations(expr);

  if (e->kind == OracleExpr::Kind::DirectSum)
    return direct_sum(restrict_window(e->left, rows, cols),
                      restrict_window(e->right, rows, cols));

  if (e->kind == OracleExpr::Kind::Toy || e->kind == OracleExpr::Kind::ToyFree) {
    // Every finite subset of N is independent in both: a free matroid.
    const int n = rows * cols;
    if (n > kMaxFiniteGround)
      throw WindowTooLarge("window exceeds the 20-element enumeration cap");
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return FiniteMatroid{std::move(labels), std::vector<bool>(1ull << n, true)};
  }

  const GridOracle oracle(e);
  const auto cells = window_cells(*e, rows, cols);
  const int n = static_cast<int>(cells.size());
  if (n > kMaxFiniteGround)
    throw WindowTooLarge("window exceeds the 20-element enumeration cap");

  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (Point p : cells) labels.push_back(point_label(p));

  std::vector<bool> indep(1ull << n);
  std::vector<Point> pts;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    pts.clear();
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) pts.push_back(cells[static_cast<size_t>(i)]);
    indep[m] = oracle.is_independent(SetExpr::points(pts));
  }
  return FiniteMatroid{std::move(labels), std::move(indep)};
}

// Contraction of certified coloops at the oracle level: the evidence is a
// finite-window enumeration in which every element of T must be a coloop.
// For coloops contraction coincides with deletion.
inline OracleExprPtr contract_coloops(const OracleExprPtr& expr, std::vector<Point> t,
                                      int evidence_rows, int evidence_cols) {
  if (t.empty()) return expr;
  const FiniteMatroid evidence = restrict_window(expr, evidence_rows, evidence_cols);
  const std::uint32_t certified = coloops(evidence);
  for (Point p : t) {
    const std::string label = point_label(p);
    bool ok = false;
    for (int i = 0; i < evidence.size(); ++i)
      if (evidence.labels[static_cast<size_t>(i)] == label && (certified >> i & 1u)) ok = true;
    if (!ok)
      throw NotACalibratedColoop("element " + label +
                                 " is not certified as a coloop by the window evidence");
  }
  return OracleExpr::del(std::move(t), expr);
}

// --- sampled cross-check of symbolic oracles against enumeration -----------

struct CrosscheckReport {
  int rows = 0, cols = 0;
  long long samples = 0;
  long long mismatches = 0;
  std::string first_mismatch;

  bool ok() const { return mismatches == 0; }
  std::string to_text() const {
    std::string out = "crosscheck " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " samples=" + std::to_string(samples) + ": ";
    out += ok() ? "PASS" : ("FAIL " + std::to_string(mismatches) +
                            " mismatches, first at " + first_mismatch);
    return out + "\n";
  }
};

inline CrosscheckReport crosscheck(const OracleExprPtr& expr, int rows, int cols,
                                   long long samples, std::uint64_t seed) {
  const GridOracle oracle(expr);
  const FiniteMatroid fm = restrict_window(expr, rows, cols);
  const auto cells = window_cells(*resolve_finitarizations(expr), rows, cols);

  CrosscheckReport report;
  report.rows = rows;
  report.cols = cols;
  report.samples = samples;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, fm.full_mask());
  std::vector<Point> pts;
  for (long long i = 0; i < samples; ++i) {
    const std::uint32_t m = dist(rng);
    pts.clear();
    for (int b = 0; b < fm.size(); ++b)
      if (m >> b & 1u) pts.push_back(cells[static_cast<size_t>(b)]);
    const bool symbolic = oracle.is_independent(SetExpr::points(pts));
    if (symbolic != fm.indep[m]) {
      if (report.mismatches == 0) report.first_mismatch = mask_to_string(fm, m);
      ++report.mismatches;
    }
  }
  return report;
}

}  // namespace matroidlab
