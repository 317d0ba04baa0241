#pragma once

// Brute-force ground truth on small ground sets: exhaustive axiom checks,
// base/circuit/coloop enumeration, duals, and minors, all over bitmask
// families. Ground sets are capped at 20 elements (2^20 subsets).

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "matroidlab/errors.hpp"

namespace matroidlab {

inline constexpr int kMaxFiniteGround = 20;

struct FiniteMatroid {
  std::vector<std::string> labels;  // ground, ordered; bit i <-> labels[i]
  std::vector<bool> indep;          // indexed by subset bitmask, size 1 << n

  int size() const { return static_cast<int>(labels.size()); }
  std::uint32_t full_mask() const {
    return size() == 32 ? ~0u : (1u << size()) - 1u;
  }
  friend bool operator==(const FiniteMatroid&, const FiniteMatroid&) = default;
};

inline FiniteMatroid make_finite_matroid(std::vector<std::string> labels,
                                         std::vector<bool> indep) {
  if (labels.size() > kMaxFiniteGround)
    throw WindowTooLarge("finite ground sets are capped at 20 elements");
  if (indep.size() != (1ull << labels.size()))
    throw std::invalid_argument("independence family has wrong size");
  return FiniteMatroid{std::move(labels), std::move(indep)};
}

inline std::string mask_to_string(const FiniteMatroid& fm, std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < fm.size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    if (!first) out += ",";
    out += fm.labels[static_cast<size_t>(i)];
    first = false;
  }
  return out + "}";
}

// Independent sets no single element extends.
inline std::vector<std::uint32_t> bases(const FiniteMatroid& fm) {
  std::vector<std::uint32_t> out;
  const std::uint32_t full = fm.full_mask();
  for (std::uint32_t m = 0; m <= full; ++m) {
    if (!fm.indep[m]) continue;
    bool maximal = true;
    for (std::uint32_t rest = full & ~m; rest;) {
      const std::uint32_t bit = rest & (0u - rest);
      rest ^= bit;
      if (fm.indep[m | bit]) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

// Minimal dependent sets.
inline std::vector<std::uint32_t> circuits(const FiniteMatroid& fm) {
  std::vector<std::uint32_t> out;
  const std::uint32_t full = fm.full_mask();
  for (std::uint32_t m = 1; m <= full; ++m) {
    if (fm.indep[m]) continue;
    bool minimal = true;
    for (std::uint32_t rest = m; rest;) {
      const std::uint32_t bit = rest & (0u - rest);
      rest ^= bit;
      if (!fm.indep[m ^ bit]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(m);
  }
  return out;
}

// Elements in every base; cross-checked against "element of no circuit".
inline std::uint32_t coloops(const FiniteMatroid& fm) {
  std::uint32_t by_bases = fm.full_mask();
  for (std::uint32_t b : bases(fm)) by_bases &= b;
  std::uint32_t in_circuit = 0;
  for (std::uint32_t c : circuits(fm)) in_circuit |= c;
  const std::uint32_t by_circuits = fm.full_mask() & ~in_circuit;
  if (by_bases != by_circuits)
    throw std::logic_error("coloop definitions disagree: family is not a matroid");
  return by_bases;
}

struct AxiomCheck {
  std::string axiom;
  bool pass = false;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string to_text() const {
    std::string out;
    for (const auto& c : checks) {
      out += c.axiom + ": " + (c.pass ? "PASS" : "FAIL");
      if (!c.detail.empty()) out += " " + c.detail;
      out += "\n";
    }
    return out;
  }
};

// Exhaustive I1-I3 over the stored family; I4 holds structurally on finite
// grounds (every nonempty finite family has maximal elements).
inline AxiomReport check_axioms(const FiniteMatroid& fm) {
  AxiomReport report;
  const std::uint32_t full = fm.full_mask();

  report.checks.push_back(
      {"I1", static_cast<bool>(fm.indep[0]),
       fm.indep[0] ? "" : "counterexample: {} is not in the family"});

  AxiomCheck i2{"I2", true, ""};
  for (std::uint32_t m = 1; m <= full && i2.pass; ++m) {
    if (!fm.indep[m]) continue;
    for (std::uint32_t rest = m; rest;) {
      const std::uint32_t bit = rest & (0u - rest);
      rest ^= bit;
      if (!fm.indep[m ^ bit]) {
        i2.pass = false;
        i2.detail = "counterexample: " + mask_to_string(fm, m) +
                    " independent but " + mask_to_string(fm, m ^ bit) + " is not";
        break;
      }
    }
  }
  report.checks.push_back(i2);

  AxiomCheck i3{"I3", true, ""};
  if (i2.pass) {
    const auto base_list = bases(fm);
    std::vector<bool> is_base(fm.indep.size(), false);
    for (std::uint32_t b : base_list) is_base[b] = true;
    for (std::uint32_t a = 0; a <= full && i3.pass; ++a) {
      if (!fm.indep[a] || is_base[a]) continue;  // non-maximal independent only
      std::uint32_t good = 0;
      for (std::uint32_t rest = full & ~a; rest;) {
        const std::uint32_t bit = rest & (0u - rest);
        rest ^= bit;
        if (fm.indep[a | bit]) good |= bit;
      }
      for (std::uint32_t b : base_list) {
        if ((b & ~a & good) == 0) {
          i3.pass = false;
          i3.detail = "counterexample: A=" + mask_to_string(fm, a) +
                      " has no augmenting element from base B=" + mask_to_string(fm, b);
          break;
        }
      }
    }
  } else {
    i3.pass = false;
    i3.detail = "skipped: family is not downward closed";
  }
  report.checks.push_back(i3);

  report.checks.push_back(
      {"I4", true, "structural: finite families always have maximal elements"});
  return report;
}

// Dual: independent iff disjoint from some base. Downward closure is
// propagated bit by bit from the base complements.
inline FiniteMatroid dualize(const FiniteMatroid& fm) {
  const std::uint32_t full = fm.full_mask();
  std::vector<bool> dual(fm.indep.size(), false);
  for (std::uint32_t b : bases(fm)) dual[full & ~b] = true;
  for (std::uint32_t m = full; m > 0; --m) {
    if (!dual[m]) continue;
    for (std::uint32_t rest = m; rest;) {
      const std::uint32_t bit = rest & (0u - rest);
      rest ^= bit;
      dual[m ^ bit] = true;
    }
  }
  return FiniteMatroid{fm.labels, std::move(dual)};
}

inline std::uint32_t loops(const FiniteMatroid& fm) {
  std::uint32_t out = 0;
  for (int i = 0; i < fm.size(); ++i)
    if (!fm.indep[1u << i]) out |= 1u << i;
  return out;
}

namespace detail {

// Spread the bits of `packed` (indexed over kept positions) back to the
// original ground positions.
inline std::uint32_t expand_mask(std::uint32_t packed, std::uint32_t keep) {
  std::uint32_t out = 0;
  int j = 0;
  for (int i = 0; i < 32 && (keep >> i); ++i) {
    if (!(keep >> i & 1u)) continue;
    if (packed >> j & 1u) out |= 1u << i;
    ++j;
  }
  return out;
}

inline std::vector<std::string> kept_labels(const FiniteMatroid& fm,
                                            std::uint32_t keep) {
  std::vector<std::string> out;
  for (int i = 0; i < fm.size(); ++i)
    if (keep >> i & 1u) out.push_back(fm.labels[static_cast<size_t>(i)]);
  return out;
}

}  // namespace detail

inline FiniteMatroid delete_elements(const FiniteMatroid& fm, std::uint32_t removed) {
  const std::uint32_t keep = fm.full_mask() & ~removed;
  const int n = std::popcount(keep);
  std::vector<bool> indep(1ull << n);
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    indep[m] = fm.indep[detail::expand_mask(m, keep)];
  return FiniteMatroid{detail::kept_labels(fm, keep), std::move(indep)};
}

// Definitional contraction: S independent in M/T iff S union T independent
// in M. Serves as the oracle for contract_coloops.
inline FiniteMatroid contract_definitional(const FiniteMatroid& fm, std::uint32_t t) {
  const std::uint32_t keep = fm.full_mask() & ~t;
  const int n = std::popcount(keep);
  std::vector<bool> indep(1ull << n);
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    indep[m] = fm.indep[detail::expand_mask(m, keep) | t];
  return FiniteMatroid{detail::kept_labels(fm, keep), std::move(indep)};
}

// Contraction by coloops coincides with deletion; any non-coloop in T is
// rejected.
inline FiniteMatroid contract_coloops(const FiniteMatroid& fm, std::uint32_t t) {
  const std::uint32_t certified = coloops(fm);
  if ((t & ~certified) != 0)
    throw NotACalibratedColoop("contraction set contains a non-coloop: " +
                               mask_to_string(fm, t & ~certified));
  return delete_elements(fm, t);
}

inline FiniteMatroid direct_sum(const FiniteMatroid& a, const FiniteMatroid& b) {
  const int n = a.size() + b.size();
  if (n > kMaxFiniteGround)
    throw WindowTooLarge("direct sum exceeds the 20-element ground cap");
  std::vector<std::string> labels;
  for (const auto& l : a.labels) labels.push_back("L:" + l);
  for (const auto& l : b.labels) labels.push_back("R:" + l);
  std::vector<bool> indep(1ull << n);
  const std::uint32_t amask = a.full_mask();
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    indep[m] = a.indep[m & amask] && b.indep[m >> a.size()];
  return FiniteMatroid{std::move(labels), std::move(indep)};
}

}  // namespace matroidlab
