#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "streams.hpp"

namespace shiftspace {

inline constexpr std::size_t kDefaultCompareDepth = 128;

// A point of the hyperspace: a canonical (sorted, deduplicated) finite set
// of symbol streams. Eventually-periodic elements are compared exactly;
// generator-backed elements are compared to the configured depth.
class FiniteCompactSet {
 public:
  explicit FiniteCompactSet(std::vector<SymbolStream> elements,
                            std::size_t compare_depth = kDefaultCompareDepth);

  const std::vector<SymbolStream>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t compare_depth() const { return depth_; }
  bool all_eventually_periodic() const;

  // Set file: one sequence literal or tagged stream spec per line; blank
  // lines and '#' comments ignored.
  static FiniteCompactSet parse(std::string_view text, const Alphabet* ep_alphabet = nullptr,
                                std::size_t compare_depth = kDefaultCompareDepth);
  std::string format() const;

  friend bool operator==(const FiniteCompactSet& a, const FiniteCompactSet& b);

 private:
  std::vector<SymbolStream> elements_;
  std::size_t depth_;
};

// Elementwise shift followed by re-canonicalization (elements may merge).
FiniteCompactSet induced_shift(const FiniteCompactSet& a, std::size_t k);

// Exact Hausdorff distance; requires every element eventually periodic.
Rational hausdorff_exact(const FiniteCompactSet& a, const FiniteCompactSet& b);

// Bracket of width <= 2^-(N-1) around the Hausdorff distance, built from
// the depth-N brackets of all element pairs.
std::pair<Rational, Rational> hausdorff_bounded(const FiniteCompactSet& a,
                                                const FiniteCompactSet& b, std::size_t N);

// The expansivity counterexample sets: all binary sequences that are zero
// except for one run of ones of length r at some start position p, plus the
// all-zero limit point. S1 allows r <= n, S2 allows r <= n+1. The family is
// parametric: membership, shift and distance are case analyses over (p, r).
class OneBlockFamily {
 public:
  OneBlockFamily(std::size_t n, int which);

  std::size_t n() const { return n_; }
  int which() const { return which_; }
  std::size_t max_run() const { return which_ == 1 ? n_ : n_ + 1; }

  // The element 0^p 1^r 0^inf (r = 0 collapses to the all-zero point).
  EventuallyPeriodicWord element(std::size_t p, std::size_t r) const;
  bool contains(std::size_t p, std::size_t r) const { return r <= max_run(); }

 private:
  std::size_t n_;
  int which_;
};

std::pair<OneBlockFamily, OneBlockFamily> one_block_sets(std::size_t n);

struct InvarianceAudit {
  bool invariant = false;
  std::vector<std::string> cases;
};

// Verifies shift-invariance of the family symbolically: the image and a
// preimage of every parametric element is named case by case, and concrete
// elements with p below the truncation depth are re-checked with the exact
// shift. Rejects depth < n + 2.
InvarianceAudit one_block_invariance_check(const OneBlockFamily& s, std::size_t depth = 64);

// Exact Hausdorff distance between S1(n) and S2(n), by brute force over
// start positions p <= n + 40. Elements with larger p sit within 2^-(n+40)
// of the shared all-zero point, so the truncation is exact at this radius.
Rational one_block_hausdorff(std::size_t n);

}  // namespace shiftspace
