#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperspace.hpp"
#include "matrix.hpp"

namespace shiftspace {

// Periodizes depth-(r+1) prefixes: each word w becomes the purely periodic
// point (w)^inf, which lies within 2^-r of any stream sharing the prefix w.
// The resulting set is a hyperspace periodic point with period dividing r+1.
struct PeriodizeWitness {
  FiniteCompactSet set;
  std::size_t prefix_length;   // r + 1
  Rational closeness_bound;    // 2^-r
  std::size_t orbit_period;    // least d with shift^d(set) = set; divides r+1
};
PeriodizeWitness periodize_set(const Alphabet& alphabet,
                               const std::vector<Word>& prefixes);

// Local-eventually-onto witness on the full shift: M = union over prefixes
// of { prefix . a : a in K }; the induced shift maps M onto K in exactly
// r + 1 steps.
struct LeoWitness {
  FiniteCompactSet m_set;
  std::size_t steps;  // r + 1
  bool exact;         // induced_shift(m_set, steps) == K
};
LeoWitness leo_witness(const std::vector<Word>& prefixes, const FiniteCompactSet& k_set);

// Full-shift sensitivity witness: B copies each element of A to depth n and
// continues with a constant symbol chosen to disagree with the first
// element at index n + 1. After n + 1 induced steps the sets separate by
// more than 1/2 (in fact by at least 1).
struct FullShiftSensitivityWitness {
  FiniteCompactSet b_set;
  Symbol tail_symbol;
  std::size_t iterate;  // n + 1
  Rational separation;  // exact Hausdorff distance at the iterate
};
FullShiftSensitivityWitness full_shift_sensitivity_witness(const FiniteCompactSet& a,
                                                           std::size_t n);

// Li-Yorke proximal/distal partner: flips the symbol of x at every index
// 2^m with m >= n0. d1(x, y) < 2^-(n0-1).
SymbolStream liyorke_witness(const SymbolStream& x, std::size_t n0);

// Sensitivity witness inside a vertex shift. For each element the two
// positions after the depth-(n+1) cylinder are searched for a branching
// vertex; the branched alternative replaces the element when it keeps the
// anchor (first element) at distance >= 1/8 after n steps, otherwise the
// element is kept. The certified Hausdorff separation at iterate n is
// >= 1/8 = 1/2^(M+1) with M = 2, the forbidden-word length of vertex shifts.
struct SftSensitivityWitness {
  FiniteCompactSet c_set;
  std::size_t iterate;  // n
  Rational separation;
  std::vector<std::size_t> branch_positions;  // per input element
  std::vector<bool> replaced;                 // selection-rule outcome
};
SftSensitivityWitness sft_sensitivity_witness(const TransitionMatrix& m,
                                              const Alphabet& alphabet,
                                              const FiniteCompactSet& a, std::size_t n);

// Dense periodic points lifted to the hyperspace: every element's depth-n
// prefix is closed into a periodic point; the resulting set is elementwise
// within 2^-(n-1) of A and is itself periodic under the induced shift.
struct DensePeriodicWitness {
  FiniteCompactSet p_set;
  Rational closeness_bound;  // 2^-(n-1)
  std::size_t orbit_period;  // divides the lcm of the element periods
};
DensePeriodicWitness dense_periodic_hyper(const TransitionMatrix& m,
                                          const Alphabet& alphabet,
                                          const FiniteCompactSet& a, std::size_t n);

// Hyperspace sensitivity witness for the block-concatenation orbit closure:
// given orbit offsets of the wk stream, B truncates each orbit point at a
// block boundary past `depth` and continues with ones. B collapses to the
// constant-one point, and the first iterate l at which some element of A
// still shows a zero in the probe window certifies separation >= 1/2.
struct Example2Witness {
  bool found = false;
  std::optional<FiniteCompactSet> b_set;
  std::size_t collapse_from = 0;  // B is the singleton {(1)} from this iterate
  std::size_t iterate = 0;
  Rational lower_bound = 0;
  std::string note;
};
Example2Witness example2_hyper_witness(const std::vector<std::size_t>& offsets,
                                       std::size_t depth, std::size_t horizon = 5000,
                                       const WkSpec& spec = WkSpec{});

// Engine behind the wk witness, usable with explicit per-element cutoffs
// (parallel to `elements`); handles degenerate inputs honestly.
Example2Witness example2_collapse_witness(const std::vector<SymbolStream>& elements,
                                          const std::vector<std::size_t>& cutoffs,
                                          std::size_t horizon);

}  // namespace shiftspace
