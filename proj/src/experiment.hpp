#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "hyperspace.hpp"
#include "matrix.hpp"

namespace shiftspace {

std::size_t horizon_cap();  // SHIFTSPACE_MAX_HORIZON, default 1000000

// All length-L windows occurring in the first P symbols of s: a lower
// approximation of the factor language of the orbit closure.
std::set<Word> factor_set(const SymbolStream& s, std::size_t L, std::size_t P);

// Separation times of a cylinder: n is in the set iff two words of length
// n + K in the language share the prefix w and differ at some index in
// [n, n+K-1]; such a pair separates past 2^-K after n shifts. A difference
// exactly at window index K would separate by exactly 2^-K and is excluded.
struct SensitivityTimeSet {
  std::size_t horizon = 0;
  std::vector<bool> times;  // indexed 0..horizon
  Word cylinder;
  std::size_t delta_exp = 0;  // delta = 2^-K
  // Stream-language runs record the prefix budget and the number of usable
  // cylinder occurrences; SFT runs use the exact language (budget 0).
  std::size_t budget = 0;
  std::size_t anchors = 0;
};

// Language sampled from a stream prefix. The default budget is 10 * horizon.
struct StreamLanguage {
  SymbolStream stream;
  std::size_t budget;
};

// Empty w is accepted and means the whole-space neighborhood.
SensitivityTimeSet sensitivity_times(const StreamLanguage& language, const Word& w,
                                     std::size_t K, std::size_t T);
SensitivityTimeSet sensitivity_times(const TransitionMatrix& m, const Word& w,
                                     std::size_t K, std::size_t T);

struct GapStats {
  std::size_t max_gap = 0;  // longest run of absent indices in [0, horizon]
  std::optional<std::size_t> cofinite_from;   // least N with [N, horizon] present
  std::optional<std::size_t> syndetic_bound;  // max_gap, when times nonempty
};
GapStats gap_stats(const SensitivityTimeSet& ts);

// Certified interval scan of one pair along the orbit: a time is proximal
// when the distance bracket at depth K+2 stays below 2^-K, distal when its
// lower bound exceeds c. Verdicts come from the brackets only.
enum class LiYorkeVerdict { liyorke_pattern, proximal_only, distal_only, neither };

struct LiYorkeScan {
  std::size_t horizon = 0;
  std::size_t delta_exp = 0;
  Rational distal_threshold;
  // 0 = undetermined, 1 = proximal, 2 = distal, indexed 0..horizon.
  std::vector<std::uint8_t> classes;
  LiYorkeVerdict verdict = LiYorkeVerdict::neither;
};
LiYorkeScan liyorke_scan(const SymbolStream& x, const SymbolStream& y, std::size_t T,
                         std::size_t K, const Rational& c);

// Brute-force hyperspace transitivity probe: the first iterate n <= T at
// which one finite set of periodic points realizes every src -> dst cylinder
// transition simultaneously. Each element starts with its src word and shows
// its dst word at position n; connectors are searched exhaustively up to
// connector_cap, so absence is only "absence within bounds".
struct ProbeHit {
  std::size_t iterate;
  FiniteCompactSet set;
};
std::optional<ProbeHit> hyper_orbit_probe(const TransitionMatrix& m,
                                          const Alphabet& alphabet,
                                          const std::vector<Word>& src,
                                          const std::vector<Word>& dst, std::size_t T,
                                          std::size_t connector_cap = 8);

}  // namespace shiftspace
