#include "witness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shiftspace {

namespace {

class FlipStream final : public StreamImpl {
 public:
  FlipStream(SymbolStream base, std::size_t n0) : base_(std::move(base)), n0_(n0) {}
  Symbol symbol_at(std::size_t i) const override {
    const Symbol s = base_.at(i);
    if (i >= (std::size_t(1) << n0_) && (i & (i - 1)) == 0)
      return static_cast<Symbol>((s + 1) % static_cast<Symbol>(base_.alphabet().size()));
    return s;
  }
  const Alphabet& alphabet() const override { return base_.alphabet(); }
  std::string spec_string() const override {
    return "flip[" + std::to_string(n0_) + "]:" + base_.spec_string();
  }

 private:
  SymbolStream base_;
  std::size_t n0_;
};

bool ep_word_allowed(const TransitionMatrix& m, const EventuallyPeriodicWord& w) {
  // Prefix through two periods covers every transition the word ever uses,
  // including the wrap.
  const std::size_t len = w.preperiod().size() + 2 * w.period().size();
  return word_allowed(m, w.prefix(len));
}

// Deterministic eventually-periodic continuation: from `start`, follow the
// least allowed successor until a vertex repeats.
EventuallyPeriodicWord greedy_periodic_tail(const TransitionMatrix& m,
                                            const Alphabet& alphabet, const Word& head) {
  Word walk = head;
  std::vector<std::ptrdiff_t> seen_at(m.dim(), -1);
  std::size_t v = static_cast<std::size_t>(walk.back());
  seen_at[v] = static_cast<std::ptrdiff_t>(walk.size()) - 1;
  for (;;) {
    std::size_t next = m.dim();
    for (std::size_t u = 0; u < m.dim(); ++u) {
      if (m.get(v, u)) {
        next = u;
        break;
      }
    }
    if (next == m.dim())
      throw std::domain_error("greedy continuation hit a vertex with no out-edge");
    if (seen_at[next] >= 0) {
      const std::size_t cycle_start = static_cast<std::size_t>(seen_at[next]);
      Word pre(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(cycle_start));
      Word per(walk.begin() + static_cast<std::ptrdiff_t>(cycle_start), walk.end());
      return EventuallyPeriodicWord(alphabet, std::move(pre), std::move(per));
    }
    walk.push_back(static_cast<Symbol>(next));
    v = next;
    seen_at[v] = static_cast<std::ptrdiff_t>(walk.size()) - 1;
  }
}

std::size_t orbit_period_dividing(const FiniteCompactSet& s, std::size_t bound) {
  for (std::size_t d = 1; d <= bound; ++d) {
    if (bound % d != 0) continue;
    if (induced_shift(s, d) == s) return d;
  }
  throw std::logic_error("set is not periodic with period dividing " + std::to_string(bound));
}

}  // namespace

PeriodizeWitness periodize_set(const Alphabet& alphabet,
                               const std::vector<Word>& prefixes) {
  if (prefixes.empty()) throw std::domain_error("periodize_set: no prefixes");
  const std::size_t len = prefixes.front().size();
  if (len == 0) throw std::domain_error("periodize_set: prefixes must be nonempty");
  std::vector<SymbolStream> elements;
  for (const Word& w : prefixes) {
    if (w.size() != len)
      throw std::domain_error("periodize_set: prefixes must share one length");
    elements.push_back(SymbolStream::eventually_periodic(
        EventuallyPeriodicWord(alphabet, {}, w)));
  }
  PeriodizeWitness out{FiniteCompactSet(std::move(elements)), len,
                       pow2_neg(len - 1), 0};
  out.orbit_period = orbit_period_dividing(out.set, len);
  return out;
}

LeoWitness leo_witness(const std::vector<Word>& prefixes, const FiniteCompactSet& k_set) {
  if (prefixes.empty()) throw std::domain_error("leo_witness: no prefixes");
  const std::size_t len = prefixes.front().size();
  if (len == 0) throw std::domain_error("leo_witness: prefixes must be nonempty");
  std::vector<SymbolStream> elements;
  for (const Word& w : prefixes) {
    if (w.size() != len)
      throw std::domain_error("leo_witness: prefixes must share one length");
    for (const SymbolStream& a : k_set.elements()) elements.push_back(a.with_prefix(w));
  }
  LeoWitness out{FiniteCompactSet(std::move(elements), k_set.compare_depth()), len, false};
  out.exact = induced_shift(out.m_set, len) == k_set;
  return out;
}

FullShiftSensitivityWitness full_shift_sensitivity_witness(const FiniteCompactSet& a,
                                                           std::size_t n) {
  const Alphabet& alphabet = a.elements().front().alphabet();
  if (alphabet.size() < 2)
    throw std::domain_error("sensitivity witness needs an alphabet of size >= 2");
  if (!a.all_eventually_periodic())
    throw std::domain_error("full_shift_sensitivity_witness: elements must be exact");

  const Symbol anchor = a.elements().front().at(n + 1);
  Symbol tail = 0;
  while (tail == anchor) ++tail;

  std::vector<SymbolStream> b_elements;
  for (const SymbolStream& x : a.elements()) {
    Word pre = x.prefix(n + 1);
    b_elements.push_back(SymbolStream::eventually_periodic(
        EventuallyPeriodicWord(alphabet, std::move(pre), {tail})));
  }
  FullShiftSensitivityWitness out{FiniteCompactSet(std::move(b_elements)), tail, n + 1,
                                  Rational(0)};
  out.separation =
      hausdorff_exact(induced_shift(a, n + 1), induced_shift(out.b_set, n + 1));
  if (!(out.separation > Rational(1, 2)))
    throw std::logic_error("full-shift witness separation not above 1/2");
  return out;
}

SymbolStream liyorke_witness(const SymbolStream& x, std::size_t n0) {
  if (x.alphabet().size() < 2)
    throw std::domain_error("liyorke_witness needs an alphabet of size >= 2");
  return SymbolStream(std::make_shared<FlipStream>(x, n0));
}

SftSensitivityWitness sft_sensitivity_witness(const TransitionMatrix& m,
                                              const Alphabet& alphabet,
                                              const FiniteCompactSet& a, std::size_t n) {
  if (alphabet.size() != m.dim())
    throw std::invalid_argument("sft_sensitivity_witness: alphabet size must equal dimension");
  const SftClassification cls = classify_sft(m);
  if (!cls.sensitive)
    throw std::domain_error(
        "sft_sensitivity_witness: the vertex shift is not sensitive (isolated point)");
  if (!a.all_eventually_periodic())
    throw std::domain_error("sft_sensitivity_witness: elements must be exact");
  for (const SymbolStream& x : a.elements())
    if (!ep_word_allowed(m, x.exact_word()))
      throw std::domain_error("sft_sensitivity_witness: element " +
                              x.exact_word().literal() + " is not allowed under the matrix");

  // Vertex shifts have forbidden words of length M = 2, so the branch is
  // searched in the next two positions after the cylinder.
  constexpr std::size_t kForbiddenLength = 2;
  const Rational keep_threshold(1, 8);  // 1/2^(M+1)

  std::vector<EventuallyPeriodicWord> branched;
  std::vector<std::size_t> branch_positions;
  for (const SymbolStream& xs : a.elements()) {
    const EventuallyPeriodicWord& x = xs.exact_word();
    std::optional<std::size_t> branch_at;
    Symbol replacement = -1;
    for (std::size_t l = 1; l <= kForbiddenLength && !branch_at; ++l) {
      const std::size_t v = static_cast<std::size_t>(x.at(n + l - 1));
      if (m.out_degree(v) < 2) continue;
      for (std::size_t u = 0; u < m.dim(); ++u) {
        if (m.get(v, u) && static_cast<Symbol>(u) != x.at(n + l)) {
          branch_at = n + l;
          replacement = static_cast<Symbol>(u);
          break;
        }
      }
    }
    if (!branch_at)
      throw std::domain_error(
          "sft_sensitivity_witness: no branch within " + std::to_string(kForbiddenLength) +
          " positions after the cylinder of " + x.literal() +
          " (pick a cylinder ending nearer a branching vertex)");
    Word head = x.prefix(*branch_at);
    head.push_back(replacement);
    branched.push_back(greedy_periodic_tail(m, alphabet, head));
    branch_positions.push_back(*branch_at);
  }

  const EventuallyPeriodicWord anchor = a.elements().front().exact_word().shifted(n);
  std::vector<SymbolStream> c_elements;
  std::vector<bool> replaced;
  for (std::size_t i = 0; i < branched.size(); ++i) {
    const bool keep_branch =
        d1_exact(anchor, branched[i].shifted(n)) >= keep_threshold;
    replaced.push_back(keep_branch);
    c_elements.push_back(SymbolStream::eventually_periodic(
        keep_branch ? branched[i] : a.elements()[i].exact_word()));
  }

  SftSensitivityWitness out{FiniteCompactSet(std::move(c_elements)), n, Rational(0),
                            std::move(branch_positions), std::move(replaced)};
  out.separation = hausdorff_exact(induced_shift(a, n), induced_shift(out.c_set, n));
  if (out.separation < keep_threshold)
    throw std::logic_error("sft witness separation fell below 1/8");
  return out;
}

DensePeriodicWitness dense_periodic_hyper(const TransitionMatrix& m,
                                          const Alphabet& alphabet,
                                          const FiniteCompactSet& a, std::size_t n) {
  if (n < 1) throw std::domain_error("dense_periodic_hyper: depth must be >= 1");
  std::vector<SymbolStream> p_elements;
  std::size_t lcm_period = 1;
  for (const SymbolStream& x : a.elements()) {
    const EventuallyPeriodicWord ext = periodic_extension(m, alphabet, x.prefix(n));
    lcm_period = std::lcm(lcm_period, ext.period().size());
    p_elements.push_back(SymbolStream::eventually_periodic(ext));
  }
  DensePeriodicWitness out{FiniteCompactSet(std::move(p_elements), a.compare_depth()),
                           pow2_neg(n - 1), 0};
  out.orbit_period = orbit_period_dividing(out.p_set, lcm_period);
  return out;
}

Example2Witness example2_collapse_witness(const std::vector<SymbolStream>& elements,
                                          const std::vector<std::size_t>& cutoffs,
                                          std::size_t horizon) {
  if (elements.empty() || elements.size() != cutoffs.size())
    throw std::invalid_argument("collapse witness: elements/cutoffs mismatch");
  const Alphabet binary = Alphabet::binary();

  std::vector<SymbolStream> b_elements;
  std::size_t collapse_from = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Word head = elements[i].prefix(cutoffs[i]);
    b_elements.push_back(SymbolStream::eventually_periodic(
        EventuallyPeriodicWord(binary, std::move(head), {1})));
    collapse_from = std::max(collapse_from, cutoffs[i]);
  }

  Example2Witness out;
  out.b_set = FiniteCompactSet(b_elements);
  out.collapse_from = collapse_from;

  const SymbolStream ones =
      SymbolStream::eventually_periodic(EventuallyPeriodicWord(binary, {}, {1}));
  constexpr std::size_t kProbeDepth = 40;
  for (std::size_t l = collapse_from; l <= horizon; ++l) {
    // Past collapse_from the image of B is the singleton {(1)}; the distance
    // to it is the worst zero seen in any element's window.
    Rational lower = 0;
    for (const SymbolStream& x : elements) {
      const auto [lo, hi] = d1_bounded(x.shifted(l), ones, kProbeDepth);
      lower = std::max(lower, lo);
    }
    if (lower >= Rational(1, 2)) {
      out.found = true;
      out.iterate = l;
      out.lower_bound = lower;
      return out;
    }
  }
  out.note = "no iterate in [" + std::to_string(collapse_from) + ", " +
             std::to_string(horizon) + "] separates by 1/2";
  return out;
}

Example2Witness example2_hyper_witness(const std::vector<std::size_t>& offsets,
                                       std::size_t depth, std::size_t horizon,
                                       const WkSpec& spec) {
  if (offsets.empty()) throw std::domain_error("example2_hyper_witness: no orbit offsets");
  const SymbolStream x = wk_stream(spec);

  std::vector<SymbolStream> elements;
  std::vector<std::size_t> cutoffs;
  for (const std::size_t k : offsets) {
    elements.push_back(x.shifted(k));
    // Cut at the first block boundary at least `depth` past this offset, so
    // the surrogate ends on a whole block of the stream.
    std::size_t m = 1;
    for (;;) {
      const std::vector<std::size_t> b = wk_block_boundaries(spec, m);
      if (b.back() >= k + depth) {
        cutoffs.push_back(b.back() - k);
        break;
      }
      ++m;
    }
  }
  return example2_collapse_witness(elements, cutoffs, horizon);
}

}  // namespace shiftspace
