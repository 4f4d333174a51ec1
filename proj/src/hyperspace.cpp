#include "hyperspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shiftspace {

namespace {

// Weak order behind set canonicalization: exact for eventually-periodic
// pairs, prefix order at `depth` otherwise.
int compare_streams(const SymbolStream& a, const SymbolStream& b, std::size_t depth) {
  if (a.is_eventually_periodic() && b.is_eventually_periodic()) {
    const auto ord = a.exact_word().sequence_order(b.exact_word());
    if (ord == std::strong_ordering::less) return -1;
    if (ord == std::strong_ordering::greater) return 1;
    return 0;
  }
  for (std::size_t i = 0; i < depth; ++i) {
    if (a.at(i) != b.at(i)) return a.at(i) < b.at(i) ? -1 : 1;
  }
  return 0;
}

}  // namespace

FiniteCompactSet::FiniteCompactSet(std::vector<SymbolStream> elements,
                                   std::size_t compare_depth)
    : elements_(std::move(elements)), depth_(compare_depth) {
  if (elements_.empty())
    throw std::domain_error("a hyperspace point must be a nonempty set");
  const Alphabet& alphabet = elements_.front().alphabet();
  for (const SymbolStream& s : elements_)
    if (!(s.alphabet() == alphabet))
      throw std::domain_error("set elements must share one alphabet");
  std::stable_sort(elements_.begin(), elements_.end(),
                   [&](const SymbolStream& a, const SymbolStream& b) {
                     return compare_streams(a, b, depth_) < 0;
                   });
  elements_.erase(std::unique(elements_.begin(), elements_.end(),
                              [&](const SymbolStream& a, const SymbolStream& b) {
                                return compare_streams(a, b, depth_) == 0;
                              }),
                  elements_.end());
}

bool FiniteCompactSet::all_eventually_periodic() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [](const SymbolStream& s) { return s.is_eventually_periodic(); });
}

FiniteCompactSet FiniteCompactSet::parse(std::string_view text, const Alphabet* ep_alphabet,
                                         std::size_t compare_depth) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    lines.push_back(line.substr(start));
  }
  if (lines.empty()) throw std::domain_error("set file has no elements");

  // Bare literals share one union alphabet so exact distances are defined.
  Alphabet fallback = ep_alphabet ? *ep_alphabet : union_alphabet(lines);
  std::vector<SymbolStream> elements;
  elements.reserve(lines.size());
  for (const std::string& l : lines) elements.push_back(parse_stream_spec(l, &fallback));
  return FiniteCompactSet(std::move(elements), compare_depth);
}

std::string FiniteCompactSet::format() const {
  std::string out;
  for (const SymbolStream& s : elements_) {
    out += s.is_eventually_periodic() ? s.exact_word().literal() : s.spec_string();
    out.push_back('\n');
  }
  return out;
}

bool operator==(const FiniteCompactSet& a, const FiniteCompactSet& b) {
  if (a.size() != b.size()) return false;
  const std::size_t depth = std::min(a.depth_, b.depth_);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (compare_streams(a.elements_[i], b.elements_[i], depth) != 0) return false;
  return true;
}

FiniteCompactSet induced_shift(const FiniteCompactSet& a, std::size_t k) {
  std::vector<SymbolStream> shifted;
  shifted.reserve(a.size());
  for (const SymbolStream& s : a.elements()) shifted.push_back(s.shifted(k));
  return FiniteCompactSet(std::move(shifted), a.compare_depth());
}

Rational hausdorff_exact(const FiniteCompactSet& a, const FiniteCompactSet& b) {
  if (!a.all_eventually_periodic() || !b.all_eventually_periodic())
    throw std::domain_error(
        "hausdorff_exact: generator elements present; use the bounded variant");
  auto directed = [](const FiniteCompactSet& from, const FiniteCompactSet& to) {
    Rational worst = 0;
    for (const SymbolStream& x : from.elements()) {
      Rational best = -1;
      for (const SymbolStream& y : to.elements()) {
        const Rational d = d1_exact(x.exact_word(), y.exact_word());
        if (best < 0 || d < best) best = d;
      }
      if (best > worst) worst = best;
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

std::pair<Rational, Rational> hausdorff_bounded(const FiniteCompactSet& a,
                                                const FiniteCompactSet& b, std::size_t N) {
  auto directed = [&](const FiniteCompactSet& from, const FiniteCompactSet& to) {
    Rational worst_lo = 0, worst_hi = 0;
    for (const SymbolStream& x : from.elements()) {
      Rational best_lo = -1, best_hi = -1;
      for (const SymbolStream& y : to.elements()) {
        const auto [lo, hi] = d1_bounded(x, y, N);
        if (best_lo < 0 || lo < best_lo) best_lo = lo;
        if (best_hi < 0 || hi < best_hi) best_hi = hi;
      }
      worst_lo = std::max(worst_lo, best_lo);
      worst_hi = std::max(worst_hi, best_hi);
    }
    return std::make_pair(worst_lo, worst_hi);
  };
  const auto ab = directed(a, b);
  const auto ba = directed(b, a);
  return {std::max(ab.first, ba.first), std::max(ab.second, ba.second)};
}

OneBlockFamily::OneBlockFamily(std::size_t n, int which) : n_(n), which_(which) {
  if (n < 1) throw std::domain_error("one-block family needs n >= 1");
  if (which != 1 && which != 2) throw std::invalid_argument("which must be 1 or 2");
}

EventuallyPeriodicWord OneBlockFamily::element(std::size_t p, std::size_t r) const {
  if (!contains(p, r))
    throw std::domain_error("run length " + std::to_string(r) + " outside family bound " +
                            std::to_string(max_run()));
  Word pre(p, 0);
  pre.insert(pre.end(), r, 1);
  return EventuallyPeriodicWord(Alphabet::binary(), std::move(pre), {0});
}

std::pair<OneBlockFamily, OneBlockFamily> one_block_sets(std::size_t n) {
  return {OneBlockFamily(n, 1), OneBlockFamily(n, 2)};
}

InvarianceAudit one_block_invariance_check(const OneBlockFamily& s, std::size_t depth) {
  if (depth < s.n() + 2)
    throw std::domain_error("truncation depth " + std::to_string(depth) +
                            " below n + 2 = " + std::to_string(s.n() + 2));
  InvarianceAudit audit;
  audit.invariant = true;
  auto note = [&](std::string line) { audit.cases.push_back(std::move(line)); };

  note("shift(p=0, r=0) = (p=0, r=0): the all-zero point is fixed");
  note("shift(p=0, r>=1) = (p=0, r-1): run shortened from the left, stays in family");
  note("shift(p>=1, r) = (p-1, r): run moved one step left, stays in family");
  note("preimage of (p, r) is (p+1, r): the shifted family covers the family");

  // Concrete re-check of the case analysis over the truncation window.
  for (std::size_t r = 0; r <= s.max_run(); ++r) {
    for (std::size_t p = 0; p + r <= depth; ++p) {
      const EventuallyPeriodicWord e = s.element(p, r);
      const EventuallyPeriodicWord image = e.shifted(1);
      const EventuallyPeriodicWord expected =
          (p > 0) ? s.element(p - 1, r)
                  : s.element(0, r == 0 ? 0 : r - 1);
      if (!(image == expected)) {
        audit.invariant = false;
        note("mismatch at (p=" + std::to_string(p) + ", r=" + std::to_string(r) + ")");
      }
    }
  }
  note(std::string("concrete shifts verified for p + r <= ") + std::to_string(depth));
  return audit;
}

Rational one_block_hausdorff(std::size_t n) {
  const auto [s1, s2] = one_block_sets(n);
  const std::size_t pmax = n + 40;

  auto elements_of = [&](const OneBlockFamily& s) {
    std::vector<EventuallyPeriodicWord> out;
    out.push_back(s.element(0, 0));
    for (std::size_t r = 1; r <= s.max_run(); ++r)
      for (std::size_t p = 0; p <= pmax; ++p) out.push_back(s.element(p, r));
    return out;
  };
  const auto e1 = elements_of(s1);
  const auto e2 = elements_of(s2);

  auto directed = [](const std::vector<EventuallyPeriodicWord>& from,
                     const std::vector<EventuallyPeriodicWord>& to) {
    Rational worst = 0;
    for (const auto& x : from) {
      Rational best = -1;
      for (const auto& y : to) {
        const Rational d = d1_exact(x, y);
        if (best < 0 || d < best) best = d;
      }
      if (best > worst) worst = best;
    }
    return worst;
  };
  return std::max(directed(e1, e2), directed(e2, e1));
}

}  // namespace shiftspace
