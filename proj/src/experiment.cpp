#include "experiment.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace shiftspace {

namespace {

std::size_t env_cap(const char* name, std::size_t fallback) {
  if (const char* v = std::getenv(name)) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return fallback;
}

}  // namespace

std::size_t horizon_cap() { return env_cap("SHIFTSPACE_MAX_HORIZON", 1000000); }

std::set<Word> factor_set(const SymbolStream& s, std::size_t L, std::size_t P) {
  if (L < 1) throw std::domain_error("factor_set: window length must be >= 1");
  if (P < L)
    throw std::domain_error("factor_set: budget " + std::to_string(P) +
                            " below window length " + std::to_string(L));
  const Word prefix = s.prefix(P);
  std::set<Word> out;
  for (std::size_t p = 0; p + L <= prefix.size(); ++p)
    out.insert(Word(prefix.begin() + static_cast<std::ptrdiff_t>(p),
                    prefix.begin() + static_cast<std::ptrdiff_t>(p + L)));
  return out;
}

SensitivityTimeSet sensitivity_times(const StreamLanguage& language, const Word& w,
                                     std::size_t K, std::size_t T) {
  if (K < 1) throw std::domain_error("sensitivity_times: delta exponent must be >= 1");
  if (T < 1 || T > horizon_cap())
    throw std::domain_error("sensitivity_times: horizon out of range");
  const std::size_t P = language.budget;
  if (P < w.size() + T + K)
    throw std::domain_error("sensitivity_times: budget too small for horizon");

  const Word prefix = language.stream.prefix(P);

  // Occurrences of w that can anchor a full window of length T + K.
  std::vector<std::size_t> anchors;
  bool w_occurs = w.empty();
  for (std::size_t p = 0; p + w.size() <= prefix.size(); ++p) {
    if (!std::equal(w.begin(), w.end(), prefix.begin() + static_cast<std::ptrdiff_t>(p)))
      continue;
    w_occurs = true;
    if (p + T + K <= prefix.size()) anchors.push_back(p);
  }
  if (!w_occurs)
    throw std::domain_error("sensitivity_times: cylinder word does not occur in the budget");

  SensitivityTimeSet out;
  out.horizon = T;
  out.cylinder = w;
  out.delta_exp = K;
  out.budget = P;
  out.anchors = anchors.size();
  out.times.assign(T + 1, false);
  if (anchors.size() < 2) return out;  // a single point yields no pairs

  // mismatch[j]: some anchor disagrees with the first anchor at offset j.
  // Two anchors disagree at j iff at least one disagrees with the base.
  const std::size_t base = anchors.front();
  std::vector<bool> mismatch(T + K, false);
  for (const std::size_t p : anchors) {
    if (p == base) continue;
    for (std::size_t j = 0; j < T + K; ++j)
      if (prefix[base + j] != prefix[p + j]) mismatch[j] = true;
  }
  for (std::size_t n = 0; n <= T; ++n) {
    for (std::size_t j = n; j < n + K; ++j) {
      // Differences inside the shared prefix w cannot occur.
      if (j >= w.size() && mismatch[j]) {
        out.times[n] = true;
        break;
      }
    }
  }
  return out;
}

SensitivityTimeSet sensitivity_times(const TransitionMatrix& m, const Word& w,
                                     std::size_t K, std::size_t T) {
  if (K < 1) throw std::domain_error("sensitivity_times: delta exponent must be >= 1");
  if (T < 1 || T > horizon_cap())
    throw std::domain_error("sensitivity_times: horizon out of range");
  if (!is_essential(m))
    throw std::domain_error("sensitivity_times: matrix must be essential (trim first)");
  if (!w.empty() && !word_allowed(m, w))
    throw std::domain_error("sensitivity_times: cylinder word not allowed under the matrix");

  // branched[t]: at least two vertices are reachable in exactly t steps, so
  // words through the cylinder can first differ there. With an empty w every
  // position of an essential matrix with >= 2 vertices carries two words.
  const std::size_t steps = T + K + 1;
  std::vector<bool> branched(steps + 1, false);
  if (w.empty()) {
    const bool wide = m.dim() >= 2;
    std::fill(branched.begin(), branched.end(), wide);
  } else {
    std::vector<bool> reach(m.dim(), false);
    reach[static_cast<std::size_t>(w.back())] = true;
    for (std::size_t t = 1; t <= steps; ++t) {
      std::vector<bool> next(m.dim(), false);
      std::size_t count = 0;
      for (std::size_t v = 0; v < m.dim(); ++v) {
        if (!reach[v]) continue;
        for (std::size_t u = 0; u < m.dim(); ++u)
          if (m.get(v, u)) next[u] = true;
      }
      for (std::size_t v = 0; v < m.dim(); ++v) count += next[v];
      branched[t] = count >= 2;
      reach = std::move(next);
    }
  }

  SensitivityTimeSet out;
  out.horizon = T;
  out.cylinder = w;
  out.delta_exp = K;
  out.times.assign(T + 1, false);
  for (std::size_t n = 0; n <= T; ++n) {
    for (std::size_t j = std::max(n, w.size()); j < n + K; ++j) {
      const bool can_differ = w.empty() ? branched[j + 1] : branched[j - w.size() + 1];
      if (can_differ) {
        out.times[n] = true;
        break;
      }
    }
  }
  return out;
}

GapStats gap_stats(const SensitivityTimeSet& ts) {
  GapStats out;
  std::size_t run = 0;
  bool any = false;
  for (std::size_t n = 0; n <= ts.horizon; ++n) {
    if (ts.times[n]) {
      any = true;
      run = 0;
    } else {
      ++run;
      out.max_gap = std::max(out.max_gap, run);
    }
  }
  if (any) out.syndetic_bound = out.max_gap;
  // Least N with [N, horizon] fully present; a tail of length one is not
  // reported (it is indistinguishable from a periodic pattern at the edge).
  if (ts.horizon >= 1 && ts.times[ts.horizon]) {
    std::size_t n = ts.horizon;
    while (n > 0 && ts.times[n - 1]) --n;
    if (n < ts.horizon) out.cofinite_from = n;
  }
  return out;
}

LiYorkeScan liyorke_scan(const SymbolStream& x, const SymbolStream& y, std::size_t T,
                         std::size_t K, const Rational& c) {
  if (T < 1 || T > horizon_cap()) throw std::domain_error("liyorke_scan: horizon out of range");
  if (c <= 0 || c > 2) throw std::domain_error("liyorke_scan: threshold must lie in (0, 2]");

  LiYorkeScan out;
  out.horizon = T;
  out.delta_exp = K;
  out.distal_threshold = c;
  out.classes.assign(T + 1, 0);
  const Rational proximal_cut = pow2_neg(K);
  const std::size_t depth = K + 2;

  bool proximal_late = false, distal_late = false, any_proximal = false, any_distal = false;
  for (std::size_t n = 0; n <= T; ++n) {
    BigInt acc = 0;
    for (std::size_t i = 0; i < depth; ++i)
      if (x.at(n + i) != y.at(n + i)) acc += pow2_int(depth - 1 - i);
    const Rational lo(acc, pow2_int(depth - 1));
    const Rational hi = lo + pow2_neg(depth - 1);
    if (hi < proximal_cut) {
      out.classes[n] = 1;
      any_proximal = true;
      if (n > T / 2) proximal_late = true;
    } else if (lo > c) {
      out.classes[n] = 2;
      any_distal = true;
      if (n > T / 2) distal_late = true;
    }
  }
  if (proximal_late && distal_late)
    out.verdict = LiYorkeVerdict::liyorke_pattern;
  else if (any_proximal && !any_distal)
    out.verdict = LiYorkeVerdict::proximal_only;
  else if (any_distal && !any_proximal)
    out.verdict = LiYorkeVerdict::distal_only;
  else
    out.verdict = LiYorkeVerdict::neither;
  return out;
}

namespace {

// Backward exact-length reachability: layers[t] = vertices from which `to`
// is reachable in exactly t edges.
std::vector<std::vector<bool>> backward_layers(const TransitionMatrix& m, std::size_t to,
                                               std::size_t max_t) {
  std::vector<std::vector<bool>> layers(max_t + 1, std::vector<bool>(m.dim(), false));
  layers[0][to] = true;
  for (std::size_t t = 1; t <= max_t; ++t)
    for (std::size_t v = 0; v < m.dim(); ++v)
      for (std::size_t u = 0; u < m.dim(); ++u)
        if (m.get(v, u) && layers[t - 1][u]) {
          layers[t][v] = true;
          break;
        }
  return layers;
}

// Lexicographically least connector c with |c| = len such that
// from -> c -> to is an allowed path (refining edge by edge).
std::optional<Word> exact_connector(const TransitionMatrix& m, std::size_t from,
                                    std::size_t to, std::size_t len) {
  const auto layers = backward_layers(m, to, len + 1);
  if (!layers[len + 1][from]) return std::nullopt;
  Word c;
  std::size_t v = from;
  for (std::size_t t = 0; t < len; ++t) {
    const std::size_t remaining = len - t;  // edges left after stepping
    bool advanced = false;
    for (std::size_t u = 0; u < m.dim(); ++u) {
      if (m.get(v, u) && layers[remaining][u]) {
        c.push_back(static_cast<Symbol>(u));
        v = u;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;  // unreachable given layers
  }
  return c;
}

}  // namespace

std::optional<ProbeHit> hyper_orbit_probe(const TransitionMatrix& m,
                                          const Alphabet& alphabet,
                                          const std::vector<Word>& src,
                                          const std::vector<Word>& dst, std::size_t T,
                                          std::size_t connector_cap) {
  if (src.empty() || dst.empty()) throw std::domain_error("probe: empty cylinder list");
  for (const Word& w : src)
    if (!word_allowed(m, w)) throw std::domain_error("probe: src cylinder not allowed");
  for (const Word& w : dst)
    if (!word_allowed(m, w)) throw std::domain_error("probe: dst cylinder not allowed");

  // One periodic element realizing u at position 0 and v at position n.
  auto element_for = [&](const Word& u, const Word& v,
                         std::size_t n) -> std::optional<EventuallyPeriodicWord> {
    Word combined;
    if (n >= u.size()) {
      const std::size_t gap = n - u.size();
      if (gap > connector_cap) return std::nullopt;
      const auto c = exact_connector(m, static_cast<std::size_t>(u.back()),
                                     static_cast<std::size_t>(v.front()), gap);
      if (!c) return std::nullopt;
      combined = u;
      combined.insert(combined.end(), c->begin(), c->end());
      combined.insert(combined.end(), v.begin(), v.end());
    } else {
      // Overlap: v must agree with u where they share positions.
      combined = u;
      combined.resize(std::max(u.size(), n + v.size()), -1);
      for (std::size_t t = 0; t < v.size(); ++t) {
        Symbol& slot = combined[n + t];
        if (slot >= 0 && slot != v[t]) return std::nullopt;
        slot = v[t];
      }
      if (!word_allowed(m, combined)) return std::nullopt;
    }
    try {
      return periodic_extension(m, alphabet, combined);
    } catch (const std::domain_error&) {
      return std::nullopt;  // no return path closes this word
    }
  };

  for (std::size_t n = 1; n <= T; ++n) {
    std::vector<SymbolStream> elements;
    bool all_pairs = true;
    for (const Word& u : src) {
      for (const Word& v : dst) {
        const auto e = element_for(u, v, n);
        if (!e) {
          all_pairs = false;
          break;
        }
        elements.push_back(SymbolStream::eventually_periodic(*e));
      }
      if (!all_pairs) break;
    }
    if (all_pairs) return ProbeHit{n, FiniteCompactSet(std::move(elements))};
  }
  return std::nullopt;
}

}  // namespace shiftspace
