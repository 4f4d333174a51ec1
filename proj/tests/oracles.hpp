// Test-only oracles, kept independent of the implementation paths they
// check: naive integer matrix arithmetic, brute-force canonical forms, and
// the Fibonacci word by word concatenation instead of substitution.
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace oracles {

// --- brute-force canonical form of an eventually periodic sequence --------

struct EpForm {
  std::vector<int> pre, per;
  int at(std::size_t i) const {
    return i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()];
  }
};

// Smallest preperiod length p, then smallest period length l, such that
// x[i] == x[i + l] for every i >= p. Checking i up to pre + 2*lcm(l, per)
// is conclusive for an eventually periodic input.
inline EpForm canonical_form(const EpForm& x) {
  const std::size_t bound = x.pre.size() + 2 * x.per.size();
  for (std::size_t p = 0; p <= bound; ++p) {
    for (std::size_t l = 1; l <= bound; ++l) {
      const std::size_t check = x.pre.size() + 2 * std::lcm(l, x.per.size()) + p;
      bool ok = true;
      for (std::size_t i = p; i + l <= check && ok; ++i)
        if (x.at(i) != x.at(i + l)) ok = false;
      if (!ok) continue;
      EpForm out;
      for (std::size_t i = 0; i < p; ++i) out.pre.push_back(x.at(i));
      for (std::size_t i = 0; i < l; ++i) out.per.push_back(x.at(p + i));
      return out;
    }
  }
  return x;  // unreachable
}

// --- Fibonacci word by concatenation: S1 = 0, S2 = 01, S_{k+1} = S_k S_{k-1}

inline std::vector<int> fibonacci_word(std::size_t len) {
  std::vector<int> a{0}, b{0, 1};  // S1, S2
  while (b.size() < len) {
    std::vector<int> c = b;
    c.insert(c.end(), a.begin(), a.end());
    a = std::move(b);
    b = std::move(c);
  }
  b.resize(len);
  return b;
}

// --- naive dense matrix arithmetic ----------------------------------------

using DenseMatrix = std::vector<std::vector<int>>;

inline DenseMatrix mul_bool(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size();
  DenseMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (b[k][j]) c[i][j] = 1;
  return c;
}

// Definition-level irreducibility: for every pair some l <= n^2 with
// (M^l)_{ij} > 0.
inline bool irreducible_by_powers(const DenseMatrix& m) {
  const std::size_t n = m.size();
  DenseMatrix acc(n, std::vector<int>(n, 0));
  DenseMatrix p = m;
  for (std::size_t l = 1; l <= n * n; ++l) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (p[i][j]) acc[i][j] = 1;
    p = mul_bool(p, m);
  }
  for (const auto& row : acc)
    for (int v : row)
      if (!v) return false;
  return true;
}

// gcd over { l <= n^2 : (M^l)_{ii} > 0 } for a chosen index.
inline std::size_t period_by_diagonal_powers(const DenseMatrix& m, std::size_t index = 0) {
  const std::size_t n = m.size();
  DenseMatrix p = m;
  std::size_t g = 0;
  for (std::size_t l = 1; l <= n * n; ++l) {
    if (p[index][index]) g = std::gcd(g, l);
    p = mul_bool(p, m);
  }
  return g;
}

// Tuple-formula Kronecker power: entry ((i_1..i_k),(j_1..j_k)) is the
// product of the component entries, ranked row-major.
inline DenseMatrix kron_by_tuples(const DenseMatrix& m, std::size_t k) {
  const std::size_t n = m.size();
  std::size_t dim = 1;
  for (std::size_t t = 0; t < k; ++t) dim *= n;
  auto digits = [&](std::size_t rank) {
    std::vector<std::size_t> d(k);
    for (std::size_t t = k; t-- > 0;) {
      d[t] = rank % n;
      rank /= n;
    }
    return d;
  };
  DenseMatrix out(dim, std::vector<int>(dim, 0));
  for (std::size_t r = 0; r < dim; ++r) {
    const auto I = digits(r);
    for (std::size_t c = 0; c < dim; ++c) {
      const auto J = digits(c);
      int prod = 1;
      for (std::size_t t = 0; t < k && prod; ++t) prod = m[I[t]][J[t]];
      out[r][c] = prod;
    }
  }
  return out;
}

// Depth-d isolated-point oracle: some allowed word of length d has exactly
// one allowed extension of length d.
inline std::uint64_t count_extensions(const DenseMatrix& m, std::size_t v, std::size_t depth,
                                      std::vector<std::vector<std::int64_t>>& memo) {
  if (depth == 0) return 1;
  auto& slot = memo[v][depth];
  if (slot >= 0) return static_cast<std::uint64_t>(slot);
  std::uint64_t total = 0;
  for (std::size_t u = 0; u < m.size(); ++u)
    if (m[v][u]) total += count_extensions(m, u, depth - 1, memo);
  slot = static_cast<std::int64_t>(total);
  return total;
}

inline bool isolated_point_by_words(const DenseMatrix& m, std::size_t depth = 12) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::int64_t>> memo(n, std::vector<std::int64_t>(depth + 1, -1));
  // Enumerate allowed words of length `depth` by their end vertex: a word
  // ending at v exists for every v (essential matrices), and its extension
  // count only depends on v.
  std::vector<bool> endable(n, false);
  std::vector<std::vector<std::size_t>> words_by_end(n);
  // depth-step reachability to find genuine end vertices of length-d words
  std::vector<bool> cur(n, true);
  for (std::size_t step = 1; step < depth; ++step) {
    std::vector<bool> next(n, false);
    for (std::size_t v = 0; v < n; ++v)
      if (cur[v])
        for (std::size_t u = 0; u < n; ++u)
          if (m[v][u]) next[u] = true;
    cur = std::move(next);
  }
  for (std::size_t v = 0; v < n; ++v) endable[v] = cur[v];
  for (std::size_t v = 0; v < n; ++v)
    if (endable[v] && count_extensions(m, v, depth, memo) == 1) return true;
  return false;
}

// --- deterministic cross-platform RNG -------------------------------------

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }
};

}  // namespace oracles
