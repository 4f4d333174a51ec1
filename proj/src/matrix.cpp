#include "matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
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

void require_essential(const TransitionMatrix& m, const char* who) {
  if (m.dim() == 0) throw std::domain_error(std::string(who) + ": empty matrix");
  if (!is_essential(m))
    throw std::domain_error(std::string(who) + ": matrix must be essential (trim first)");
}

}  // namespace

TransitionMatrix::TransitionMatrix(std::size_t n)
    : n_(n), wpr_((n + 63) / 64), bits_(n_ * wpr_, 0) {}

TransitionMatrix TransitionMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  TransitionMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw std::invalid_argument("transition matrix must be square");
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1)
        throw std::invalid_argument("matrix entries must be 0 or 1");
      m.set(i, j, rows[i][j] == 1);
    }
  }
  return m;
}

TransitionMatrix TransitionMatrix::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      if (tok == "0")
        row.push_back(0);
      else if (tok == "1")
        row.push_back(1);
      else
        throw std::invalid_argument("malformed matrix entry: \"" + tok + "\"");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix file");
  for (const auto& r : rows)
    if (r.size() != rows.size())
      throw std::invalid_argument("matrix is not square: " + std::to_string(rows.size()) +
                                  " rows, a row of width " + std::to_string(r.size()));
  return from_rows(rows);
}

bool TransitionMatrix::get(std::size_t i, std::size_t j) const {
  return (bits_[i * wpr_ + j / 64] >> (j % 64)) & 1u;
}

void TransitionMatrix::set(std::size_t i, std::size_t j, bool v) {
  std::uint64_t& w = bits_[i * wpr_ + j / 64];
  const std::uint64_t mask = std::uint64_t(1) << (j % 64);
  if (v)
    w |= mask;
  else
    w &= ~mask;
}

std::size_t TransitionMatrix::out_degree(std::size_t i) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < wpr_; ++w) c += std::popcount(bits_[i * wpr_ + w]);
  return c;
}

bool TransitionMatrix::row_empty(std::size_t i) const { return out_degree(i) == 0; }

bool TransitionMatrix::col_empty(std::size_t j) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i, j)) return false;
  return true;
}

std::string TransitionMatrix::format() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out.push_back(' ');
      out.push_back(get(i, j) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

bool is_essential(const TransitionMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.row_empty(i) || m.col_empty(i)) return false;
  return m.dim() > 0;
}

TrimResult trim_essential(const TransitionMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> removed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      std::size_t outd = 0, ind = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!alive[j]) continue;
        outd += m.get(i, j);
        ind += m.get(j, i);
      }
      if (outd == 0 || ind == 0) {
        alive[i] = false;
        removed.push_back(i);
        changed = true;
      }
    }
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) kept.push_back(i);
  TransitionMatrix out(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (m.get(kept[i], kept[j])) out.set(i, j, true);
  return {std::move(out), std::move(removed), std::move(kept)};
}

TransitionMatrix bool_multiply(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("bool_multiply: dimension mismatch");
  const std::size_t n = a.dim();
  const std::size_t wpr = a.words_per_row();
  TransitionMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t* dst = out.row(i);
    const std::uint64_t* src = a.row(i);
    for (std::size_t w = 0; w < wpr; ++w) {
      std::uint64_t bits = src[w];
      while (bits) {
        const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* brow = b.row(j);
        for (std::size_t t = 0; t < wpr; ++t) dst[t] |= brow[t];
      }
    }
  }
  return out;
}

TransitionMatrix bool_power(const TransitionMatrix& m, std::size_t l) {
  if (l < 1) throw std::domain_error("bool_power: exponent must be >= 1");
  TransitionMatrix base = m;
  TransitionMatrix result = m;
  --l;
  while (l) {
    if (l & 1) result = bool_multiply(result, base);
    l >>= 1;
    if (l) base = bool_multiply(base, base);
  }
  return result;
}

std::vector<std::size_t> scc_ids(const TransitionMatrix& m, std::size_t* count) {
  const std::size_t n = m.dim();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, kUnset), low(n), num(n, kUnset), stack, call;
  std::vector<std::size_t> next(n, 0);
  std::vector<bool> on_stack(n, false);
  std::size_t timer = 0, comps = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (num[root] != kUnset) continue;
    call.push_back(root);
    while (!call.empty()) {
      const std::size_t v = call.back();
      if (num[v] == kUnset) {
        num[v] = low[v] = timer++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (next[v] < n) {
        const std::size_t u = next[v]++;
        if (!m.get(v, u)) continue;
        if (num[u] == kUnset) {
          call.push_back(u);
          descended = true;
          break;
        }
        if (on_stack[u]) low[v] = std::min(low[v], num[u]);
      }
      if (descended) continue;
      if (low[v] == num[v]) {
        for (;;) {
          const std::size_t u = stack.back();
          stack.pop_back();
          on_stack[u] = false;
          comp[u] = comps;
          if (u == v) break;
        }
        ++comps;
      }
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back();
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  if (count) *count = comps;
  return comp;
}

bool is_irreducible(const TransitionMatrix& m) {
  require_essential(m, "is_irreducible");
  std::size_t comps = 0;
  scc_ids(m, &comps);
  return comps == 1;
}

namespace {

// gcd over { l <= n^2 : (M^l)_{ii} > 0 } for the first index, by iterated
// row-vector products. Used as a guard on the BFS-level computation.
std::size_t diagonal_power_period(const TransitionMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<bool> reach(n, false);
  std::size_t g = 0;
  std::vector<bool> cur(n, false);
  cur[0] = true;
  for (std::size_t l = 1; l <= n * n; ++l) {
    std::vector<bool> nxt(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (!cur[i]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (m.get(i, j)) nxt[j] = true;
    }
    cur = std::move(nxt);
    if (cur[0]) g = std::gcd(g, l);
  }
  return g;
}

}  // namespace

std::size_t matrix_period(const TransitionMatrix& m) {
  require_essential(m, "matrix_period");
  if (!is_irreducible(m)) throw std::domain_error("matrix_period: matrix is reducible");
  const std::size_t n = m.dim();

  std::vector<std::size_t> level(n, static_cast<std::size_t>(-1));
  std::deque<std::size_t> queue;
  level[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u = 0; u < n; ++u) {
      if (!m.get(v, u)) continue;
      if (level[u] == static_cast<std::size_t>(-1)) {
        level[u] = level[v] + 1;
        queue.push_back(u);
      }
    }
  }
  long long g = 0;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u) {
      if (!m.get(v, u)) continue;
      const long long diff = static_cast<long long>(level[v]) + 1 -
                             static_cast<long long>(level[u]);
      g = std::gcd(g, diff < 0 ? -diff : diff);
    }
  const std::size_t period = static_cast<std::size_t>(g);

  if (n <= 64 && diagonal_power_period(m) != period)
    throw std::logic_error("matrix_period: BFS-level and diagonal-power routes disagree");
  return period;
}

bool is_primitive(const TransitionMatrix& m) {
  require_essential(m, "is_primitive");
  const bool result = is_irreducible(m) && matrix_period(m) == 1;
  const std::size_t n = m.dim();
  if (n <= 64) {
    // Wielandt: a primitive matrix has M^(n^2-2n+2) strictly positive.
    const std::size_t e = n * n - 2 * n + 2;
    const TransitionMatrix p = bool_power(m, e);
    bool strict = true;
    for (std::size_t i = 0; i < n && strict; ++i)
      for (std::size_t j = 0; j < n && strict; ++j)
        if (!p.get(i, j)) strict = false;
    if (strict != result)
      throw std::logic_error("is_primitive: period route and Wielandt power disagree");
  }
  return result;
}

std::size_t kron_size_cap() { return env_cap("SHIFTSPACE_KRON_CAP", 4096); }

TransitionMatrix kron_power(const TransitionMatrix& m, std::size_t k,
                            std::optional<std::size_t> cap) {
  if (k < 1) throw std::domain_error("kron_power: k must be >= 1");
  const std::size_t limit = cap.value_or(kron_size_cap());
  const std::size_t n = m.dim();
  std::size_t dim = 1;
  for (std::size_t t = 0; t < k; ++t) {
    if (n != 0 && dim > limit / n)
      throw std::domain_error("kron_power: n^k = " + std::to_string(n) + "^" +
                              std::to_string(k) + " exceeds size cap " +
                              std::to_string(limit));
    dim *= n;
  }
  if (dim > limit)
    throw std::domain_error("kron_power: dimension exceeds size cap");

  TransitionMatrix out(1);
  out.set(0, 0, true);
  std::size_t d = 1;
  for (std::size_t t = 0; t < k; ++t) {
    // out = out (x) m, row-major tuple ranking.
    TransitionMatrix next(d * n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (!out.get(i, j)) continue;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (m.get(a, b)) next.set(i * n + a, j * n + b, true);
      }
    out = std::move(next);
    d *= n;
  }
  return out;
}

bool has_isolated_point(const TransitionMatrix& m) {
  require_essential(m, "has_isolated_point");
  const std::size_t n = m.dim();
  // forced[v]: v has out-degree one and every vertex down its forced chain
  // does too. Start from out-degree-one vertices and peel off any whose
  // unique successor fails.
  std::vector<bool> forced(n);
  std::vector<std::size_t> succ(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    forced[v] = m.out_degree(v) == 1;
    if (forced[v]) {
      for (std::size_t u = 0; u < n; ++u)
        if (m.get(v, u)) succ[v] = u;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (forced[v] && !forced[succ[v]]) {
        forced[v] = false;
        changed = true;
      }
    }
  }
  return std::any_of(forced.begin(), forced.end(), [](bool b) { return b; });
}

SftClassification classify_sft(const TransitionMatrix& m) {
  SftClassification c;
  c.original_dim = m.dim();
  TrimResult trimmed = trim_essential(m);
  c.removed = trimmed.removed;
  c.trimmed_dim = trimmed.matrix.dim();
  c.essential_trimmed = !trimmed.removed.empty();
  if (trimmed.matrix.dim() == 0) {
    c.empty = true;
    return c;
  }
  const TransitionMatrix& t = trimmed.matrix;

  c.irreducible = is_irreducible(t);
  if (c.irreducible) {
    c.period = matrix_period(t);
    c.aperiodic = c.period == 1;
  }
  c.primitive = c.irreducible && c.aperiodic;

  c.transitive = c.irreducible;
  c.totally_transitive = c.primitive;
  c.weakly_mixing = c.primitive;
  c.mixing = c.primitive;
  c.sensitive = !has_isolated_point(t);

  // A word crossing between strongly connected components cannot occur in a
  // periodic point, so periodic points are dense iff every edge stays inside
  // its component.
  std::size_t comps = 0;
  std::vector<std::size_t> comp = scc_ids(t, &comps);
  c.dense_periodic_points = true;
  for (std::size_t i = 0; i < t.dim() && c.dense_periodic_points; ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      if (t.get(i, j) && comp[i] != comp[j]) {
        c.dense_periodic_points = false;
        break;
      }

  c.induced_transitive = c.weakly_mixing;
  c.induced_weakly_mixing = c.weakly_mixing;
  c.induced_mixing = c.mixing;
  c.induced_sensitive = c.sensitive;
  return c;
}

std::vector<Word> allowed_words(const TransitionMatrix& m, std::size_t L,
                                std::size_t cap) {
  if (L < 1) throw std::domain_error("allowed_words: length must be >= 1");
  std::vector<Word> out;
  Word current;
  auto extend = [&](auto&& self, std::size_t v) -> void {
    current.push_back(static_cast<Symbol>(v));
    if (current.size() == L) {
      if (out.size() >= cap)
        throw std::domain_error("allowed_words: output exceeds cap " + std::to_string(cap));
      out.push_back(current);
    } else {
      for (std::size_t u = 0; u < m.dim(); ++u)
        if (m.get(v, u)) self(self, u);
    }
    current.pop_back();
  };
  for (std::size_t v = 0; v < m.dim(); ++v) extend(extend, v);
  return out;
}

bool word_allowed(const TransitionMatrix& m, const Word& w) {
  if (w.empty()) return false;
  for (Symbol s : w)
    if (s < 0 || static_cast<std::size_t>(s) >= m.dim()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!m.get(static_cast<std::size_t>(w[i]), static_cast<std::size_t>(w[i + 1])))
      return false;
  return true;
}

EventuallyPeriodicWord periodic_extension(const TransitionMatrix& m,
                                          const Alphabet& alphabet, const Word& w) {
  if (alphabet.size() != m.dim())
    throw std::invalid_argument("periodic_extension: alphabet size must equal dimension");
  if (!word_allowed(m, w))
    throw std::domain_error("periodic_extension: word is not allowed under the matrix");
  const std::size_t n = m.dim();
  const std::size_t from = static_cast<std::size_t>(w.back());
  const std::size_t to = static_cast<std::size_t>(w.front());

  // Shortest path from -> to with at least one edge; interior vertices close
  // the period word.
  std::vector<std::size_t> parent(n, static_cast<std::size_t>(-1));
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t u = 0; u < n; ++u) {
    if (m.get(from, u) && !seen[u]) {
      seen[u] = true;
      parent[u] = from;
      queue.push_back(u);
    }
  }
  while (!queue.empty() && !seen[to]) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u = 0; u < n; ++u) {
      if (m.get(v, u) && !seen[u]) {
        seen[u] = true;
        parent[u] = v;
        queue.push_back(u);
      }
    }
  }
  if (!seen[to]) {
    std::size_t comps = 0;
    std::vector<std::size_t> comp = scc_ids(m, &comps);
    throw std::domain_error(
        "periodic_extension: no return path from vertex " + std::to_string(from + 1) +
        " (SCC " + std::to_string(comp[from] + 1) + ") to vertex " + std::to_string(to + 1) +
        " (SCC " + std::to_string(comp[to] + 1) + ")");
  }

  Word interior;
  for (std::size_t v = parent[to]; v != from || interior.empty();
       v = parent[v]) {
    if (v == from) break;
    interior.push_back(static_cast<Symbol>(v));
  }
  std::reverse(interior.begin(), interior.end());

  Word period = w;
  period.insert(period.end(), interior.begin(), interior.end());
  return EventuallyPeriodicWord(alphabet, {}, std::move(period));
}

}  // namespace shiftspace
