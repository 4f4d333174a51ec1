#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "words.hpp"

namespace shiftspace {

// Boolean n x n transition matrix of a vertex shift: bit (i,j) set means the
// transition i -> j is allowed. Rows are packed into 64-bit blocks so boolean
// products stay cheap at Kronecker-power sizes.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(std::size_t n);
  static TransitionMatrix from_rows(const std::vector<std::vector<int>>& rows);
  // One row per line, 0/1 entries separated by single spaces.
  static TransitionMatrix parse(std::string_view text);

  std::size_t dim() const { return n_; }
  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool v);

  std::size_t words_per_row() const { return wpr_; }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * wpr_; }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * wpr_; }

  std::size_t out_degree(std::size_t i) const;
  bool row_empty(std::size_t i) const;
  bool col_empty(std::size_t j) const;

  std::string format() const;

  friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t n_;
  std::size_t wpr_;
  std::vector<std::uint64_t> bits_;
};

struct TrimResult {
  TransitionMatrix matrix;           // essential or 0x0
  std::vector<std::size_t> removed;  // original indices, 0-based
  std::vector<std::size_t> kept;     // original indices, 0-based
};

// True when every row and every column has a nonzero entry.
bool is_essential(const TransitionMatrix& m);

// Deletes zero rows/columns until the matrix is essential (or empty).
TrimResult trim_essential(const TransitionMatrix& m);

TransitionMatrix bool_multiply(const TransitionMatrix& a, const TransitionMatrix& b);

// l-step reachability, l >= 1.
TransitionMatrix bool_power(const TransitionMatrix& m, std::size_t l);

// Strongly connected component ids (0-based, in reverse topological order).
std::vector<std::size_t> scc_ids(const TransitionMatrix& m, std::size_t* count);

// True iff the digraph is one strongly connected component. Requires an
// essential, nonempty matrix.
bool is_irreducible(const TransitionMatrix& m);

// gcd of all cycle lengths, computed from BFS levels; for small matrices the
// result is cross-checked against the gcd of the diagonal powers of index 1.
// Requires irreducibility.
std::size_t matrix_period(const TransitionMatrix& m);

// Irreducible with period 1; for small matrices cross-checked against strict
// positivity of the Wielandt power n^2 - 2n + 2.
bool is_primitive(const TransitionMatrix& m);

std::size_t kron_size_cap();  // SHIFTSPACE_KRON_CAP, default 4096

// Boolean Kronecker power of dimension n^k: entry at (tuple I, tuple J) is
// the product of the component entries, tuples ranked row-major.
TransitionMatrix kron_power(const TransitionMatrix& m, std::size_t k,
                            std::optional<std::size_t> cap = std::nullopt);

// True iff some cylinder of the vertex shift contains a single point, i.e.
// some vertex starts a chain of forced (out-degree one) transitions.
bool has_isolated_point(const TransitionMatrix& m);

struct SftClassification {
  bool empty = false;  // trimming removed everything: empty subshift
  std::size_t original_dim = 0;
  std::size_t trimmed_dim = 0;
  std::vector<std::size_t> removed;  // 0-based original indices
  bool essential_trimmed = false;    // trimming removed at least one vertex

  bool irreducible = false;
  std::size_t period = 0;  // defined when irreducible
  bool aperiodic = false;
  bool primitive = false;

  bool transitive = false;
  bool totally_transitive = false;
  bool weakly_mixing = false;
  bool mixing = false;
  bool sensitive = false;
  bool dense_periodic_points = false;

  bool induced_transitive = false;
  bool induced_weakly_mixing = false;
  bool induced_mixing = false;
  bool induced_sensitive = false;
};

SftClassification classify_sft(const TransitionMatrix& m);

// All allowed vertex words of length L, lexicographically ordered.
std::vector<Word> allowed_words(const TransitionMatrix& m, std::size_t L,
                                std::size_t cap = 1u << 20);

bool word_allowed(const TransitionMatrix& m, const Word& w);

// Purely periodic allowed sequence whose period begins with w: w is closed
// into a cycle by a shortest return path from its last vertex to its first.
EventuallyPeriodicWord periodic_extension(const TransitionMatrix& m,
                                          const Alphabet& alphabet, const Word& w);

}  // namespace shiftspace
