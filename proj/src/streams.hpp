#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "words.hpp"

namespace shiftspace {

// Backend of a SymbolStream. Implementations must make symbol_at
// deterministic and total on their declared domain; lazily grown caches are
// guarded so streams stay safe to share across concurrent readers.
class StreamImpl {
 public:
  virtual ~StreamImpl() = default;
  virtual Symbol symbol_at(std::size_t i) const = 0;
  virtual const Alphabet& alphabet() const = 0;
  // Deterministic tag used for report echo and set-ordering tie-breaks.
  virtual std::string spec_string() const = 0;
  // Set when the stream is an exact eventually-periodic word.
  virtual const EventuallyPeriodicWord* exact_word() const { return nullptr; }
};

// A lazily evaluated infinite symbol sequence. Value type: copies share the
// immutable backend.
class SymbolStream {
 public:
  explicit SymbolStream(std::shared_ptr<const StreamImpl> impl)
      : impl_(std::move(impl)) {}
  static SymbolStream eventually_periodic(EventuallyPeriodicWord w);

  Symbol at(std::size_t i) const { return impl_->symbol_at(i); }
  Word prefix(std::size_t len) const;
  const Alphabet& alphabet() const { return impl_->alphabet(); }
  std::string spec_string() const { return impl_->spec_string(); }

  bool is_eventually_periodic() const { return impl_->exact_word() != nullptr; }
  // Exact representation; throws when the stream is generator-backed.
  const EventuallyPeriodicWord& exact_word() const;

  SymbolStream shifted(std::size_t k) const;
  SymbolStream with_prefix(const Word& w) const;

 private:
  std::shared_ptr<const StreamImpl> impl_;
};

// Fibonacci substitution stream: fixed point of 0 -> 01, 1 -> 0.
SymbolStream sturmian_fibonacci_stream();

// Rational mechanical word s_n = floor((n+1)a + rho) - floor(na + rho),
// evaluated with exact rational arithmetic. The window [0, valid_horizon)
// is the only queryable range: with a = p/q the word is q-periodic, so it
// stops being a faithful Sturmian sample past one period. valid_horizon
// defaults to q - 1; a spec carrying a larger horizon is accepted but
// reported as non-Sturmian.
struct SturmianRationalSpec {
  Rational alpha;
  Rational rho = 0;
  std::optional<std::size_t> valid_horizon;  // default q - 1
};
SymbolStream sturmian_rational_stream(const SturmianRationalSpec& spec);

// Block-concatenation stream x = w1 w2 w3 ... with w1 = 0, w_{2k} = 1^{n_k},
// w_{2k+1} = w1 w2 ... w_{2k}; n_k must be strictly increasing.
struct WkSpec {
  // n_k for k >= 1. The built-in rule is linear: n_k = k.
  std::function<std::size_t(std::size_t)> nk = [](std::size_t k) { return k; };
  std::string tag = "linear";
};
SymbolStream wk_stream(const WkSpec& spec = WkSpec{});

// Cumulative block end positions b_1, b_2, ..., b_m of the wk stream.
std::vector<std::size_t> wk_block_boundaries(const WkSpec& spec, std::size_t m);

// Generic derived streams.
SymbolStream shifted_stream(const SymbolStream& s, std::size_t k);
SymbolStream prefixed_stream(Word w, const SymbolStream& s);

// Bracket on the prefix metric from the first N symbols: the true D1 lies
// in [lo, lo + 2^-(N-1)].
std::pair<Rational, Rational> d1_bounded(const SymbolStream& x,
                                         const SymbolStream& y, std::size_t N);

// Parses the tagged stream grammar: ep:PRE(PER) (the bare literal PRE(PER)
// is accepted too), sturmian:fib, sturmian:p/q[:rp/rq], wk:linear.
SymbolStream parse_stream_spec(std::string_view text,
                               const Alphabet* ep_alphabet = nullptr);

}  // namespace shiftspace
