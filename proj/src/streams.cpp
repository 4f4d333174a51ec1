#include "streams.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftspace {

namespace {

class EpStream final : public StreamImpl {
 public:
  explicit EpStream(EventuallyPeriodicWord w) : word_(std::move(w)) {}
  Symbol symbol_at(std::size_t i) const override { return word_.at(i); }
  const Alphabet& alphabet() const override { return word_.alphabet(); }
  std::string spec_string() const override { return "ep:" + word_.literal(); }
  const EventuallyPeriodicWord* exact_word() const override { return &word_; }

 private:
  EventuallyPeriodicWord word_;
};

class FibStream final : public StreamImpl {
 public:
  FibStream() : alphabet_(Alphabet::binary()) { cache_ = {0}; }

  Symbol symbol_at(std::size_t i) const override {
    std::lock_guard<std::mutex> lock(mutex_);
    while (cache_.size() <= i) {
      // One substitution pass 0 -> 01, 1 -> 0 over the current prefix. The
      // image of a fixed-point prefix is again a prefix of the fixed point.
      Word next;
      next.reserve(cache_.size() * 2);
      for (Symbol s : cache_) {
        if (s == 0) {
          next.push_back(0);
          next.push_back(1);
        } else {
          next.push_back(0);
        }
      }
      cache_ = std::move(next);
    }
    return cache_[i];
  }
  const Alphabet& alphabet() const override { return alphabet_; }
  std::string spec_string() const override { return "sturmian:fib"; }

 private:
  Alphabet alphabet_;
  mutable std::mutex mutex_;
  mutable Word cache_;
};

BigInt rational_floor(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

class SturmianRationalStream final : public StreamImpl {
 public:
  explicit SturmianRationalStream(const SturmianRationalSpec& spec)
      : alphabet_(Alphabet::binary()), alpha_(spec.alpha), rho_(spec.rho) {
    if (alpha_ < 0 || alpha_ > 1)
      throw std::domain_error("sturmian: alpha must lie in [0, 1]");
    const BigInt q = denominator(alpha_);
    const std::size_t period = static_cast<std::size_t>(q.convert_to<unsigned long long>());
    horizon_ = spec.valid_horizon.value_or(period > 0 ? period - 1 : 0);
    genuinely_sturmian_ = horizon_ < period;
  }

  Symbol symbol_at(std::size_t i) const override {
    if (i >= horizon_)
      throw std::domain_error("sturmian: index " + std::to_string(i) +
                              " beyond valid horizon " + std::to_string(horizon_) +
                              " (rational rotation is periodic past one period)");
    const Rational lo = Rational(i) * alpha_ + rho_;
    const Rational hi = Rational(i + 1) * alpha_ + rho_;
    return static_cast<Symbol>((rational_floor(hi) - rational_floor(lo))
                                   .convert_to<long>());
  }
  const Alphabet& alphabet() const override { return alphabet_; }
  std::string spec_string() const override {
    std::string s = "sturmian:" + rational_string(alpha_);
    if (rho_ != 0) s += ":" + rational_string(rho_);
    if (!genuinely_sturmian_) s += ":nonsturmian";
    return s;
  }

  std::size_t horizon() const { return horizon_; }

 private:
  Alphabet alphabet_;
  Rational alpha_;
  Rational rho_;
  std::size_t horizon_ = 0;
  bool genuinely_sturmian_ = false;
};

class WkStream final : public StreamImpl {
 public:
  explicit WkStream(WkSpec spec)
      : alphabet_(Alphabet::binary()), spec_(std::move(spec)) {
    boundaries_ = {1};  // w1 = "0"
  }

  Symbol symbol_at(std::size_t i) const override {
    std::lock_guard<std::mutex> lock(mutex_);
    ensure_covers(i);
    return symbol_locked(i);
  }
  const Alphabet& alphabet() const override { return alphabet_; }
  std::string spec_string() const override { return "wk:" + spec_.tag; }

  std::vector<std::size_t> boundaries(std::size_t m) const {
    std::lock_guard<std::mutex> lock(mutex_);
    while (boundaries_.size() < m) append_block();
    return {boundaries_.begin(), boundaries_.begin() + static_cast<std::ptrdiff_t>(m)};
  }

 private:
  void ensure_covers(std::size_t i) const {
    while (boundaries_.back() <= i) append_block();
  }

  void append_block() const {
    const std::size_t m = boundaries_.size() + 1;  // 1-based block index
    std::size_t len;
    if (m % 2 == 0) {
      const std::size_t k = m / 2;
      len = spec_.nk(k);
      if (k >= 2) {
        const std::size_t prev = spec_.nk(k - 1);
        if (len <= prev)
          throw std::domain_error("wk: n_k must be strictly increasing (n_" +
                                  std::to_string(k - 1) + "=" + std::to_string(prev) +
                                  ", n_" + std::to_string(k) + "=" + std::to_string(len) + ")");
      }
      if (len == 0) throw std::domain_error("wk: n_k must be positive");
    } else {
      // w_{2k+1} repeats the whole prefix w1 ... w_{2k}.
      len = boundaries_.back();
    }
    boundaries_.push_back(boundaries_.back() + len);
  }

  Symbol symbol_locked(std::size_t i) const {
    for (;;) {
      const auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), i);
      const std::size_t m = static_cast<std::size_t>(it - boundaries_.begin()) + 1;
      if (m == 1) return 0;
      if (m % 2 == 0) return 1;
      i -= boundaries_[m - 2];  // recurse into the copied prefix
    }
  }

  Alphabet alphabet_;
  WkSpec spec_;
  mutable std::mutex mutex_;
  mutable std::vector<std::size_t> boundaries_;
};

class ShiftedStream final : public StreamImpl {
 public:
  ShiftedStream(SymbolStream base, std::size_t k) : base_(std::move(base)), k_(k) {}
  Symbol symbol_at(std::size_t i) const override { return base_.at(i + k_); }
  const Alphabet& alphabet() const override { return base_.alphabet(); }
  std::string spec_string() const override {
    return "shift[" + std::to_string(k_) + "]:" + base_.spec_string();
  }

 private:
  SymbolStream base_;
  std::size_t k_;
};

class PrefixedStream final : public StreamImpl {
 public:
  PrefixedStream(Word w, SymbolStream base) : word_(std::move(w)), base_(std::move(base)) {}
  Symbol symbol_at(std::size_t i) const override {
    return i < word_.size() ? word_[i] : base_.at(i - word_.size());
  }
  const Alphabet& alphabet() const override { return base_.alphabet(); }
  std::string spec_string() const override {
    return "prefix[" + base_.alphabet().render(word_) + "]:" + base_.spec_string();
  }

 private:
  Word word_;
  SymbolStream base_;
};

}  // namespace

SymbolStream SymbolStream::eventually_periodic(EventuallyPeriodicWord w) {
  return SymbolStream(std::make_shared<EpStream>(std::move(w)));
}

Word SymbolStream::prefix(std::size_t len) const {
  Word out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(at(i));
  return out;
}

const EventuallyPeriodicWord& SymbolStream::exact_word() const {
  const EventuallyPeriodicWord* w = impl_->exact_word();
  if (!w)
    throw std::domain_error("stream " + spec_string() +
                            " has no exact eventually-periodic form");
  return *w;
}

SymbolStream SymbolStream::shifted(std::size_t k) const { return shifted_stream(*this, k); }

SymbolStream SymbolStream::with_prefix(const Word& w) const {
  return prefixed_stream(w, *this);
}

SymbolStream sturmian_fibonacci_stream() {
  return SymbolStream(std::make_shared<FibStream>());
}

SymbolStream sturmian_rational_stream(const SturmianRationalSpec& spec) {
  return SymbolStream(std::make_shared<SturmianRationalStream>(spec));
}

SymbolStream wk_stream(const WkSpec& spec) {
  return SymbolStream(std::make_shared<WkStream>(spec));
}

std::vector<std::size_t> wk_block_boundaries(const WkSpec& spec, std::size_t m) {
  return WkStream(spec).boundaries(m);
}

SymbolStream shifted_stream(const SymbolStream& s, std::size_t k) {
  if (k == 0) return s;
  if (s.is_eventually_periodic())
    return SymbolStream::eventually_periodic(s.exact_word().shifted(k));
  return SymbolStream(std::make_shared<ShiftedStream>(s, k));
}

SymbolStream prefixed_stream(Word w, const SymbolStream& s) {
  if (w.empty()) return s;
  if (s.is_eventually_periodic())
    return SymbolStream::eventually_periodic(s.exact_word().with_prefix(w));
  return SymbolStream(std::make_shared<PrefixedStream>(std::move(w), s));
}

std::pair<Rational, Rational> d1_bounded(const SymbolStream& x, const SymbolStream& y,
                                         std::size_t N) {
  if (N == 0) throw std::domain_error("d1_bounded: depth must be >= 1");
  BigInt acc = 0;  // over denominator 2^(N-1)
  for (std::size_t i = 0; i < N; ++i) {
    if (x.at(i) != y.at(i)) acc += pow2_int(N - 1 - i);
  }
  const Rational lo(acc, pow2_int(N - 1));
  return {lo, lo + pow2_neg(N - 1)};
}

SymbolStream parse_stream_spec(std::string_view text, const Alphabet* ep_alphabet) {
  auto parse_ep = [&](std::string_view lit) {
    const Alphabet alphabet =
        ep_alphabet ? *ep_alphabet : union_alphabet({std::string(lit)});
    return SymbolStream::eventually_periodic(parse_word_literal(alphabet, lit));
  };

  if (text.rfind("ep:", 0) == 0) return parse_ep(text.substr(3));
  if (text == "sturmian:fib") return sturmian_fibonacci_stream();
  if (text.rfind("sturmian:", 0) == 0) {
    std::string body(text.substr(9));
    SturmianRationalSpec spec;
    const std::size_t colon = body.find(':');
    std::string alpha_part = body.substr(0, colon);
    const std::size_t slash = alpha_part.find('/');
    if (slash == std::string::npos)
      throw std::invalid_argument("sturmian spec needs p/q: \"" + std::string(text) + "\"");
    spec.alpha = Rational(BigInt(alpha_part.substr(0, slash)),
                          BigInt(alpha_part.substr(slash + 1)));
    if (colon != std::string::npos) {
      std::string rho_part = body.substr(colon + 1);
      const std::size_t rslash = rho_part.find('/');
      if (rslash == std::string::npos)
        spec.rho = Rational(BigInt(rho_part));
      else
        spec.rho = Rational(BigInt(rho_part.substr(0, rslash)),
                            BigInt(rho_part.substr(rslash + 1)));
    }
    return sturmian_rational_stream(spec);
  }
  if (text == "wk:linear") return wk_stream(WkSpec{});
  if (text.rfind("wk:", 0) == 0)
    throw std::invalid_argument("unknown wk rule: \"" + std::string(text) + "\"");
  // Bare PRE(PER) literal.
  if (text.find('(') != std::string_view::npos) return parse_ep(text);
  throw std::invalid_argument("unrecognized stream spec: \"" + std::string(text) + "\"");
}

}  // namespace shiftspace
