#include "words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shiftspace {

namespace {

constexpr std::string_view kSymbolUniverse = "0123456789abcdefghijklmnopqrstuvwxyz";

// Length of the primitive root of w, via the KMP failure function.
std::size_t primitive_root_length(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = fail[i - 1];
    while (j > 0 && w[i] != w[j]) j = fail[j - 1];
    if (w[i] == w[j]) ++j;
    fail[i] = j;
  }
  const std::size_t root = n - fail[n - 1];
  return (n % root == 0) ? root : n;
}

}  // namespace

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  if (letters_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  index_.fill(-1);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(letters_[i]);
    if (c >= 128 || kSymbolUniverse.find(letters_[i]) == std::string_view::npos)
      throw std::invalid_argument(std::string("symbol outside 0-9a-z: '") +
                                  letters_[i] + "'");
    if (index_[c] != -1)
      throw std::invalid_argument(std::string("duplicate symbol '") +
                                  letters_[i] + "' in alphabet");
    index_[c] = static_cast<int>(i);
  }
}

Alphabet Alphabet::first_n(std::size_t n) {
  if (n == 0 || n > kSymbolUniverse.size())
    throw std::invalid_argument("alphabet size out of range");
  return Alphabet(kSymbolUniverse.substr(0, n));
}

char Alphabet::letter(Symbol s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= letters_.size())
    throw std::invalid_argument("symbol index out of range");
  return letters_[static_cast<std::size_t>(s)];
}

Symbol Alphabet::index_of(char c) const {
  const unsigned char u = static_cast<unsigned char>(c);
  const int idx = (u < 128) ? index_[u] : -1;
  if (idx < 0)
    throw std::invalid_argument(std::string("unknown symbol '") + c + "'");
  return idx;
}

bool Alphabet::contains(char c) const {
  const unsigned char u = static_cast<unsigned char>(c);
  return u < 128 && index_[u] >= 0;
}

std::string Alphabet::render(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(letter(s));
  return out;
}

Word Alphabet::scan(std::string_view text) const {
  Word out;
  out.reserve(text.size());
  for (char c : text) out.push_back(index_of(c));
  return out;
}

EventuallyPeriodicWord::EventuallyPeriodicWord(Alphabet alphabet, Word preperiod,
                                               Word period)
    : alphabet_(std::move(alphabet)),
      preperiod_(std::move(preperiod)),
      period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("period must be nonempty");
  auto check = [&](const Word& w) {
    for (Symbol s : w)
      if (s < 0 || static_cast<std::size_t>(s) >= alphabet_.size())
        throw std::invalid_argument("symbol index outside alphabet");
  };
  check(preperiod_);
  check(period_);

  period_.resize(primitive_root_length(period_));
  // Roll the preperiod/period boundary left while the last preperiod symbol
  // matches the last period symbol; each roll rotates the period right.
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    std::rotate(period_.begin(), period_.end() - 1, period_.end());
    preperiod_.pop_back();
  }
}

Symbol EventuallyPeriodicWord::at(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

Word EventuallyPeriodicWord::prefix(std::size_t len) const {
  Word out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(at(i));
  return out;
}

EventuallyPeriodicWord EventuallyPeriodicWord::shifted(std::size_t k) const {
  if (k <= preperiod_.size()) {
    Word pre(preperiod_.begin() + static_cast<std::ptrdiff_t>(k), preperiod_.end());
    return EventuallyPeriodicWord(alphabet_, std::move(pre), period_);
  }
  const std::size_t r = (k - preperiod_.size()) % period_.size();
  Word per(period_.begin() + static_cast<std::ptrdiff_t>(r), period_.end());
  per.insert(per.end(), period_.begin(), period_.begin() + static_cast<std::ptrdiff_t>(r));
  return EventuallyPeriodicWord(alphabet_, {}, std::move(per));
}

EventuallyPeriodicWord EventuallyPeriodicWord::with_prefix(const Word& w) const {
  Word pre = w;
  pre.insert(pre.end(), preperiod_.begin(), preperiod_.end());
  return EventuallyPeriodicWord(alphabet_, std::move(pre), period_);
}

std::string EventuallyPeriodicWord::literal() const {
  return alphabet_.render(preperiod_) + "(" + alphabet_.render(period_) + ")";
}

std::strong_ordering EventuallyPeriodicWord::sequence_order(
    const EventuallyPeriodicWord& o) const {
  if (*this == o) return std::strong_ordering::equal;
  // Distinct canonical forms differ at some index below the common
  // preperiod plus one common period.
  const std::size_t p = std::max(preperiod_.size(), o.preperiod_.size());
  const std::size_t l = std::lcm(period_.size(), o.period_.size());
  for (std::size_t i = 0; i < p + l; ++i) {
    if (at(i) != o.at(i)) return at(i) <=> o.at(i);
  }
  // Same sequence but different canonical form cannot happen.
  return std::strong_ordering::equal;
}

EventuallyPeriodicWord parse_word_literal(const Alphabet& alphabet,
                                          std::string_view text) {
  const std::size_t open = text.find('(');
  const std::size_t close = text.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      close != text.size() - 1 || close < open)
    throw std::invalid_argument("malformed literal (expected PRE(PER)): \"" +
                                std::string(text) + "\"");
  if (close == open + 1)
    throw std::invalid_argument("empty period in literal: \"" + std::string(text) + "\"");
  const auto pre_text = text.substr(0, open);
  const auto per_text = text.substr(open + 1, close - open - 1);
  return EventuallyPeriodicWord(alphabet, alphabet.scan(pre_text),
                                alphabet.scan(per_text));
}

Alphabet union_alphabet(const std::vector<std::string>& literals) {
  std::string letters;
  for (char c : kSymbolUniverse) {
    for (const std::string& lit : literals) {
      if (lit.find(c) != std::string::npos) {
        letters.push_back(c);
        break;
      }
    }
  }
  if (letters.empty()) letters = "0";
  return Alphabet(letters);
}

Rational d1_exact(const EventuallyPeriodicWord& x, const EventuallyPeriodicWord& y) {
  if (!(x.alphabet() == y.alphabet()))
    throw std::domain_error("d1_exact: alphabet mismatch (" + x.alphabet().letters() +
                            " vs " + y.alphabet().letters() + ")");
  const std::size_t p = std::max(x.preperiod().size(), y.preperiod().size());
  const std::size_t l = std::lcm(x.period().size(), y.period().size());

  // Head: sum_{i<p} d_i 2^{-i}, collected over the common denominator 2^p.
  BigInt head = 0;
  for (std::size_t i = 0; i < p; ++i) {
    if (x.at(i) != y.at(i)) head += pow2_int(p - i);
  }
  Rational value(head, pow2_int(p));

  // Tail: from index p the pair is jointly l-periodic, so the remainder is
  // 2^-p * (sum_{i<l} d_{p+i} 2^{-i}) / (1 - 2^-l).
  BigInt tail = 0;
  for (std::size_t i = 0; i < l; ++i) {
    if (x.at(p + i) != y.at(p + i)) tail += pow2_int(l - i);
  }
  value += pow2_neg(p) * Rational(tail, pow2_int(l) - 1);
  return value;
}

}  // namespace shiftspace
