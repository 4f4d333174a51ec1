#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace shiftspace {

// Symbols are indices into an Alphabet. Words are finite symbol lists.
using Symbol = int;
using Word = std::vector<Symbol>;

// Finite ordered alphabet over the single-character symbol set 0-9a-z.
class Alphabet {
 public:
  explicit Alphabet(std::string_view letters);

  static Alphabet binary() { return Alphabet("01"); }
  // First n letters of "0123456789abc...z" (vertex shifts label vertex i
  // with letter i by default).
  static Alphabet first_n(std::size_t n);

  std::size_t size() const { return letters_.size(); }
  char letter(Symbol s) const;
  Symbol index_of(char c) const;  // throws on unknown symbol
  bool contains(char c) const;
  const std::string& letters() const { return letters_; }

  std::string render(const Word& w) const;
  Word scan(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::string letters_;
  std::array<int, 128> index_{};
};

// An infinite symbol sequence with an exact finite description:
// preperiod followed by an endlessly repeated block. Always held in
// canonical form (primitive period, minimal preperiod), so two words are
// equal as sequences iff their fields are identical.
class EventuallyPeriodicWord {
 public:
  EventuallyPeriodicWord(Alphabet alphabet, Word preperiod, Word period);

  const Alphabet& alphabet() const { return alphabet_; }
  const Word& preperiod() const { return preperiod_; }
  const Word& period() const { return period_; }

  Symbol at(std::size_t i) const;
  Word prefix(std::size_t len) const;
  EventuallyPeriodicWord shifted(std::size_t k) const;
  EventuallyPeriodicWord with_prefix(const Word& w) const;

  bool purely_periodic() const { return preperiod_.empty(); }

  // Literal in the grammar PRE(PER), e.g. "01(10)".
  std::string literal() const;

  friend bool operator==(const EventuallyPeriodicWord& a,
                         const EventuallyPeriodicWord& b) {
    return a.alphabet_ == b.alphabet_ && a.preperiod_ == b.preperiod_ &&
           a.period_ == b.period_;
  }

  // Sequence order: lexicographic at the first differing index. Total and
  // exact (the first difference, if any, occurs within a computable bound).
  std::strong_ordering sequence_order(const EventuallyPeriodicWord& o) const;

 private:
  Alphabet alphabet_;
  Word preperiod_;
  Word period_;
};

// Parses PRE(PER) with symbols from `alphabet`. Errors: empty period,
// unknown symbol, malformed literal.
EventuallyPeriodicWord parse_word_literal(const Alphabet& alphabet,
                                          std::string_view text);

// Collects the distinct symbols of a set of literals into one alphabet,
// ordered 0-9a-z. The prefix metric only inspects symbol equality, so
// widening to a union alphabet never changes a distance.
Alphabet union_alphabet(const std::vector<std::string>& literals);

// Exact prefix metric: sum over i of [x_i != y_i] / 2^i.
Rational d1_exact(const EventuallyPeriodicWord& x,
                  const EventuallyPeriodicWord& y);

}  // namespace shiftspace
