#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "core/seq.hpp"

namespace conreal {

using Digit = std::uint8_t;

// Finite digit word; digits are validated against an alphabet where required.
using Word = std::vector<Digit>;

Word word_append(Word w, Digit d);
Word word_concat(const Word& a, const Word& b);
bool word_is_prefix(const Word& pre, const Word& w);
std::string word_str(const Word& w);  // bare digit string; empty word prints as empty

// Parses a bare digit string into a word, checking digits < arity.
Word parse_word(const std::string& text, int arity);

namespace detail {

// Shared stream representation: either a finite word extended by a constant
// tail (the hat/breve-style extensions, cheap to build in inner loops) or a
// memoized lazy sequence.
class DigitSeq {
 public:
  struct WordTail {
    Word word;
    Digit tail;
  };

  DigitSeq(Word w, Digit tail) : rep_(WordTail{std::move(w), tail}) {}
  explicit DigitSeq(LazySeq<Digit> seq) : rep_(std::move(seq)) {}

  Digit at(std::size_t n) const {
    if (const auto* wt = std::get_if<WordTail>(&rep_)) {
      return n < wt->word.size() ? wt->word[n] : wt->tail;
    }
    return std::get<LazySeq<Digit>>(rep_).at(n);
  }

  Word prefix(std::size_t n) const {
    Word out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
    return out;
  }

 private:
  std::variant<WordTail, LazySeq<Digit>> rep_;
};

DigitSeq checked_seq(LazySeq<Digit> seq, int arity);

}  // namespace detail

// Infinite stream over {0,1,2}.
class TernaryStream {
 public:
  static TernaryStream constant(Digit d) { return TernaryStream(detail::DigitSeq({}, check(d))); }
  // Finite word, then a constant tail (tail 0 = hat, tail 1 = breve).
  static TernaryStream from_word(Word w, Digit tail);
  static TernaryStream from_fn(std::function<Digit(std::size_t)> f);
  // Step function with access to all earlier digits.
  static TernaryStream from_step(LazySeq<Digit>::Step step);

  Digit at(std::size_t n) const { return seq_.at(n); }
  Word prefix(std::size_t n) const { return seq_.prefix(n); }

 private:
  friend class BinaryStream;  // as_ternary shares the digit source
  explicit TernaryStream(detail::DigitSeq seq) : seq_(std::move(seq)) {}
  static Digit check(Digit d);
  detail::DigitSeq seq_;
};

// Infinite stream over {0,1}.
class BinaryStream {
 public:
  static BinaryStream constant(Digit d) { return BinaryStream(detail::DigitSeq({}, check(d))); }
  static BinaryStream from_word(Word w, Digit tail);
  static BinaryStream from_fn(std::function<Digit(std::size_t)> f);
  static BinaryStream from_step(LazySeq<Digit>::Step step);

  Digit at(std::size_t n) const { return seq_.at(n); }
  Word prefix(std::size_t n) const { return seq_.prefix(n); }
  TernaryStream as_ternary() const;

 private:
  explicit BinaryStream(detail::DigitSeq seq) : seq_(std::move(seq)) {}
  static Digit check(Digit d);
  detail::DigitSeq seq_;
};

// Extension of a finite word by zeros (resp. ones).
TernaryStream hat(const Word& w);
TernaryStream breve(const Word& w);
BinaryStream hat_binary(const Word& w);
BinaryStream breve_binary(const Word& w);

}  // namespace conreal
