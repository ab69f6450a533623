#include "core/streams.hpp"

#include <stdexcept>

#include "core/errors.hpp"

namespace conreal {

Word word_append(Word w, Digit d) {
  w.push_back(d);
  return w;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool word_is_prefix(const Word& pre, const Word& w) {
  if (pre.size() > w.size()) return false;
  for (std::size_t i = 0; i < pre.size(); ++i)
    if (pre[i] != w[i]) return false;
  return true;
}

std::string word_str(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Digit d : w) s.push_back(static_cast<char>('0' + d));
  return s;
}

Word parse_word(const std::string& text, int arity) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c >= '0' + arity)
      throw ParseError("digit '" + std::string(1, c) + "' out of range for alphabet {0.." +
                       std::to_string(arity - 1) + "}");
    w.push_back(static_cast<Digit>(c - '0'));
  }
  return w;
}

namespace detail {

DigitSeq checked_seq(LazySeq<Digit> seq, int arity) {
  return DigitSeq(LazySeq<Digit>([seq = std::move(seq), arity](std::size_t n, const std::vector<Digit>&) {
    Digit d = seq.at(n);
    if (d >= arity) throw std::invalid_argument("stream digit out of alphabet");
    return d;
  }));
}

}  // namespace detail

Digit TernaryStream::check(Digit d) {
  if (d > 2) throw std::invalid_argument("ternary digit out of range");
  return d;
}

TernaryStream TernaryStream::from_word(Word w, Digit tail) {
  for (Digit d : w) check(d);
  return TernaryStream(detail::DigitSeq(std::move(w), check(tail)));
}

TernaryStream TernaryStream::from_fn(std::function<Digit(std::size_t)> f) {
  return TernaryStream(detail::checked_seq(LazySeq<Digit>::from_fn(std::move(f)), 3));
}

TernaryStream TernaryStream::from_step(LazySeq<Digit>::Step step) {
  return TernaryStream(detail::checked_seq(LazySeq<Digit>(std::move(step)), 3));
}

Digit BinaryStream::check(Digit d) {
  if (d > 1) throw std::invalid_argument("binary digit out of range");
  return d;
}

BinaryStream BinaryStream::from_word(Word w, Digit tail) {
  for (Digit d : w) check(d);
  return BinaryStream(detail::DigitSeq(std::move(w), check(tail)));
}

BinaryStream BinaryStream::from_fn(std::function<Digit(std::size_t)> f) {
  return BinaryStream(detail::checked_seq(LazySeq<Digit>::from_fn(std::move(f)), 2));
}

BinaryStream BinaryStream::from_step(LazySeq<Digit>::Step step) {
  return BinaryStream(detail::checked_seq(LazySeq<Digit>(std::move(step)), 2));
}

TernaryStream BinaryStream::as_ternary() const { return TernaryStream(seq_); }

TernaryStream hat(const Word& w) { return TernaryStream::from_word(w, 0); }
TernaryStream breve(const Word& w) { return TernaryStream::from_word(w, 1); }
BinaryStream hat_binary(const Word& w) { return BinaryStream::from_word(w, 0); }
BinaryStream breve_binary(const Word& w) { return BinaryStream::from_word(w, 1); }

}  // namespace conreal
