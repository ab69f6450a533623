#include "core/specs.hpp"

#include <utility>

#include "core/cantor.hpp"
#include "core/errors.hpp"
#include "core/spread.hpp"

namespace conreal {

namespace {

std::pair<Word, Digit> parse_word_tail(const std::string& text, int arity) {
  std::string word_part = text;
  Digit tail = 0;
  if (auto pos = text.find('~'); pos != std::string::npos) {
    word_part = text.substr(0, pos);
    std::string tail_part = text.substr(pos + 1);
    if (tail_part.size() != 1 || tail_part[0] < '0' || tail_part[0] >= '0' + arity) {
      throw ParseError("stream tail must be a single digit below " + std::to_string(arity) +
                       ": " + text);
    }
    tail = static_cast<Digit>(tail_part[0] - '0');
  }
  Word word;
  if (!word_part.empty() && word_part != "e" && word_part != "\xCE\xB5") {
    word = parse_word(word_part, arity);
  }
  return {std::move(word), tail};
}

}  // namespace

TernaryStream parse_ternary_spec(const std::string& text) {
  auto [word, tail] = parse_word_tail(text, 3);
  return TernaryStream::from_word(std::move(word), tail);
}

BinaryStream parse_binary_spec(const std::string& text) {
  auto [word, tail] = parse_word_tail(text, 2);
  return BinaryStream::from_word(std::move(word), tail);
}

RegularReal parse_real_spec(const std::string& text) {
  auto pos = text.find(':');
  if (pos == std::string::npos) return RegularReal::constant(parse_rational(text));
  std::string kind = text.substr(0, pos);
  std::string rest = text.substr(pos + 1);
  if (kind == "const") return RegularReal::constant(parse_rational(rest));
  if (kind == "phi") return phi(parse_ternary_spec(rest));
  if (kind == "kappa") return kappa(parse_binary_spec(rest));
  throw ParseError("unknown real form \"" + kind + "\" in: " + text);
}

Code parse_code_spec(const std::string& text) {
  auto pos = text.find(':');
  std::string kind = pos == std::string::npos ? text : text.substr(0, pos);
  std::string rest = pos == std::string::npos ? std::string() : text.substr(pos + 1);
  if (kind == "file") {
    if (rest.empty()) throw ParseError("file code needs a path: " + text);
    return code_from_file(rest);
  }
  if (kind != "builtin") throw ParseError("unknown code form \"" + kind + "\" in: " + text);
  if (rest == "identity") return code_identity();
  if (rest == "zero-delayed") return code_zero_delayed_identity();
  if (rest.rfind("const:", 0) == 0) return code_constant(parse_rational(rest.substr(6)));
  if (rest.rfind("affine:", 0) == 0) {
    std::string args = rest.substr(7);
    auto sep = args.find(':');
    if (sep == std::string::npos) throw ParseError("affine code needs two rationals: " + text);
    return code_affine(parse_rational(args.substr(0, sep)), parse_rational(args.substr(sep + 1)));
  }
  throw ParseError("unknown builtin code \"" + rest + "\" in: " + text);
}

}  // namespace conreal
