#pragma once

#include <string>

#include "core/codes.hpp"
#include "core/reals.hpp"
#include "core/streams.hpp"

namespace conreal {

// Textual input forms shared by the shared-library surface and the CLI.
// Streams:  DIGITS, DIGITS~t, ~t, or "e"/"ε" for the empty word; the word is
// followed by the constant tail t (default 0).  "102~2" is 1,0,2,2,2,...
TernaryStream parse_ternary_spec(const std::string& text);
BinaryStream parse_binary_spec(const std::string& text);

// Reals:  a bare rational "p/q", or one of
//   const:p/q    constant sequence
//   phi:SPEC     spread value of the ternary stream SPEC
//   kappa:SPEC   discontinuum value of the binary stream SPEC
RegularReal parse_real_spec(const std::string& text);

// Codes:
//   builtin:identity            the identity function on [0, 1]
//   builtin:const:p/q           constant function
//   builtin:affine:a/b:c/d      x -> (a/b) x + (c/d)
//   builtin:zero-delayed        identity silenced on all-zero words
//   file:PATH                   explicit table, lines "word value"
Code parse_code_spec(const std::string& text);

}  // namespace conreal
