#pragma once

#include <string_view>

#include "compcount/alphabet.hpp"

namespace compcount {

/// Textual alphabet grammar used on the command line:
///
///   all            every positive part (same as atleast:1)
///   upto:K         {1, ..., K}
///   atleast:K      {K, K+1, ...}
///   m1[xq1],m2...  explicit parts, optional color count after 'x'
///                  ("1x2,3" = two colors of 1 and one color of 3)
///
/// List entries may come in any order but must be distinct. Throws
/// ParseError naming the offending token.
PartAlphabet parse_alphabet_spec(std::string_view text);

} // namespace compcount
