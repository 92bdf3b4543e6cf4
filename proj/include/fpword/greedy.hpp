#pragma once

#include <optional>
#include <utility>

#include "fpword/power.hpp"

namespace fpw {

/// Length-n prefix of the lexicographically least a/b-power-free word on the
/// nonnegative integers: at each position the smallest letter that closes no
/// a/b-power ending there. On the infinite alphabet the greedy choice always
/// extends, so there is no backtracking.
Word generate(FracExponent e, std::size_t n);

struct LexLeastVerdict {
  bool least;
  // position and letter of the first decrease that closes no power
  std::optional<std::pair<std::size_t, Letter>> counterexample;
};

/// Certifies lexicographic minimality of an a/b-power-free word: every
/// decrease of a nonzero letter must create a power ending at that position.
/// Throws std::invalid_argument when w is not a/b-power-free.
LexLeastVerdict verify_lex_least(const Word& w, FracExponent e, int workers = 0);

}  // namespace fpw
