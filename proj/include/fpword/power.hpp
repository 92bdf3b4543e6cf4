#pragma once

#include <optional>

#include "fpword/words.hpp"

namespace fpw {

/// The a/b-power of v: v^floor(a/b) followed by the prefix of v of length
/// |v|*frac(a/b). Requires |v| > 0 and b | |v|; the result has length (a/b)|v|.
Word frac_power(const Word& v, FracExponent e);

/// All periods P = b*l such that the factor of length a*l ending at position i
/// is an a/b-power, i.e. w[t] = w[t+P] for all t in [i-a*l+1, i-b*l].
/// Comparisons run from the end of the factor inward, so a fresh last letter
/// exits after one probe. Periods are returned in increasing order.
std::vector<long long> power_ending_at(const Word& w, std::size_t i, FracExponent e);

struct PowerWitness {
  std::size_t end;     // position of the last letter of the power
  long long period;    // block length |v| = b*l
};

struct FreeVerdict {
  bool free;
  std::optional<PowerWitness> witness;  // smallest end, then smallest period
};

/// Scans every position of w for a/b-powers. workers = 0 uses the default
/// parallelism; the scan over end positions is embarrassingly parallel.
FreeVerdict is_power_free(const Word& w, FracExponent e, int workers = 0);

}  // namespace fpw
