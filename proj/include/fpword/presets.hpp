#pragma once

#include <string>

#include "fpword/words.hpp"

namespace fpw {

/// A conjectured self-similarity w(K i + R) = w(i) + d for the least
/// a/b-power-free word, checkable on a generated prefix.
struct ConjecturePreset {
  std::string name;      // exponent written a/b
  long long a, b;        // the avoided power
  long long K, R;        // left-hand side w(K i + R)
  long long d;           // increment
  bool d_zero_at_origin;  // the 10/7 recurrence adds 0 at i = 0
};

const std::vector<ConjecturePreset>& conjecture_presets();
const ConjecturePreset* find_conjecture(const std::string& name);

}  // namespace fpw
