#include "fpword/presets.hpp"

namespace fpw {

const std::vector<ConjecturePreset>& conjecture_presets() {
  static const std::vector<ConjecturePreset> presets = {
      {"7/6", 7, 6, 41190, 41201, 3, false},
      {"8/7", 8, 7, 340, 52670, 3, false},
      {"9/7", 9, 7, 44, 2701, 2, false},
      {"10/7", 10, 7, 26, 428, 1, true},
      {"15/8", 15, 8, 22763, 22850, 2, false},
      {"7/5", 7, 5, 80874, 173978, 1, false},
  };
  return presets;
}

const ConjecturePreset* find_conjecture(const std::string& name) {
  for (const auto& p : conjecture_presets())
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace fpw
