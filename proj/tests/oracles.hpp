#pragma once

// Brute-force reference implementations used only by tests. Each follows the
// definitions directly and stays independent of the library's scan paths.

#include <vector>

#include "fpword/morphism.hpp"
#include "fpword/power.hpp"
#include "fpword/regularity.hpp"

namespace oracle {

// every a/b-power ending at i, found by reconstructing v^(a/b) from scratch
inline std::vector<long long> powers_ending_at(const fpw::Word& w, std::size_t i,
                                               fpw::FracExponent e) {
  std::vector<long long> out;
  for (long long P = e.b;; P += e.b) {
    long long L = P / e.b * e.a;
    if (L > static_cast<long long>(i) + 1) break;
    std::size_t start = i + 1 - static_cast<std::size_t>(L);
    fpw::Word v(w.begin() + start, w.begin() + start + static_cast<std::size_t>(P));
    fpw::Word pw = fpw::frac_power(v, e);
    if (std::equal(pw.begin(), pw.end(), w.begin() + start)) out.push_back(P);
  }
  return out;
}

// expand phi(w) and test the 5/4-power shape letter by letter
inline bool is_pre_power(const fpw::SubWord& w) {
  fpw::SubWord img = fpw::apply_phi(w);
  std::size_t period = img.size() / 5 * 4;
  for (std::size_t t = 0; t + period < img.size(); ++t)
    if (img[t] != img[t + period]) return false;
  return true;
}

// dense rational Gaussian elimination
inline long long rank(std::vector<std::vector<fpw::BigRat>> m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      fpw::BigRat f = m[r][c] / m[rank][c];
      for (std::size_t t = c; t < cols; ++t) m[r][t] -= f * m[rank][t];
    }
    ++rank;
  }
  return static_cast<long long>(rank);
}

}  // namespace oracle
