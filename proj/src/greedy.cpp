#include "fpword/greedy.hpp"

#include <mutex>

#include "fpword/parallel.hpp"

namespace fpw {

namespace {

// Block lengths l for which every pair w[t] = w[t+b*l] over the factor ending
// at i holds except possibly the final one (the pair involving position i
// itself). Only these survive to the per-candidate probe below.
void open_blocks(const Letter* w, std::size_t i, long long a, long long b,
                 std::vector<long long>& out) {
  out.clear();
  const long long ii = static_cast<long long>(i);
  long long P = b;            // b*l
  long long tend = ii - a + 1;  // i - a*l + 1
  for (long long l = 1; a * l <= ii + 1; ++l, P += b, tend -= a) {
    bool ok = true;
    for (long long t = ii - P - 1; t >= tend; --t)
      if (w[t] != w[t + P]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(l);
  }
}

// Would placing c at position i close an a/b-power ending there?
inline bool closes_power(const Letter* w, std::size_t i, Letter c, long long a, long long b) {
  for (long long l = 1; a * l <= static_cast<long long>(i) + 1; ++l) {
    long long P = b * l;
    if (w[i - P] != c) continue;
    long long t = static_cast<long long>(i) - P - 1;
    long long tend = static_cast<long long>(i) - a * l + 1;
    bool ok = true;
    for (; t >= tend; --t)
      if (w[t] != w[t + P]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace

Word generate(FracExponent e, std::size_t n) {
  Word w;
  w.reserve(n);
  std::vector<long long> open;
  for (std::size_t i = 0; i < n; ++i) {
    open_blocks(w.data(), i, e.a, e.b, open);
    Letter c = 0;
    for (;; ++c) {
      bool closes = false;
      for (long long l : open)
        if (w[i - static_cast<std::size_t>(e.b * l)] == c) {
          closes = true;
          break;
        }
      if (!closes) break;
    }
    w.push_back(c);
  }
  return w;
}

LexLeastVerdict verify_lex_least(const Word& w, FracExponent e, int workers) {
  FreeVerdict fv = is_power_free(w, e, workers);
  if (!fv.free) throw std::invalid_argument("verify_lex_least: input is not power-free");

  std::mutex mtx;
  std::optional<std::pair<std::size_t, Letter>> counterexample;

  parallel_chunks(w.size(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      {
        std::lock_guard<std::mutex> lock(mtx);
        if (counterexample && counterexample->first < i) return;
      }
      for (Letter c = 0; c < w[i]; ++c) {
        if (!closes_power(w.data(), i, c, e.a, e.b)) {
          std::lock_guard<std::mutex> lock(mtx);
          if (!counterexample || counterexample->first > i ||
              (counterexample->first == i && counterexample->second > c))
            counterexample = {i, c};
          break;
        }
      }
    }
  });

  return LexLeastVerdict{!counterexample.has_value(), counterexample};
}

}  // namespace fpw
