#include "fpword/power.hpp"

#include <atomic>
#include <limits>
#include <mutex>

#include "fpword/parallel.hpp"

namespace fpw {

Word frac_power(const Word& v, FracExponent e) {
  if (v.empty()) throw std::invalid_argument("frac_power: empty word");
  if (v.size() % static_cast<std::size_t>(e.b) != 0)
    throw std::invalid_argument("frac_power: length not divisible by b");
  Word out;
  out.reserve(v.size() / e.b * e.a);
  for (long long rep = 0; rep < e.a / e.b; ++rep) out.insert(out.end(), v.begin(), v.end());
  std::size_t extra = v.size() / e.b * (e.a % e.b);
  out.insert(out.end(), v.begin(), v.begin() + extra);
  return out;
}

namespace {

// Factor of length a*l ending at i, period P = b*l: w[t] = w[t+P] for
// t in [i-a*l+1, i-P]. Probes run from t = i-P downward.
inline bool power_here(const Letter* w, std::size_t i, long long l, long long a, long long b) {
  long long P = b * l;
  long long t = static_cast<long long>(i) - P;
  long long tend = static_cast<long long>(i) - a * l + 1;
  for (; t >= tend; --t)
    if (w[t] != w[t + P]) return false;
  return true;
}

}  // namespace

std::vector<long long> power_ending_at(const Word& w, std::size_t i, FracExponent e) {
  if (i >= w.size()) throw std::out_of_range("power_ending_at: index out of range");
  std::vector<long long> periods;
  for (long long l = 1; e.a * l <= static_cast<long long>(i) + 1; ++l)
    if (power_here(w.data(), i, l, e.a, e.b)) periods.push_back(e.b * l);
  return periods;
}

FreeVerdict is_power_free(const Word& w, FracExponent e, int workers) {
  std::atomic<std::size_t> best_end{std::numeric_limits<std::size_t>::max()};
  std::mutex mtx;
  std::optional<PowerWitness> best;

  parallel_chunks(w.size(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (i >= best_end.load(std::memory_order_relaxed)) break;
      for (long long l = 1; e.a * l <= static_cast<long long>(i) + 1; ++l) {
        if (power_here(w.data(), i, l, e.a, e.b)) {
          std::lock_guard<std::mutex> lock(mtx);
          if (!best || i < best->end) {
            best = PowerWitness{i, e.b * l};
            best_end.store(i);
          }
          break;  // smallest period for this end position
        }
      }
    }
  });

  return FreeVerdict{!best.has_value(), best};
}

}  // namespace fpw
