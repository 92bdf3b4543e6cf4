#include "fpword/regularity.hpp"

#include <limits>
#include <numeric>
#include <set>

#include "fpword/parallel.hpp"

namespace fpw {

namespace {

long long checked_ll(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error(what);
  return v.convert_to<long long>();
}

BigInt pow_big(long long k, int e) { return boost::multiprecision::pow(BigInt(k), e); }

// (k^e - 1)/(k - 1) = 1 + k + ... + k^(e-1)
BigInt geom(long long k, int e) { return (pow_big(k, e) - 1) / (k - 1); }

long long span_A(const RegularityParams& p) { return p.r - p.s + p.k - 1; }

}  // namespace

void RegularityParams::check() const {
  if (k < 2) throw std::invalid_argument("RegularityParams: k must be >= 2");
  if (ell < 1) throw std::invalid_argument("RegularityParams: ell must be >= 1");
  if (r < 0 || s < 0) throw std::invalid_argument("RegularityParams: r, s must be nonnegative");
  if (r - s + k - 1 < 0) throw std::invalid_argument("RegularityParams: r - s + k - 1 < 0");
  if (static_cast<long long>(d.size()) != ell)
    throw std::invalid_argument("RegularityParams: |d| != ell");
  if (static_cast<long long>(u.size()) != k * ell)
    throw std::invalid_argument("RegularityParams: |u| != k*ell");
}

RegularityParams params54() {
  RegularityParams p;
  p.k = 6;
  p.ell = 8;
  p.r = 123056;
  p.s = 5920;
  p.d.assign(kIncrements54.begin(), kIncrements54.end());
  SubWord zeros;
  for (int j = 0; j < 8; ++j) zeros.push_back(sub_letter(0, j));
  for (Letter v : apply_tau(apply_phi(zeros))) p.u.push_back(v);
  p.check();
  return p;
}

long long pow_ll(long long k, int e) {
  long long out = 1;
  while (e-- > 0) {
    if (out > std::numeric_limits<long long>::max() / k) throw std::overflow_error("pow_ll");
    out *= k;
  }
  return out;
}

long long j_star(const RegularityParams& p, int e) {
  return checked_ll(geom(p.k, e) * span_A(p) + p.s, "j_star");
}

BigRat q_upper(const RegularityParams& p, int e) {
  BigInt num = (pow_big(p.k, e) - 1) * span_A(p) + BigInt(p.s) * (p.k - 1);
  BigInt den = pow_big(p.k, e) * (p.k - 1);
  return BigRat(num, den);
}

long long q_sub_e(const RegularityParams& p, int e) {
  BigInt num = (pow_big(p.k, e) - 1) * span_A(p) + BigInt(p.s) * (p.k - 1);
  BigInt den = pow_big(p.k, e) * (p.k - 1);
  return checked_ll(num / den, "q_sub_e");  // all terms nonnegative
}

long long j_sub_e(const RegularityParams& p, int e) {
  BigInt v = geom(p.k, e) * span_A(p) + p.s - pow_big(p.k, e) * q_sub_e(p, e);
  if (v < 0 || v >= pow_big(p.k, e)) throw std::logic_error("j_sub_e out of range");
  return checked_ll(v, "j_sub_e");
}

namespace {

// limit of q_e: Q_e = L - (L - s)/k^e with L = A/(k-1), so the floors
// stabilize at L-1 when L is an integer approached from below, at floor(L)
// otherwise
long long q_limit(const RegularityParams& p) {
  long long A = span_A(p);
  long long intL = A / (p.k - 1);
  bool exact = A % (p.k - 1) == 0;
  bool from_below = p.s * (p.k - 1) < A;
  return (exact && from_below) ? intL - 1 : intL;
}

}  // namespace

int transient_E(const RegularityParams& p) {
  long long target = q_limit(p);
  for (int e = 0; e <= 128; ++e)
    if (q_sub_e(p, e) == target) return e;
  throw std::logic_error("transient_E: q_e did not stabilize");
}

bool integer_case(const RegularityParams& p) {
  return q_limit(p) * (p.k - 1) == span_A(p);
}

int transient_E_prime(const RegularityParams& p) {
  if (!integer_case(p)) throw std::domain_error("transient_E_prime: not in the integer case");
  for (int e = transient_E(p); e <= 128; ++e)
    if (f_eval(p, e, 0, j_sub_e(p, e), 1) >= 0) return e;
  throw std::logic_error("transient_E_prime: no admissible e found");
}

long long h_sub_e(const RegularityParams& p, int e) {
  long long A = span_A(p);
  long long rem = A - q_sub_e(p, e) * (p.k - 1);
  if (rem <= 0) throw std::domain_error("h_sub_e: q_e at the limit, log argument degenerate");
  // floor(log_k(rem/A)) = -min{t : k^t rem >= A}
  int t = 0;
  BigInt v = rem;
  while (v < A) {
    v *= p.k;
    ++t;
  }
  return e - t;
}

BigRat f_eval(const RegularityParams& p, int e, int t, long long j, long long i) {
  if (t < 0 || t > e) throw std::invalid_argument("f_eval: need 0 <= t <= e");
  BigInt kt = pow_big(p.k, t);
  return BigRat(pow_big(p.k, e - t)) * i + BigRat(BigInt(j) - p.s, kt) -
         BigRat((kt - 1) * span_A(p), kt * (p.k - 1));
}

std::vector<long long> kernel_sequence_54(const CanonicalWords& cw, int e, long long j,
                                          std::size_t len) {
  return kernel_sequence([&cw](long long x) { return static_cast<long long>(letter_at(cw, x)); },
                         6, e, j, len);
}

// --- exact row reduction ---------------------------------------------------

namespace {

long long vec_gcd(const std::vector<long long>& v) {
  long long g = 0;
  for (long long x : v) {
    g = std::gcd(g, x < 0 ? -x : x);
    if (g == 1) break;
  }
  return g;
}

BigInt vec_gcd(const std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const BigInt& x : v) {
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    if (g == 1) break;
  }
  return g;
}

long long max_abs(const std::vector<long long>& v) {
  long long m = 0;
  for (long long x : v) m = std::max(m, x < 0 ? -x : x);
  return m;
}

}  // namespace

ExactMatrixBasis::Row ExactMatrixBasis::reduce(const std::vector<long long>& input) const {
  if (input.size() != width_) throw std::invalid_argument("ExactMatrixBasis: wrong row width");
  Row r{input, {}, width_, false};

  for (const Row& b : rows_) {
    if (!r.wide) {
      long long c = r.small[b.pivot];
      if (c == 0) continue;
      bool fits = false;
      if (!b.wide) {
        long long bp = b.small[b.pivot];
        // r <- r*bp - b*c fits in int64 when the magnitude bound does
        unsigned __int128 bound =
            static_cast<unsigned __int128>(max_abs(r.small)) * (bp < 0 ? -bp : bp) +
            static_cast<unsigned __int128>(max_abs(b.small)) * (c < 0 ? -c : c);
        if (bound <= static_cast<unsigned __int128>(std::numeric_limits<long long>::max())) {
          for (std::size_t t = 0; t < width_; ++t) r.small[t] = r.small[t] * bp - b.small[t] * c;
          long long g = vec_gcd(r.small);
          if (g > 1)
            for (auto& x : r.small) x /= g;
          fits = true;
        }
      }
      if (!fits) {
        r.big.assign(r.small.begin(), r.small.end());
        r.small.clear();
        r.wide = true;
      } else {
        continue;
      }
    }
    // wide lane
    BigInt c = r.big[b.pivot];
    if (c == 0) continue;
    BigInt bp = b.wide ? b.big[b.pivot] : BigInt(b.small[b.pivot]);
    for (std::size_t t = 0; t < width_; ++t)
      r.big[t] = r.big[t] * bp - (b.wide ? b.big[t] : BigInt(b.small[t])) * c;
    BigInt g = vec_gcd(r.big);
    if (g > 1)
      for (auto& x : r.big) x /= g;
  }

  r.pivot = width_;
  if (!r.wide) {
    for (std::size_t t = 0; t < width_; ++t)
      if (r.small[t] != 0) {
        r.pivot = t;
        break;
      }
    if (r.pivot != width_ && r.small[r.pivot] < 0)
      for (auto& x : r.small) x = -x;
  } else {
    for (std::size_t t = 0; t < width_; ++t)
      if (r.big[t] != 0) {
        r.pivot = t;
        break;
      }
    if (r.pivot != width_ && r.big[r.pivot] < 0)
      for (auto& x : r.big) x = -x;
  }
  return r;
}

bool ExactMatrixBasis::add_row(const std::vector<long long>& row) {
  Row red = reduce(row);
  if (red.pivot == width_) return false;
  auto at = std::lower_bound(rows_.begin(), rows_.end(), red.pivot,
                             [](const Row& x, std::size_t p) { return x.pivot < p; });
  rows_.insert(at, std::move(red));
  return true;
}

bool ExactMatrixBasis::in_span(const std::vector<long long>& row) const {
  return reduce(row).pivot == width_;
}

long long rank_of(const std::vector<std::vector<long long>>& sequences, std::size_t prefix_len) {
  ExactMatrixBasis basis(prefix_len);
  for (const auto& s : sequences) {
    if (s.size() < prefix_len) throw std::invalid_argument("rank_of: sequence shorter than prefix");
    basis.add_row(std::vector<long long>(s.begin(), s.begin() + prefix_len));
  }
  return static_cast<long long>(basis.rank());
}

// --- generator families ----------------------------------------------------

GeneratorSets generator_sets(const RegularityParams& p, std::size_t one_hot_count,
                             std::size_t len) {
  GeneratorSets g;
  std::size_t period = static_cast<std::size_t>(p.k * p.ell);
  for (std::size_t m = 0; m < period; ++m) {
    std::vector<long long> row(len, 0), shifted(len, 0);
    for (std::size_t i = 0; i < len; ++i) row[i] = (i % period == m) ? 1 : 0;
    for (std::size_t i = 1; i < len; ++i) shifted[i] = row[i];
    g.periodic.push_back(std::move(row));
    g.shifted_periodic.push_back(std::move(shifted));
  }
  for (std::size_t m = 0; m < one_hot_count; ++m) {
    std::vector<long long> row(len, 0);
    if (m < len) row[m] = 1;
    g.one_hot.push_back(std::move(row));
  }
  for (std::size_t m = 0; m < 4; ++m) {
    std::vector<long long> row(len, 0);
    for (std::size_t i = 0; i < len; ++i) row[i] = (i % 4 == m) ? 1 : 0;
    g.period4.push_back(std::move(row));
  }
  return g;
}

RelationReport verify_relations(const CanonicalWords& cw, std::size_t prefix_len) {
  auto w = [&cw](long long x) { return static_cast<long long>(letter_at(cw, x)); };
  for (long long i = 0; i < static_cast<long long>(prefix_len); ++i) {
    long long w6 = w(6 * i), w36 = w(36 * i), w62 = w(6 * i + 2), w64 = w(6 * i + 4);
    long long g0 = i % 4 == 0, g1 = i % 4 == 1, g2 = i % 4 == 2, g3 = i % 4 == 3;
    if (-w6 + w36 + w62 - 2 * w64 + 2 * g0 != 0) return {false, 1, i};
    if (-w6 - w36 + w62 + 2 * g1 != 0) return {false, 2, i};
    if (-w6 + w36 - w62 + 2 * g2 != 0) return {false, 3, i};
    if (w6 - w36 - w62 + 2 * g3 != 0) return {false, 4, i};
    long long v0 = i == 0;
    if (-w(216 * i + 23) - w(216 * i + 29) + w(216 * i + 35) + w(216 * i + 41) + v0 != 0)
      return {false, 5, i};
  }
  return {true, 0, -1};
}

RankBounds rank_bound_report(const RegularityParams& p) {
  RankBounds b;
  b.E = transient_E(p);
  b.q_E = q_sub_e(p, b.E);
  b.generator_bound = generator_bound(p.k, p.ell, b.q_E, b.E);
  b.refined_bound = 24 + 4046 + (b.E + 1);
  return b;
}

long long generator_bound(long long k, long long ell, long long q_E, int E) {
  BigInt total = geom(k, E) + BigInt(k) * ell + (q_E + 1) + (E + 1);
  return checked_ll(total, "generator_bound");
}

// --- kernel rank of the 5/4 word -------------------------------------------

namespace {

std::pair<std::uint64_t, std::uint64_t> hash128(const std::vector<long long>& v) {
  std::uint64_t h1 = 1469598103934665603ull;
  std::uint64_t h2 = 0x9e3779b97f4a7c15ull;
  for (long long x : v) {
    auto u = static_cast<std::uint64_t>(x);
    h1 = (h1 ^ u) * 1099511628211ull;
    h2 ^= u + 0x9e3779b97f4a7c15ull + (h2 << 6) + (h2 >> 2);
  }
  return {h1, h2};
}

}  // namespace

KernelRankReport kernel_rank_54(const CanonicalWords& cw, int emax, std::size_t terms,
                                bool include_w, int workers) {
  RegularityParams p = params54();
  ExactMatrixBasis basis(terms);
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  KernelRankReport report{0, -1, 0, 0};

  std::vector<std::pair<int, long long>> batch;
  std::vector<std::vector<long long>> rows;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> hashes;
  std::vector<char> keep;
  const std::size_t batch_cap = 1024;

  auto flush = [&] {
    if (batch.empty()) return;
    rows.assign(batch.size(), {});
    hashes.assign(batch.size(), {});
    parallel_chunks(batch.size(), workers, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t t = lo; t < hi; ++t) {
        rows[t] = kernel_sequence_54(cw, batch[t].first, batch[t].second, terms);
        hashes[t] = hash128(rows[t]);
      }
    });
    keep.assign(batch.size(), 1);
    for (std::size_t t = 0; t < batch.size(); ++t)
      if (!seen.insert(hashes[t]).second) keep[t] = 0;
    parallel_chunks(batch.size(), workers, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t t = lo; t < hi; ++t)
        if (keep[t]) keep[t] = basis.in_span(rows[t]) ? 0 : 2;
    });
    for (std::size_t t = 0; t < batch.size(); ++t)
      if (keep[t] == 2) basis.add_row(rows[t]);
    batch.clear();
  };

  for (int e = 0; e <= emax; ++e) {
    long long ke = pow_ll(p.k, e);
    long long je = j_sub_e(p, e);
    for (long long j = 0; j < ke; ++j) {
      if (j == je) continue;
      ++report.rows_fed;
      batch.emplace_back(e, j);
      if (batch.size() >= batch_cap) flush();
    }
  }
  flush();
  report.rows_unique = seen.size();
  report.dim_v = static_cast<long long>(basis.rank());

  if (include_w) {
    for (int e = 0; e <= emax; ++e)
      basis.add_row(kernel_sequence_54(cw, e, j_sub_e(p, e), terms));
    basis.add_row(kernel_sequence_54(cw, emax + 1, j_sub_e(p, emax), terms));
    report.total_rank = static_cast<long long>(basis.rank());
  }
  return report;
}

std::vector<long long> synthesize_word(const RegularityParams& p, std::vector<long long> seed,
                                       std::size_t n) {
  p.check();
  if (p.s - p.r - p.k + 1 >= 0)
    throw std::invalid_argument("synthesize_word: need s < r + k - 1 for forward construction");
  if (static_cast<long long>(seed.size()) < p.r)
    throw std::invalid_argument("synthesize_word: seed must cover w(0..r-1)");
  std::vector<long long> w(seed.begin(), seed.begin() + p.r);
  w.reserve(n);
  for (long long x = p.r; x < static_cast<long long>(n); ++x) {
    long long i = (x - p.r) / p.k;
    long long m = (x - p.r) % p.k;
    if (m <= p.k - 2)
      w.push_back(p.u[static_cast<std::size_t>((p.k * i + m) % (p.k * p.ell))]);
    else
      w.push_back(w[static_cast<std::size_t>(i + p.s)] +
                  p.d[static_cast<std::size_t>(i % p.ell)]);
  }
  return w;
}

}  // namespace fpw
