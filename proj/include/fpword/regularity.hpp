#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "fpword/canonical.hpp"

namespace fpw {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Parameters of the recurrence
///   w(ki + r + m) = u(ki + m)        for 0 <= m <= k-2,
///   w(ki + r + k-1) = w(i+s) + d(i)  otherwise,
/// with d periodic of period ell and u periodic of period k*ell.
struct RegularityParams {
  long long k;
  long long ell;
  long long r;
  long long s;
  std::vector<long long> d;  // length ell
  std::vector<long long> u;  // length k*ell

  void check() const;
};

/// k = 6, ell = 8, r = 123056, s = 5920; d is the increment cycle and u the
/// background made from the tau-image rows of eight zero letters.
RegularityParams params54();

long long pow_ll(long long k, int e);

/// j_e* = (k^e - 1)/(k-1) (r - s + k - 1) + s: the residue class (mod any
/// k^h, h <= e) on which the self-similar case can be iterated.
long long j_star(const RegularityParams& p, int e);

/// Q_e = (k^e - 1)(r-s+k-1)/(k^e (k-1)) + s/k^e, and q_e = floor(Q_e).
BigRat q_upper(const RegularityParams& p, int e);
long long q_sub_e(const RegularityParams& p, int e);

/// j_e = j_e* - k^e q_e, the unique representative in [0, k^e).
long long j_sub_e(const RegularityParams& p, int e);

/// Least E with q_e constant for e >= E.
int transient_E(const RegularityParams& p);

/// True when q_E (k-1) = r - s + k - 1, the branch where the iteration-depth
/// log formula degenerates and shifted periodic generators are needed.
bool integer_case(const RegularityParams& p);

/// Case-2.2 constant: least e >= E with q_e at the limit and
/// f_{e,0,j_e}(i) >= 0 for all i >= 1.
int transient_E_prime(const RegularityParams& p);

/// h_e = e + floor(log_k(1 - q_e(k-1)/(r-s+k-1))), evaluated exactly.
/// Requires q_e < (r-s+k-1)/(k-1).
long long h_sub_e(const RegularityParams& p, int e);

/// f_{e,t,j}(i) = k^(e-t) i + (j-s)/k^t - (k^t-1)(r-s+k-1)/(k^t (k-1)),
/// as an exact rational (integrality is a property to check, not an input).
BigRat f_eval(const RegularityParams& p, int e, int t, long long j, long long i);

/// w(k^e i + j) for i = 0..len-1 for any letter source.
template <typename F>
std::vector<long long> kernel_sequence(F&& w, long long k, int e, long long j, std::size_t len) {
  long long ke = pow_ll(k, e);
  std::vector<long long> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(w(ke * static_cast<long long>(i) + j));
  return out;
}

std::vector<long long> kernel_sequence_54(const CanonicalWords& cw, int e, long long j,
                                          std::size_t len);

/// Exact integer row reduction: each row is reduced against the basis by
/// cross-multiplication and gcd normalization, and appended when nonzero.
/// Arithmetic runs in int64 and escalates per row to arbitrary precision on
/// overflow; no floating point anywhere.
class ExactMatrixBasis {
 public:
  explicit ExactMatrixBasis(std::size_t width) : width_(width) {}

  /// True when the row was independent and extended the basis.
  bool add_row(const std::vector<long long>& row);

  /// Reduces a copy against the current basis without inserting. Safe to call
  /// concurrently with other in_span calls.
  bool in_span(const std::vector<long long>& row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }

 private:
  struct Row {
    std::vector<long long> small;
    std::vector<BigInt> big;
    std::size_t pivot;
    bool wide;
  };
  // returns the reduced row; zero-width result means the row was dependent
  Row reduce(const std::vector<long long>& row) const;

  std::size_t width_;
  std::vector<Row> rows_;  // echelon order: pivots strictly increasing
};

/// Rank of explicitly given sequences truncated to prefix_len.
long long rank_of(const std::vector<std::vector<long long>>& sequences, std::size_t prefix_len);

/// The finite generator families from the regularity proof, materialized to
/// len terms: the period-(k ell) standard basis, one-hot sequences
/// v_0..v_{count-1}, the period-4 indicators, and right-shifted periodics.
struct GeneratorSets {
  std::vector<std::vector<long long>> periodic;        // G_{k ell}
  std::vector<std::vector<long long>> one_hot;         // H_count
  std::vector<std::vector<long long>> period4;         // G_4
  std::vector<std::vector<long long>> shifted_periodic;  // sigma(g(i)_{i>=1})
};
GeneratorSets generator_sets(const RegularityParams& p, std::size_t one_hot_count,
                             std::size_t len);

/// The five integer relations tying the level-1/2/3 kernel sequences to the
/// period-4 indicators and v_0, checked for 0 <= i < prefix_len.
struct RelationReport {
  bool all_hold;
  int first_relation;  // 1-based; 0 when all hold
  long long first_i;
};
RelationReport verify_relations(const CanonicalWords& cw, std::size_t prefix_len);

/// Checks w(K i + R) = w(i + S) + D(i mod |D|) for 0 <= i <= i_max.
struct RecurrenceCheck {
  bool holds;
  long long first_fail;  // -1 when the recurrence holds
};
template <typename F>
RecurrenceCheck verify_recurrence(F&& w, long long K, long long R, long long S,
                                  const std::vector<long long>& D, long long i_max) {
  if (D.empty()) throw std::invalid_argument("verify_recurrence: empty increment map");
  for (long long i = 0; i <= i_max; ++i)
    if (w(K * i + R) != w(i + S) + D[static_cast<std::size_t>(i % static_cast<long long>(D.size()))])
      return {false, i};
  return {true, -1};
}

/// The two generator-count bounds: the general
/// sum_{e<E} k^e + k ell + (q_E + 1) + (E + 1), and the refined
/// 24 + 4046 + (E + 1) from halving the periodic basis and shortening the
/// one-hot family against the background columns.
struct RankBounds {
  int E;
  long long q_E;
  long long generator_bound;
  long long refined_bound;
};
RankBounds rank_bound_report(const RegularityParams& p);
long long generator_bound(long long k, long long ell, long long q_E, int E);

/// Row-reduces the kernel sequences of the least 5/4-power-free word on
/// 0 <= e <= emax, j != j_e, over the first `terms` letters (dim V when
/// emax = 7, terms = 4050). include_w additionally inserts the j_e rows for
/// e <= emax and the (emax+1, j_emax) row, giving the total kernel rank.
struct KernelRankReport {
  long long dim_v;
  long long total_rank;  // -1 when include_w is false
  std::size_t rows_fed;
  std::size_t rows_unique;
};
KernelRankReport kernel_rank_54(const CanonicalWords& cw, int emax, std::size_t terms,
                                bool include_w, int workers = 0);

/// Builds a word satisfying the recurrence by forward construction from seed
/// values w(0..r-1). Requires s < r + k - 1 so the self-similar case always
/// looks back.
std::vector<long long> synthesize_word(const RegularityParams& p, std::vector<long long> seed,
                                       std::size_t n);

}  // namespace fpw
