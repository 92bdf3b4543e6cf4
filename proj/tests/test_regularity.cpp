#include <doctest.h>

#include <random>

#include "fpword/regularity.hpp"
#include "oracles.hpp"

using namespace fpw;

TEST_CASE("the derived constants of the 5/4 word") {
  RegularityParams p = params54();
  const long long want_j[] = {0, 1, 31, 31, 895, 7375, 38479, 38479, 318415, 1998031};
  for (int e = 0; e < 10; ++e) CHECK(j_sub_e(p, e) == want_j[e]);
  const long long want_q[] = {5920, 20510, 22941, 23347, 23414, 23425, 23427, 23428, 23428};
  for (int e = 0; e < 9; ++e) CHECK(q_sub_e(p, e) == want_q[e]);
  CHECK(transient_E(p) == 7);
  CHECK_FALSE(integer_case(p));
  for (int e = 7; e <= 10; ++e) CHECK(h_sub_e(p, e) == e - 7);

  RankBounds b = rank_bound_report(p);
  CHECK(b.generator_bound == 79472);
  CHECK(b.refined_bound == 4078);
  CHECK(generator_bound(2, 1, 0, 1) == 6);

  // q_e = floor(Q_e), and Q_e sits strictly below the next integer
  CHECK(q_upper(p, 7) > 23428);
  CHECK(q_upper(p, 7) < 23429);
}

TEST_CASE("j_e is the residue of j_e* in its range") {
  RegularityParams p = params54();
  for (int e = 0; e <= 9; ++e) {
    long long ke = pow_ll(p.k, e);
    CHECK(j_sub_e(p, e) >= 0);
    CHECK(j_sub_e(p, e) < ke);
    CHECK((j_star(p, e) - j_sub_e(p, e)) % ke == 0);
  }
}

TEST_CASE("the f ladder identity") {
  std::mt19937_64 rng(12);
  RegularityParams p = params54();
  std::uniform_int_distribution<long long> ipick(0, 100000);
  for (int e = 1; e <= 8; ++e)
    for (int t = 0; t + 1 <= e; ++t) {
      long long i = ipick(rng);
      BigRat lhs = f_eval(p, e, t, 0, i) + p.s;
      BigRat rhs = BigRat(p.k) * f_eval(p, e, t + 1, 0, i) + p.r + p.k - 1;
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("f is integral on the admissible residues") {
  RegularityParams p = params54();
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long long> ipick(0, 5000);
  for (int e = 2; e <= 6; ++e) {
    for (int h = 0; h <= e; ++h) {
      long long ke = pow_ll(p.k, e), kh = pow_ll(p.k, h);
      long long j = ((j_star(p, e) % kh) + 7 * kh) % ke;  // j = j_e* mod k^h, inside [0, k^e)
      for (int t = 0; t <= h; ++t) {
        BigRat v = f_eval(p, e, t, j, ipick(rng));
        REQUIRE(boost::multiprecision::denominator(v) == 1);
      }
    }
  }
}

TEST_CASE("kernel sequences against the background") {
  const CanonicalWords& cw = canonical54();
  std::vector<long long> base = kernel_sequence_54(cw, 0, 0, 64);
  for (int i = 0; i < 64; ++i) CHECK(base[i] == cw.greedy_prefix[i]);

  std::vector<long long> col5 = kernel_sequence_54(cw, 1, 5, 2000);
  std::vector<long long> col3 = kernel_sequence_54(cw, 1, 3, 2000);
  for (int i = 1127; i < 2000; ++i) {
    CHECK(col5[i] == 0);
    CHECK(col3[i] == 1);
  }
}

TEST_CASE("exact rank on known families") {
  GeneratorSets g = generator_sets(params54(), 1, 96);
  CHECK(g.periodic.size() == 48);
  // one 1 per 48-window
  for (const auto& row : g.periodic) {
    long long sum = 0;
    for (int t = 0; t < 48; ++t) sum += row[t];
    CHECK(sum == 1);
  }
  CHECK(rank_of(g.period4, 64) == 4);

  // the period-24 family backing the refined bound
  RegularityParams p24{6, 4, 10, 2, {1, 2, 1, 2}, std::vector<long long>(24, 0)};
  GeneratorSets g24 = generator_sets(p24, 1, 48);
  CHECK(g24.periodic.size() == 24);
  for (const auto& row : g24.periodic) {
    long long sum = 0;
    for (int t = 0; t < 24; ++t) sum += row[t];
    CHECK(sum == 1);
  }

  CHECK(g.one_hot[0][0] == 1);
  CHECK(g.one_hot[0][1] == 0);

  // right shift drops the first term
  RegularityParams p4{2, 2, 6, 0, {2, 0}, {0, 1, 1, 0}};
  GeneratorSets g4 = generator_sets(p4, 1, 9);
  CHECK(g4.shifted_periodic[0] == std::vector<long long>{0, 0, 0, 0, 1, 0, 0, 0, 1});
}

TEST_CASE("rank is invariant under scaling and permutation") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long long> val(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::vector<long long>> rows(6, std::vector<long long>(10));
    for (auto& r : rows)
      for (auto& x : r) x = val(rng);
    long long base = rank_of(rows, 10);

    std::vector<std::vector<long long>> scaled = rows;
    for (std::size_t t = 0; t < scaled.size(); ++t)
      for (auto& x : scaled[t]) x *= (t % 2 == 0 ? 3 : -7);
    CHECK(rank_of(scaled, 10) == base);

    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(rank_of(rows, 10) == base);
  }
}

TEST_CASE("the eliminator agrees with rational elimination") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<long long> val(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 4 + trial % 5, w = 6 + trial % 7;
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(w));
    for (auto& r : rows)
      for (auto& x : r) x = val(rng);
    // plant a dependency
    if (n >= 2) {
      rows[n - 1] = rows[0];
      for (std::size_t t = 0; t < w; ++t) rows[n - 1][t] = 2 * rows[0][t] - 3 * rows[1][t];
    }
    std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(w));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < w; ++c) m[r][c] = rows[r][c];
    REQUIRE(rank_of(rows, w) == oracle::rank(m));
  }
}

TEST_CASE("the eliminator survives values that overflow int64 products") {
  std::vector<std::vector<long long>> rows = {
      {1LL << 62, 1, 0},
      {(1LL << 62) - 1, 0, 1},
      {1, 1, 1},
  };
  CHECK(rank_of(rows, 3) == 3);
}

TEST_CASE("the column recurrence as a generic check") {
  const CanonicalWords& cw = canonical54();
  auto w = [&cw](long long i) { return static_cast<long long>(letter_at(cw, i)); };
  std::vector<long long> d(kIncrements54.begin(), kIncrements54.end());
  RecurrenceCheck res = verify_recurrence(w, 6, 123061, 5920, d, 20000);
  CHECK(res.holds);

  // a wrong increment map fails immediately
  std::vector<long long> bad = d;
  bad[0] += 1;
  RecurrenceCheck neg = verify_recurrence(w, 6, 123061, 5920, bad, 20000);
  CHECK_FALSE(neg.holds);
  CHECK(neg.first_fail == 0);
}

TEST_CASE("one linear relation, spelled out") {
  const CanonicalWords& cw = canonical54();
  // the fourth relation at i = 3
  CHECK(letter_at(cw, 18) - letter_at(cw, 108) - letter_at(cw, 20) + 2 == 0);
  CHECK(verify_relations(cw, 500).all_hold);
}

TEST_CASE("synthetic recurrences are spanned by their proof generators") {
  RegularityParams p{2, 1, 5, 2, {3}, {1, 0}};
  CHECK(transient_E(p) == 1);
  CHECK_FALSE(integer_case(p));

  std::vector<long long> w = synthesize_word(p, {1, 0, 2, 0, 1}, 4000);
  auto at = [&w](long long x) { return w[static_cast<std::size_t>(x)]; };

  long long qE = q_sub_e(p, 1);
  std::size_t T = static_cast<std::size_t>(qE) + 1 + 4 * 2 + 16;
  ExactMatrixBasis basis(T);
  GeneratorSets gens = generator_sets(p, static_cast<std::size_t>(qE) + 1, T);
  for (auto& row : gens.periodic) basis.add_row(row);
  for (auto& row : gens.one_hot) basis.add_row(row);
  basis.add_row(kernel_sequence(at, 2, 0, 0, T));
  for (int e = 0; e <= 1; ++e) basis.add_row(kernel_sequence(at, 2, e, j_sub_e(p, e), T));

  for (int e = 0; e <= 3; ++e)
    for (long long j = 0; j < pow_ll(2, e); ++j)
      REQUIRE(basis.in_span(kernel_sequence(at, 2, e, j, T)));
}

TEST_CASE("integer-case parameters take the shifted generators") {
  RegularityParams p{2, 2, 3, 2, {1, 2}, {1, 0, 2, 1}};
  CHECK(integer_case(p));
  CHECK(transient_E(p) == 0);
  CHECK(transient_E_prime(p) == 1);
  CHECK_THROWS_AS(h_sub_e(p, 3), std::domain_error);
}

TEST_CASE("synthesize_word honors the recurrence") {
  RegularityParams p{3, 2, 7, 1, {2, 1}, {1, 0, 2, 0, 1, 1}};
  std::vector<long long> w = synthesize_word(p, {0, 1, 2, 0, 1, 2, 0}, 500);
  for (long long i = 0; 3 * i + p.r + 2 < 500; ++i) {
    for (long long m = 0; m <= 1; ++m)
      REQUIRE(w[3 * i + p.r + m] == p.u[(3 * i + m) % 6]);
    REQUIRE(w[3 * i + p.r + 2] == w[i + p.s] + p.d[i % 2]);
  }
}
