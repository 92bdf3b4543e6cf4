#include <doctest.h>

#include <random>

#include "fpword/canonical.hpp"

using namespace fpw;

// canonical54() runs the greedy generator once per process; every test here
// shares that instance

TEST_CASE("canonical words carry the documented shape") {
  const CanonicalWords& cw = canonical54();
  CHECK(cw.p.size() == 6764);
  CHECK(cw.z.size() == 20226);
  CHECK(format_subscripted(SubWord(cw.z.begin(), cw.z.begin() + 12)) ==
        "0_2 0_3 3_4 0_5 1_6 1_7 -1_0 2_1 0_2 2_3 2_4 0_5");
  CHECK(format_subscripted(SubWord(cw.z.end() - 4, cw.z.end())) == "0_0 0_1 0_2 3_3");
  CHECK(subscript_increasing(cw.z));
}

TEST_CASE("the other preimage starts 2_6 0_7 1_0 0_1 -1_2") {
  const CanonicalWords& cw = canonical54();
  Word mid(cw.greedy_prefix.begin() + 6764, cw.greedy_prefix.begin() + 6764 + 6 * 20226);
  SubWord other = desubstitute(mid, 6);
  CHECK(format_subscripted(SubWord(other.begin(), other.begin() + 5)) == "2_6 0_7 1_0 0_1 -1_2");
}

TEST_CASE("s starts with z and continues with phi(z)") {
  const CanonicalWords& cw = canonical54();
  SubWord s = s_stream(cw.z, 20232);
  CHECK(std::equal(cw.z.begin(), cw.z.end(), s.begin()));
  CHECK(format_subscripted(SubWord(s.begin() + 20226, s.end())) == "1_4 1_5 1_6 0_7 0_0 3_1");
  CHECK(subscript_increasing(s));
}

TEST_CASE("s avoids the forbidden alphabet") {
  const CanonicalWords& cw = canonical54();
  const SubWord& gamma = [] {
    SubWord g = parse_subscripted(
        "-3_0 -3_2 -2_0 -2_1 -2_2 -2_3 -2_5 -2_7 -1_1 -1_3 -1_4 -1_5 -1_6 -1_7 0_4 0_6");
    std::sort(g.begin(), g.end());
    return g;
  }();
  SubWord s = s_stream(cw.z, 200000);
  for (SubLetter l : s) REQUIRE_FALSE(std::binary_search(gamma.begin(), gamma.end(), l));
}

TEST_CASE("the reconstructed word starts over p and the image rows") {
  const CanonicalWords& cw = canonical54();
  Word w = full_word(cw, 6764 + 12);
  CHECK(std::equal(cw.p.begin(), cw.p.end(), w.begin()));
  CHECK(Word(w.begin() + 6764, w.end()) == parse_word("1 1 1 0 0 3 0 1 1 0 1 2"));

  // the block after p tau(phi(z)) is tau(phi^2(s))
  SubWord s = s_stream(cw.z, 600 / 6);
  Word second = apply_tau(apply_phi(apply_phi(SubWord(s.begin(), s.begin() + 100))));
  Word tail = full_word(cw, 128120 + 600);
  CHECK(std::equal(second.begin(), second.begin() + 600, tail.begin() + 128120));
}

TEST_CASE("letter access runs the recurrence") {
  const CanonicalWords& cw = canonical54();
  for (long long i : {0, 31, 6764, 123060, 331039})
    CHECK(letter_at(cw, i) == cw.greedy_prefix[static_cast<std::size_t>(i)]);

  CHECK(letter_at(cw, 6LL * 480000 + 123061) == letter_at(cw, 485920) + 3);
  CHECK_THROWS_AS(letter_at(cw, -1), std::out_of_range);
}

TEST_CASE("recurrence and morphic access agree far out") {
  const CanonicalWords& cw = canonical54();

  Word stream = full_word(cw, 2'000'000);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long long> small(0, 1'999'999);
  for (int t = 0; t < 20000; ++t) {
    long long i = small(rng);
    REQUIRE(letter_at(cw, i) == stream[static_cast<std::size_t>(i)]);
  }

  std::uniform_int_distribution<long long> large(0, 100'000'000);
  for (int t = 0; t < 10000; ++t) {
    long long i = large(rng);
    REQUIRE(letter_at(cw, i) == morphic_letter_at(cw, i));
  }
}

TEST_CASE("background columns") {
  CHECK(*background_letter(2000, 5) == 0);
  CHECK(*background_letter(2000, 3) == 1);
  CHECK_FALSE(background_letter(2000, 1).has_value());
  CHECK_THROWS_AS(background_letter(1126, 0), std::out_of_range);

  const CanonicalWords& cw = canonical54();
  for (long long i = 1127; i < 3000; ++i)
    for (int m : {0, 2, 3, 4, 5})
      REQUIRE(*background_letter(i, m) == cw.greedy_prefix[static_cast<std::size_t>(6 * i + m)]);
}

TEST_CASE("column increments follow the d cycle") {
  const CanonicalWords& cw = canonical54();
  for (long long i = 0; i <= 1'000'000; ++i) {
    REQUIRE(letter_at(cw, 6 * i + 123061) - letter_at(cw, i + 5920) ==
            kIncrements54[static_cast<std::size_t>(i % 8)]);
  }
}

TEST_CASE("build_canonical rejects short prefixes") {
  CHECK_THROWS_AS(build_canonical(100000), std::runtime_error);
}
