#include <doctest.h>

#include "fpword/greedy.hpp"

using namespace fpw;

namespace {
std::string digits(const Word& w) {
  std::string s;
  for (Letter v : w) s += static_cast<char>('0' + v);
  return s;
}
}  // namespace

TEST_CASE("greedy prefixes match the known words") {
  CHECK(digits(generate(FracExponent(5, 4), 32)) == "00001111020210100101121200001311");
  CHECK(digits(generate(FracExponent(2, 1), 32)) == "01020103010201040102010301020105");
  CHECK(digits(generate(FracExponent(3, 2), 43)) ==
        "0011021001120011031001130011021001140011031");
}

TEST_CASE("greedy generation is deterministic and prefix-stable") {
  for (auto [a, b] : {std::pair<long long, long long>{5, 4}, {3, 2}, {7, 6}}) {
    FracExponent e(a, b);
    Word shorter = generate(e, 200);
    Word longer = generate(e, 350);
    CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
  }
}

TEST_CASE("greedy output is power-free") {
  for (auto [a, b] : {std::pair<long long, long long>{5, 4}, {3, 2}, {2, 1}}) {
    FracExponent e(a, b);
    CHECK(is_power_free(generate(e, 2000), e).free);
  }
}

TEST_CASE("lexicographic minimality certificates") {
  CHECK(verify_lex_least(generate(FracExponent(5, 4), 2000), FracExponent(5, 4)).least);

  CHECK(verify_lex_least(parse_word("0 1"), FracExponent(2, 1)).least);

  LexLeastVerdict v = verify_lex_least(parse_word("0 2"), FracExponent(2, 1));
  REQUIRE_FALSE(v.least);
  CHECK(v.counterexample->first == 1);
  CHECK(v.counterexample->second == 1);

  CHECK_THROWS_AS(verify_lex_least(parse_word("0 1 0 1"), FracExponent(2, 1)),
                  std::invalid_argument);
}
