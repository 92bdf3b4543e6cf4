#include <doctest.h>

#include <random>

#include "fpword/morphism.hpp"

using namespace fpw;

TEST_CASE("the image table") {
  const MorphismTable& phi = MorphismTable::phi();
  CHECK(phi.d == std::array<Letter, 8>{3, 2, 3, 2, 1, 2, 1, 2});

  SubWord row0 = apply_phi({sub_letter(0, 0)});
  CHECK(format_subscripted(row0) == "0_0 1_1 0_2 0_3 1_4 3_5");
  CHECK(format_subscripted(apply_phi({sub_letter(1, 4)})) == "0_0 1_1 0_2 0_3 1_4 2_5");
  CHECK(apply_phi({}).empty());

  // subscripts advance by 1 mod 8 inside a row and across row boundaries
  SubWord all;
  for (int j = 0; j < 8; ++j) all.push_back(sub_letter(0, j));
  CHECK(subscript_increasing(apply_phi(all)));
  // row j starts at subscript 6j mod 8
  for (int j = 0; j < 8; ++j) CHECK(phi.constants[j][0].sub == 6 * j % 8);
}

TEST_CASE("tau drops subscripts") {
  CHECK(apply_tau({sub_letter(3, 5)}) == parse_word("3"));
  CHECK(apply_tau(apply_phi({sub_letter(0, 2)})) == parse_word("1 1 1 0 0 3"));
  CHECK(apply_tau(apply_phi({sub_letter(0, 1)})) == parse_word("1 1 0 0 0 2"));
}

TEST_CASE("desubstitution inverts tau o phi") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<Letter> val(-5, 5);
  std::uniform_int_distribution<int> start(0, 7);
  std::uniform_int_distribution<std::size_t> length(1, 100);
  for (int trial = 0; trial < 200; ++trial) {
    SubWord u(length(rng));
    int s0 = start(rng);
    for (std::size_t t = 0; t < u.size(); ++t)
      u[t] = sub_letter(val(rng), (s0 + static_cast<int>(t)) % 8);
    SubWord img = apply_phi(u);
    CHECK(subscript_increasing(img));
    CHECK(desubstitute(apply_tau(img), s0) == u);
  }
}

TEST_CASE("desubstitution reports the failing block and column") {
  Word image = apply_tau(apply_phi({sub_letter(0, 0), sub_letter(1, 1)}));
  image[7] = 9;  // second block, second column
  try {
    desubstitute(image, 0);
    FAIL("expected a mismatch");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("block 1") != std::string::npos);
    CHECK(std::string(e.what()).find("column 1") != std::string::npos);
  }
  CHECK_THROWS_AS(desubstitute(parse_word("0 1 0"), 0), std::invalid_argument);
  CHECK_THROWS_AS(desubstitute(Word{}, 9), std::invalid_argument);
}

TEST_CASE("phi_image_equal matches expanded images") {
  CHECK(phi_image_equal(sub_letter(0, 0), sub_letter(2, 4)));
  CHECK(phi_image_equal(sub_letter(5, 1), sub_letter(5, 5)));
  CHECK_FALSE(phi_image_equal(sub_letter(0, 0), sub_letter(0, 4)));

  for (Letter v1 = -4; v1 <= 4; ++v1)
    for (int s1 = 0; s1 < 8; ++s1)
      for (Letter v2 = -4; v2 <= 4; ++v2)
        for (int s2 = 0; s2 < 8; ++s2) {
          SubLetter x = sub_letter(v1, s1), y = sub_letter(v2, s2);
          bool expanded = apply_phi({x}) == apply_phi({y});
          REQUIRE(phi_image_equal(x, y) == expanded);
        }
}

TEST_CASE("even-subscript letters of an image walk the four-letter cycle") {
  static const SubWord cycle = parse_subscripted("0_0 0_2 1_4 1_6");
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Letter> val(-3, 6);
  std::uniform_int_distribution<int> start(0, 7);
  for (int trial = 0; trial < 100; ++trial) {
    SubWord u(40);
    int s0 = start(rng);
    for (std::size_t t = 0; t < u.size(); ++t)
      u[t] = sub_letter(val(rng), (s0 + static_cast<int>(t)) % 8);
    SubWord img = apply_phi(u);
    SubWord evens;
    for (SubLetter l : img)
      if (l.sub % 2 == 0) evens.push_back(l);
    REQUIRE(!evens.empty());
    // locate the phase from the first letter, then the rest must follow
    std::size_t phase = 0;
    while (phase < 4 && !(evens[0] == cycle[phase])) ++phase;
    REQUIRE(phase < 4);
    for (std::size_t t = 0; t < evens.size(); ++t) CHECK(evens[t] == cycle[(phase + t) % 4]);
  }
}

TEST_CASE("subscripted parsing round-trips") {
  SubWord w = parse_subscripted("-1_0 3_5 0_7");
  CHECK(w.size() == 3);
  CHECK(format_subscripted(w) == "-1_0 3_5 0_7");
  CHECK_THROWS_AS(parse_subscripted("3_9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_subscripted("_3"), std::invalid_argument);
}
