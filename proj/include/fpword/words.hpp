#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpw {

/// A letter of the nonnegative-integer alphabet. Signed and 32 bits wide so
/// that intermediate symbolic values (which may dip below zero) fit too.
using Letter = std::int32_t;

/// A finite word over the integers, indexed from 0.
using Word = std::vector<Letter>;

/// A rational exponent a/b in lowest terms with a/b > 1.
struct FracExponent {
  long long a;
  long long b;

  FracExponent(long long a_, long long b_) : a(a_), b(b_) {
    if (b <= 0 || a <= b) throw std::invalid_argument("exponent must satisfy a > b >= 1");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("exponent a/b must be in lowest terms");
  }
};

/// A letter n_j of the subscripted alphabet: an integer value n carrying a
/// subscript j in {0,...,7}.
struct SubLetter {
  Letter value;
  std::int8_t sub;

  friend bool operator==(SubLetter x, SubLetter y) { return x.value == y.value && x.sub == y.sub; }
  friend bool operator!=(SubLetter x, SubLetter y) { return !(x == y); }
  friend bool operator<(SubLetter x, SubLetter y) {
    return x.value != y.value ? x.value < y.value : x.sub < y.sub;
  }
};

using SubWord = std::vector<SubLetter>;

inline SubLetter sub_letter(Letter value, int sub) {
  if (sub < 0 || sub > 7) throw std::invalid_argument("subscript out of range");
  return SubLetter{value, static_cast<std::int8_t>(sub)};
}

/// True when subscripts advance by 1 mod 8 along the word.
bool subscript_increasing(const SubWord& w);

Word parse_word(const std::string& text);
SubWord parse_subscripted(const std::string& text);

std::string format_plain(const Word& w);
std::string format_bfile(const Word& w);
std::string format_columns(const Word& w, std::size_t width);
std::string format_subscripted(const SubWord& w);
std::string format_subletter(SubLetter l);

}  // namespace fpw
