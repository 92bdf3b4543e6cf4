#pragma once

#include <array>

#include "fpword/words.hpp"

namespace fpw {

/// The 6-uniform morphism on the subscripted alphabet, stored as an 8x6
/// array: per row j, five constant letters followed by a value offset d[j]
/// applied to the preimage value. Subscripts increase by 1 mod 8 within each
/// row and across row boundaries; row j starts at subscript 6j mod 8.
struct MorphismTable {
  std::array<std::array<SubLetter, 5>, 8> constants;
  std::array<Letter, 8> d;

  /// The image of n_j: the five constants of row j, then (n + d[j]) with the
  /// row's closing subscript.
  std::array<SubLetter, 6> image(SubLetter l) const;

  /// tau of the image: six plain integers.
  std::array<Letter, 6> tau_image(SubLetter l) const;

  static const MorphismTable& phi();
};

SubWord apply_phi(const SubWord& w);
Word apply_tau(const SubWord& w);

/// Inverts tau(phi(.)): consumes w in blocks of six, matching each block's
/// first five letters against the row selected by the running subscript and
/// recovering the preimage value from the sixth letter. The first preimage
/// letter carries start_subscript. Throws std::invalid_argument on a
/// constant-column mismatch, naming the block and column.
SubWord desubstitute(const Word& w, int start_subscript);

/// phi(x) == phi(y) as words, decided from the table alone: subscripts must
/// differ by -4, 0, or 4, and the value gap is half the subscript gap for
/// even subscripts, zero for odd ones.
bool phi_image_equal(SubLetter x, SubLetter y);

}  // namespace fpw
