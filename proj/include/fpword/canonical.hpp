#pragma once

#include <optional>

#include "fpword/morphism.hpp"
#include "fpword/power.hpp"

namespace fpw {

inline constexpr std::size_t kPrefixLen54 = 331040;
inline constexpr std::size_t kPLen54 = 6764;
inline constexpr std::size_t kZLen54 = 20226;

/// Increments of the self-similar column recurrence, by residue mod 8:
/// w(6i + 123061) = w(i + 5920) + kIncrements54[i mod 8].
inline constexpr std::array<Letter, 8> kIncrements54 = {3, 2, 3, 2, 1, 2, 1, 2};
inline constexpr long long kRecurrenceArg54 = 123061;
inline constexpr long long kRecurrenceShift54 = 5920;

/// The canonical decomposition of the least 5/4-power-free word: the
/// length-6764 prefix p, the length-20226 subscripted seed z with
/// tau(phi(z)) = w(6764..128119), and the greedy prefix both were cut from.
struct CanonicalWords {
  Word p;
  SubWord z;
  Word greedy_prefix;
};

/// Runs the greedy generator to prefix_len letters, extracts p, de-substitutes
/// z (first preimage letter subscripted 2), and validates every structural
/// invariant of the pair. Throws std::runtime_error with a diagnostic when a
/// check fails. prefix_len must be at least 128120.
CanonicalWords build_canonical(std::size_t prefix_len = kPrefixLen54);

/// Prefix of s = z phi(z) phi^2(z) ... of length n. Uses s = z phi(s): after
/// seeding with z, each consumed letter appends its six-letter image, so no
/// iterate is ever materialized beyond the requested length.
SubWord s_stream(const SubWord& z, std::size_t n);

/// Prefix of p tau(phi(s)) of length n.
Word full_word(const CanonicalWords& cw, std::size_t n);

/// w(i) in O(log i): stored prefix for i < |prefix|; the periodic background
/// columns for i != 1 mod 6; otherwise the recurrence
/// w(6i' + 123061) = w(i' + 5920) + d(i' mod 8), iterated.
Letter letter_at(const CanonicalWords& cw, long long i);

/// w(i) by digit descent through the tower p tau(phi(z)) tau(phi^2(z)) ...,
/// independent of the recurrence route used by letter_at.
Letter morphic_letter_at(const CanonicalWords& cw, long long i);

/// The five eventually periodic residue columns: w(6i + m) for m in
/// {0,2,3,4,5} and i >= 1127 (period 4 in i, or constant). Returns nullopt
/// for m = 1, the self-similar column. Throws for i < 1127.
std::optional<Letter> background_letter(long long i, int m);

/// The 32-letter alphabet of z.
const SubWord& z_alphabet54();

/// Positions of the value -1 in z (subscripts 0 and 2 only); the last is 80.
const std::vector<std::size_t>& z_minus_one_positions();

/// Process-wide canonical words, built on first use.
const CanonicalWords& canonical54();

}  // namespace fpw
