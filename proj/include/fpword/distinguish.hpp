#pragma once

#include "fpword/canonical.hpp"

namespace fpw {

/// A letter that is either a known integer or n + offset for a fresh symbol n.
struct SymbolicLetter {
  bool symbolic;
  Letter value;  // the integer itself, or the offset d in {1,2,3} when symbolic
};

/// Integers a letter can equal over a finite symbol domain: {value} for a
/// concrete letter, domain + offset for a symbolic one.
std::vector<Letter> x_set(SymbolicLetter a, const std::vector<Letter>& domain);

/// Letters are possibly equal over the domain iff their x-sets intersect.
bool possibly_equal(SymbolicLetter a, SymbolicLetter b, const std::vector<Letter>& domain);

/// Reads letters for factor comparison in p tau(phi(s)). Factors starting
/// inside p read concrete letters of the word itself; factors starting at or
/// past |p| stand for all sufficiently large positions in the same residue
/// mod 48 and read the periodic symbolic row cycle (rows ordered from
/// subscript 2, the start of s). Each symbolic occurrence is independent.
class FactorTemplate {
 public:
  static FactorTemplate build(const CanonicalWords& cw, std::size_t max_len = 952);

  SymbolicLetter letter(std::size_t start, std::size_t offset) const;
  std::size_t p_len() const { return p_len_; }
  std::size_t max_len() const { return max_len_; }
  const Word& concrete() const { return concrete_; }

 private:
  Word concrete_;  // prefix of p tau(phi(s)) of length |p| + max_len - 1
  std::array<SymbolicLetter, 48> cycle_;
  std::size_t p_len_ = 0;
  std::size_t max_len_ = 0;
};

struct RefineResult {
  bool terminated;  // every class shrank to a single position
  std::size_t len;  // factor length reached
  std::vector<std::vector<std::size_t>> classes;  // classes still holding >= 2 positions
};

/// Partition refinement over possibly-equal factors: at each step factors
/// grow one letter to the right and every class splits by the integer c that
/// letter can equal (a symbolic letter n+d joins class c = n'+d for every n'
/// in the domain, so classes of symbolic positions may overlap). Stops when
/// no multi-position class remains, or at stop_at (0 = run to the template
/// capacity).
RefineResult refine_classes(const FactorTemplate& tpl, const std::vector<std::size_t>& positions,
                            const std::vector<Letter>& domain, std::size_t stop_at = 0);

/// Position sets used against the 48-periodic suffix: all of p plus one of
/// the two half-period windows (the five background columns have period 24,
/// so a single window would miss factors 24 apart).
std::vector<std::size_t> positions_s1();
std::vector<std::size_t> positions_s2();

/// Confirms that each residual class pair carries distinct factors for every
/// concrete occurrence. A surviving pair forces some symbol to -1, and -1
/// occurs in s only at the nine recorded positions of z, leaving finitely
/// many alignments to compare directly.
bool resolve_residual_pairs(const CanonicalWords& cw, const FactorTemplate& tpl,
                            const std::vector<std::vector<std::size_t>>& classes);

/// Scans p tau(phi(z)) for 5/4-powers x y x with |x| < 952 starting inside p.
/// Returns the witness if one exists.
std::optional<PowerWitness> verify_short_start_powers(const CanonicalWords& cw);

}  // namespace fpw
