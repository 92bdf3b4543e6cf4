#pragma once

#include "fpword/canonical.hpp"
#include "fpword/morphism.hpp"

namespace fpw {

/// Whether phi(w) is a 5/4-power. With l = |w|/5 this holds exactly when the
/// first and last l letters have equal phi-images letterwise. Requires 5 | |w|.
bool is_pre_power(const SubWord& w);

enum class PrePowerKind { SubscriptsEqual, SubscriptsDifferBy4 };

struct PrePowerWitness {
  std::size_t start;
  std::size_t block;  // l, with |x| = l and |y| = 3l
  PrePowerKind kind;
};

/// All (start, l) with l <= lmax whose length-5l factor is a pre-5/4-power.
/// lmax = 0 means |w|/5. Letter pairs are probed from both ends of x inward
/// with early exit; the (start, l) space is split across workers.
std::vector<PrePowerWitness> scan_pre_powers(const SubWord& w, std::size_t lmax = 0,
                                             int workers = 0);

/// The 16 forbidden letters, derived by sliding a window of length 5l,
/// l in {2,4}, circularly through the symbolic image row cycle, solving each
/// symbolic letter-pair for n, and mapping (d, subscript) back to source rows.
SubWord derive_gamma();

/// The expected value of derive_gamma().
const SubWord& gamma_set();

/// Whether every length-len word over the image alphabet can start at only a
/// single position residue mod 6 inside images of the morphism. Placements of
/// a symbolic window (independent symbol per consumed row) at different
/// residues must be pairwise non-unifiable.
bool locates_length(const MorphismTable& m, int len);

/// is_power_free on the reconstructed word p tau(phi(s)) cut to n letters.
FreeVerdict verify_power_free_prefix(const CanonicalWords& cw, std::size_t n, int workers = 0);

}  // namespace fpw
