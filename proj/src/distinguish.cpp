#include "fpword/distinguish.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fpw {

std::vector<Letter> x_set(SymbolicLetter a, const std::vector<Letter>& domain) {
  if (!a.symbolic) return {a.value};
  std::vector<Letter> out;
  out.reserve(domain.size());
  for (Letter n : domain) out.push_back(n + a.value);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool possibly_equal(SymbolicLetter a, SymbolicLetter b, const std::vector<Letter>& domain) {
  if (domain.empty()) throw std::invalid_argument("possibly_equal: empty domain");
  std::vector<Letter> xa = x_set(a, domain), xb = x_set(b, domain);
  for (Letter v : xa)
    if (std::binary_search(xb.begin(), xb.end(), v)) return true;
  return false;
}

FactorTemplate FactorTemplate::build(const CanonicalWords& cw, std::size_t max_len) {
  FactorTemplate tpl;
  tpl.p_len_ = cw.p.size();
  tpl.max_len_ = max_len;
  tpl.concrete_ = full_word(cw, cw.p.size() + max_len - 1);
  for (Letter v : tpl.concrete_)
    if (v < 0 || v > 5)
      throw std::runtime_error("FactorTemplate: concrete prefix leaves the alphabet {0..5}");
  const MorphismTable& phi = MorphismTable::phi();
  for (int block = 0; block < 8; ++block) {
    int row = (2 + block) % 8;  // s starts with subscript 2
    for (int col = 0; col < 5; ++col)
      tpl.cycle_[block * 6 + col] = {false, phi.constants[row][col].value};
    tpl.cycle_[block * 6 + 5] = {true, phi.d[row]};
  }
  return tpl;
}

SymbolicLetter FactorTemplate::letter(std::size_t start, std::size_t offset) const {
  if (start < p_len_) {
    std::size_t pos = start + offset;
    if (pos >= concrete_.size()) throw std::out_of_range("FactorTemplate: factor too long");
    return {false, concrete_[pos]};
  }
  return cycle_[(start - p_len_ + offset) % 48];
}

RefineResult refine_classes(const FactorTemplate& tpl, const std::vector<std::size_t>& positions,
                            const std::vector<Letter>& domain, std::size_t stop_at) {
  if (domain.empty()) throw std::invalid_argument("refine_classes: empty domain");
  std::vector<std::vector<std::size_t>> classes;
  if (positions.size() >= 2) {
    classes.push_back(positions);
    std::sort(classes[0].begin(), classes[0].end());
  }
  std::size_t limit = stop_at == 0 ? tpl.max_len() : std::min(stop_at, tpl.max_len());
  std::size_t len = 0;
  while (!classes.empty() && len < limit) {
    ++len;
    std::set<std::vector<std::size_t>> next;
    for (const auto& cls : classes) {
      std::map<Letter, std::vector<std::size_t>> split;
      for (std::size_t pos : cls) {
        SymbolicLetter l = tpl.letter(pos, len - 1);
        if (!l.symbolic) {
          split[l.value].push_back(pos);
        } else {
          for (Letter n : domain) split[n + l.value].push_back(pos);
        }
      }
      for (auto& [c, members] : split)
        if (members.size() >= 2) next.insert(std::move(members));
    }
    classes.assign(next.begin(), next.end());
  }
  return RefineResult{classes.empty(), len, classes};
}

std::vector<std::size_t> positions_s1() {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < kPLen54 + 24; ++i) s.push_back(i);
  return s;
}

std::vector<std::size_t> positions_s2() {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < kPLen54; ++i) s.push_back(i);
  for (std::size_t i = kPLen54 + 24; i < kPLen54 + 48; ++i) s.push_back(i);
  return s;
}

bool resolve_residual_pairs(const CanonicalWords& cw, const FactorTemplate& tpl,
                            const std::vector<std::vector<std::size_t>>& classes) {
  const std::size_t len = tpl.max_len();
  // long enough for every alignment compared below: the -1 letters of z sit
  // at positions <= 80, so occurrences start before |p| + 6*80 + 6
  Word w = full_word(cw, kPLen54 + 6 * 81 + len);

  for (const auto& cls : classes) {
    if (cls.size() != 2 || cls[0] >= kPLen54 || cls[1] < kPLen54)
      throw std::invalid_argument("resolve_residual_pairs: expected pairs (p-position, suffix-position)");
    std::size_t i = cls[0], j = cls[1];

    // the offset whose symbolic letter is forced to n = -1
    std::optional<std::size_t> forced;
    for (std::size_t o = 0; o < len; ++o) {
      SymbolicLetter l = tpl.letter(j, o);
      if (l.symbolic && w[i + o] - l.value == -1) {
        forced = o;
        break;
      }
    }
    if (!forced) return false;  // the finite-reduction argument does not apply

    // occurrences of the factor whose forced symbol really is -1: the symbol
    // at offset o reads the s-letter feeding that image block, -1 letters of
    // s all lie in z (the constant columns are 0/1 and every z value is
    // >= -1, so no image letter is negative), at the nine known positions
    for (std::size_t m : z_minus_one_positions()) {
      long long a = 6 * static_cast<long long>(m) + 5 - static_cast<long long>(*forced);
      if (a < 0) continue;
      if (a % 48 != static_cast<long long>((j - kPLen54) % 48)) continue;
      std::size_t occ = kPLen54 + static_cast<std::size_t>(a);
      bool equal = std::equal(w.begin() + i, w.begin() + i + len, w.begin() + occ);
      if (equal) return false;
    }
  }
  return true;
}

std::optional<PowerWitness> verify_short_start_powers(const CanonicalWords& cw) {
  Word w = full_word(cw, kPLen54 + 6 * kZLen54);
  for (std::size_t start = 0; start < kPLen54; ++start) {
    for (std::size_t l = 1; l < 952; ++l) {
      bool match = true;
      for (std::size_t m = 0; m < l; ++m)
        if (w[start + m] != w[start + 4 * l + m]) {
          match = false;
          break;
        }
      if (match) return PowerWitness{start + 5 * l - 1, static_cast<long long>(4 * l)};
    }
  }
  return std::nullopt;
}

}  // namespace fpw
