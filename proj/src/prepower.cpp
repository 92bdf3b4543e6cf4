#include "fpword/prepower.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "fpword/parallel.hpp"

namespace fpw {

namespace {

// x = w[start..start+l), x' = w[start+4l..start+5l); phi(x) == phi(x')?
// Pairs are probed from both ends of the block inward.
inline bool pre_power_at(const SubLetter* w, std::size_t start, std::size_t l) {
  std::size_t lo = 0, hi = l - 1;
  while (lo <= hi) {
    if (!phi_image_equal(w[start + hi], w[start + 4 * l + hi])) return false;
    if (lo != hi && !phi_image_equal(w[start + lo], w[start + 4 * l + lo])) return false;
    ++lo;
    if (hi == 0) break;
    --hi;
  }
  return true;
}

inline PrePowerKind kind_at(const SubLetter* w, std::size_t start, std::size_t l) {
  return w[start].sub == w[start + 4 * l].sub ? PrePowerKind::SubscriptsEqual
                                              : PrePowerKind::SubscriptsDifferBy4;
}

}  // namespace

bool is_pre_power(const SubWord& w) {
  if (w.size() % 5 != 0) throw std::invalid_argument("is_pre_power: length not divisible by 5");
  if (w.empty()) return false;
  return pre_power_at(w.data(), 0, w.size() / 5);
}

std::vector<PrePowerWitness> scan_pre_powers(const SubWord& w, std::size_t lmax, int workers) {
  std::size_t top = w.size() / 5;
  if (lmax == 0 || lmax > top) lmax = top;

  std::mutex mtx;
  std::vector<PrePowerWitness> all;
  parallel_chunks(lmax, workers, [&](std::size_t begin, std::size_t end) {
    std::vector<PrePowerWitness> local;
    for (std::size_t l = begin + 1; l <= end; ++l)
      for (std::size_t start = 0; start + 5 * l <= w.size(); ++start)
        if (pre_power_at(w.data(), start, l))
          local.push_back({start, l, kind_at(w.data(), start, l)});
    if (!local.empty()) {
      std::lock_guard<std::mutex> lock(mtx);
      all.insert(all.end(), local.begin(), local.end());
    }
  });
  std::sort(all.begin(), all.end(), [](const PrePowerWitness& x, const PrePowerWitness& y) {
    return x.start != y.start ? x.start < y.start : x.block < y.block;
  });
  return all;
}

namespace {

struct TemplateLetter {
  bool symbolic;
  Letter value;  // concrete value, or the offset d when symbolic
  std::int8_t sub;
};

// phi(n_0) phi(n_1) ... phi(n_7) with one symbol per row, as 48 circular slots
std::array<TemplateLetter, 48> image_cycle() {
  std::array<TemplateLetter, 48> slots;
  const MorphismTable& phi = MorphismTable::phi();
  for (int row = 0; row < 8; ++row) {
    for (int col = 0; col < 5; ++col) {
      SubLetter c = phi.constants[row][col];
      slots[row * 6 + col] = {false, c.value, c.sub};
    }
    slots[row * 6 + 5] = {true, phi.d[row], static_cast<std::int8_t>((6 * row + 5) % 8)};
  }
  return slots;
}

// rows j whose image ends with (n + d)_sub
std::vector<int> phi_inverse_rows(Letter d, int sub) {
  static const std::array<std::pair<std::pair<Letter, int>, std::vector<int>>, 6> table = {{
      {{1, 1}, {6}},
      {{1, 5}, {4}},
      {{2, 3}, {1, 5}},
      {{2, 7}, {3, 7}},
      {{3, 1}, {2}},
      {{3, 5}, {0}},
  }};
  for (const auto& [key, rows] : table)
    if (key.first == d && key.second == sub) return rows;
  throw std::logic_error("phi_inverse_rows: no row ends with that (d, subscript)");
}

}  // namespace

SubWord derive_gamma() {
  auto slots = image_cycle();
  std::set<SubLetter> gamma;
  for (std::size_t l : {std::size_t{2}, std::size_t{4}}) {
    for (std::size_t start = 0; start < 48; ++start) {
      // prefix vs suffix of the circular window of length 5l
      bool alive = true;
      std::vector<std::pair<Letter, int>> solved;  // (n, source row j)
      for (std::size_t m = 0; m < l && alive; ++m) {
        const TemplateLetter& x = slots[(start + m) % 48];
        const TemplateLetter& y = slots[(start + 4 * l + m) % 48];
        if (x.sub != y.sub) {
          alive = false;
        } else if (!x.symbolic && !y.symbolic) {
          alive = x.value == y.value;
        } else if (x.symbolic && y.symbolic) {
          throw std::logic_error("derive_gamma: two symbolic letters in one pair");
        } else {
          const TemplateLetter& sym = x.symbolic ? x : y;
          const TemplateLetter& con = x.symbolic ? y : x;
          Letter n = con.value - sym.value;  // solve (n + d) = c
          for (int j : phi_inverse_rows(sym.value, sym.sub)) solved.push_back({n, j});
        }
      }
      if (alive) {
        // a live window with no symbolic pair would be an unconditional
        // 5/4-power inside every image, which the row table rules out
        if (solved.empty()) throw std::logic_error("derive_gamma: concrete window repeats");
        for (auto [n, j] : solved) gamma.insert(sub_letter(n, j));
      }
    }
  }
  return SubWord(gamma.begin(), gamma.end());
}

const SubWord& gamma_set() {
  static const SubWord g = [] {
    SubWord g = parse_subscripted(
        "-3_0 -3_2 -2_0 -2_1 -2_2 -2_3 -2_5 -2_7 -1_1 -1_3 -1_4 -1_5 -1_6 -1_7 0_4 0_6");
    std::sort(g.begin(), g.end());
    return g;
  }();
  return g;
}

namespace {

struct Placement {
  int residue;  // start column mod 6
  std::vector<TemplateLetter> letters;
};

// every concatenation of image rows that can carry a length-len window
// starting at column t0
void enumerate_placements(int len, std::vector<Placement>& out) {
  const MorphismTable& phi = MorphismTable::phi();
  for (int t0 = 0; t0 < 6; ++t0) {
    int blocks = (t0 + len + 5) / 6;
    std::vector<int> rows(blocks, 0);
    for (;;) {
      Placement pl;
      pl.residue = t0;
      pl.letters.reserve(len);
      for (int idx = 0; idx < len; ++idx) {
        int abs = t0 + idx;
        int row = rows[abs / 6], col = abs % 6;
        if (col < 5) {
          SubLetter c = phi.constants[row][col];
          pl.letters.push_back({false, c.value, c.sub});
        } else {
          pl.letters.push_back({true, phi.d[row], static_cast<std::int8_t>((6 * row + 5) % 8)});
        }
      }
      out.push_back(std::move(pl));
      int b = 0;
      while (b < blocks && ++rows[b] == 8) rows[b++] = 0;
      if (b == blocks) break;
    }
  }
}

bool unifiable(const Placement& x, const Placement& y) {
  for (std::size_t t = 0; t < x.letters.size(); ++t) {
    const TemplateLetter& a = x.letters[t];
    const TemplateLetter& b = y.letters[t];
    if (a.sub != b.sub) return false;
    if (!a.symbolic && !b.symbolic && a.value != b.value) return false;
    // a symbol occurs in exactly one position, so symbolic pairs always unify
  }
  return true;
}

}  // namespace

bool locates_length(const MorphismTable&, int len) {
  if (len < 1) throw std::invalid_argument("locates_length: len must be positive");
  std::vector<Placement> placements;
  enumerate_placements(len, placements);
  for (std::size_t x = 0; x < placements.size(); ++x)
    for (std::size_t y = x + 1; y < placements.size(); ++y) {
      if (placements[x].residue == placements[y].residue) continue;
      if (unifiable(placements[x], placements[y])) return false;
    }
  return true;
}

FreeVerdict verify_power_free_prefix(const CanonicalWords& cw, std::size_t n, int workers) {
  return is_power_free(full_word(cw, n), FracExponent(5, 4), workers);
}

}  // namespace fpw
