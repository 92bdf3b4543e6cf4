#include "fpword/morphism.hpp"

#include <string>

namespace fpw {

namespace {

constexpr std::int8_t S(int j) { return static_cast<std::int8_t>(j); }

const MorphismTable kPhi = {
    {{
        {{{0, S(0)}, {1, S(1)}, {0, S(2)}, {0, S(3)}, {1, S(4)}}},
        {{{1, S(6)}, {1, S(7)}, {0, S(0)}, {0, S(1)}, {0, S(2)}}},
        {{{1, S(4)}, {1, S(5)}, {1, S(6)}, {0, S(7)}, {0, S(0)}}},
        {{{0, S(2)}, {1, S(3)}, {1, S(4)}, {0, S(5)}, {1, S(6)}}},
        {{{0, S(0)}, {1, S(1)}, {0, S(2)}, {0, S(3)}, {1, S(4)}}},
        {{{1, S(6)}, {1, S(7)}, {0, S(0)}, {0, S(1)}, {0, S(2)}}},
        {{{1, S(4)}, {1, S(5)}, {1, S(6)}, {0, S(7)}, {0, S(0)}}},
        {{{0, S(2)}, {1, S(3)}, {1, S(4)}, {0, S(5)}, {1, S(6)}}},
    }},
    {3, 2, 3, 2, 1, 2, 1, 2},
};

}  // namespace

const MorphismTable& MorphismTable::phi() { return kPhi; }

std::array<SubLetter, 6> MorphismTable::image(SubLetter l) const {
  const auto& row = constants[l.sub];
  std::int8_t last_sub = static_cast<std::int8_t>((row[4].sub + 1) % 8);
  return {row[0], row[1], row[2], row[3], row[4], SubLetter{l.value + d[l.sub], last_sub}};
}

std::array<Letter, 6> MorphismTable::tau_image(SubLetter l) const {
  const auto& row = constants[l.sub];
  return {row[0].value, row[1].value, row[2].value, row[3].value, row[4].value,
          l.value + d[l.sub]};
}

SubWord apply_phi(const SubWord& w) {
  SubWord out;
  out.reserve(w.size() * 6);
  for (SubLetter l : w) {
    auto img = kPhi.image(l);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word apply_tau(const SubWord& w) {
  Word out;
  out.reserve(w.size());
  for (SubLetter l : w) out.push_back(l.value);
  return out;
}

SubWord desubstitute(const Word& w, int start_subscript) {
  if (w.size() % 6 != 0) throw std::invalid_argument("desubstitute: length not divisible by 6");
  if (start_subscript < 0 || start_subscript > 7)
    throw std::invalid_argument("desubstitute: bad start subscript");
  SubWord out;
  out.reserve(w.size() / 6);
  int sub = start_subscript;
  for (std::size_t block = 0; block * 6 < w.size(); ++block) {
    const auto& row = kPhi.constants[sub];
    for (int col = 0; col < 5; ++col) {
      if (w[block * 6 + col] != row[col].value)
        throw std::invalid_argument("desubstitute: constant-column mismatch at block " +
                                    std::to_string(block) + ", column " + std::to_string(col));
    }
    out.push_back(sub_letter(w[block * 6 + 5] - kPhi.d[sub], sub));
    sub = (sub + 1) % 8;
  }
  return out;
}

bool phi_image_equal(SubLetter x, SubLetter y) {
  int gap = x.sub - y.sub;
  if (gap != 0 && gap != 4 && gap != -4) return false;
  Letter want = x.sub % 2 == 0 ? static_cast<Letter>(gap / 2) : 0;
  return x.value - y.value == want;
}

}  // namespace fpw
