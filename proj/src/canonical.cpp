#include "fpword/canonical.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fpword/greedy.hpp"

namespace fpw {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("build_canonical: " + what);
}

void validate(const CanonicalWords& cw) {
  const Word& w = cw.greedy_prefix;
  const SubWord& z = cw.z;

  if (cw.p.size() != kPLen54) fail("|p| != 6764");
  if (z.size() != kZLen54) fail("|z| != 20226");
  if (!subscript_increasing(z)) fail("z is not subscript-increasing");

  static const SubWord z_head = parse_subscripted("0_2 0_3 3_4 0_5 1_6 1_7 -1_0 2_1");
  static const SubWord z_tail = parse_subscripted("0_0 0_1 0_2 3_3");
  if (!std::equal(z_head.begin(), z_head.end(), z.begin())) fail("z has the wrong head");
  if (!std::equal(z_tail.rbegin(), z_tail.rend(), z.rbegin())) fail("z has the wrong tail");

  // independent route back: tau(phi(z)) must reproduce w(6764..128119)
  Word image = apply_tau(apply_phi(z));
  if (!std::equal(image.begin(), image.end(), w.begin() + kPLen54))
    fail("tau(phi(z)) does not match the greedy letters it was cut from");

  // p and tau(z) share their length-844 suffix
  Word tz = apply_tau(z);
  for (std::size_t t = 1; t <= 844; ++t)
    if (tz[tz.size() - t] != cw.p[cw.p.size() - t]) fail("length-844 suffixes of p and tau(z) differ");

  std::set<SubLetter> alphabet(z.begin(), z.end());
  const SubWord& expected = z_alphabet54();
  if (!std::equal(alphabet.begin(), alphabet.end(), expected.begin(), expected.end()))
    fail("alphabet of z is not the expected 32-letter set");

  std::vector<std::size_t> minus_one;
  for (std::size_t t = 0; t < z.size(); ++t)
    if (z[t].value == -1) minus_one.push_back(t);
  if (minus_one != z_minus_one_positions()) fail("positions of -1 in z are wrong");

  // even-subscript letters from position 86 follow the period-4 pattern
  static const SubWord cycle = parse_subscripted("0_0 0_2 1_4 1_6");
  for (std::size_t t = 86; t < z.size(); t += 2) {
    if (z[t].sub % 2 != 0) fail("even-subscript phase broken at position " + std::to_string(t));
    if (z[t] != cycle[((t - 86) / 2) % 4])
      fail("even-subscript letters of z leave the cycle at position " + std::to_string(t));
  }
}

}  // namespace

const SubWord& z_alphabet54() {
  static const SubWord a = parse_subscripted(
      "-1_0 -1_2 0_0 0_1 0_2 0_3 0_5 0_7 1_0 1_1 1_2 1_3 1_4 1_5 1_6 1_7 "
      "2_1 2_3 2_4 2_5 2_6 2_7 3_1 3_3 3_4 3_5 3_6 3_7 4_1 4_3 4_5 4_7");
  return a;
}

const std::vector<std::size_t>& z_minus_one_positions() {
  static const std::vector<std::size_t> pos = {6, 14, 16, 32, 40, 48, 56, 70, 80};
  return pos;
}

CanonicalWords build_canonical(std::size_t prefix_len) {
  if (prefix_len < kPLen54 + 6 * kZLen54) fail("prefix_len below 128120");
  CanonicalWords cw;
  cw.greedy_prefix = generate(FracExponent(5, 4), prefix_len);
  cw.p.assign(cw.greedy_prefix.begin(), cw.greedy_prefix.begin() + kPLen54);
  Word mid(cw.greedy_prefix.begin() + kPLen54, cw.greedy_prefix.begin() + kPLen54 + 6 * kZLen54);
  cw.z = desubstitute(mid, 2);
  validate(cw);
  return cw;
}

SubWord s_stream(const SubWord& z, std::size_t n) {
  if (n <= z.size()) return SubWord(z.begin(), z.begin() + n);
  SubWord s(z);
  s.reserve(n + 6);
  const MorphismTable& phi = MorphismTable::phi();
  for (std::size_t r = 0; s.size() < n; ++r) {
    auto img = phi.image(s[r]);
    s.insert(s.end(), img.begin(), img.end());
  }
  s.resize(n);
  return s;
}

Word full_word(const CanonicalWords& cw, std::size_t n) {
  if (n <= cw.p.size()) return Word(cw.p.begin(), cw.p.begin() + n);
  Word out(cw.p);
  out.reserve(n + 6);
  SubWord s = s_stream(cw.z, (n - cw.p.size() + 5) / 6);
  const MorphismTable& phi = MorphismTable::phi();
  for (SubLetter l : s) {
    auto img = phi.tau_image(l);
    out.insert(out.end(), img.begin(), img.end());
    if (out.size() >= n) break;
  }
  out.resize(n);
  return out;
}

std::optional<Letter> background_letter(long long i, int m) {
  if (i < 1127) throw std::out_of_range("background_letter: i below 1127");
  switch (m) {
    case 0: return (i % 4 == 0 || i % 4 == 3) ? 0 : 1;
    case 1: return std::nullopt;
    case 2: return (i % 4 == 0 || i % 4 == 1) ? 0 : 1;
    case 3: return 1;
    case 4: return (i % 4 == 1 || i % 4 == 2) ? 0 : 1;
    case 5: return 0;
    default: throw std::invalid_argument("background_letter: m out of range");
  }
}

Letter letter_at(const CanonicalWords& cw, long long i) {
  if (i < 0) throw std::out_of_range("letter_at: negative index");
  Letter add = 0;
  while (i >= static_cast<long long>(cw.greedy_prefix.size())) {
    if (i % 6 != 1) return *background_letter(i / 6, static_cast<int>(i % 6)) + add;
    long long ip = (i - kRecurrenceArg54) / 6;
    add += kIncrements54[ip % 8];
    i = ip + kRecurrenceShift54;
  }
  return cw.greedy_prefix[static_cast<std::size_t>(i)] + add;
}

Letter morphic_letter_at(const CanonicalWords& cw, long long i) {
  if (i < 0) throw std::out_of_range("morphic_letter_at: negative index");
  if (i < static_cast<long long>(cw.p.size())) return cw.p[static_cast<std::size_t>(i)];
  long long x = i - static_cast<long long>(cw.p.size());
  long long block_len = 6 * static_cast<long long>(cw.z.size());
  int e = 1;
  while (x >= block_len) {
    x -= block_len;
    block_len *= 6;
    ++e;
  }
  // x indexes phi^e(z); peel one digit per level
  long long power = block_len / 6 / static_cast<long long>(cw.z.size());  // 6^(e-1)
  SubLetter u = cw.z[static_cast<std::size_t>(x / (power * 6))];
  const MorphismTable& phi = MorphismTable::phi();
  for (; power >= 1; power /= 6) u = phi.image(u)[static_cast<std::size_t>((x / power) % 6)];
  return u.value;
}

const CanonicalWords& canonical54() {
  static const CanonicalWords cw = build_canonical();
  return cw;
}

}  // namespace fpw
