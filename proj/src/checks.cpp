#include "fpword/checks.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <sstream>

#include "fpword/distinguish.hpp"
#include "fpword/greedy.hpp"
#include "fpword/parallel.hpp"
#include "fpword/prepower.hpp"
#include "fpword/presets.hpp"
#include "fpword/regularity.hpp"

namespace fpw {

namespace {

// dim of the e <= 4 kernel slice (j != j_e, 4050 terms), frozen from an
// oracle run of the exact eliminator
constexpr long long kKernelRankEmax4 = 139;

std::string digits(const Word& w) {
  std::string s;
  for (Letter v : w) {
    if (v < 0 || v > 9) throw std::logic_error("digits: letter outside 0..9");
    s += static_cast<char>('0' + v);
  }
  return s;
}

std::pair<bool, std::string> check_greedy_prefixes(const CanonicalWords&, int) {
  struct Case {
    long long a, b;
    std::size_t n;
    const char* want;
  };
  const Case cases[] = {
      {5, 4, 32, "00001111020210100101121200001311"},
      {2, 1, 32, "01020103010201040102010301020105"},
      {3, 2, 43, "0011021001120011031001130011021001140011031"},
  };
  for (const Case& c : cases) {
    std::string got = digits(generate(FracExponent(c.a, c.b), c.n));
    if (got != c.want)
      return {false, "w_" + std::to_string(c.a) + "/" + std::to_string(c.b) + " prefix is " + got};
  }
  return {true, "the three known prefixes match"};
}

std::pair<bool, std::string> check_canonical(const CanonicalWords& cw, int) {
  // build_canonical validated everything already; re-assert the headline facts
  if (cw.p.size() != kPLen54) return {false, "|p| wrong"};
  if (cw.z.size() != kZLen54) return {false, "|z| wrong"};
  Word image = apply_tau(apply_phi(cw.z));
  for (std::size_t t = 0; t < image.size(); ++t)
    if (image[t] != cw.greedy_prefix[kPLen54 + t]) return {false, "tau(phi(z)) mismatch"};
  if (format_subscripted(SubWord(cw.z.begin(), cw.z.begin() + 8)) !=
      "0_2 0_3 3_4 0_5 1_6 1_7 -1_0 2_1")
    return {false, "z head wrong"};
  if (format_subscripted(SubWord(cw.z.end() - 4, cw.z.end())) != "0_0 0_1 0_2 3_3")
    return {false, "z tail wrong"};
  if (z_minus_one_positions().back() != 80) return {false, "last -1 not at position 80"};
  return {true, "|p|=6764, |z|=20226, suffixes, alphabet and -1 positions verified"};
}

std::pair<bool, std::string> check_morphic_identity(const CanonicalWords& cw, int) {
  Word rebuilt = full_word(cw, cw.greedy_prefix.size());
  if (rebuilt != cw.greedy_prefix) return {false, "p tau(phi(s)) differs from the greedy prefix"};
  return {true, "p tau(phi(s)) = greedy prefix over " +
                    std::to_string(cw.greedy_prefix.size()) + " letters"};
}

std::pair<bool, std::string> check_gamma(const CanonicalWords&, int) {
  SubWord got = derive_gamma();
  if (got != gamma_set()) return {false, "derived set: " + format_subscripted(got)};
  return {true, "derived the 16 forbidden letters"};
}

std::pair<bool, std::string> check_locates(const CanonicalWords&, int) {
  bool prev = false;
  std::string profile;
  for (int len = 1; len <= 12; ++len) {
    bool now = locates_length(MorphismTable::phi(), len);
    profile += now ? '1' : '0';
    if (prev && !now) return {false, "monotonicity broken at length " + std::to_string(len)};
    prev = now;
  }
  if (!locates_length(MorphismTable::phi(), 6)) return {false, "length 6 not located"};
  return {true, "locates profile for lengths 1..12: " + profile};
}

std::pair<bool, std::string> check_prepower_z(const CanonicalWords& cw, int workers) {
  auto witnesses = scan_pre_powers(cw.z, 0, workers);
  if (!witnesses.empty())
    return {false, "witness at start " + std::to_string(witnesses[0].start)};
  return {true, "z carries no pre-5/4-power"};
}

std::pair<bool, std::string> check_prepower_zphiz(const CanonicalWords& cw, int workers) {
  SubWord zphiz = cw.z;
  SubWord img = apply_phi(cw.z);
  zphiz.insert(zphiz.end(), img.begin(), img.end());
  auto witnesses = scan_pre_powers(zphiz, 0, workers);
  if (!witnesses.empty())
    return {false, "witness at start " + std::to_string(witnesses[0].start)};
  return {true, "z phi(z) carries no pre-5/4-power (141582 letters)"};
}

std::string class_list(const std::vector<std::vector<std::size_t>>& classes) {
  std::ostringstream out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c) out << " ";
    out << "{";
    for (std::size_t t = 0; t < classes[c].size(); ++t) {
      if (t) out << ",";
      out << classes[c][t];
    }
    out << "}";
  }
  return out.str();
}

std::pair<bool, std::string> check_distinguisher(const CanonicalWords& cw, int) {
  FactorTemplate tpl = FactorTemplate::build(cw);
  const std::vector<Letter> base{0, 1, 2, 3, 4};
  const std::vector<Letter> wide{-1, 0, 1, 2, 3, 4};

  for (auto* positions : {&positions_s1, &positions_s2}) {
    RefineResult res = refine_classes(tpl, (*positions)(), base);
    if (!res.terminated || res.len != 952)
      return {false, "refinement over {0..4} ended at length " + std::to_string(res.len)};
  }

  const std::vector<std::vector<std::size_t>> want1 = {
      {6760, 6784}, {6761, 6785}, {6762, 6786}, {6763, 6787}};
  const std::vector<std::vector<std::size_t>> want2 = {
      {6760, 6808}, {6761, 6809}, {6762, 6810}, {6763, 6811}};

  RefineResult r1 = refine_classes(tpl, positions_s1(), wide, 952);
  if (r1.classes != want1) return {false, "residual classes for S1: " + class_list(r1.classes)};
  RefineResult r2 = refine_classes(tpl, positions_s2(), wide, 952);
  if (r2.classes != want2) return {false, "residual classes for S2: " + class_list(r2.classes)};

  if (!resolve_residual_pairs(cw, tpl, r1.classes)) return {false, "an S1 pair stayed equal"};
  if (!resolve_residual_pairs(cw, tpl, r2.classes)) return {false, "an S2 pair stayed equal"};
  return {true, "both refinements end at 952; residual pairs resolved"};
}

std::pair<bool, std::string> check_short_start_powers(const CanonicalWords& cw, int) {
  auto witness = verify_short_start_powers(cw);
  if (witness)
    return {false, "power of period " + std::to_string(witness->period) + " ending at " +
                       std::to_string(witness->end)};
  return {true, "no power with |x| < 952 starts in p"};
}

std::pair<bool, std::string> check_recurrence_and_background(const CanonicalWords& cw, int) {
  const Word& w = cw.greedy_prefix;
  long long imax = (static_cast<long long>(w.size()) - 1 - kRecurrenceArg54) / 6;
  for (long long i = 0; i <= imax; ++i)
    if (w[6 * i + kRecurrenceArg54] != w[i + kRecurrenceShift54] + kIncrements54[i % 8])
      return {false, "recurrence fails at i = " + std::to_string(i)};

  for (long long i = 1127; 6 * i + 5 < static_cast<long long>(w.size()); ++i)
    for (int m : {0, 2, 3, 4, 5})
      if (w[6 * i + m] != *background_letter(i, m))
        return {false, "background column " + std::to_string(m) + " fails at i = " +
                           std::to_string(i)};
  return {true, "recurrence for i <= " + std::to_string(imax) +
                    "; background columns for 1127 <= i < 55173"};
}

std::pair<bool, std::string> check_regularity_constants(const CanonicalWords&, int) {
  RegularityParams p = params54();
  const long long want_j[] = {0, 1, 31, 31, 895, 7375, 38479, 38479, 318415, 1998031};
  for (int e = 0; e < 10; ++e)
    if (j_sub_e(p, e) != want_j[e])
      return {false, "j_" + std::to_string(e) + " = " + std::to_string(j_sub_e(p, e))};
  const long long want_q[] = {5920, 20510, 22941, 23347, 23414, 23425, 23427, 23428};
  for (int e = 0; e < 8; ++e)
    if (q_sub_e(p, e) != want_q[e])
      return {false, "q_" + std::to_string(e) + " = " + std::to_string(q_sub_e(p, e))};
  RankBounds b = rank_bound_report(p);
  if (b.E != 7) return {false, "E = " + std::to_string(b.E)};
  if (b.generator_bound != 79472) return {false, "first bound " + std::to_string(b.generator_bound)};
  if (b.refined_bound != 4078) return {false, "second bound " + std::to_string(b.refined_bound)};
  for (int e = 7; e <= 9; ++e)
    if (h_sub_e(p, e) != e - 7) return {false, "h_" + std::to_string(e) + " wrong"};
  return {true, "j_e, q_e, E = 7, bounds 79472 and 4078"};
}

std::pair<bool, std::string> check_relations(const CanonicalWords& cw, int) {
  RelationReport rep = verify_relations(cw, 4050);
  if (!rep.all_hold)
    return {false, "relation " + std::to_string(rep.first_relation) + " fails at i = " +
                       std::to_string(rep.first_i)};
  return {true, "all five relations hold for i < 4050"};
}

std::pair<bool, std::string> shift_check(const CanonicalWords& cw) {
  RegularityParams p = params54();
  long long j7 = j_sub_e(p, 7), j8 = j_sub_e(p, 8);
  long long k7 = pow_ll(6, 7), k8 = pow_ll(6, 8);
  for (long long i = 0; i <= 500; ++i)
    if (letter_at(cw, k8 * i + j8) != letter_at(cw, k7 * i + j7) + 2)
      return {false, "kernel shift fails at i = " + std::to_string(i)};
  return {true, ""};
}

std::pair<bool, std::string> check_rank_quick(const CanonicalWords& cw, int workers) {
  auto [ok, why] = shift_check(cw);
  if (!ok) return {false, why};
  KernelRankReport rep = kernel_rank_54(cw, 4, 4050, false, workers);
  if (rep.dim_v != kKernelRankEmax4)
    return {false, "e <= 4 slice rank " + std::to_string(rep.dim_v) + ", expected " +
                       std::to_string(kKernelRankEmax4)};
  return {true, "e <= 4 slice rank " + std::to_string(rep.dim_v) + " (" +
                    std::to_string(rep.rows_unique) + " distinct rows); shift check holds"};
}

std::pair<bool, std::string> check_rank_full(const CanonicalWords& cw, int workers) {
  auto [ok, why] = shift_check(cw);
  if (!ok) return {false, why};
  KernelRankReport rep = kernel_rank_54(cw, 7, 4050, true, workers);
  if (rep.dim_v != 179) return {false, "dim V = " + std::to_string(rep.dim_v)};
  if (rep.total_rank != 188) return {false, "total rank = " + std::to_string(rep.total_rank)};
  return {true, "dim V = 179, rank = 188 (" + std::to_string(rep.rows_fed) + " rows fed, " +
                    std::to_string(rep.rows_unique) + " distinct)"};
}

std::pair<bool, std::string> check_powerfree_prefix(const CanonicalWords& cw, int workers,
                                                    std::size_t n) {
  FreeVerdict v = verify_power_free_prefix(cw, n, workers);
  if (!v.free)
    return {false, "power ending at " + std::to_string(v.witness->end) + " of period " +
                       std::to_string(v.witness->period)};
  return {true, "first " + std::to_string(n) + " letters are 5/4-power-free"};
}

std::pair<bool, std::string> check_powerfree_50000(const CanonicalWords& cw, int workers) {
  return check_powerfree_prefix(cw, workers, 50000);
}

std::pair<bool, std::string> check_powerfree_full(const CanonicalWords& cw, int workers) {
  return check_powerfree_prefix(cw, workers, kPrefixLen54);
}

std::pair<bool, std::string> check_lexleast(const CanonicalWords&, int workers) {
  for (auto [a, b] : {std::pair<long long, long long>{2, 1}, {3, 2}, {5, 4}, {7, 6}}) {
    FracExponent e(a, b);
    Word w = generate(e, 10000);
    LexLeastVerdict v = verify_lex_least(w, e, workers);
    if (!v.least)
      return {false, "w_" + std::to_string(a) + "/" + std::to_string(b) +
                         " not least at position " + std::to_string(v.counterexample->first)};
  }
  return {true, "10^4-letter prefixes of w_2, w_3/2, w_5/4, w_7/6 are lexicographically least"};
}

std::pair<bool, std::string> check_conjectures(const CanonicalWords&, int) {
  const std::size_t budget = 300000;
  std::string findings;
  std::string summary;
  for (const ConjecturePreset& c : conjecture_presets()) {
    Word w = generate(FracExponent(c.a, c.b), budget);
    long long imax = (static_cast<long long>(budget) - 1 - c.R) / c.K;
    bool holds = imax >= 0;
    long long bad = -1;
    for (long long i = 0; i <= imax && holds; ++i) {
      long long want = w[i] + ((i == 0 && c.d_zero_at_origin) ? 0 : c.d);
      if (w[c.K * i + c.R] != want) {
        holds = false;
        bad = i;
      }
    }
    if (!summary.empty()) summary += ", ";
    summary += c.name + (holds ? " holds (i <= " + std::to_string(imax) + ")"
                                : " FAILS at i = " + std::to_string(bad));
    if (!holds) findings += c.name + " ";
  }
  if (!findings.empty()) return {false, "FINDING: " + findings + "| " + summary};
  return {true, summary};
}

// --- property suites --------------------------------------------------------

std::vector<long long> oracle_powers_ending(const Word& w, std::size_t i, FracExponent e) {
  std::vector<long long> out;
  for (long long P = e.b;; P += e.b) {
    long long L = P / e.b * e.a;
    if (L > static_cast<long long>(i) + 1) break;
    std::size_t start = i + 1 - static_cast<std::size_t>(L);
    Word v(w.begin() + start, w.begin() + start + static_cast<std::size_t>(P));
    Word pw = frac_power(v, e);
    if (std::equal(pw.begin(), pw.end(), w.begin() + start)) out.push_back(P);
  }
  return out;
}

std::pair<bool, std::string> suite_power_oracle(std::mt19937_64& rng) {
  const FracExponent exps[] = {FracExponent(5, 4), FracExponent(3, 2), FracExponent(2, 1)};
  std::uniform_int_distribution<int> letter(0, 2);
  std::uniform_int_distribution<std::size_t> length(1, 200);
  for (int trial = 0; trial < 1000; ++trial) {
    Word w(length(rng));
    for (auto& v : w) v = letter(rng);
    FracExponent e = exps[trial % 3];
    for (std::size_t i = 0; i < w.size(); ++i)
      if (power_ending_at(w, i, e) != oracle_powers_ending(w, i, e))
        return {false, "power_ending_at disagrees with the oracle on trial " +
                           std::to_string(trial)};
  }
  return {true, "1000 random words"};
}

// definitional oracle: expand phi(w) and test the 5/4-power shape directly
bool oracle_pre_power(const SubWord& w, SubWord& buf) {
  buf.clear();
  const MorphismTable& phi = MorphismTable::phi();
  for (SubLetter l : w) {
    auto img = phi.image(l);
    buf.insert(buf.end(), img.begin(), img.end());
  }
  std::size_t period = buf.size() / 5 * 4;
  for (std::size_t t = 0; t + period < buf.size(); ++t)
    if (buf[t] != buf[t + period]) return false;
  return true;
}

std::pair<bool, std::string> suite_prepower_oracle(int workers) {
  // the definition consults only x and x', so enumerate those exhaustively
  // (values -3..4, all subscripts) and keep y fixed; y-independence itself
  // is probed separately below
  for (std::size_t l : {std::size_t{1}, std::size_t{2}}) {
    std::size_t combos = 1;
    for (std::size_t t = 0; t < 2 * l; ++t) combos *= 64;
    std::atomic<bool> ok{true};
    parallel_chunks(combos, workers, [&](std::size_t lo, std::size_t hi) {
      SubWord w(5 * l), buf;
      for (std::size_t t = l; t < 4 * l; ++t) w[t] = sub_letter(0, static_cast<int>(t) % 8);
      for (std::size_t code = lo; code < hi && ok.load(std::memory_order_relaxed); ++code) {
        std::size_t rest = code;
        for (std::size_t t = 0; t < 2 * l; ++t) {
          std::size_t pos = t < l ? t : 3 * l + t;
          w[pos] = sub_letter(static_cast<Letter>(rest % 8) - 3, static_cast<int>(rest / 8 % 8));
          rest /= 64;
        }
        if (is_pre_power(w) != oracle_pre_power(w, buf)) ok.store(false);
      }
    });
    if (!ok.load()) return {false, "mismatch at block length " + std::to_string(l)};
  }
  // y never matters: random fills over random (x, x') agree with the oracle
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<Letter> val(-3, 4);
  std::uniform_int_distribution<int> sub(0, 7);
  SubWord buf;
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t l = 1 + trial % 4;
    SubWord w(5 * l);
    for (auto& x : w) x = sub_letter(val(rng), sub(rng));
    if (is_pre_power(w) != oracle_pre_power(w, buf))
      return {false, "random-y mismatch on trial " + std::to_string(trial)};
  }
  return {true, "exhaustive over (x, x') at lengths 5 and 10, plus 2000 random fills"};
}

std::pair<bool, std::string> suite_round_trip(std::mt19937_64& rng) {
  std::uniform_int_distribution<Letter> val(-5, 5);
  std::uniform_int_distribution<int> sub(0, 7);
  std::uniform_int_distribution<std::size_t> length(1, 200);
  for (int trial = 0; trial < 1000; ++trial) {
    SubWord u(length(rng));
    int start = sub(rng);
    for (std::size_t t = 0; t < u.size(); ++t)
      u[t] = sub_letter(val(rng), (start + static_cast<int>(t)) % 8);
    if (desubstitute(apply_tau(apply_phi(u)), start) != u)
      return {false, "round trip broke on trial " + std::to_string(trial)};
  }
  return {true, "1000 subscript-increasing round trips"};
}

std::pair<bool, std::string> suite_synthetic(std::mt19937_64& rng) {
  std::vector<RegularityParams> instances;
  {
    RegularityParams p{2, 1, 5, 2, {3}, {1, 0}};
    instances.push_back(p);
  }
  {
    RegularityParams p{3, 2, 7, 1, {2, 1}, {1, 0, 2, 0, 1, 1}};
    instances.push_back(p);
  }
  {
    // integer case: q_E (k-1) = r - s + k - 1
    RegularityParams p{2, 2, 3, 2, {1, 2}, {1, 0, 2, 1}};
    instances.push_back(p);
  }
  {
    RegularityParams p{2, 2, 6, 0, {2, 0}, {0, 1, 1, 0}};
    instances.push_back(p);
  }

  for (std::size_t inst = 0; inst < instances.size(); ++inst) {
    const RegularityParams& p = instances[inst];
    p.check();
    int E = transient_E(p);
    long long qE = q_sub_e(p, E);
    int M = integer_case(p) ? transient_E_prime(p) : E;
    std::size_t period = static_cast<std::size_t>(p.k * p.ell);
    std::size_t T = static_cast<std::size_t>(qE) + 1 + 4 * period + 16;
    int e_top = std::max({3, M, E - 1});
    std::size_t n = static_cast<std::size_t>(pow_ll(p.k, e_top)) * (T + 1) +
                    static_cast<std::size_t>(p.r + p.s) + 1;

    std::vector<long long> seed(static_cast<std::size_t>(p.r));
    std::uniform_int_distribution<long long> letter(0, 3);
    for (auto& v : seed) v = letter(rng);
    std::vector<long long> w = synthesize_word(p, seed, n);
    auto at = [&w](long long x) { return w[static_cast<std::size_t>(x)]; };

    ExactMatrixBasis basis(T);
    GeneratorSets gens = generator_sets(p, static_cast<std::size_t>(qE) + 1, T);
    for (auto& row : gens.periodic) basis.add_row(row);
    for (auto& row : gens.one_hot) basis.add_row(row);
    if (integer_case(p))
      for (auto& row : gens.shifted_periodic) basis.add_row(row);
    for (int e = 0; e < E; ++e)
      for (long long j = 0; j < pow_ll(p.k, e); ++j)
        basis.add_row(kernel_sequence(at, p.k, e, j, T));
    for (int e = 0; e <= M; ++e)
      basis.add_row(kernel_sequence(at, p.k, e, j_sub_e(p, e), T));

    for (int e = 0; e <= 3; ++e) {
      long long je = j_sub_e(p, e);
      for (long long j = 0; j < pow_ll(p.k, e); ++j) {
        std::vector<long long> row = kernel_sequence(at, p.k, e, j, T);
        if (!basis.in_span(row))
          return {false, "instance " + std::to_string(inst) + ": kernel (e=" +
                             std::to_string(e) + ", j=" + std::to_string(j) +
                             ") escapes the generator span"};
        if (j != je) {
          // eventual periodicity: period divides k*ell, preperiod <= q_E + 1
          for (std::size_t i = static_cast<std::size_t>(qE) + 1; i + period < T; ++i)
            if (row[i] != row[i + period])
              return {false, "instance " + std::to_string(inst) +
                                 ": kernel tail not periodic at (e=" + std::to_string(e) +
                                 ", j=" + std::to_string(j) + ")"};
        }
      }
    }
  }
  return {true, std::to_string(instances.size()) + " synthetic recurrence instances"};
}

std::pair<bool, std::string> check_property_suites(const CanonicalWords&, int workers) {
  std::mt19937_64 rng(20260809);
  auto [ok1, d1] = suite_power_oracle(rng);
  if (!ok1) return {false, d1};
  auto [ok2, d2] = suite_prepower_oracle(workers);
  if (!ok2) return {false, d2};
  auto [ok3, d3] = suite_round_trip(rng);
  if (!ok3) return {false, d3};
  auto [ok4, d4] = suite_synthetic(rng);
  if (!ok4) return {false, d4};
  return {true, d1 + "; " + d2 + "; " + d3 + "; " + d4};
}

struct CheckSpec {
  const char* name;
  int criterion;
  bool full_only;
  bool finding_only;
  std::pair<bool, std::string> (*fn)(const CanonicalWords&, int);
};

const CheckSpec kChecks[] = {
    {"greedy-prefixes", 1, false, false, check_greedy_prefixes},
    {"canonical-reconstruction", 2, false, false, check_canonical},
    {"morphic-identity", 3, false, false, check_morphic_identity},
    {"gamma-derivation", 4, false, false, check_gamma},
    {"locating-lengths", 5, false, false, check_locates},
    {"prepower-scan-z", 6, false, false, check_prepower_z},
    {"prepower-scan-zphiz", 6, true, false, check_prepower_zphiz},
    {"factor-distinguisher", 7, false, false, check_distinguisher},
    {"short-start-powers", 8, false, false, check_short_start_powers},
    {"recurrence-and-background", 9, false, false, check_recurrence_and_background},
    {"regularity-constants", 10, false, false, check_regularity_constants},
    {"kernel-relations", 11, false, false, check_relations},
    {"kernel-rank-quick", 12, false, false, check_rank_quick},
    {"kernel-rank-full", 12, true, false, check_rank_full},
    {"conjecture-smoke", 13, false, true, check_conjectures},
    {"property-suites", 14, false, false, check_property_suites},
    {"lex-least", 0, false, false, check_lexleast},
    {"powerfree-50000", 0, false, false, check_powerfree_50000},
    {"powerfree-full-prefix", 0, true, false, check_powerfree_full},
};

}  // namespace

std::vector<CheckResult> run_acceptance(bool full, int workers) {
  using Clock = std::chrono::steady_clock;
  std::vector<CheckResult> results;
  const CanonicalWords& cw = canonical54();
  for (const CheckSpec& spec : kChecks) {
    if (spec.full_only && !full) continue;
    auto t0 = Clock::now();
    CheckResult res;
    res.name = spec.name;
    res.criterion = spec.criterion;
    res.finding_only = spec.finding_only;
    try {
      auto [pass, detail] = spec.fn(cw, workers);
      res.pass = pass;
      res.detail = detail;
    } catch (const std::exception& ex) {
      res.pass = false;
      res.detail = std::string("exception: ") + ex.what();
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace fpw
