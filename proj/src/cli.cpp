#include "fpword/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <iostream>

#include "fpword/checks.hpp"
#include "fpword/distinguish.hpp"
#include "fpword/greedy.hpp"
#include "fpword/parallel.hpp"
#include "fpword/prepower.hpp"
#include "fpword/presets.hpp"
#include "fpword/regularity.hpp"

namespace fpw {

namespace {

void emit_word(const Word& w, const std::string& format, std::size_t width, std::ostream& out) {
  if (format == "plain")
    out << format_plain(w) << "\n";
  else if (format == "bfile")
    out << format_bfile(w);
  else if (format == "columns")
    out << format_columns(w, width);
  else
    throw CLI::ValidationError("--format", "unknown format " + format);
}

std::vector<long long> parse_increments(const std::string& text) {
  std::vector<long long> d;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) d.push_back(std::stoll(tok));
  if (d.empty()) throw CLI::ValidationError("--d", "empty increment list");
  return d;
}

struct Options {
  long long a = 5, b = 4;
  std::size_t length = 0;
  std::string format = "plain";
  std::size_t width = 6;
  std::string emit = "word";
  std::string input = "z";
  std::size_t lmax = 0;
  bool preset_cor = false;
  long long K = 6, R = 123061, S = 5920;
  std::string d_list = "3,2,3,2,1,2,1,2";
  long long imax = -1;
  std::string set_name = "s1";
  std::string domain = "0..4";
  std::size_t stop_at = 0;
  int emax = 4;
  std::size_t terms = 4050;
  bool full = false;
  std::string conj_name;
  std::size_t budget = 300000;
  std::string tier = "quick";
  int locate_len = 6;
  int workers = 0;
};

int run_generate(const Options& o, std::ostream& out) {
  Word w = generate(FracExponent(o.a, o.b), o.length);
  emit_word(w, o.format, o.width, out);
  return 0;
}

int run_canonical(const Options& o, std::ostream& out) {
  const CanonicalWords& cw = canonical54();
  if (o.emit == "p" || o.emit == "word") {
    std::size_t n = o.length ? o.length : (o.emit == "p" ? cw.p.size() : kPrefixLen54);
    Word w = o.emit == "p" ? Word(cw.p.begin(), cw.p.begin() + std::min(n, cw.p.size()))
                           : full_word(cw, n);
    if (o.format == "subscripted")
      throw CLI::ValidationError("--format", o.emit + " carries no subscripts");
    emit_word(w, o.format, o.width, out);
    return 0;
  }
  if (o.emit == "z" || o.emit == "s") {
    std::size_t n = o.length ? o.length : cw.z.size();
    SubWord w = o.emit == "z" ? SubWord(cw.z.begin(), cw.z.begin() + std::min(n, cw.z.size()))
                              : s_stream(cw.z, n);
    if (o.format == "subscripted")
      out << format_subscripted(w) << "\n";
    else
      emit_word(apply_tau(w), o.format, o.width, out);
    return 0;
  }
  throw CLI::ValidationError("--emit", "unknown word " + o.emit);
}

int run_verify_powerfree(const Options& o, std::ostream& out) {
  FreeVerdict v = verify_power_free_prefix(canonical54(), o.length, o.workers);
  if (v.free) {
    out << "power-free: first " << o.length << " letters\n";
    return 0;
  }
  out << "witness: power of period " << v.witness->period << " ends at " << v.witness->end
      << "\n";
  return 1;
}

int run_verify_lexleast(const Options& o, std::ostream& out) {
  FracExponent e(o.a, o.b);
  Word w = generate(e, o.length);
  LexLeastVerdict v = verify_lex_least(w, e, o.workers);
  if (v.least) {
    out << "lexicographically least: " << o.length << " letters of w_" << o.a << "/" << o.b
        << "\n";
    return 0;
  }
  out << "counterexample: position " << v.counterexample->first << ", letter "
      << v.counterexample->second << "\n";
  return 1;
}

int run_verify_prepower(const Options& o, std::ostream& out) {
  const CanonicalWords& cw = canonical54();
  SubWord w = cw.z;
  if (o.input == "zphiz") {
    SubWord img = apply_phi(cw.z);
    w.insert(w.end(), img.begin(), img.end());
  } else if (o.input != "z") {
    throw CLI::ValidationError("--input", "expected z or zphiz");
  }
  auto witnesses = scan_pre_powers(w, o.lmax, o.workers);
  if (witnesses.empty()) {
    out << "pre-5/4-power-free: " << o.input << " (" << w.size() << " letters)\n";
    return 0;
  }
  out << witnesses.size() << " witnesses; first at start " << witnesses[0].start << ", block "
      << witnesses[0].block << "\n";
  return 1;
}

int run_verify_recurrence(const Options& o, std::ostream& out) {
  const CanonicalWords& cw = canonical54();
  auto w = [&cw](long long i) { return static_cast<long long>(letter_at(cw, i)); };
  long long K = o.K, R = o.R, S = o.S;
  std::vector<long long> d = parse_increments(o.d_list);
  if (o.preset_cor) {
    K = 6;
    R = kRecurrenceArg54;
    S = kRecurrenceShift54;
    d.assign(kIncrements54.begin(), kIncrements54.end());
  }
  long long imax =
      o.imax >= 0 ? o.imax : (static_cast<long long>(kPrefixLen54) - 1 - R) / K;
  RecurrenceCheck res = verify_recurrence(w, K, R, S, d, imax);
  if (res.holds) {
    out << "recurrence holds for 0 <= i <= " << imax << "\n";
    return 0;
  }
  out << "recurrence fails at i = " << res.first_fail << "\n";
  return 1;
}

int run_verify_distinguish_short(std::ostream& out) {
  auto witness = verify_short_start_powers(canonical54());
  if (!witness) {
    out << "no 5/4-power with |x| < 952 starts in p\n";
    return 0;
  }
  out << "witness: period " << witness->period << " ending at " << witness->end << "\n";
  return 1;
}

int run_analyze_gamma(std::ostream& out) {
  SubWord got = derive_gamma();
  out << format_subscripted(got) << "\n";
  return got == gamma_set() ? 0 : 1;
}

int run_analyze_locates(const Options& o, std::ostream& out) {
  bool ok = locates_length(MorphismTable::phi(), o.locate_len);
  out << "locates words of length " << o.locate_len << ": " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int run_distinguish(const Options& o, std::ostream& out) {
  const CanonicalWords& cw = canonical54();
  FactorTemplate tpl = FactorTemplate::build(cw);
  std::vector<Letter> domain;
  if (o.domain == "0..4")
    domain = {0, 1, 2, 3, 4};
  else if (o.domain == "-1..4")
    domain = {-1, 0, 1, 2, 3, 4};
  else
    throw CLI::ValidationError("--domain", "expected 0..4 or -1..4");
  std::vector<std::size_t> positions;
  if (o.set_name == "s1")
    positions = positions_s1();
  else if (o.set_name == "s2")
    positions = positions_s2();
  else
    throw CLI::ValidationError("--set", "expected s1 or s2");
  RefineResult res = refine_classes(tpl, positions, domain, o.stop_at);
  out << "l = " << res.len << (res.terminated ? " (all factors distinct)" : "") << "\n";
  for (const auto& cls : res.classes) {
    for (std::size_t t = 0; t < cls.size(); ++t) out << (t ? "," : "") << cls[t];
    out << "\n";
  }
  if (res.terminated) return 0;
  bool resolved = resolve_residual_pairs(cw, tpl, res.classes);
  out << (resolved ? "residual pairs resolved: factors differ" : "residual pair stayed equal")
      << "\n";
  return resolved ? 0 : 1;
}

int run_rank(const Options& o, std::ostream& out) {
  const CanonicalWords& cw = canonical54();
  int emax = o.full ? 7 : o.emax;
  std::size_t terms = o.full ? 4050 : o.terms;
  KernelRankReport rep = kernel_rank_54(cw, emax, terms, o.full, o.workers);
  out << "kernel slice e <= " << emax << ", j != j_e, " << terms << " terms: rank " << rep.dim_v
      << " (" << rep.rows_fed << " sequences, " << rep.rows_unique << " distinct)\n";
  if (o.full) out << "total kernel rank: " << rep.total_rank << "\n";
  return 0;
}

int run_conjecture(const Options& o, std::ostream& out) {
  const ConjecturePreset* c = find_conjecture(o.conj_name);
  if (!c) throw CLI::ValidationError("--name", "unknown conjecture " + o.conj_name);
  Word w = generate(FracExponent(c->a, c->b), o.budget);
  long long imax = (static_cast<long long>(o.budget) - 1 - c->R) / c->K;
  if (imax < 0) {
    out << "budget too small to reach i = 0\n";
    return 2;
  }
  for (long long i = 0; i <= imax; ++i) {
    long long want = w[c->K * i + c->R];
    long long have = w[i] + ((i == 0 && c->d_zero_at_origin) ? 0 : c->d);
    if (want != have) {
      out << "w_" << c->name << ": fails at i = " << i << "\n";
      return 1;
    }
  }
  out << "w_" << c->name << ": w(" << c->K << " i + " << c->R << ") = w(i) + " << c->d
      << " holds for 0 <= i <= " << imax << "\n";
  return 0;
}

int run_report_bounds(std::ostream& out) {
  RankBounds b = rank_bound_report(params54());
  out << "E = " << b.E << ", q_E = " << b.q_E << "\n";
  out << "generator bound: " << b.generator_bound << "\n";
  out << "refined bound: " << b.refined_bound << "\n";
  return 0;
}

int run_all_checks(const Options& o, std::ostream& out) {
  bool full = o.tier == "full";
  if (!full && o.tier != "quick") throw CLI::ValidationError("--tier", "expected quick or full");
  auto results = run_acceptance(full, o.workers);
  bool ok = true;
  for (const CheckResult& r : results) {
    out << (r.pass ? "PASS" : (r.finding_only ? "NOTE" : "FAIL")) << "  " << std::left
        << std::setw(28) << r.name << std::right << std::setw(8) << std::fixed
        << std::setprecision(1) << r.seconds << "s  " << r.detail << "\n";
    if (!r.pass && !r.finding_only) ok = false;
  }
  out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int dispatch(std::vector<std::string> args, std::ostream& out) {
  CLI::App app{"toolkit for lexicographically least fractional-power-free words"};
  app.require_subcommand(1);
  Options o;
  int rc = 0;

  app.add_option("--workers", o.workers, "worker threads for scans and rank (0 = all cores)");

  auto* gen = app.add_subcommand("generate", "greedy prefix of w_a/b");
  gen->add_option("--a", o.a)->required();
  gen->add_option("--b", o.b)->required();
  gen->add_option("--length", o.length)->required();
  gen->add_option("--format", o.format, "plain|bfile|columns");
  gen->add_option("--width", o.width, "row width for --format columns");
  gen->callback([&] { rc = run_generate(o, out); });

  auto* can = app.add_subcommand("canonical", "the words p, z, s and the reconstructed word");
  can->add_option("--emit", o.emit, "p|z|s|word")->required();
  can->add_option("--length", o.length);
  can->add_option("--format", o.format, "plain|bfile|subscripted|columns");
  can->add_option("--width", o.width);
  can->callback([&] { rc = run_canonical(o, out); });

  auto* verify = app.add_subcommand("verify", "verification workflows");
  verify->require_subcommand(1);
  auto* vpf = verify->add_subcommand("powerfree", "scan the reconstructed word for 5/4-powers");
  vpf->add_option("--length", o.length)->required();
  vpf->callback([&] { rc = run_verify_powerfree(o, out); });
  auto* vll = verify->add_subcommand("lexleast", "certify lexicographic minimality");
  vll->add_option("--a", o.a)->required();
  vll->add_option("--b", o.b)->required();
  vll->add_option("--length", o.length)->required();
  vll->callback([&] { rc = run_verify_lexleast(o, out); });
  auto* vpp = verify->add_subcommand("prepower", "scan z or z phi(z) for pre-5/4-powers");
  vpp->add_option("--input", o.input, "z|zphiz");
  vpp->add_option("--lmax", o.lmax, "largest block length (0 = all)");
  vpp->callback([&] { rc = run_verify_prepower(o, out); });
  auto* vrc = verify->add_subcommand("recurrence", "check w(K i + R) = w(i + S) + d(i)");
  vrc->add_flag("--preset-cor5over4,--preset", o.preset_cor, "the 5/4 column recurrence");
  vrc->add_option("--k", o.K);
  vrc->add_option("--r", o.R);
  vrc->add_option("--s", o.S);
  vrc->add_option("--d", o.d_list, "comma-separated increments, indexed by i mod length");
  vrc->add_option("--imax", o.imax, "largest i (-1 = all reachable in the stored prefix)");
  vrc->callback([&] { rc = run_verify_recurrence(o, out); });
  auto* vds = verify->add_subcommand("distinguish-short",
                                     "no 5/4-power with |x| < 952 starting in p");
  vds->callback([&] { rc = run_verify_distinguish_short(out); });

  auto* analyze = app.add_subcommand("analyze", "morphism analysis");
  analyze->require_subcommand(1);
  auto* aga = analyze->add_subcommand("gamma", "derive the forbidden alphabet");
  aga->callback([&] { rc = run_analyze_gamma(out); });
  auto* alo = analyze->add_subcommand("locates", "locating-length check");
  alo->add_option("--l", o.locate_len)->required();
  alo->callback([&] { rc = run_analyze_locates(o, out); });

  auto* dis = app.add_subcommand("distinguish", "factor class refinement");
  dis->add_option("--set", o.set_name, "s1|s2");
  dis->add_option("--domain", o.domain, "0..4|-1..4");
  dis->add_option("--stop-at", o.stop_at, "stop the refinement at this length");
  dis->callback([&] { rc = run_distinguish(o, out); });

  auto* rank = app.add_subcommand("rank", "exact kernel rank");
  rank->add_option("--emax", o.emax);
  rank->add_option("--terms", o.terms);
  rank->add_flag("--full", o.full, "e <= 7 slice plus the j_e rows (dim V and total rank)");
  rank->callback([&] { rc = run_rank(o, out); });

  auto* conj = app.add_subcommand("conjecture", "check a conjectured recurrence at desk scale");
  conj->add_option("--name", o.conj_name, "7/6|8/7|9/7|10/7|15/8|7/5")->required();
  conj->add_option("--budget", o.budget, "letters to generate");
  conj->callback([&] { rc = run_conjecture(o, out); });

  auto* report = app.add_subcommand("report", "derived constants");
  report->require_subcommand(1);
  auto* rb = report->add_subcommand("bounds", "generator-count rank bounds");
  rb->callback([&] { rc = run_report_bounds(out); });

  auto* all = app.add_subcommand("run-all", "the acceptance battery");
  all->add_option("--tier", o.tier, "quick|full");
  all->callback([&] { rc = run_all_checks(o, out); });

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes reversed argv
    app.parse(args);
    return rc;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fpw
