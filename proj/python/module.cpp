#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fpword/distinguish.hpp"
#include "fpword/greedy.hpp"
#include "fpword/prepower.hpp"
#include "fpword/presets.hpp"
#include "fpword/regularity.hpp"

namespace py = pybind11;
using namespace fpw;

namespace {

using PySub = std::vector<std::pair<Letter, int>>;

SubWord to_subword(const PySub& v) {
  SubWord w;
  w.reserve(v.size());
  for (auto [value, sub] : v) w.push_back(sub_letter(value, sub));
  return w;
}

PySub from_subword(const SubWord& w) {
  PySub v;
  v.reserve(w.size());
  for (SubLetter l : w) v.emplace_back(l.value, l.sub);
  return v;
}

}  // namespace

PYBIND11_MODULE(_fpword, m) {
  m.doc() = "lexicographically least fractional-power-free words on the nonnegative integers";

  m.def(
      "generate",
      [](long long a, long long b, std::size_t n) { return generate(FracExponent(a, b), n); },
      py::arg("a"), py::arg("b"), py::arg("n"),
      py::call_guard<py::gil_scoped_release>(),
      "length-n prefix of the lexicographically least a/b-power-free word");

  m.def(
      "frac_power",
      [](const Word& v, long long a, long long b) { return frac_power(v, FracExponent(a, b)); },
      py::arg("v"), py::arg("a"), py::arg("b"));

  m.def(
      "power_ending_at",
      [](const Word& w, std::size_t i, long long a, long long b) {
        return power_ending_at(w, i, FracExponent(a, b));
      },
      py::arg("w"), py::arg("i"), py::arg("a"), py::arg("b"),
      "periods of all a/b-powers ending at position i");

  m.def(
      "is_power_free",
      [](const Word& w, long long a, long long b) {
        FreeVerdict v = is_power_free(w, FracExponent(a, b));
        std::optional<std::pair<std::size_t, long long>> witness;
        if (v.witness) witness = {v.witness->end, v.witness->period};
        return std::make_pair(v.free, witness);
      },
      py::arg("w"), py::arg("a"), py::arg("b"), py::call_guard<py::gil_scoped_release>());

  m.def(
      "verify_lex_least",
      [](const Word& w, long long a, long long b) {
        LexLeastVerdict v = verify_lex_least(w, FracExponent(a, b));
        return std::make_pair(v.least, v.counterexample);
      },
      py::arg("w"), py::arg("a"), py::arg("b"), py::call_guard<py::gil_scoped_release>());

  m.def("apply_phi", [](const PySub& w) { return from_subword(apply_phi(to_subword(w))); });
  m.def("apply_tau", [](const PySub& w) { return apply_tau(to_subword(w)); });
  m.def(
      "desubstitute",
      [](const Word& w, int start_subscript) {
        return from_subword(desubstitute(w, start_subscript));
      },
      py::arg("w"), py::arg("start_subscript"));

  m.def("canonical_p", [] { return canonical54().p; },
        py::call_guard<py::gil_scoped_release>());
  m.def("canonical_z", [] { return from_subword(canonical54().z); },
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "s_prefix", [](std::size_t n) { return from_subword(s_stream(canonical54().z, n)); },
      py::arg("n"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "full_word", [](std::size_t n) { return full_word(canonical54(), n); }, py::arg("n"),
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "letter_at", [](long long i) { return letter_at(canonical54(), i); }, py::arg("i"),
      py::call_guard<py::gil_scoped_release>(),
      "w(i) of the least 5/4-power-free word, via the column recurrence");
  m.def(
      "morphic_letter_at", [](long long i) { return morphic_letter_at(canonical54(), i); },
      py::arg("i"), py::call_guard<py::gil_scoped_release>());

  m.def("is_pre_power", [](const PySub& w) { return is_pre_power(to_subword(w)); });
  m.def("derive_gamma", [] { return from_subword(derive_gamma()); });
  m.def(
      "locates_length", [](int len) { return locates_length(MorphismTable::phi(), len); },
      py::arg("len"));

  m.def(
      "j_e",
      [](int e) { return j_sub_e(params54(), e); }, py::arg("e"));
  m.def(
      "q_e",
      [](int e) { return q_sub_e(params54(), e); }, py::arg("e"));
  m.def("transient_E", [] { return transient_E(params54()); });
  m.def("rank_bounds", [] {
    RankBounds b = rank_bound_report(params54());
    return std::make_pair(b.generator_bound, b.refined_bound);
  });

  m.def(
      "verify_recurrence_54",
      [](long long imax) {
        const CanonicalWords& cw = canonical54();
        auto w = [&cw](long long i) { return static_cast<long long>(letter_at(cw, i)); };
        std::vector<long long> d(kIncrements54.begin(), kIncrements54.end());
        RecurrenceCheck res =
            verify_recurrence(w, 6, kRecurrenceArg54, kRecurrenceShift54, d, imax);
        return std::make_pair(res.holds, res.first_fail);
      },
      py::arg("imax"), py::call_guard<py::gil_scoped_release>(),
      "check w(6i + 123061) = w(i + 5920) + d(i mod 8) up to imax");

  m.def(
      "kernel_rank",
      [](int emax, std::size_t terms, bool include_w) {
        KernelRankReport rep = kernel_rank_54(canonical54(), emax, terms, include_w);
        return std::make_pair(rep.dim_v, rep.total_rank);
      },
      py::arg("emax"), py::arg("terms") = 4050, py::arg("include_w") = false,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "conjecture_names",
      [] {
        std::vector<std::string> names;
        for (const auto& c : conjecture_presets()) names.push_back(c.name);
        return names;
      });
}
