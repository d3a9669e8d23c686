#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smoothwords/chains.hpp"
#include "smoothwords/enumeration.hpp"
#include "smoothwords/errors.hpp"
#include "smoothwords/general.hpp"
#include "smoothwords/growth.hpp"
#include "smoothwords/kolakoski.hpp"
#include "smoothwords/primitives.hpp"
#include "smoothwords/serialize.hpp"

namespace py = pybind11;
using namespace smoothwords;

namespace {

std::vector<std::string> strs(const std::vector<Word>& words) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const Word& w : words) out.push_back(w.str());
    return out;
}

std::vector<std::string> chain_strs(const ChainFamily& family) {
    std::vector<std::string> out;
    for (const Chain& c : family.chains) out.push_back(c.str());
    return out;
}

std::optional<std::string> opt_str(const std::optional<Word>& w) {
    if (!w) return std::nullopt;
    return w->str();
}

Alphabet alphabet(const std::string& text) { return Alphabet::parse(text); }

py::dict stats_dict(const StatsRecord& r) {
    py::dict d;
    d["n"] = r.n;
    d["gamma"] = r.gamma;
    d["gamma_prime"] = r.gamma_prime ? py::cast(*r.gamma_prime) : py::none();
    d["h1"] = r.h1;
    d["h2"] = r.h2;
    d["freq_min"] = r.freq_min.str();
    d["freq_max"] = r.freq_max.str();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Smooth words over two-letter alphabets";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_AssertionError);
    py::register_exception<EmptyClassError>(m, "EmptyClassError", PyExc_LookupError);
    py::register_exception<InsufficientDataError>(m, "InsufficientDataError", PyExc_ValueError);

    m.def("derivative", [](const std::string& w) { return opt_str(derivative(Word::parse(w))); }, py::arg("word"));
    m.def("derivative_k", [](const std::string& w, std::size_t k) { return opt_str(derivative_k(Word::parse(w), k)); },
          py::arg("word"), py::arg("k"));
    m.def("height", [](const std::string& w) { return height(Word::parse(w)); }, py::arg("word"));
    m.def("is_smooth", [](const std::string& w) { return is_smooth(Word::parse(w)); }, py::arg("word"));
    m.def("complement", [](const std::string& w) { return complement(Word::parse(w)).str(); }, py::arg("word"));
    m.def("primitives", [](const std::string& w) { return strs(primitives(Word::parse(w))); }, py::arg("word"));
    m.def("height_class", [](std::size_t k) { return strs(height_class(k).members); }, py::arg("k"));
    m.def("chains_of_height", [](std::size_t k) { return chain_strs(chains_of_height(k)); }, py::arg("k"));
    m.def("chain_primitives",
          [](const std::string& chain) {
              std::vector<std::string> out;
              for (const Chain& c : chain_primitives(parse_chain(chain))) out.push_back(c.str());
              return out;
          },
          py::arg("chain"));
    m.def("verify_partition",
          [](std::size_t k) {
              const PartitionReport r = verify_partition(k);
              py::dict d;
              d["k"] = r.k;
              d["class_size"] = r.class_size;
              d["chain_count"] = r.chain_count;
              d["expected_chain_count"] = r.expected_chain_count;
              d["member_total"] = r.member_total;
              d["max_out_degree"] = r.max_out_degree;
              d["passed"] = r.passed();
              return d;
          },
          py::arg("k"));
    m.def("mrse_chain_count", &mrse_chain_count, py::arg("k"));

    m.def("gamma",
          [](std::size_t n, const std::string& method) {
              if (method != "extension" && method != "oracle") throw DomainError("method must be extension or oracle");
              return smoothwords::gamma(n, method == "oracle" ? GammaMethod::oracle : GammaMethod::extension);
          },
          py::arg("n"), py::arg("method") = "extension");
    m.def("smooth_words_of_length", [](std::size_t n) { return strs(smooth_words_of_length(n)); }, py::arg("n"));
    m.def("compute_stats",
          [](std::size_t n_max) {
              py::list out;
              for (const StatsRecord& r : compute_stats(n_max)) out.append(stats_dict(r));
              return out;
          },
          py::arg("n_max"));
    m.def("stats_csv", [](std::size_t n_max) { return stats_to_csv(compute_stats(n_max)); }, py::arg("n_max"));
    m.def("is_lde", [](const std::string& w) { return is_lde(Word::parse(w)); }, py::arg("word"));
    m.def("is_fe", [](const std::string& w) { return is_fe(Word::parse(w)); }, py::arg("word"));
    m.def("bounds_passed", [](std::size_t n) { return chain_bounds_check(n).passed(); }, py::arg("n"));

    m.def("kolakoski_prefix", [](std::size_t n) { return kolakoski_prefix(n).str(); }, py::arg("n"));
    m.def("shallit_iterate", [](std::size_t i) { return shallit_iterate(i).word.str(); }, py::arg("i"));
    m.def("alpha_estimate", [](std::size_t i) { return alpha_estimate(i); }, py::arg("i"));
    m.def("factor_complexity", [](std::size_t n, std::size_t window) { return factor_complexity(n, window); },
          py::arg("n"), py::arg("window"));

    m.def("gen_derivative",
          [](const std::string& w, const std::string& p) { return opt_str(gen_derivative(Word::parse(w), alphabet(p))); },
          py::arg("word"), py::arg("alphabet"));
    m.def("gen_height", [](const std::string& w, const std::string& p) { return gen_height(Word::parse(w), alphabet(p)); },
          py::arg("word"), py::arg("alphabet"));
    m.def("gen_chains_of_height",
          [](std::size_t k, const std::string& p) { return chain_strs(gen_chains_of_height(k, alphabet(p))); },
          py::arg("k"), py::arg("alphabet"));
    m.def("gen_gamma", [](std::size_t n, const std::string& p) { return gen_gamma(n, alphabet(p)); }, py::arg("n"),
          py::arg("alphabet"));

    m.def("theorem6_exponents",
          [](double theta) {
              const ExponentReport r = theorem6_exponents(theta);
              return py::make_tuple(r.lower_exponent, r.upper_exponent);
          },
          py::arg("theta"));
    m.def("theorem5_exponents",
          [](const std::string& p, double xi) {
              const ExponentReport r = theorem5_exponents(alphabet(p), xi);
              return py::make_tuple(r.lower_exponent, r.upper_exponent);
          },
          py::arg("alphabet"), py::arg("xi"));
    m.def("sing_exponents",
          [](const std::string& p) {
              const SingExponents s = sing_exponents(alphabet(p));
              return py::make_tuple(s.delta, s.theta_rev);
          },
          py::arg("alphabet"));
    m.def("reference_q", &reference_q);
}
