#include "smoothwords/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "smoothwords/cache.hpp"
#include "smoothwords/chains.hpp"
#include "smoothwords/enumeration.hpp"
#include "smoothwords/errors.hpp"
#include "smoothwords/general.hpp"
#include "smoothwords/growth.hpp"
#include "smoothwords/kolakoski.hpp"
#include "smoothwords/primitives.hpp"
#include "smoothwords/serialize.hpp"

namespace smoothwords {

namespace {

using json = nlohmann::json;

enum class Format { plain, csv, json };

struct Context {
    Alphabet alphabet = Alphabet::base();
    Format format = Format::plain;
    std::optional<Cache> cache;
    std::ostream& out;
    std::ostream& err;
};

// 12 significant digits in every output format.
json real(double value) { return std::stod(format_real(value)); }

Word parse_word(const std::string& text, const Alphabet& p) {
    Word w = Word::parse(text);
    if (!p.contains(w)) throw DomainError("word " + text + " has letters outside {" + p.str() + "}");
    return w;
}

std::string csv_word(const Word& w) { return w.str(); }

void print_words(Context& ctx, const std::vector<Word>& words, const std::string& json_key) {
    switch (ctx.format) {
        case Format::plain:
            for (const Word& w : words) ctx.out << display(w) << '\n';
            break;
        case Format::csv:
            ctx.out << "word\n";
            for (const Word& w : words) ctx.out << csv_word(w) << '\n';
            break;
        case Format::json: {
            json arr = json::array();
            for (const Word& w : words) arr.push_back(w.str());
            ctx.out << json{{json_key, arr}}.dump() << '\n';
            break;
        }
    }
}

// Looks `key` up in the cache, otherwise computes and stores the payload.
std::string cached(Context& ctx, CacheKind kind, const std::string& key, const std::function<std::string()>& compute) {
    if (ctx.cache) {
        if (auto rec = ctx.cache->read(kind, key)) return rec->payload;
    }
    std::string payload = compute();
    if (ctx.cache) ctx.cache->write(kind, key, payload);
    return payload;
}

int cmd_derive(Context& ctx, const std::string& text, std::size_t iterate) {
    Word cur = parse_word(text, ctx.alphabet);
    std::vector<Word> steps;
    std::optional<std::size_t> failed_at;
    for (std::size_t i = 1; i <= iterate; ++i) {
        auto next = ctx.alphabet.is_base() ? derivative(cur) : gen_derivative(cur, ctx.alphabet);
        if (!next) {
            failed_at = i;
            break;
        }
        cur = std::move(*next);
        steps.push_back(cur);
    }
    switch (ctx.format) {
        case Format::plain:
            for (const Word& w : steps) ctx.out << display(w) << '\n';
            break;
        case Format::csv:
            ctx.out << "step,word\n";
            for (std::size_t i = 0; i < steps.size(); ++i) ctx.out << i + 1 << ',' << steps[i].str() << '\n';
            break;
        case Format::json: {
            json arr = json::array();
            for (const Word& w : steps) arr.push_back(w.str());
            json j{{"word", text}, {"derivatives", arr}, {"differentiable", !failed_at.has_value()}};
            ctx.out << j.dump() << '\n';
            break;
        }
    }
    if (failed_at) {
        ctx.err << "error: derivative number " << *failed_at << " does not exist: "
                << (*failed_at == 1 ? text : steps.back().str()) << " has a run longer than "
                << static_cast<int>(ctx.alphabet.b()) << " or a forbidden interior run\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}

int cmd_height(Context& ctx, const std::string& text) {
    const Word w = parse_word(text, ctx.alphabet);
    const auto h = ctx.alphabet.is_base() ? height(w) : gen_height(w, ctx.alphabet);
    if (!h) throw DomainError("word " + text + " is not smooth");
    switch (ctx.format) {
        case Format::plain: ctx.out << *h << '\n'; break;
        case Format::csv: ctx.out << "word,height\n" << text << ',' << *h << '\n'; break;
        case Format::json: ctx.out << json{{"word", w.str()}, {"height", *h}}.dump() << '\n'; break;
    }
    return kExitOk;
}

int cmd_primitives(Context& ctx, const std::string& text) {
    const Word w = parse_word(text, ctx.alphabet);
    const bool smooth = ctx.alphabet.is_base() ? is_smooth(w) : gen_is_smooth(w, ctx.alphabet);
    if (!smooth) throw DomainError("word " + text + " is not smooth");
    print_words(ctx, ctx.alphabet.is_base() ? primitives(w) : gen_primitives(w, ctx.alphabet), "primitives");
    return kExitOk;
}

HeightClass load_class(Context& ctx, std::size_t k) {
    const std::string key = "alphabet=" + ctx.alphabet.str() + ";k=" + std::to_string(k);
    const std::string payload = cached(ctx, CacheKind::height_class, key, [&] {
        return class_to_text(ctx.alphabet.is_base() ? height_class(k) : gen_height_class(k, ctx.alphabet));
    });
    return class_from_text(k, payload);
}

int cmd_class(Context& ctx, std::size_t k) {
    print_words(ctx, load_class(ctx, k).members, "members");
    return kExitOk;
}

ChainFamily load_chains(Context& ctx, std::size_t k) {
    const std::string key = "alphabet=" + ctx.alphabet.str() + ";k=" + std::to_string(k);
    const std::string payload = cached(ctx, CacheKind::chain_family, key, [&] {
        return chains_to_text(ctx.alphabet.is_base() ? chains_of_height(k) : gen_chains_of_height(k, ctx.alphabet));
    });
    if (ctx.alphabet.is_base()) return chains_from_text(k, payload);
    // Generalized chains: parse members without base-alphabet checks.
    ChainFamily family{k, {}};
    std::istringstream in(payload);
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        Chain c{{}, k};
        std::size_t pos = 0;
        while (pos <= line.size()) {
            const std::size_t next = std::min(line.find('<', pos), line.size());
            c.members.push_back(parse_word(line.substr(pos, next - pos), ctx.alphabet));
            pos = next + 1;
        }
        family.chains.push_back(std::move(c));
    }
    return family;
}

int cmd_chains(Context& ctx, std::size_t k, bool split) {
    const ChainFamily family = load_chains(ctx, k);
    std::vector<std::pair<Letter, std::vector<const Chain*>>> groups;
    if (split) {
        for (Letter x : {ctx.alphabet.a(), ctx.alphabet.b()}) {
            std::vector<const Chain*> part;
            for (const Chain& c : family.chains) {
                if (c.first_letter() == x) part.push_back(&c);
            }
            groups.emplace_back(x, std::move(part));
        }
    } else {
        std::vector<const Chain*> all;
        for (const Chain& c : family.chains) all.push_back(&c);
        groups.emplace_back(0, std::move(all));
    }
    switch (ctx.format) {
        case Format::plain:
            for (const auto& [letter, chains] : groups) {
                if (split) ctx.out << "# first letter " << static_cast<int>(letter) << " (" << chains.size() << ")\n";
                for (const Chain* c : chains) ctx.out << c->str() << '\n';
            }
            break;
        case Format::csv:
            ctx.out << "first_letter,length,chain\n";
            for (const auto& [letter, chains] : groups) {
                for (const Chain* c : chains) {
                    ctx.out << static_cast<int>(c->first_letter()) << ',' << c->size() << ',' << c->str() << '\n';
                }
            }
            break;
        case Format::json: {
            json j{{"k", k}, {"count", family.size()}};
            for (const auto& [letter, chains] : groups) {
                json arr = json::array();
                for (const Chain* c : chains) arr.push_back(c->str());
                j[split ? "first_letter_" + std::to_string(letter) : std::string("chains")] = arr;
            }
            ctx.out << j.dump() << '\n';
            break;
        }
    }
    return kExitOk;
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

int cmd_verify_partition(Context& ctx, std::size_t k) {
    if (!ctx.alphabet.is_base()) {
        const GenPartitionReport r = gen_verify_partition(k, ctx.alphabet);
        if (ctx.format == Format::json) {
            ctx.out << json{{"alphabet", ctx.alphabet.str()}, {"k", k}, {"class_size", r.class_size},
                            {"chain_count", r.chain_count}, {"member_total", r.member_total},
                            {"root_count", r.root_count}, {"branch_count", r.branch_count},
                            {"maximal_chain_count", r.maximal_chain_count()},
                            {"chains_well_formed", r.chains_well_formed}, {"disjoint_cover", r.disjoint_cover_ok},
                            {"passed", r.passed()}}
                           .dump()
                    << '\n';
        } else {
            ctx.out << "alphabet {" << ctx.alphabet.str() << "} k=" << k << " |P|=" << r.class_size
                    << " |H|=" << r.chain_count << " members=" << r.member_total << " roots=" << r.root_count
                    << " branch_points=" << r.branch_count << " maximal_chains=" << r.maximal_chain_count() << '\n'
                    << "chains_well_formed: " << verdict(r.chains_well_formed) << '\n'
                    << "disjoint_cover: " << verdict(r.disjoint_cover_ok) << '\n'
                    << "partition: " << verdict(r.passed()) << '\n';
        }
        return r.passed() ? kExitOk : kExitInvariantFailure;
    }
    const PartitionReport r = verify_partition(k);
    switch (ctx.format) {
        case Format::plain:
        case Format::csv:
            ctx.out << "k=" << k << " |P|=" << r.class_size << " |H|=" << r.chain_count
                    << " expected=" << r.expected_chain_count << " sum_of_lengths=" << r.member_total
                    << " max_out_degree=" << r.max_out_degree << '\n'
                    << "out_degree: " << verdict(r.out_degree_ok) << '\n'
                    << "disjoint_cover: " << verdict(r.disjoint_cover_ok) << '\n'
                    << "count_law: " << verdict(r.count_law_ok) << '\n'
                    << "size_sum: " << verdict(r.size_sum_ok) << '\n'
                    << "partition: " << verdict(r.passed()) << '\n';
            break;
        case Format::json:
            ctx.out << json{{"k", k}, {"class_size", r.class_size}, {"chain_count", r.chain_count},
                            {"expected_chain_count", r.expected_chain_count}, {"member_total", r.member_total},
                            {"max_out_degree", r.max_out_degree}, {"out_degree", r.out_degree_ok},
                            {"disjoint_cover", r.disjoint_cover_ok}, {"count_law", r.count_law_ok},
                            {"size_sum", r.size_sum_ok}, {"passed", r.passed()}}
                           .dump()
                    << '\n';
            break;
    }
    return r.passed() ? kExitOk : kExitInvariantFailure;
}

int cmd_gamma(Context& ctx, std::size_t n, const std::string& method_name) {
    GammaMethod method;
    if (method_name == "extension") {
        method = GammaMethod::extension;
    } else if (method_name == "oracle") {
        method = GammaMethod::oracle;
    } else {
        throw DomainError("unknown method " + method_name + " (extension|oracle)");
    }
    const std::uint64_t g = ctx.alphabet.is_base() ? gamma(n, method) : gen_gamma(n, ctx.alphabet, method);
    switch (ctx.format) {
        case Format::plain: ctx.out << g << '\n'; break;
        case Format::csv: ctx.out << "n,gamma\n" << n << ',' << g << '\n'; break;
        case Format::json: ctx.out << json{{"n", n}, {"gamma", g}, {"method", method_name}}.dump() << '\n'; break;
    }
    return kExitOk;
}

void require_base(const Context& ctx, const char* command) {
    if (!ctx.alphabet.is_base()) throw DomainError(std::string(command) + " supports only the alphabet 1,2");
}

std::vector<StatsRecord> load_stats(Context& ctx, std::size_t n_max) {
    const std::string payload = cached(ctx, CacheKind::stats, "n_max=" + std::to_string(n_max),
                                       [&] { return stats_to_csv(compute_stats(n_max)); });
    return stats_from_csv(payload);
}

int cmd_stats(Context& ctx, std::size_t n_max) {
    require_base(ctx, "stats");
    const auto records = load_stats(ctx, n_max);
    switch (ctx.format) {
        case Format::plain: {
            char line[160];
            std::snprintf(line, sizeof line, "%5s %12s %12s %4s %4s %12s %12s\n", "n", "gamma", "gamma_prime", "h1",
                          "h2", "freq_min", "freq_max");
            ctx.out << line;
            for (const StatsRecord& r : records) {
                std::snprintf(line, sizeof line, "%5zu %12llu %12s %4zu %4zu %12s %12s\n", r.n,
                              static_cast<unsigned long long>(r.gamma),
                              r.gamma_prime ? std::to_string(*r.gamma_prime).c_str() : "",
                              r.h1, r.h2, r.freq_min.str().c_str(), r.freq_max.str().c_str());
                ctx.out << line;
            }
            break;
        }
        case Format::csv: ctx.out << stats_to_csv(records); break;
        case Format::json: ctx.out << stats_to_jsonl(records); break;
    }
    return kExitOk;
}

int cmd_bounds(Context& ctx, std::size_t n) {
    require_base(ctx, "bounds");
    const BoundsReport r = chain_bounds_check(n);
    switch (ctx.format) {
        case Format::plain:
            ctx.out << "n=" << r.n << " gamma=" << r.gamma << " h1=" << r.h1 << " h2=" << r.h2 << '\n';
            if (r.lower) {
                ctx.out << "lower: |H^" << r.h1 - 1 << "|=" << *r.lower << " <= " << r.gamma << ": "
                        << to_string(r.lower_status) << '\n';
            } else {
                ctx.out << "lower: skipped (h1=1)\n";
            }
            ctx.out << "upper: " << r.gamma << " <= |H^" << r.h2 + 1 << "|=" << r.upper << ": "
                    << to_string(r.upper_status) << '\n';
            break;
        case Format::csv:
            ctx.out << "n,gamma,h1,h2,lower,lower_status,upper,upper_status\n"
                    << r.n << ',' << r.gamma << ',' << r.h1 << ',' << r.h2 << ','
                    << (r.lower ? std::to_string(*r.lower) : "") << ',' << to_string(r.lower_status) << ','
                    << r.upper << ',' << to_string(r.upper_status) << '\n';
            break;
        case Format::json:
            ctx.out << json{{"n", r.n}, {"gamma", r.gamma}, {"h1", r.h1}, {"h2", r.h2},
                            {"lower", r.lower ? json(*r.lower) : json(nullptr)},
                            {"lower_status", to_string(r.lower_status)}, {"upper", r.upper},
                            {"upper_status", to_string(r.upper_status)}}
                           .dump()
                    << '\n';
            break;
    }
    return r.passed() ? kExitOk : kExitInvariantFailure;
}

std::pair<std::size_t, std::size_t> parse_pair(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument("");
        std::size_t used = 0;
        const auto first = std::stoull(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("");
        const std::string rest = text.substr(comma + 1);
        const auto second = std::stoull(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
        return {first, second};
    } catch (const std::exception&) {
        throw DomainError(std::string(what) + " must be written N,M: \"" + text + "\"");
    }
}

int cmd_kolakoski(Context& ctx, std::size_t n, bool stats, std::optional<std::size_t> alpha,
                  const std::string& complexity) {
    require_base(ctx, "kolakoski");
    if (alpha) {
        const double est = alpha_estimate(*alpha);
        const auto it = shallit_iterate(*alpha);
        if (ctx.format == Format::json) {
            ctx.out << json{{"report", "alpha_estimate"}, {"i", *alpha}, {"length", it.length()},
                            {"alpha", real(est)}, {"candidate", real(kAlphaCandidate)}}
                           .dump()
                    << '\n';
        } else {
            ctx.out << "REPORT alpha_estimate i=" << *alpha << " |K_i|=" << it.length()
                    << " alpha=" << format_real(est) << " candidate=(3+sqrt5)/6=" << format_real(kAlphaCandidate)
                    << '\n';
        }
        return kExitOk;
    }
    if (!complexity.empty()) {
        const auto [len, window] = parse_pair(complexity, "--complexity");
        const auto count = factor_complexity(len, window);
        if (ctx.format == Format::json) {
            ctx.out << json{{"report", "factor_complexity_lower_bound"}, {"n", len}, {"window", window},
                            {"count", count}}
                           .dump()
                    << '\n';
        } else {
            ctx.out << "REPORT factor_complexity n=" << len << " window=" << window << " distinct_factors=" << count
                    << " (lower bound for p_K(n))\n";
        }
        return kExitOk;
    }
    if (stats) {
        const LetterStats s = prefix_letter_stats(n);
        switch (ctx.format) {
            case Format::plain:
                ctx.out << "REPORT n=" << n << " ones=" << s.ones << " twos=" << s.twos << " ratio=" << s.ratio.str()
                        << " (" << format_real(s.ratio.value()) << ")\n";
                break;
            case Format::csv:
                ctx.out << "n,ones,twos,ratio\n" << n << ',' << s.ones << ',' << s.twos << ',' << s.ratio.str() << '\n';
                break;
            case Format::json:
                ctx.out << json{{"n", n}, {"ones", s.ones}, {"twos", s.twos}, {"ratio", s.ratio.str()},
                                {"ratio_value", real(s.ratio.value())}}
                               .dump()
                        << '\n';
                break;
        }
        return kExitOk;
    }
    const Word prefix = kolakoski_prefix(n);
    switch (ctx.format) {
        case Format::plain: ctx.out << prefix.str() << '\n'; break;
        case Format::csv: ctx.out << "n,prefix\n" << n << ',' << prefix.str() << '\n'; break;
        case Format::json: ctx.out << json{{"n", n}, {"prefix", prefix.str()}}.dump() << '\n'; break;
    }
    return kExitOk;
}

void print_exponents(Context& ctx, const char* label, const ExponentReport& r) {
    if (ctx.format == Format::json) {
        ctx.out << json{{"kind", label}, {"parameter", real(r.parameter)}, {"lower", real(r.lower_exponent)},
                        {"upper", real(r.upper_exponent)}, {"q", real(r.reference_q)}}
                       .dump()
                << '\n';
    } else {
        ctx.out << label << " parameter=" << format_real(r.parameter) << " lower=" << format_real(r.lower_exponent)
                << " upper=" << format_real(r.upper_exponent) << " q=" << format_real(r.reference_q) << '\n';
    }
}

int cmd_exponents(Context& ctx, std::optional<double> theta, std::optional<double> xi, const std::string& sing) {
    const int chosen = (theta ? 1 : 0) + (xi ? 1 : 0) + (sing.empty() ? 0 : 1);
    if (chosen != 1) throw DomainError("exponents needs exactly one of --theta, --xi, --sing");
    if (theta) {
        print_exponents(ctx, "theorem6", theorem6_exponents(*theta));
    } else if (xi) {
        print_exponents(ctx, "theorem5", theorem5_exponents(ctx.alphabet, *xi));
    } else {
        const Alphabet p = Alphabet::parse(sing);
        const SingExponents s = sing_exponents(p);
        if (ctx.format == Format::json) {
            ctx.out << json{{"alphabet", p.str()}, {"delta", real(s.delta)}, {"theta_rev", real(s.theta_rev)},
                            {"parity_differs", p.parity_differs()}}
                           .dump()
                    << '\n';
        } else {
            ctx.out << "sing alphabet={" << p.str() << "} delta=" << format_real(s.delta)
                    << " theta_rev=" << format_real(s.theta_rev) << '\n';
        }
    }
    return kExitOk;
}

int cmd_fit(Context& ctx, std::size_t n_min, std::size_t n_max, std::size_t n0) {
    require_base(ctx, "fit");
    if (n_min > n_max) throw DomainError("N_MIN must not exceed N_MAX");
    const auto records = load_stats(ctx, n_max);
    const double slope = fit_growth_exponent(records, n_min, n_max);
    const Rational theta = empirical_theta(records, n0);
    const ExponentReport bracket = theorem6_exponents(std::min(theta.value(), 0.5));
    const bool inside = bracket.lower_exponent <= slope && slope <= bracket.upper_exponent;
    if (ctx.format == Format::json) {
        ctx.out << json{{"n_min", n_min}, {"n_max", n_max}, {"slope", real(slope)}, {"n0", n0},
                        {"theta", theta.str()}, {"theta_value", real(theta.value())},
                        {"lower", real(bracket.lower_exponent)}, {"upper", real(bracket.upper_exponent)},
                        {"q", real(bracket.reference_q)}, {"within_bracket", inside}}
                       .dump()
                << '\n';
    } else {
        ctx.out << "slope=" << format_real(slope) << " over n in [" << n_min << ", " << n_max << "]\n"
                << "theta=" << theta.str() << " (" << format_real(theta.value()) << ") from n >= " << n0 << '\n'
                << "bracket=[" << format_real(bracket.lower_exponent) << ", " << format_real(bracket.upper_exponent)
                << "] q=" << format_real(bracket.reference_q) << " within=" << (inside ? "yes" : "no") << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Smooth-word calculus: derivatives, primitives, height classes, MRSE chains, enumeration"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string alphabet_text = "1,2";
    std::string format_text = "plain";
    std::string cache_dir;
    bool deterministic = true;
    app.add_option("--alphabet", alphabet_text, "two-letter alphabet a,b with a < b")->capture_default_str();
    app.add_option("--format", format_text, "plain, csv or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--cache", cache_dir, "cache directory (default: $SMOOTHWORDS_CACHE, else none)");
    app.add_flag("--seedless-deterministic", deterministic, "canonical ordering (always on)");

    std::string word;
    std::size_t iterate = 1;
    auto* derive = app.add_subcommand("derive", "print D(w), D^2(w), ...");
    derive->add_option("WORD", word)->required();
    derive->add_option("--iterate", iterate, "number of derivatives")->check(CLI::NonNegativeNumber);

    auto* height_cmd = app.add_subcommand("height", "height of a smooth word");
    height_cmd->add_option("WORD", word)->required();

    auto* prims_cmd = app.add_subcommand("primitives", "all primitives of a smooth word");
    prims_cmd->add_option("WORD", word)->required();

    std::size_t k = 0;
    auto* class_cmd = app.add_subcommand("class", "list the smooth words of height K");
    class_cmd->add_option("K", k)->required()->check(CLI::PositiveNumber);

    bool split = false;
    auto* chains_cmd = app.add_subcommand("chains", "list the MRSE chains of height K");
    chains_cmd->add_option("K", k)->required()->check(CLI::PositiveNumber);
    chains_cmd->add_flag("--split", split, "group by first letter");

    auto* verify_cmd = app.add_subcommand("verify-partition", "check that the chains of height K partition the class");
    verify_cmd->add_option("K", k)->required()->check(CLI::PositiveNumber);

    std::size_t n = 0;
    std::string method = "extension";
    auto* gamma_cmd = app.add_subcommand("gamma", "number of smooth words of length N");
    gamma_cmd->add_option("N", n)->required()->check(CLI::NonNegativeNumber);
    gamma_cmd->add_option("--method", method, "extension or oracle")->check(CLI::IsMember({"extension", "oracle"}));

    auto* stats_cmd = app.add_subcommand("stats", "per-length table for n = 1..N_MAX");
    stats_cmd->add_option("N_MAX", n)->required()->check(CLI::PositiveNumber);

    auto* bounds_cmd = app.add_subcommand("bounds", "chain sandwich |H^(h1-1)| <= gamma(N) <= |H^(h2+1)|");
    bounds_cmd->add_option("N", n)->required()->check(CLI::PositiveNumber);

    bool kstats = false;
    std::optional<std::size_t> alpha;
    std::string complexity;
    auto* kol_cmd = app.add_subcommand("kolakoski", "Kolakoski prefix and statistics");
    kol_cmd->add_option("N", n)->required()->check(CLI::PositiveNumber);
    auto* kstats_opt = kol_cmd->add_flag("--stats", kstats, "letter counts of the prefix");
    auto* alpha_opt = kol_cmd->add_option("--alpha", alpha, "report |K_I| (2/3)^I");
    auto* cplx_opt = kol_cmd->add_option("--complexity", complexity, "distinct factors: LENGTH,WINDOW");
    kstats_opt->excludes(alpha_opt)->excludes(cplx_opt);
    alpha_opt->excludes(cplx_opt);

    std::optional<double> theta;
    std::optional<double> xi;
    std::string sing;
    auto* exp_cmd = app.add_subcommand("exponents", "growth exponent calculators");
    exp_cmd->add_option("--theta", theta, "frequency bound, 0 < T <= 1/2");
    exp_cmd->add_option("--xi", xi, "frequency bound for --alphabet, 0 < X < 1");
    exp_cmd->add_option("--sing", sing, "alphabet A,B");

    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::size_t n0 = 32;
    auto* fit_cmd = app.add_subcommand("fit", "log-log slope of gamma over [N_MIN, N_MAX]");
    fit_cmd->add_option("N_MIN", n_min)->required()->check(CLI::PositiveNumber);
    fit_cmd->add_option("N_MAX", n_max)->required()->check(CLI::PositiveNumber);
    fit_cmd->add_option("--n0", n0, "least length used for the empirical theta")->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        Context ctx{Alphabet::parse(alphabet_text),
                    format_text == "csv" ? Format::csv : format_text == "json" ? Format::json : Format::plain,
                    std::nullopt, out, err};
        if (cache_dir.empty()) {
            if (const char* env = std::getenv("SMOOTHWORDS_CACHE"); env && *env) cache_dir = env;
        }
        if (!cache_dir.empty()) ctx.cache.emplace(cache_dir, &err);

        if (derive->parsed()) return cmd_derive(ctx, word, iterate);
        if (height_cmd->parsed()) return cmd_height(ctx, word);
        if (prims_cmd->parsed()) return cmd_primitives(ctx, word);
        if (class_cmd->parsed()) return cmd_class(ctx, k);
        if (chains_cmd->parsed()) return cmd_chains(ctx, k, split);
        if (verify_cmd->parsed()) return cmd_verify_partition(ctx, k);
        if (gamma_cmd->parsed()) return cmd_gamma(ctx, n, method);
        if (stats_cmd->parsed()) return cmd_stats(ctx, n);
        if (bounds_cmd->parsed()) return cmd_bounds(ctx, n);
        if (kol_cmd->parsed()) return cmd_kolakoski(ctx, n, kstats, alpha, complexity);
        if (exp_cmd->parsed()) return cmd_exponents(ctx, theta, xi, sing);
        if (fit_cmd->parsed()) return cmd_fit(ctx, n_min, n_max, n0);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const EmptyClassError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const InsufficientDataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInvariantFailure;
    }
    return kExitInvalidInput;
}

}  // namespace smoothwords
