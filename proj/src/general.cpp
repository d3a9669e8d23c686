#include "smoothwords/general.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "smoothwords/errors.hpp"

namespace smoothwords {

Alphabet Alphabet::make(unsigned a, unsigned b) {
    if (a == 0 || a >= b || b > 9) {
        throw DomainError("alphabet {" + std::to_string(a) + "," + std::to_string(b) + "} needs 0 < a < b <= 9");
    }
    return Alphabet(static_cast<Letter>(a), static_cast<Letter>(b));
}

Alphabet Alphabet::parse(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw DomainError("alphabet must be written a,b: \"" + std::string(text) + "\"");
    unsigned a = 0;
    unsigned b = 0;
    auto part = [&](std::string_view s, unsigned& out) {
        const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
            throw DomainError("alphabet must be written a,b: \"" + std::string(text) + "\"");
        }
    };
    part(text.substr(0, comma), a);
    part(text.substr(comma + 1), b);
    return make(a, b);
}

bool Alphabet::contains(const Word& w) const noexcept {
    return std::all_of(w.begin(), w.end(), [this](char c) { return contains(static_cast<Letter>(c)); });
}

std::string Alphabet::str() const { return std::to_string(a_) + "," + std::to_string(b_); }

namespace {

void require_letters(const Word& w, const Alphabet& p) {
    if (!p.contains(w)) throw DomainError("word " + w.str() + " has letters outside {" + p.str() + "}");
}

}  // namespace

std::optional<Word> gen_derivative(const Word& w, const Alphabet& p) {
    require_letters(w, p);
    const auto decomposition = runs(w);
    const auto& rs = decomposition.runs();
    Word out;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const std::size_t len = rs[i].length;
        if (len > p.b()) return std::nullopt;
        const bool boundary = i == 0 || i + 1 == rs.size();
        if (boundary) {
            if (len == p.b()) out.push_back(p.b());
        } else {
            if (len != p.a() && len != p.b()) return std::nullopt;
            out.push_back(static_cast<Letter>(len));
        }
    }
    return out;
}

std::optional<std::size_t> gen_height(const Word& w, const Alphabet& p) {
    Word cur = w;
    std::size_t k = 0;
    while (!cur.empty()) {
        auto next = gen_derivative(cur, p);
        if (!next) return std::nullopt;
        cur = std::move(*next);
        ++k;
    }
    return k;
}

bool gen_is_smooth(const Word& w, const Alphabet& p) { return gen_height(w, p).has_value(); }

Word gen_complement(const Word& w, const Alphabet& p) {
    require_letters(w, p);
    Word out;
    out.reserve(w.size());
    for (Letter c : w) out.push_back(p.other(c));
    return out;
}

Word gen_expand(const Word& w, Letter start, const Alphabet& p) {
    Word out;
    Letter letter = start;
    for (Letter len : w) {
        out.append_run(letter, len);
        letter = p.other(letter);
    }
    return out;
}

std::vector<Word> gen_primitives(const Word& w, const Alphabet& p) {
    require_letters(w, p);
    std::vector<Word> out;
    if (w.empty()) {
        for (Letter x : {p.a(), p.b()}) {
            for (std::size_t i = 1; i < p.b(); ++i) {
                out.push_back(Word::repeated(x, i));
                for (std::size_t j = 1; j < p.b(); ++j) {
                    Word v = Word::repeated(x, i);
                    v.append_run(p.other(x), j);
                    out.push_back(std::move(v));
                }
            }
        }
    } else {
        for (Letter start : {p.a(), p.b()}) {
            const Word core = gen_expand(w, start, p);
            const Letter before = p.other(core.front());
            const Letter after = p.other(core.back());
            for (std::size_t x = 0; x < p.b(); ++x) {
                for (std::size_t y = 0; y < p.b(); ++y) {
                    Word v = Word::repeated(before, x);
                    v.append(core);
                    v.append_run(after, y);
                    if (gen_derivative(v, p) == w) out.push_back(std::move(v));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), ShortlexLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void check_height(std::size_t k, const Limits& limits) {
    if (k == 0) throw DomainError("height must be positive");
    if (k > limits.max_height) {
        throw ResourceLimitError("height " + std::to_string(k) + " exceeds the ceiling " +
                                 std::to_string(limits.max_height));
    }
}

}  // namespace

HeightClass gen_height_class(std::size_t k, const Alphabet& p, const Limits& limits) {
    check_height(k, limits);
    HeightClass cls{1, gen_primitives(Word{}, p)};
    while (cls.k < k) {
        HeightClass next{cls.k + 1, {}};
        for (const Word& w : cls.members) {
            auto prims = gen_primitives(w, p);
            next.members.insert(next.members.end(), prims.begin(), prims.end());
        }
        std::sort(next.members.begin(), next.members.end(), ShortlexLess{});
        cls = std::move(next);
    }
    return cls;
}

std::vector<Word> gen_words_up_to_height(std::size_t k, const Alphabet& p, const Limits& limits) {
    check_height(k, limits);
    std::vector<Word> all;
    std::vector<Word> frontier{Word{}};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (Letter x : {p.a(), p.b()}) {
                Word v = w.extended(x);
                const auto h = gen_height(v, p);
                if (h && *h <= k) next.push_back(std::move(v));
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), ShortlexLess{});
    return all;
}

ChainFamily gen_h1_chains(const Alphabet& p) {
    ChainFamily family{1, {}};
    for (Letter alpha : {p.a(), p.b()}) {
        for (std::size_t i = 1; i < p.b(); ++i) {
            Chain chain{{}, 1};
            Word w = Word::repeated(alpha, i);
            chain.members.push_back(w);
            for (std::size_t j = 1; j < p.b(); ++j) {
                w.push_back(p.other(alpha));
                chain.members.push_back(w);
            }
            family.chains.push_back(std::move(chain));
        }
    }
    std::sort(family.chains.begin(), family.chains.end());
    return family;
}

std::vector<Chain> cover_by_chains(const std::vector<Word>& words, std::size_t height, const Alphabet& p) {
    const std::unordered_set<Word> set(words.begin(), words.end());
    auto successor = [&](const Word& u) -> std::optional<Word> {
        std::optional<Word> same_run;
        std::optional<Word> new_run;
        for (Letter x : {p.a(), p.b()}) {
            Word v = u.extended(x);
            if (!set.contains(v)) continue;
            (x == u.back() ? same_run : new_run) = std::move(v);
        }
        return new_run ? new_run : same_run;
    };
    std::vector<Chain> chains;
    for (const Word& w : words) {
        if (w.size() > 1) {
            const Word parent = w.prefix(w.size() - 1);
            if (set.contains(parent) && successor(parent) == w) continue;
        }
        Chain chain{{w}, height};
        while (auto next = successor(chain.members.back())) chain.members.push_back(std::move(*next));
        chains.push_back(std::move(chain));
    }
    std::sort(chains.begin(), chains.end());
    return chains;
}

std::vector<Chain> gen_chain_primitives(const Chain& chain, const Alphabet& p) {
    if (chain.members.empty()) throw DomainError("empty chain");
    for (std::size_t i = 1; i < chain.members.size(); ++i) {
        const Word& prev = chain.members[i - 1];
        const Word& cur = chain.members[i];
        if (cur.size() != prev.size() + 1 || cur.prefix(prev.size()) != prev) {
            throw DomainError(cur.str() + " is not a simple right extension of " + prev.str());
        }
    }
    std::vector<Word> pool;
    for (const Word& u : chain.members) {
        if (gen_height(u, p) != chain.height) {
            throw DomainError("chain member " + display(u) + " does not have height " + std::to_string(chain.height));
        }
        auto prims = gen_primitives(u, p);
        pool.insert(pool.end(), prims.begin(), prims.end());
    }
    return cover_by_chains(pool, chain.height + 1, p);
}

ChainFamily gen_chains_of_height(std::size_t k, const Alphabet& p, const Limits& limits) {
    check_height(k, limits);
    ChainFamily family = gen_h1_chains(p);
    while (family.k < k) {
        ChainFamily next{family.k + 1, {}};
        for (const Chain& c : family.chains) {
            auto prims = gen_chain_primitives(c, p);
            next.chains.insert(next.chains.end(), std::make_move_iterator(prims.begin()),
                               std::make_move_iterator(prims.end()));
        }
        std::sort(next.chains.begin(), next.chains.end());
        family = std::move(next);
    }
    return family;
}

GenPartitionReport gen_verify_partition(std::size_t k, const Alphabet& p, const Limits& limits) {
    GenPartitionReport report;
    report.k = k;
    std::vector<Word> cls;
    for (Word& w : gen_words_up_to_height(k, p, limits)) {
        if (gen_height(w, p) == k) cls.push_back(std::move(w));
    }
    report.class_size = cls.size();
    const std::unordered_set<Word> set(cls.begin(), cls.end());
    for (const Word& w : cls) {
        if (w.size() <= 1 || !set.contains(w.prefix(w.size() - 1))) ++report.root_count;
        if (set.contains(w.extended(p.a())) && set.contains(w.extended(p.b()))) ++report.branch_count;
    }

    const ChainFamily family = gen_chains_of_height(k, p, limits);
    report.chain_count = family.size();
    report.member_total = family.total_members();
    report.chains_well_formed = true;
    std::vector<Word> covered;
    for (const Chain& c : family.chains) {
        for (std::size_t i = 0; i < c.members.size(); ++i) {
            const Word& w = c.members[i];
            if (gen_height(w, p) != k) report.chains_well_formed = false;
            if (i > 0 && (w.size() != c.members[i - 1].size() + 1 || w.prefix(w.size() - 1) != c.members[i - 1])) {
                report.chains_well_formed = false;
            }
            covered.push_back(w);
        }
    }
    std::sort(covered.begin(), covered.end(), ShortlexLess{});
    report.disjoint_cover_ok = covered == cls;
    return report;
}

std::vector<Word> gen_smooth_words_of_length(std::size_t n, const Alphabet& p, const Limits& limits) {
    if (n > limits.max_length) {
        throw ResourceLimitError("length " + std::to_string(n) + " exceeds the enumeration ceiling " +
                                 std::to_string(limits.max_length));
    }
    std::vector<Word> frontier{Word{}};
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<Word> next;
        next.reserve(frontier.size() * 2);
        for (const Word& w : frontier) {
            for (Letter x : {p.a(), p.b()}) {
                Word v = w.extended(x);
                if (gen_is_smooth(v, p)) next.push_back(std::move(v));
            }
        }
        frontier = std::move(next);
    }
    return frontier;
}

std::vector<Word> gen_smooth_words_by_filter(std::size_t n, const Alphabet& p, const Limits& limits) {
    if (n > limits.max_oracle_length) {
        throw ResourceLimitError("exhaustive filter limited to n <= " + std::to_string(limits.max_oracle_length));
    }
    std::vector<Word> out;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Word v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(((mask >> (n - 1 - i)) & 1u) ? p.b() : p.a());
        if (gen_is_smooth(v, p)) out.push_back(std::move(v));
    }
    return out;
}

std::uint64_t gen_gamma(std::size_t n, const Alphabet& p, GammaMethod method, const Limits& limits) {
    if (method == GammaMethod::oracle) return gen_smooth_words_by_filter(n, p, limits).size();
    return gen_smooth_words_of_length(n, p, limits).size();
}

std::pair<Rational, Rational> gen_frequency_extrema(std::size_t n, const Alphabet& p, const Limits& limits) {
    if (n == 0) throw DomainError("length must be positive");
    const auto words = gen_smooth_words_of_length(n, p, limits);
    std::size_t lo = n;
    std::size_t hi = 0;
    for (const Word& w : words) {
        const std::size_t c = w.count(p.b());
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    return {Rational::make(lo, n), Rational::make(hi, n)};
}

}  // namespace smoothwords
