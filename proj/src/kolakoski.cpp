#include "smoothwords/kolakoski.hpp"

#include <cmath>
#include <string_view>
#include <unordered_set>

#include "smoothwords/errors.hpp"

namespace smoothwords {

KolakoskiGenerator::KolakoskiGenerator() : emitted_(Word::parse("122")), read_(2) {}

void KolakoskiGenerator::extend_to(std::size_t n) {
    emitted_.reserve(n + 1);
    while (emitted_.size() < n) {
        const Letter next = complement(emitted_.back());
        emitted_.append_run(next, emitted_[read_]);
        ++read_;
    }
}

Word kolakoski_prefix(std::size_t n, const Limits& limits) {
    if (n > limits.max_kolakoski_length) {
        throw ResourceLimitError("Kolakoski prefix of " + std::to_string(n) + " letters exceeds the ceiling");
    }
    KolakoskiGenerator gen;
    gen.extend_to(n);
    return gen.emitted().prefix(n);
}

bool is_self_encoding(const Word& prefix) {
    const auto decomposition = runs(prefix);
    const auto& rs = decomposition.runs();
    // The last run may be cut short by the prefix boundary.
    const std::size_t complete = rs.empty() ? 0 : rs.size() - 1;
    if (complete > prefix.size()) return false;
    for (std::size_t j = 0; j < complete; ++j) {
        if (rs[j].length != prefix[j]) return false;
    }
    if (!rs.empty() && rs.size() <= prefix.size() && rs.back().length > prefix[rs.size() - 1]) return false;
    return true;
}

Word shallit_step(const Word& word) {
    Word out;
    std::size_t total = 0;
    for (Letter c : word) total += c;
    out.reserve(total);
    for (std::size_t j = 0; j < word.size(); ++j) out.append_run(j % 2 == 0 ? kOne : kTwo, word[j]);
    return out;
}

ShallitIterate shallit_iterate(std::size_t i, const Limits& limits) {
    if (i > limits.max_shallit_index) {
        throw ResourceLimitError("Shallit iterate " + std::to_string(i) + " exceeds the ceiling " +
                                 std::to_string(limits.max_shallit_index));
    }
    ShallitIterate it{0, Word::parse("2")};
    while (it.index < i) {
        it.word = shallit_step(it.word);
        ++it.index;
    }
    return it;
}

LetterStats prefix_letter_stats(std::size_t n, const Limits& limits) {
    if (n == 0) throw DomainError("prefix length must be positive");
    const Word k = kolakoski_prefix(n, limits);
    LetterStats stats;
    stats.ones = k.count(kOne);
    stats.twos = k.count(kTwo);
    stats.ratio = Rational::make(stats.ones, n);
    return stats;
}

double alpha_estimate(std::size_t i, const Limits& limits) {
    const auto it = shallit_iterate(i, limits);
    return static_cast<double>(it.length()) * std::pow(2.0 / 3.0, static_cast<double>(i));
}

std::uint64_t distinct_factor_count(const Word& text, std::size_t n) {
    if (n == 0) return 1;
    if (text.size() < n) return 0;
    if (n <= 64) {
        // Letters 1/2 map to bits; a factor of length n is an n-bit key.
        std::unordered_set<std::uint64_t> seen;
        const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            key = ((key << 1) | (text[i] == kTwo ? 1u : 0u)) & mask;
            if (i + 1 >= n) seen.insert(key);
        }
        return seen.size();
    }
    std::unordered_set<std::string_view> seen;
    const std::string_view raw = text.raw();
    for (std::size_t i = 0; i + n <= raw.size(); ++i) seen.insert(raw.substr(i, n));
    return seen.size();
}

std::uint64_t factor_complexity(std::size_t n, std::size_t window, const Limits& limits) {
    if (n == 0) throw DomainError("factor length must be positive");
    if (window < n) {
        throw DomainError("window " + std::to_string(window) + " is shorter than factor length " + std::to_string(n));
    }
    return distinct_factor_count(kolakoski_prefix(window, limits), n);
}

}  // namespace smoothwords
