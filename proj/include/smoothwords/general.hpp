#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smoothwords/chains.hpp"
#include "smoothwords/enumeration.hpp"
#include "smoothwords/limits.hpp"
#include "smoothwords/primitives.hpp"
#include "smoothwords/word.hpp"

namespace smoothwords {

/// Two-letter alphabet {a, b} with 0 < a < b <= 9.
class Alphabet {
public:
    static Alphabet make(unsigned a, unsigned b);
    /// "a,b", e.g. "1,3".
    static Alphabet parse(std::string_view text);
    static Alphabet base() { return make(1, 2); }

    Letter a() const noexcept { return a_; }
    Letter b() const noexcept { return b_; }
    bool parity_differs() const noexcept { return (a_ + b_) % 2 == 1; }
    bool is_base() const noexcept { return a_ == 1 && b_ == 2; }
    bool contains(Letter x) const noexcept { return x == a_ || x == b_; }
    bool contains(const Word& w) const noexcept;
    /// a <-> b
    Letter other(Letter x) const noexcept { return static_cast<Letter>(a_ + b_ - x); }
    std::string str() const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    Alphabet(Letter a, Letter b) : a_(a), b_(b) {}
    Letter a_;
    Letter b_;
};

/**
 * Derivative over {a, b}: the run lengths of w, where a first or last run
 * shorter than b is dropped and one of length exactly b is kept. nullopt when
 * a run is longer than b or an interior run has a length outside {a, b}.
 * At {1, 2} this is the ordinary derivative.
 *
 * DomainError when w has a letter outside the alphabet.
 */
std::optional<Word> gen_derivative(const Word& w, const Alphabet& p);
std::optional<std::size_t> gen_height(const Word& w, const Alphabet& p);
bool gen_is_smooth(const Word& w, const Alphabet& p);
Word gen_complement(const Word& w, const Alphabet& p);

/// Runs of lengths w[0], w[1], ... alternating from `start`.
Word gen_expand(const Word& w, Letter start, const Alphabet& p);

/// Nonempty v with gen_derivative(v) = w: x·core·y where x and y are runs
/// of 0..b-1 letters complementing the adjacent core letter. Shortlex order.
std::vector<Word> gen_primitives(const Word& w, const Alphabet& p);

/// Union of primitives, starting from the height-1 class.
HeightClass gen_height_class(std::size_t k, const Alphabet& p, const Limits& limits = kDefaultLimits);

/// Every smooth word of height <= k, found by right extension with pruning
/// on height (height never drops under right extension). Shortlex order.
/// Independent of the primitive construction.
std::vector<Word> gen_words_up_to_height(std::size_t k, const Alphabet& p, const Limits& limits = kDefaultLimits);

/// xi_i = α^i < α^i ᾱ < ... < α^i ᾱ^(b-1) for both letters α and i = 1..b-1.
ChainFamily gen_h1_chains(const Alphabet& p);

/**
 * Splits a set of words of one height into chains of simple right
 * extensions. A chain starts at every word whose parent is outside the set
 * or whose parent continues elsewhere. Where a word has two extensions in
 * the set, the one starting a new run continues the chain.
 */
std::vector<Chain> cover_by_chains(const std::vector<Word>& words, std::size_t height, const Alphabet& p);

/// Chains made of all primitives of the members of `chain`.
std::vector<Chain> gen_chain_primitives(const Chain& chain, const Alphabet& p);

/// H^1 from the explicit formula, H^k as the chain primitives of H^{k-1}.
ChainFamily gen_chains_of_height(std::size_t k, const Alphabet& p, const Limits& limits = kDefaultLimits);

struct GenPartitionReport {
    std::size_t k = 0;
    std::size_t class_size = 0;      // words of height k found by pruned extension
    std::size_t chain_count = 0;
    std::size_t member_total = 0;
    std::size_t root_count = 0;      // members with no parent of the same height
    std::size_t branch_count = 0;    // members with two extensions of the same height
    // Leaves of the extension forest: the chain count of any cover by maximal chains.
    std::size_t maximal_chain_count() const noexcept { return root_count + branch_count; }
    bool chains_well_formed = false; // simple extensions, common height
    bool disjoint_cover_ok = false;  // chain members == height-k words
    bool passed() const noexcept { return chains_well_formed && disjoint_cover_ok; }
};

GenPartitionReport gen_verify_partition(std::size_t k, const Alphabet& p, const Limits& limits = kDefaultLimits);

/// Smooth words of length n over {a, b} by right extension, lexicographic.
std::vector<Word> gen_smooth_words_of_length(std::size_t n, const Alphabet& p, const Limits& limits = kDefaultLimits);
/// Exhaustive 2^n filter.
std::vector<Word> gen_smooth_words_by_filter(std::size_t n, const Alphabet& p, const Limits& limits = kDefaultLimits);

std::uint64_t gen_gamma(std::size_t n, const Alphabet& p, GammaMethod method = GammaMethod::extension,
                        const Limits& limits = kDefaultLimits);

/// Least and greatest |w|_b / |w| over smooth words of length n.
std::pair<Rational, Rational> gen_frequency_extrema(std::size_t n, const Alphabet& p,
                                                    const Limits& limits = kDefaultLimits);

}  // namespace smoothwords
