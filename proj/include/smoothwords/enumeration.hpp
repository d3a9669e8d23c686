#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smoothwords/chains.hpp"
#include "smoothwords/limits.hpp"
#include "smoothwords/primitives.hpp"
#include "smoothwords/word.hpp"

namespace smoothwords {

/// Nonnegative fraction in lowest terms.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational make(std::uint64_t num, std::uint64_t den);
    /// "3/4"
    static Rational parse(std::string_view text);

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
        return static_cast<unsigned __int128>(lhs.num) * rhs.den <=> static_cast<unsigned __int128>(rhs.num) * lhs.den;
    }
};

/// Per-length summary of the smooth words of length n.
struct StatsRecord {
    std::size_t n = 0;
    std::uint64_t gamma = 0;                   // γ(n)
    std::optional<std::int64_t> gamma_prime;   // γ(n+1) - γ(n)
    std::size_t h1 = 0;                        // least height at length n
    std::size_t h2 = 0;                        // greatest height at length n
    Rational freq_min;                         // min |w|_2 / |w|
    Rational freq_max;                         // max |w|_2 / |w|

    friend bool operator==(const StatsRecord&, const StatsRecord&) = default;
};

/**
 * Tail summary of the derivative tower w, D(w), D^2(w), ...
 *
 * For every nonempty level it keeps the last letter, the length of the last
 * run and whether the level is a single run. Appending a letter to w changes
 * D(w) by at most one appended letter, so smoothness and height of w·α follow
 * from this summary alone, in O(height) time.
 */
class ExtensionState {
public:
    static constexpr std::size_t kMaxLevels = 64;

    /// Tower of the empty word.
    ExtensionState() = default;

    /// State of w·letter, or nullopt when w·letter is not smooth.
    std::optional<ExtensionState> extended(Letter letter) const;

    /// Height of the word this state summarizes.
    std::size_t height() const noexcept { return depth_; }

    friend bool operator==(const ExtensionState&, const ExtensionState&) = default;

private:
    struct Tail {
        Letter last = 0;
        std::uint8_t run = 0;
        bool single_run = false;
        friend bool operator==(const Tail&, const Tail&) = default;
    };

    std::array<Tail, kMaxLevels> tails_{};
    std::uint8_t depth_ = 0;
};

/**
 * Breadth-first enumeration of smooth words by length:
 * S_0 = {ε}, S_{m+1} = { w·α smooth : w in S_m }.
 *
 * Words are materialized only on request; the statistics need the tower
 * summaries and the count of 2s.
 */
class LengthEnumerator {
public:
    explicit LengthEnumerator(bool keep_words = false, const Limits& limits = kDefaultLimits);

    /// Moves from length n to n + 1.
    void advance();
    void advance_to(std::size_t n);

    std::size_t length() const noexcept { return length_; }
    std::uint64_t count() const noexcept { return entries_.size(); }

    /// Record for the current length. gamma_prime is left empty.
    StatsRecord record() const;

    /// Current words in lexicographic order. Requires keep_words.
    std::vector<Word> words() const;

    /// False once some smooth word had no smooth right extension.
    bool all_right_extendable() const noexcept { return all_extendable_; }

private:
    struct Entry {
        ExtensionState state;
        std::uint32_t twos = 0;
    };

    bool keep_words_;
    Limits limits_;
    std::size_t length_ = 0;
    std::vector<Entry> entries_;
    std::vector<Word> words_;
    bool all_extendable_ = true;
};

/// Every smooth word of length n, lexicographic order.
std::vector<Word> smooth_words_of_length(std::size_t n, const Limits& limits = kDefaultLimits);

/// Every word of length n over {1,2} passed through is_smooth. Cost 2^n.
std::vector<Word> smooth_words_by_filter(std::size_t n, const Limits& limits = kDefaultLimits);

enum class GammaMethod { extension, oracle };

std::uint64_t gamma(std::size_t n, GammaMethod method = GammaMethod::extension, const Limits& limits = kDefaultLimits);

/// γ(n+1) - γ(n).
std::int64_t gamma_prime(std::size_t n, const Limits& limits = kDefaultLimits);

/// Records for n = 1..n_max, every gamma_prime filled.
std::vector<StatsRecord> compute_stats(std::size_t n_max, const Limits& limits = kDefaultLimits);

/// 1w and 2w both smooth. DomainError if w is not smooth.
bool is_lde(const Word& w);
/// 1w1, 1w2, 2w1, 2w2 all smooth. DomainError if w is not smooth.
bool is_fe(const Word& w);

/// Number of LDE words of height k; equals 4 * 3^(k-1).
std::uint64_t lde_count_by_height(std::size_t k, HeightClassStore& store);
std::uint64_t lde_count_by_height(std::size_t k, const Limits& limits = kDefaultLimits);

/// (A(k), B(k)): least and greatest length of an FE word of height k.
/// Throws EmptyClassError when there is none.
std::pair<std::size_t, std::size_t> fe_length_extrema(std::size_t k, HeightClassStore& store);
std::pair<std::size_t, std::size_t> fe_length_extrema(std::size_t k, const Limits& limits = kDefaultLimits);

/// (h1(n), h2(n)).
std::pair<std::size_t, std::size_t> height_extrema_by_length(std::size_t n, const Limits& limits = kDefaultLimits);

/// Least and greatest |w|_2 / |w| over smooth words of length n >= 1.
std::pair<Rational, Rational> frequency_extrema(std::size_t n, const Limits& limits = kDefaultLimits);

enum class BoundStatus { pass, fail, skipped };

std::string to_string(BoundStatus status);

/// |H^{h1(n)-1}| <= γ(n) <= |H^{h2(n)+1}|, with chain counts from 2*3^(k-1).
struct BoundsReport {
    std::size_t n = 0;
    std::uint64_t gamma = 0;
    std::size_t h1 = 0;
    std::size_t h2 = 0;
    std::optional<std::uint64_t> lower;  // empty when h1(n) = 1
    std::uint64_t upper = 0;
    BoundStatus lower_status = BoundStatus::skipped;
    BoundStatus upper_status = BoundStatus::fail;

    bool passed() const noexcept { return lower_status != BoundStatus::fail && upper_status == BoundStatus::pass; }
};

BoundsReport chain_bounds_check(const StatsRecord& record);
BoundsReport chain_bounds_check(std::size_t n, const Limits& limits = kDefaultLimits);

}  // namespace smoothwords
