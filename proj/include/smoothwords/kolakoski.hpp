#pragma once

#include <cstddef>
#include <cstdint>

#include "smoothwords/enumeration.hpp"
#include "smoothwords/limits.hpp"
#include "smoothwords/word.hpp"

namespace smoothwords {

/**
 * Two-pointer generator for the Kolakoski sequence K = 1221121221221...
 *
 * The writer appends runs; the reader walks the already emitted letters and
 * uses each one as the length of the next run.
 */
class KolakoskiGenerator {
public:
    KolakoskiGenerator();

    /// Grows the emitted prefix to at least n letters.
    void extend_to(std::size_t n);

    /// Emitted prefix. May run past the last requested length by one letter.
    const Word& emitted() const noexcept { return emitted_; }
    /// Index of the next letter to be used as a run length.
    std::size_t read_position() const noexcept { return read_; }

private:
    Word emitted_;
    std::size_t read_ = 0;
};

/// First n letters of K.
Word kolakoski_prefix(std::size_t n, const Limits& limits = kDefaultLimits);

/// Run lengths of `prefix`, ignoring a possibly incomplete last run, equal
/// the same-length prefix of `prefix` itself.
bool is_self_encoding(const Word& prefix);

struct ShallitIterate {
    std::size_t index = 0;
    Word word;

    std::size_t length() const noexcept { return word.size(); }
};

/// K_0 = 2; K_{i+1} repeats the j-th letter of 1212... K_i[j] times.
ShallitIterate shallit_iterate(std::size_t i, const Limits& limits = kDefaultLimits);

/// One replication step.
Word shallit_step(const Word& word);

struct LetterStats {
    std::uint64_t ones = 0;
    std::uint64_t twos = 0;
    Rational ratio;  // ones / n
};

LetterStats prefix_letter_stats(std::size_t n, const Limits& limits = kDefaultLimits);

/// |K_i| * (2/3)^i. Candidate limit (3 + sqrt 5) / 6.
double alpha_estimate(std::size_t i, const Limits& limits = kDefaultLimits);

inline constexpr double kAlphaCandidate = 0.87267799624996494;  // (3 + sqrt 5) / 6

/// Distinct length-n factors of kolakoski_prefix(window). A lower bound for
/// the factor complexity of K. DomainError when window < n.
std::uint64_t factor_complexity(std::size_t n, std::size_t window, const Limits& limits = kDefaultLimits);

/// Same count on an explicit word.
std::uint64_t distinct_factor_count(const Word& text, std::size_t n);

}  // namespace smoothwords
