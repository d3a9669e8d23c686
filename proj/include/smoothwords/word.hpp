#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smoothwords {

/// A letter is stored by its integer value. The base alphabet is {1, 2};
/// the generalized alphabet {a, b} uses the same representation.
using Letter = std::uint8_t;

inline constexpr Letter kOne = 1;
inline constexpr Letter kTwo = 2;

/// 1 <-> 2.
constexpr Letter complement(Letter letter) noexcept { return static_cast<Letter>(3 - letter); }

/**
 * Finite word over a small integer alphabet.
 *
 * Letters are kept as raw values in a byte string, so comparison is
 * lexicographic on letter values and hashing comes for free. Printing uses
 * one decimal digit per letter, which limits alphabets to letters 1..9.
 */
class Word {
public:
    Word() = default;

    /// Parses a digit string such as "12112". The strings "", "e" and "ε"
    /// all denote the empty word. Throws DomainError on other characters.
    static Word parse(std::string_view text);

    static Word from_letters(std::string_view raw) { return Word(std::string(raw)); }
    static Word repeated(Letter letter, std::size_t count) { return Word(std::string(count, static_cast<char>(letter))); }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    Letter operator[](std::size_t i) const noexcept { return static_cast<Letter>(letters_[i]); }
    Letter front() const noexcept { return static_cast<Letter>(letters_.front()); }
    Letter back() const noexcept { return static_cast<Letter>(letters_.back()); }

    /// |w|_letter
    std::size_t count(Letter letter) const noexcept;

    void push_back(Letter letter) { letters_.push_back(static_cast<char>(letter)); }
    void pop_back() { letters_.pop_back(); }
    void append(const Word& other) { letters_ += other.letters_; }
    void append_run(Letter letter, std::size_t length) { letters_.append(length, static_cast<char>(letter)); }
    void reserve(std::size_t n) { letters_.reserve(n); }

    Word extended(Letter letter) const;
    Word prefix(std::size_t length) const { return Word(letters_.substr(0, length)); }
    Word factor(std::size_t pos, std::size_t length) const { return Word(letters_.substr(pos, length)); }

    /// Digit string; the empty word prints as "".
    std::string str() const;

    /// Raw letter bytes, suitable as a hash key.
    std::string_view raw() const noexcept { return letters_; }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) noexcept {
        return lhs.letters_.compare(rhs.letters_) <=> 0;
    }

    friend Word operator+(const Word& lhs, const Word& rhs) { return Word(lhs.letters_ + rhs.letters_); }

private:
    explicit Word(std::string raw) : letters_(std::move(raw)) {}

    std::string letters_;
};

/// Shorter words first, ties broken lexicographically.
struct ShortlexLess {
    bool operator()(const Word& lhs, const Word& rhs) const noexcept {
        if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
        return lhs < rhs;
    }
};

/// Digit string, with the empty word shown as "ε".
std::string display(const Word& w);

struct Run {
    Letter letter;
    std::size_t length;

    friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal-block decomposition of a word.
class RunDecomposition {
public:
    RunDecomposition() = default;
    explicit RunDecomposition(std::vector<Run> runs);

    const std::vector<Run>& runs() const noexcept { return runs_; }
    std::size_t size() const noexcept { return runs_.size(); }
    bool empty() const noexcept { return runs_.empty(); }

    /// Concatenation of the runs.
    Word to_word() const;

    friend bool operator==(const RunDecomposition&, const RunDecomposition&) = default;

private:
    std::vector<Run> runs_;
};

RunDecomposition runs(const Word& w);

/// Letterwise 1 <-> 2.
Word complement(const Word& w);

/// True when every letter is 1 or 2.
bool is_base_word(const Word& w) noexcept;

/**
 * Run-length derivative D(w): the sequence of run lengths of w with the first
 * and/or last run dropped when it has length one. A single run of length one
 * is both first and last, so D(1) = ε. Returns nullopt when a run is longer
 * than two (w contains 111 or 222).
 *
 * Precondition: w is over {1, 2}.
 */
std::optional<Word> derivative(const Word& w);

/// D^k(w), nullopt as soon as one step fails.
std::optional<Word> derivative_k(const Word& w, std::size_t k);

bool is_smooth(const Word& w);

/// ht(w): least k with D^k(w) = ε, and 0 for ε. nullopt when w is not smooth.
std::optional<std::size_t> height(const Word& w);

}  // namespace smoothwords

template <>
struct std::hash<smoothwords::Word> {
    std::size_t operator()(const smoothwords::Word& w) const noexcept {
        return std::hash<std::string_view>{}(w.raw());
    }
};
