#include "smoothwords/word.hpp"

#include <algorithm>
#include <cassert>

#include "smoothwords/errors.hpp"

namespace smoothwords {

Word Word::parse(std::string_view text) {
    if (text.empty() || text == "e" || text == "ε") return {};
    std::string raw;
    raw.reserve(text.size());
    for (char c : text) {
        if (c < '1' || c > '9') {
            throw DomainError("invalid letter '" + std::string(1, c) + "' in word \"" + std::string(text) +
                              "\" (letters are digits 1-9)");
        }
        raw.push_back(static_cast<char>(c - '0'));
    }
    return Word(std::move(raw));
}

std::size_t Word::count(Letter letter) const noexcept {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), static_cast<char>(letter)));
}

Word Word::extended(Letter letter) const {
    Word out = *this;
    out.push_back(letter);
    return out;
}

std::string Word::str() const {
    std::string out(letters_);
    for (char& c : out) c = static_cast<char>('0' + c);
    return out;
}

std::string display(const Word& w) { return w.empty() ? std::string("ε") : w.str(); }

RunDecomposition::RunDecomposition(std::vector<Run> runs) : runs_(std::move(runs)) {
    for (std::size_t i = 0; i < runs_.size(); ++i) {
        if (runs_[i].length == 0) throw DomainError("run length must be positive");
        if (i > 0 && runs_[i].letter == runs_[i - 1].letter) throw DomainError("adjacent runs share a letter");
    }
}

Word RunDecomposition::to_word() const {
    Word w;
    for (const Run& r : runs_) w.append_run(r.letter, r.length);
    return w;
}

RunDecomposition runs(const Word& w) {
    std::vector<Run> out;
    for (Letter c : w) {
        if (!out.empty() && out.back().letter == c) {
            ++out.back().length;
        } else {
            out.push_back({c, 1});
        }
    }
    return RunDecomposition(std::move(out));
}

Word complement(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter c : w) out.push_back(complement(c));
    return out;
}

bool is_base_word(const Word& w) noexcept {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == kOne || c == kTwo; });
}

std::optional<Word> derivative(const Word& w) {
    assert(is_base_word(w));
    Word out;
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && w[j] == w[i]) ++j;
        const std::size_t len = j - i;
        if (len > 2) return std::nullopt;
        const bool boundary = (i == 0) || (j == n);
        if (!(boundary && len == 1)) out.push_back(static_cast<Letter>(len));
        i = j;
    }
    return out;
}

std::optional<Word> derivative_k(const Word& w, std::size_t k) {
    Word cur = w;
    for (std::size_t step = 0; step < k; ++step) {
        auto next = derivative(cur);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

std::optional<std::size_t> height(const Word& w) {
    Word cur = w;
    std::size_t k = 0;
    while (!cur.empty()) {
        auto next = derivative(cur);
        if (!next) return std::nullopt;
        cur = std::move(*next);
        ++k;
    }
    return k;
}

bool is_smooth(const Word& w) { return height(w).has_value(); }

}  // namespace smoothwords
