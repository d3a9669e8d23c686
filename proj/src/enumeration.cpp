#include "smoothwords/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "smoothwords/errors.hpp"

namespace smoothwords {

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw DomainError("zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    auto parse_part = [&](std::string_view part, std::uint64_t& out) {
        const auto res = std::from_chars(part.data(), part.data() + part.size(), out);
        if (res.ec != std::errc{} || res.ptr != part.data() + part.size()) {
            throw DomainError("malformed fraction \"" + std::string(text) + "\"");
        }
    };
    if (slash == std::string_view::npos) {
        parse_part(text, num);
    } else {
        parse_part(text.substr(0, slash), num);
        parse_part(text.substr(slash + 1), den);
    }
    return make(num, den);
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

std::optional<ExtensionState> ExtensionState::extended(Letter letter) const {
    ExtensionState next = *this;
    Letter c = letter;
    for (std::size_t level = 0;; ++level) {
        if (level == next.depth_) {
            // Appending to ε: a single letter, whose derivative is ε.
            if (level == kMaxLevels) throw ResourceLimitError("derivative tower deeper than 64 levels");
            next.tails_[level] = Tail{c, 1, true};
            next.depth_ = static_cast<std::uint8_t>(level + 1);
            return next;
        }
        Tail& tail = next.tails_[level];
        if (c == tail.last) {
            if (tail.run == 2) return std::nullopt;
            // The last run grows from 1 to 2: it was discarded, now it is kept.
            tail.run = 2;
            c = kTwo;
            continue;
        }
        const bool was_single = tail.single_run;
        const std::uint8_t old_run = tail.run;
        tail = Tail{c, 1, false};
        // A length-one run stops being the last run; it is kept unless it is
        // also the first run.
        if (old_run == 1 && !was_single) {
            c = kOne;
            continue;
        }
        return next;
    }
}

LengthEnumerator::LengthEnumerator(bool keep_words, const Limits& limits)
    : keep_words_(keep_words), limits_(limits), entries_{Entry{}} {
    if (keep_words_) words_.emplace_back();
}

void LengthEnumerator::advance() {
    if (length_ >= limits_.max_length) {
        throw ResourceLimitError("length " + std::to_string(length_ + 1) + " exceeds the enumeration ceiling " +
                                 std::to_string(limits_.max_length));
    }
    std::vector<Entry> next;
    std::vector<Word> next_words;
    next.reserve(entries_.size() * 2);
    if (keep_words_) next_words.reserve(entries_.size() * 2);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        bool extended = false;
        for (Letter a : {kOne, kTwo}) {
            auto state = entries_[i].state.extended(a);
            if (!state) continue;
            extended = true;
            next.push_back(Entry{*state, entries_[i].twos + (a == kTwo ? 1u : 0u)});
            if (keep_words_) next_words.push_back(words_[i].extended(a));
        }
        if (!extended) all_extendable_ = false;
    }
    entries_ = std::move(next);
    words_ = std::move(next_words);
    ++length_;
}

void LengthEnumerator::advance_to(std::size_t n) {
    while (length_ < n) advance();
}

StatsRecord LengthEnumerator::record() const {
    StatsRecord rec;
    rec.n = length_;
    rec.gamma = entries_.size();
    if (length_ == 0) {
        rec.freq_min = rec.freq_max = Rational{0, 1};
        return rec;
    }
    auto [hmin, hmax] = std::minmax_element(entries_.begin(), entries_.end(), [](const Entry& x, const Entry& y) {
        return x.state.height() < y.state.height();
    });
    auto [tmin, tmax] = std::minmax_element(entries_.begin(), entries_.end(),
                                            [](const Entry& x, const Entry& y) { return x.twos < y.twos; });
    rec.h1 = hmin->state.height();
    rec.h2 = hmax->state.height();
    rec.freq_min = Rational::make(tmin->twos, length_);
    rec.freq_max = Rational::make(tmax->twos, length_);
    return rec;
}

std::vector<Word> LengthEnumerator::words() const {
    if (!keep_words_) throw DomainError("enumerator was created without keep_words");
    // Extension order from a sorted frontier is already lexicographic.
    return words_;
}

std::vector<Word> smooth_words_of_length(std::size_t n, const Limits& limits) {
    LengthEnumerator en(true, limits);
    en.advance_to(n);
    return en.words();
}

std::vector<Word> smooth_words_by_filter(std::size_t n, const Limits& limits) {
    if (n > limits.max_oracle_length) {
        throw ResourceLimitError("exhaustive filter limited to n <= " + std::to_string(limits.max_oracle_length));
    }
    std::vector<Word> out;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Word v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(((mask >> (n - 1 - i)) & 1u) ? kTwo : kOne);
        if (is_smooth(v)) out.push_back(std::move(v));
    }
    return out;
}

std::uint64_t gamma(std::size_t n, GammaMethod method, const Limits& limits) {
    if (method == GammaMethod::oracle) return smooth_words_by_filter(n, limits).size();
    LengthEnumerator en(false, limits);
    en.advance_to(n);
    return en.count();
}

std::int64_t gamma_prime(std::size_t n, const Limits& limits) {
    LengthEnumerator en(false, limits);
    en.advance_to(n);
    const auto before = static_cast<std::int64_t>(en.count());
    en.advance();
    return static_cast<std::int64_t>(en.count()) - before;
}

std::vector<StatsRecord> compute_stats(std::size_t n_max, const Limits& limits) {
    if (n_max > limits.max_length) {
        throw ResourceLimitError("length " + std::to_string(n_max) + " exceeds the enumeration ceiling " +
                                 std::to_string(limits.max_length));
    }
    // One extra step so that gamma_prime is known for the last row.
    Limits extended = limits;
    extended.max_length = n_max + 1;
    LengthEnumerator en(false, extended);
    std::vector<StatsRecord> out;
    out.reserve(n_max);
    for (std::size_t n = 1; n <= n_max + 1; ++n) {
        en.advance();
        if (!out.empty()) out.back().gamma_prime = static_cast<std::int64_t>(en.count()) - out.back().gamma;
        if (n <= n_max) out.push_back(en.record());
    }
    return out;
}

namespace {

void require_smooth(const Word& w) {
    if (!is_base_word(w) || !is_smooth(w)) throw DomainError("word " + display(w) + " is not smooth");
}

}  // namespace

bool is_lde(const Word& w) {
    require_smooth(w);
    return is_smooth(Word::repeated(kOne, 1) + w) && is_smooth(Word::repeated(kTwo, 1) + w);
}

bool is_fe(const Word& w) {
    require_smooth(w);
    for (Letter x : {kOne, kTwo}) {
        for (Letter y : {kOne, kTwo}) {
            Word v = Word::repeated(x, 1) + w;
            v.push_back(y);
            if (!is_smooth(v)) return false;
        }
    }
    return true;
}

std::uint64_t lde_count_by_height(std::size_t k, HeightClassStore& store) {
    const HeightClass& cls = store.get(k);
    return static_cast<std::uint64_t>(std::count_if(cls.members.begin(), cls.members.end(), is_lde));
}

std::uint64_t lde_count_by_height(std::size_t k, const Limits& limits) {
    HeightClassStore store(limits);
    return lde_count_by_height(k, store);
}

std::pair<std::size_t, std::size_t> fe_length_extrema(std::size_t k, HeightClassStore& store) {
    if (k == 0) return {0, 0};  // only ε, which is FE
    const HeightClass& cls = store.get(k);
    std::optional<std::size_t> lo;
    std::size_t hi = 0;
    for (const Word& w : cls.members) {
        if (!is_fe(w)) continue;
        lo = std::min(lo.value_or(w.size()), w.size());
        hi = std::max(hi, w.size());
    }
    if (!lo) throw EmptyClassError("no FE word of height " + std::to_string(k));
    return {*lo, hi};
}

std::pair<std::size_t, std::size_t> fe_length_extrema(std::size_t k, const Limits& limits) {
    HeightClassStore store(limits);
    return fe_length_extrema(k, store);
}

std::pair<std::size_t, std::size_t> height_extrema_by_length(std::size_t n, const Limits& limits) {
    if (n == 0) throw DomainError("length must be positive");
    LengthEnumerator en(false, limits);
    en.advance_to(n);
    const StatsRecord rec = en.record();
    return {rec.h1, rec.h2};
}

std::pair<Rational, Rational> frequency_extrema(std::size_t n, const Limits& limits) {
    if (n == 0) throw DomainError("length must be positive");
    LengthEnumerator en(false, limits);
    en.advance_to(n);
    const StatsRecord rec = en.record();
    return {rec.freq_min, rec.freq_max};
}

std::string to_string(BoundStatus status) {
    switch (status) {
        case BoundStatus::pass: return "pass";
        case BoundStatus::fail: return "fail";
        case BoundStatus::skipped: return "skipped";
    }
    return "?";
}

BoundsReport chain_bounds_check(const StatsRecord& record) {
    BoundsReport report;
    report.n = record.n;
    report.gamma = record.gamma;
    report.h1 = record.h1;
    report.h2 = record.h2;
    if (record.h1 >= 2) {
        report.lower = mrse_chain_count(record.h1 - 1);
        report.lower_status = *report.lower <= record.gamma ? BoundStatus::pass : BoundStatus::fail;
    }
    report.upper = mrse_chain_count(record.h2 + 1);
    report.upper_status = record.gamma <= report.upper ? BoundStatus::pass : BoundStatus::fail;
    return report;
}

BoundsReport chain_bounds_check(std::size_t n, const Limits& limits) {
    if (n == 0) throw DomainError("length must be positive");
    LengthEnumerator en(false, limits);
    en.advance_to(n);
    return chain_bounds_check(en.record());
}

}  // namespace smoothwords
