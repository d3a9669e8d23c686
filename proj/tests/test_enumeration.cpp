#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "smoothwords/enumeration.hpp"
#include "smoothwords/errors.hpp"

using namespace smoothwords;

namespace {

Word W(const char* s) { return Word::parse(s); }

const std::uint64_t kGamma[] = {1,   2,   4,   6,   10,  14,  18,  26,  34,  42,  50,  62,  78,  94,  110, 126,
                                142, 162, 186, 218, 250, 282, 314, 346, 378, 410, 446, 486, 534, 590};

}  // namespace

TEST(Rational, MakeParseCompare) {
    EXPECT_EQ(Rational::make(2, 4), (Rational{1, 2}));
    EXPECT_EQ(Rational::make(0, 5), (Rational{0, 1}));
    EXPECT_EQ(Rational::parse("3/9"), (Rational{1, 3}));
    EXPECT_EQ(Rational::make(3, 4).str(), "3/4");
    EXPECT_LT(Rational::make(1, 3), Rational::make(1, 2));
    EXPECT_THROW(Rational::make(1, 0), DomainError);
    EXPECT_THROW(Rational::parse("1/"), DomainError);
    EXPECT_THROW(Rational::parse("x"), DomainError);
}

TEST(Enumeration, SmallLengths) {
    EXPECT_EQ(smooth_words_of_length(1), (std::vector<Word>{W("1"), W("2")}));
    EXPECT_EQ(smooth_words_of_length(3),
              (std::vector<Word>{W("112"), W("121"), W("122"), W("211"), W("212"), W("221")}));
    EXPECT_EQ(smooth_words_of_length(4).size(), 10u);
    EXPECT_EQ(smooth_words_of_length(0), std::vector<Word>{Word{}});
}

TEST(Enumeration, GammaTable) {
    for (std::size_t n = 0; n < 30; ++n) EXPECT_EQ(smoothwords::gamma(n), kGamma[n]) << n;
    EXPECT_EQ(smoothwords::gamma(60), 3702u);
}

TEST(Enumeration, ExtensionMatchesOracle) {
    for (std::size_t n = 0; n <= 18; ++n) {
        EXPECT_EQ(smoothwords::gamma(n, GammaMethod::extension), smoothwords::gamma(n, GammaMethod::oracle)) << n;
        if (n <= 14) EXPECT_EQ(smooth_words_of_length(n), smooth_words_by_filter(n)) << n;
    }
}

TEST(Enumeration, GammaPrime) {
    EXPECT_EQ(gamma_prime(1), 2);
    EXPECT_EQ(gamma_prime(3), 4);
    for (std::size_t n = 0; n < 29; ++n) {
        EXPECT_EQ(gamma_prime(n), static_cast<std::int64_t>(kGamma[n + 1] - kGamma[n]));
    }
}

TEST(Enumeration, Limits) {
    EXPECT_THROW(smoothwords::gamma(257), ResourceLimitError);
    EXPECT_THROW(smoothwords::gamma(25, GammaMethod::oracle), ResourceLimitError);
    Limits tight;
    tight.max_length = 10;
    EXPECT_THROW(compute_stats(11, tight), ResourceLimitError);
    LengthEnumerator e(false, tight);
    e.advance_to(10);
    EXPECT_THROW(e.advance(), ResourceLimitError);
}

TEST(ExtensionState, MatchesNaiveHeight) {
    // Walk every word of length <= 16 and compare the incremental tower with direct height.
    struct Item {
        std::string word;
        ExtensionState state;
    };
    std::vector<Item> level{{"", ExtensionState{}}};
    for (std::size_t n = 1; n <= 16; ++n) {
        std::vector<Item> next;
        for (const Item& it : level) {
            for (char c : {'1', '2'}) {
                const std::string w = it.word + c;
                const auto s = it.state.extended(static_cast<Letter>(c - '0'));
                const auto h = oracle::height(w);
                ASSERT_EQ(s.has_value(), h.has_value()) << w;
                if (s) {
                    ASSERT_EQ(static_cast<int>(s->height()), *h) << w;
                    next.push_back({w, *s});
                }
            }
        }
        level = std::move(next);
    }
}

TEST(Enumeration, LdeAndFe) {
    EXPECT_TRUE(is_lde(W("1")));
    EXPECT_TRUE(is_lde(W("12")));
    EXPECT_FALSE(is_lde(W("11211")));
    EXPECT_TRUE(is_fe(Word{}));
    EXPECT_FALSE(is_fe(W("2")));
    EXPECT_TRUE(is_fe(W("12")));
    EXPECT_THROW(is_lde(W("111")), DomainError);
}

TEST(Enumeration, LdeCountLaw) {
    std::uint64_t expected = 4;
    for (std::size_t k = 1; k <= 6; ++k, expected *= 3) EXPECT_EQ(lde_count_by_height(k), expected) << k;
}

TEST(Enumeration, FeLengthExtrema) {
    EXPECT_EQ(fe_length_extrema(0), (std::pair<std::size_t, std::size_t>{0, 0}));
    EXPECT_EQ(fe_length_extrema(1), (std::pair<std::size_t, std::size_t>{2, 2}));
    const auto [lo, hi] = fe_length_extrema(2);
    std::size_t want_lo = 100, want_hi = 0;
    for (const Word& w : height_class(2).members) {
        if (is_fe(w)) {
            want_lo = std::min(want_lo, w.size());
            want_hi = std::max(want_hi, w.size());
        }
    }
    EXPECT_EQ(lo, want_lo);
    EXPECT_EQ(hi, want_hi);
}

TEST(Enumeration, HeightExtrema) {
    EXPECT_EQ(height_extrema_by_length(1), (std::pair<std::size_t, std::size_t>{1, 1}));
    EXPECT_EQ(height_extrema_by_length(2), (std::pair<std::size_t, std::size_t>{1, 2}));
    EXPECT_EQ(height_extrema_by_length(4), (std::pair<std::size_t, std::size_t>{2, 3}));
    EXPECT_THROW(height_extrema_by_length(0), DomainError);
}

TEST(Enumeration, FrequencyExtrema) {
    EXPECT_EQ(frequency_extrema(4), (std::pair{Rational::make(1, 4), Rational::make(3, 4)}));
    EXPECT_EQ(frequency_extrema(2), (std::pair{Rational::make(0, 1), Rational::make(1, 1)}));
}

TEST(Enumeration, StatsRecordsAreConsistent) {
    const auto records = compute_stats(64);
    ASSERT_EQ(records.size(), 64u);
    for (const StatsRecord& r : records) {
        EXPECT_EQ(r.gamma, smoothwords::gamma(r.n));
        ASSERT_TRUE(r.gamma_prime.has_value());
        EXPECT_EQ(*r.gamma_prime, gamma_prime(r.n));
        EXPECT_LE(r.h1, r.h2);
        EXPECT_LE(r.freq_min, r.freq_max);
        if (r.n >= 3) EXPECT_GT(r.freq_min.num, 0u);
        EXPECT_EQ(Rational::make(r.freq_min.num, r.freq_min.den), r.freq_min);
    }
}

TEST(Bounds, Examples) {
    const BoundsReport four = chain_bounds_check(4);
    EXPECT_EQ(four.lower, 2u);
    EXPECT_EQ(four.upper, 54u);
    EXPECT_TRUE(four.passed());
    const BoundsReport one = chain_bounds_check(1);
    EXPECT_FALSE(one.lower.has_value());
    EXPECT_EQ(one.lower_status, BoundStatus::skipped);
    EXPECT_EQ(one.upper, 6u);
    EXPECT_TRUE(one.passed());
}

TEST(Bounds, HoldUpTo128) {
    for (const StatsRecord& r : compute_stats(128)) EXPECT_TRUE(chain_bounds_check(r).passed()) << r.n;
}

TEST(Enumeration, RightExtendableAndMonotone) {
    LengthEnumerator e;
    std::uint64_t prev = e.count();
    for (std::size_t n = 1; n <= 256; ++n) {
        e.advance();
        ASSERT_GE(e.count(), prev) << n;
        prev = e.count();
    }
    EXPECT_TRUE(e.all_right_extendable());
}

TEST(Enumeration, ComplementClosed) {
    for (std::size_t n = 1; n <= 24; ++n) {
        const auto words = smooth_words_of_length(n);
        const std::set<Word> set(words.begin(), words.end());
        for (const Word& w : words) ASSERT_TRUE(set.count(complement(w))) << w.str();
    }
}
