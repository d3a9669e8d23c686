#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "smoothwords/errors.hpp"
#include "smoothwords/kolakoski.hpp"

using namespace smoothwords;

namespace {
Word W(const char* s) { return Word::parse(s); }
}  // namespace

TEST(Kolakoski, Prefix) {
    EXPECT_EQ(kolakoski_prefix(19), W("1221121221221121122"));
    EXPECT_EQ(kolakoski_prefix(1), W("1"));
    EXPECT_TRUE(kolakoski_prefix(0).empty());
}

TEST(Kolakoski, SelfEncoding) {
    EXPECT_TRUE(is_self_encoding(kolakoski_prefix(50)));
    EXPECT_TRUE(is_self_encoding(kolakoski_prefix(1'000'000)));
    EXPECT_FALSE(is_self_encoding(W("1211")));
    for (std::size_t n = 1; n <= 200; ++n) ASSERT_TRUE(is_self_encoding(kolakoski_prefix(n))) << n;
}

TEST(Kolakoski, PrefixIsSmooth) {
    EXPECT_TRUE(is_smooth(kolakoski_prefix(5000)));
}

TEST(Kolakoski, GeneratorIsIncremental) {
    KolakoskiGenerator g;
    g.extend_to(100);
    const Word a = g.emitted().prefix(100);
    g.extend_to(1000);
    EXPECT_EQ(g.emitted().prefix(100), a);
    EXPECT_EQ(g.emitted().prefix(1000), kolakoski_prefix(1000));
}

TEST(Shallit, Iterates) {
    EXPECT_EQ(shallit_iterate(0).word, W("2"));
    EXPECT_EQ(shallit_iterate(1).word, W("11"));
    EXPECT_EQ(shallit_iterate(4).word, W("12211"));
    EXPECT_EQ(shallit_step(W("11")), W("12"));
    const Word k = kolakoski_prefix(50'000);
    for (std::size_t i = 2; i <= 25; ++i) {
        const ShallitIterate it = shallit_iterate(i);
        ASSERT_EQ(it.index, i);
        ASSERT_EQ(it.word, k.prefix(it.length())) << i;
    }
    EXPECT_THROW(shallit_iterate(41), ResourceLimitError);
}

TEST(Kolakoski, LetterStats) {
    const LetterStats s = prefix_letter_stats(19);
    EXPECT_EQ(s.ones, 9u);
    EXPECT_EQ(s.twos, 10u);
    EXPECT_EQ(s.ratio, Rational::make(9, 19));
    const LetterStats one = prefix_letter_stats(1);
    EXPECT_EQ(one.ones, 1u);
    EXPECT_EQ(one.twos, 0u);
    const LetterStats big = prefix_letter_stats(1'000'000);
    EXPECT_NEAR(big.ratio.value(), 0.5, 0.01);
}

TEST(Kolakoski, AlphaEstimate) {
    EXPECT_DOUBLE_EQ(alpha_estimate(0), 1.0);
    EXPECT_NEAR(alpha_estimate(4), 80.0 / 81.0, 1e-12);
    EXPECT_NEAR(kAlphaCandidate, (3.0 + std::sqrt(5.0)) / 6.0, 1e-15);
}

TEST(Kolakoski, FactorComplexity) {
    EXPECT_EQ(factor_complexity(1, 100), 2u);
    const Word k = kolakoski_prefix(100);
    std::set<std::string> pairs;
    for (std::size_t i = 0; i + 2 <= k.size(); ++i) pairs.insert(k.factor(i, 2).str());
    EXPECT_EQ(factor_complexity(2, 100), pairs.size());
    EXPECT_THROW(factor_complexity(0, 100), DomainError);
    EXPECT_THROW(factor_complexity(10, 5), DomainError);
    // Bitmask and hashed paths agree.
    const Word text = kolakoski_prefix(20'000);
    for (std::size_t n : {60u, 64u, 65u, 70u}) {
        std::set<std::string> seen;
        for (std::size_t i = 0; i + n <= text.size(); ++i) seen.insert(text.factor(i, n).str());
        EXPECT_EQ(distinct_factor_count(text, n), seen.size()) << n;
    }
}
