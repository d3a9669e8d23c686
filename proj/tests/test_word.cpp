#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "smoothwords/errors.hpp"
#include "smoothwords/word.hpp"

using namespace smoothwords;

namespace {
Word W(const char* s) { return Word::parse(s); }
}  // namespace

TEST(Word, ParseAndDisplay) {
    EXPECT_TRUE(W("").empty());
    EXPECT_TRUE(W("e").empty());
    EXPECT_TRUE(W("ε").empty());
    EXPECT_EQ(W("1221").str(), "1221");
    EXPECT_EQ(display(Word{}), "ε");
    EXPECT_THROW(W("12a"), DomainError);
    EXPECT_THROW(W("120"), DomainError);
}

TEST(Word, Runs) {
    EXPECT_EQ(runs(W("2112")).runs(), (std::vector<smoothwords::Run>{{2, 1}, {1, 2}, {2, 1}}));
    EXPECT_TRUE(runs(Word{}).empty());
    EXPECT_EQ(runs(W("1221121")).runs(), (std::vector<smoothwords::Run>{{1, 1}, {2, 2}, {1, 2}, {2, 1}, {1, 1}}));
}

TEST(Word, RunDecompositionRejectsAdjacentEqualLetters) {
    EXPECT_THROW(RunDecomposition({{1, 1}, {1, 2}}), DomainError);
    EXPECT_THROW(RunDecomposition({{1, 0}}), DomainError);
}

TEST(Word, RunRoundTripRandom) {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 100000; ++trial) {
        const std::size_t n = rng() % 40;
        Word w;
        for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<Letter>(1 + rng() % 2));
        ASSERT_EQ(runs(w).to_word(), w);
    }
}

TEST(Word, Complement) {
    EXPECT_EQ(complement(W("12112")), W("21221"));
    EXPECT_EQ(complement(Word{}), Word{});
    EXPECT_EQ(complement(W("22122")), W("11211"));
    EXPECT_EQ(complement(complement(W("1221121"))), W("1221121"));
}

TEST(Word, Derivative) {
    EXPECT_EQ(derivative(W("2112")), W("2"));
    EXPECT_EQ(derivative(W("1")), Word{});
    EXPECT_EQ(derivative(Word{}), Word{});
    EXPECT_EQ(derivative(W("121121221")), W("12112"));
    EXPECT_FALSE(derivative(W("111")).has_value());
    EXPECT_FALSE(derivative(W("1222")).has_value());
}

TEST(Word, IteratedDerivative) {
    EXPECT_EQ(derivative_k(W("12212212"), 4), Word{});
    EXPECT_EQ(derivative_k(W("12212212"), 0), W("12212212"));
    EXPECT_EQ(derivative_k(W("12212212"), 2), W("11"));
    EXPECT_FALSE(derivative_k(W("1112"), 1).has_value());
}

TEST(Word, SmoothAndHeight) {
    EXPECT_TRUE(is_smooth(W("22122")));
    EXPECT_FALSE(is_smooth(W("111")));
    EXPECT_TRUE(is_smooth(Word{}));
    EXPECT_EQ(height(W("12212212")), 4u);
    EXPECT_EQ(height(W("2")), 1u);
    EXPECT_EQ(height(Word{}), 0u);
    EXPECT_FALSE(height(W("11211211")).has_value());
}

TEST(Word, DerivativeMatchesOracleExhaustively) {
    for (std::size_t n = 0; n <= 14; ++n) {
        for (const auto& s : oracle::all_words(n)) {
            const auto d = derivative(Word::parse(s));
            const auto o = oracle::derivative(s);
            ASSERT_EQ(d.has_value(), o.has_value()) << s;
            if (d) ASSERT_EQ(d->str(), *o) << s;
            const auto h = height(Word::parse(s));
            const auto oh = oracle::height(s);
            ASSERT_EQ(h.has_value(), oh.has_value()) << s;
            if (h) ASSERT_EQ(static_cast<int>(*h), *oh) << s;
        }
    }
}

TEST(Word, ComplementCommutesWithDerivative) {
    for (std::size_t n = 0; n <= 12; ++n) {
        for (const auto& s : oracle::all_words(n)) {
            const Word w = Word::parse(s);
            ASSERT_EQ(derivative(complement(w)), derivative(w)) << s;
            ASSERT_EQ(is_smooth(complement(w)), is_smooth(w)) << s;
        }
    }
}

TEST(Word, LengthSandwichUpTo30) {
    // |D| + |D|_2 <= |w| <= |D| + |D|_2 + 2 for every smooth w.
    std::vector<Word> level{Word{}};
    for (std::size_t n = 1; n <= 30; ++n) {
        std::vector<Word> next;
        for (const Word& w : level) {
            for (Letter x : {kOne, kTwo}) {
                Word v = w.extended(x);
                if (is_smooth(v)) next.push_back(std::move(v));
            }
        }
        for (const Word& w : next) {
            const Word d = *derivative(w);
            const std::size_t base = d.size() + d.count(kTwo);
            ASSERT_LE(base, w.size()) << w.str();
            ASSERT_LE(w.size(), base + 2) << w.str();
        }
        level = std::move(next);
    }
    EXPECT_EQ(level.size(), 654u);
}

TEST(Word, FactorClosure) {
    // Every factor of a smooth word is smooth.
    std::vector<Word> level{Word{}};
    for (std::size_t n = 1; n <= 16; ++n) {
        std::vector<Word> next;
        for (const Word& w : level) {
            for (Letter x : {kOne, kTwo}) {
                Word v = w.extended(x);
                if (is_smooth(v)) next.push_back(std::move(v));
            }
        }
        for (const Word& w : next) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                for (std::size_t len = 1; i + len <= w.size(); ++len) {
                    ASSERT_TRUE(is_smooth(w.factor(i, len))) << w.str();
                }
            }
        }
        level = std::move(next);
    }
}
