#include <set>

#include <gtest/gtest.h>

#include "smoothwords/chains.hpp"
#include "smoothwords/errors.hpp"

using namespace smoothwords;

namespace {

Word W(const char* s) { return Word::parse(s); }

std::vector<std::string> strs(const std::vector<Chain>& chains) {
    std::vector<std::string> out;
    for (const Chain& c : chains) out.push_back(c.str());
    return out;
}

std::set<std::string> str_set(const ChainFamily& f) {
    const auto v = strs(f.chains);
    return {v.begin(), v.end()};
}

}  // namespace

TEST(Chains, CountLaw) {
    EXPECT_EQ(mrse_chain_count(1), 2u);
    EXPECT_EQ(mrse_chain_count(8), 4374u);
    EXPECT_THROW(mrse_chain_count(0), DomainError);
}

TEST(Chains, SimpleRightExtensions) {
    EXPECT_EQ(simple_right_extensions(W("1"), 1), std::vector<Word>{W("12")});
    EXPECT_TRUE(simple_right_extensions(W("12"), 1).empty());
    EXPECT_EQ(simple_right_extensions(W("1211"), 2), std::vector<Word>{W("12112")});
}

TEST(Chains, FirstTwoFamilies) {
    EXPECT_EQ(strs(chains_of_height(1).chains), (std::vector<std::string>{"1<12", "2<21"}));
    EXPECT_EQ(strs(chains_of_height(2).chains),
              (std::vector<std::string>{"11<112<1121", "121<1211<12112", "122<1221<12212", "211<2112<21121",
                                        "212<2122<21221", "22<221<2212"}));
}

TEST(Chains, SplitByFirstLetter) {
    const auto [ones, twos] = split_by_first_letter(chains_of_height(2));
    EXPECT_EQ(str_set(ones),
              (std::set<std::string>{"121<1211<12112", "11<112<1121", "122<1221<12212"}));
    EXPECT_EQ(str_set(twos),
              (std::set<std::string>{"212<2122<21221", "22<221<2212", "211<2112<21121"}));
    for (std::size_t k = 1; k <= 6; ++k) {
        const auto [a, b] = split_by_first_letter(chains_of_height(k));
        EXPECT_EQ(a.size(), b.size());
    }
}

TEST(Chains, Complement) {
    EXPECT_EQ(chain_complement(parse_chain("121<1211<12112")).str(), "212<2122<21221");
    EXPECT_EQ(chain_complement(parse_chain("1<12")).str(), "2<21");
}

TEST(Chains, ParseRejectsMalformed) {
    EXPECT_THROW(parse_chain(""), DomainError);
    EXPECT_THROW(parse_chain("1<<12"), DomainError);
    EXPECT_THROW(parse_chain("1<13"), DomainError);
}

TEST(Chains, ValidateRejectsNonMaximal) {
    EXPECT_NO_THROW(validate_chain(parse_chain("1<12")));
    EXPECT_THROW(validate_chain(parse_chain("1")), DomainError);
    EXPECT_THROW(validate_chain(parse_chain("121<1211")), DomainError);
    EXPECT_THROW(validate_chain(parse_chain("1<11")), DomainError);
}

TEST(Chains, Primitives) {
    EXPECT_EQ(strs(chain_primitives(parse_chain("1<12"))),
              (std::vector<std::string>{"121<1211<12112", "212<2122<21221"}));
    const auto four = chain_primitives(parse_chain("212<2122<21221"));
    ASSERT_EQ(four.size(), 4u);
    const auto four_strs = strs(four);
    std::set<std::string> got(four_strs.begin(), four_strs.end());
    EXPECT_TRUE(got.count("22122<221221<2212211<22122112<221221121"));
    for (const Chain& c : four) EXPECT_EQ(c.height, 3u);
}

TEST(Chains, PrimitiveMultiplicityAndReconstruction) {
    for (std::size_t k = 1; k <= 5; ++k) {
        std::vector<Chain> flattened;
        for (const Chain& c : chains_of_height(k).chains) {
            const auto prims = chain_primitives(c);
            EXPECT_EQ(prims.size(), c.first_letter() == kOne ? 2u : 4u) << c.str();
            flattened.insert(flattened.end(), prims.begin(), prims.end());
        }
        std::sort(flattened.begin(), flattened.end());
        EXPECT_EQ(flattened, chains_of_height(k + 1).chains) << k;
    }
}

TEST(Chains, PartitionUpToSeven) {
    HeightClassStore store;
    for (std::size_t k = 1; k <= 7; ++k) {
        const PartitionReport r = verify_partition(k, store);
        EXPECT_TRUE(r.passed()) << k;
        EXPECT_EQ(r.chain_count, mrse_chain_count(k));
        EXPECT_EQ(r.member_total, r.class_size);
        EXPECT_LE(r.max_out_degree, 1u);
    }
}

TEST(Chains, FamilyIsSortedAndValid) {
    const ChainFamily f = chains_of_height(4);
    EXPECT_TRUE(std::is_sorted(f.chains.begin(), f.chains.end()));
    for (const Chain& c : f.chains) EXPECT_NO_THROW(validate_chain(c));
}
