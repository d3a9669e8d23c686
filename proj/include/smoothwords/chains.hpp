#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "smoothwords/limits.hpp"
#include "smoothwords/primitives.hpp"
#include "smoothwords/word.hpp"

namespace smoothwords {

/**
 * Maximal right smooth extension chain u_1 < u_2 < ... < u_m: each member is
 * the previous one plus a single letter, all share one height, and no word
 * of that height extends the chain on either side.
 */
struct Chain {
    std::vector<Word> members;
    std::size_t height = 0;

    Letter first_letter() const { return members.front().front(); }
    const Word& first() const { return members.front(); }
    const Word& last() const { return members.back(); }
    std::size_t size() const noexcept { return members.size(); }

    /// Members joined by '<', e.g. "121<1211<12112".
    std::string str() const;

    friend bool operator==(const Chain& lhs, const Chain& rhs) { return lhs.members == rhs.members; }
    friend auto operator<=>(const Chain& lhs, const Chain& rhs) { return lhs.members <=> rhs.members; }
};

/// Parses "1<12"; height is recomputed. Throws DomainError on bad input.
Chain parse_chain(std::string_view text);

/// H^k, chains kept in lexicographic order of their first member.
struct ChainFamily {
    std::size_t k = 0;
    std::vector<Chain> chains;

    std::size_t size() const noexcept { return chains.size(); }
    std::size_t total_members() const noexcept;
};

/// |H^k| = 2 * 3^(k-1). Throws ResourceLimitError when the value overflows.
std::uint64_t mrse_chain_count(std::size_t k);

/// { u·α : α in {1,2}, ht(u·α) = k }. DomainError unless ht(u) = k.
std::vector<Word> simple_right_extensions(const Word& u, std::size_t k);

/// Builds H^k by linking every member of P^k(ε) to its one-letter-shorter
/// parent. Throws InvariantError if some member has two extensions in P^k(ε).
ChainFamily chains_of_height(std::size_t k, HeightClassStore& store);
ChainFamily chains_of_height(std::size_t k, const Limits& limits = kDefaultLimits);

/// Chains from an explicit class (used by the builders above).
ChainFamily chains_from_class(const HeightClass& cls);

/// (H^k_1, H^k_2) by first letter.
std::pair<ChainFamily, ChainFamily> split_by_first_letter(const ChainFamily& family);

Chain chain_complement(const Chain& chain);

/// Throws DomainError unless `chain` is a well-formed MRSE chain: consecutive
/// simple extensions, one common height, no parent and no extension of that
/// height.
void validate_chain(const Chain& chain);

/// The chains of H^{k+1} made of all primitives of the members of `chain`.
/// Two chains when the first letter is 1, four when it is 2.
std::vector<Chain> chain_primitives(const Chain& chain);

struct PartitionReport {
    std::size_t k = 0;
    std::size_t class_size = 0;           // |P^k(ε)|
    std::size_t chain_count = 0;          // |H^k|
    std::uint64_t expected_chain_count = 0;
    std::size_t member_total = 0;         // sum of chain lengths
    std::size_t max_out_degree = 0;
    bool out_degree_ok = false;
    bool disjoint_cover_ok = false;
    bool count_law_ok = false;
    bool size_sum_ok = false;

    bool passed() const noexcept { return out_degree_ok && disjoint_cover_ok && count_law_ok && size_sum_ok; }
};

/// Recomputes every partition check from scratch. Never throws on a failed
/// check; the report carries the verdicts.
PartitionReport verify_partition(std::size_t k, HeightClassStore& store);
PartitionReport verify_partition(std::size_t k, const Limits& limits = kDefaultLimits);

}  // namespace smoothwords
