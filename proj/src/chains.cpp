#include "smoothwords/chains.hpp"

#include <algorithm>
#include <unordered_set>

#include "smoothwords/errors.hpp"

namespace smoothwords {

std::string Chain::str() const {
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i > 0) out.push_back('<');
        out += members[i].str();
    }
    return out;
}

Chain parse_chain(std::string_view text) {
    Chain chain;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = std::min(text.find('<', pos), text.size());
        Word w = Word::parse(text.substr(pos, next - pos));
        if (w.empty()) throw DomainError("chain members must be nonempty: \"" + std::string(text) + "\"");
        chain.members.push_back(std::move(w));
        pos = next + 1;
    }
    for (const Word& w : chain.members) {
        if (!is_base_word(w)) throw DomainError("chain member " + w.str() + " is not over {1,2}");
    }
    auto h = height(chain.members.front());
    if (!h) throw DomainError("chain member " + chain.members.front().str() + " is not smooth");
    chain.height = *h;
    return chain;
}

std::size_t ChainFamily::total_members() const noexcept {
    std::size_t total = 0;
    for (const Chain& c : chains) total += c.size();
    return total;
}

std::uint64_t mrse_chain_count(std::size_t k) {
    if (k == 0) throw DomainError("chain height must be positive");
    if (k > 40) throw ResourceLimitError("2*3^(k-1) overflows 64 bits for k > 40");
    std::uint64_t value = 2;
    for (std::size_t i = 1; i < k; ++i) value *= 3;
    return value;
}

std::vector<Word> simple_right_extensions(const Word& u, std::size_t k) {
    if (!is_base_word(u) || height(u) != k) {
        throw DomainError("word " + display(u) + " does not have height " + std::to_string(k));
    }
    std::vector<Word> out;
    for (Letter a : {kOne, kTwo}) {
        Word v = u.extended(a);
        if (height(v) == k) out.push_back(std::move(v));
    }
    return out;
}

namespace {

// Follows the unique in-set successor from every member without an in-set
// parent. Throws when some member has two successors.
std::vector<Chain> link_chains(const std::vector<Word>& members, std::size_t chain_height) {
    const std::unordered_set<Word> set(members.begin(), members.end());
    std::vector<Chain> chains;
    for (const Word& w : members) {
        if (w.size() > 1 && set.contains(w.prefix(w.size() - 1))) continue;
        Chain chain{{w}, chain_height};
        for (;;) {
            const Word& tail = chain.members.back();
            Word one = tail.extended(kOne);
            Word two = tail.extended(kTwo);
            const bool has_one = set.contains(one);
            const bool has_two = set.contains(two);
            if (has_one && has_two) {
                throw InvariantError("word " + tail.str() + " has two simple right extensions of height " +
                                     std::to_string(chain_height));
            }
            if (has_one) {
                chain.members.push_back(std::move(one));
            } else if (has_two) {
                chain.members.push_back(std::move(two));
            } else {
                break;
            }
        }
        chains.push_back(std::move(chain));
    }
    std::sort(chains.begin(), chains.end());
    return chains;
}

}  // namespace

ChainFamily chains_from_class(const HeightClass& cls) { return {cls.k, link_chains(cls.members, cls.k)}; }

ChainFamily chains_of_height(std::size_t k, HeightClassStore& store) { return chains_from_class(store.get(k)); }

ChainFamily chains_of_height(std::size_t k, const Limits& limits) {
    HeightClassStore store(limits);
    return chains_of_height(k, store);
}

std::pair<ChainFamily, ChainFamily> split_by_first_letter(const ChainFamily& family) {
    ChainFamily ones{family.k, {}};
    ChainFamily twos{family.k, {}};
    for (const Chain& c : family.chains) (c.first_letter() == kOne ? ones : twos).chains.push_back(c);
    return {std::move(ones), std::move(twos)};
}

Chain chain_complement(const Chain& chain) {
    Chain out{{}, chain.height};
    out.members.reserve(chain.members.size());
    for (const Word& w : chain.members) out.members.push_back(complement(w));
    return out;
}

void validate_chain(const Chain& chain) {
    if (chain.members.empty()) throw DomainError("empty chain");
    const std::size_t h = chain.height;
    for (std::size_t i = 0; i < chain.members.size(); ++i) {
        const Word& w = chain.members[i];
        if (w.empty() || !is_base_word(w) || height(w) != h) {
            throw DomainError("chain member " + display(w) + " does not have height " + std::to_string(h));
        }
        if (i > 0) {
            const Word& prev = chain.members[i - 1];
            if (w.size() != prev.size() + 1 || w.prefix(prev.size()) != prev) {
                throw DomainError(w.str() + " is not a simple right extension of " + prev.str());
            }
        }
    }
    const Word& first = chain.first();
    if (first.size() > 1 && height(first.prefix(first.size() - 1)) == h) {
        throw DomainError("chain is not maximal on the left: " + chain.str());
    }
    for (Letter a : {kOne, kTwo}) {
        if (height(chain.last().extended(a)) == h) throw DomainError("chain is not maximal on the right: " + chain.str());
    }
}

std::vector<Chain> chain_primitives(const Chain& chain) {
    validate_chain(chain);
    std::vector<Word> pool;
    for (const Word& u : chain.members) {
        auto prims = primitives(u);
        pool.insert(pool.end(), prims.begin(), prims.end());
    }
    return link_chains(pool, chain.height + 1);
}

PartitionReport verify_partition(std::size_t k, HeightClassStore& store) {
    const HeightClass& cls = store.get(k);
    PartitionReport report;
    report.k = k;
    report.class_size = cls.size();
    report.expected_chain_count = mrse_chain_count(k);

    for (const Word& w : cls.members) {
        std::size_t degree = 0;
        for (Letter a : {kOne, kTwo}) degree += cls.contains(w.extended(a)) ? 1 : 0;
        report.max_out_degree = std::max(report.max_out_degree, degree);
    }
    report.out_degree_ok = report.max_out_degree <= 1;
    if (!report.out_degree_ok) return report;

    const ChainFamily family = chains_from_class(cls);
    report.chain_count = family.size();
    report.member_total = family.total_members();

    std::vector<Word> covered;
    covered.reserve(report.member_total);
    for (const Chain& c : family.chains) covered.insert(covered.end(), c.members.begin(), c.members.end());
    std::sort(covered.begin(), covered.end(), ShortlexLess{});
    report.disjoint_cover_ok = covered == cls.members;
    report.count_law_ok = report.chain_count == report.expected_chain_count;
    report.size_sum_ok = report.member_total == report.class_size;
    return report;
}

PartitionReport verify_partition(std::size_t k, const Limits& limits) {
    HeightClassStore store(limits);
    return verify_partition(k, store);
}

}  // namespace smoothwords
