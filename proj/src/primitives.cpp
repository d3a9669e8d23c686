#include "smoothwords/primitives.hpp"

#include <algorithm>
#include <string>

#include "smoothwords/errors.hpp"

namespace smoothwords {

Word expand(const Word& w, Letter start) {
    Word out;
    Letter letter = start;
    for (Letter len : w) {
        out.append_run(letter, len);
        letter = complement(letter);
    }
    return out;
}

namespace {

std::vector<Word> primitives_unchecked(const Word& w) {
    std::vector<Word> out;
    if (w.empty()) {
        out = {Word::parse("1"), Word::parse("2"), Word::parse("12"), Word::parse("21")};
        return out;
    }
    for (Letter start : {kOne, kTwo}) {
        const Word core = expand(w, start);
        const Letter before = complement(core.front());
        const Letter after = complement(core.back());
        for (bool prefix : {false, true}) {
            for (bool suffix : {false, true}) {
                Word v;
                v.reserve(core.size() + 2);
                if (prefix) v.push_back(before);
                v.append(core);
                if (suffix) v.push_back(after);
                if (derivative(v) == w) out.push_back(std::move(v));
            }
        }
    }
    std::sort(out.begin(), out.end(), ShortlexLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<Word> primitives(const Word& w) {
    if (!is_smooth(w)) throw DomainError("primitives need a smooth word, got " + display(w));
    return primitives_unchecked(w);
}

bool HeightClass::contains(const Word& w) const {
    return std::binary_search(members.begin(), members.end(), w, ShortlexLess{});
}

HeightClass next_height_class(const HeightClass& previous) {
    HeightClass next{previous.k + 1, {}};
    for (const Word& w : previous.members) {
        auto prims = primitives_unchecked(w);
        next.members.insert(next.members.end(), std::make_move_iterator(prims.begin()),
                            std::make_move_iterator(prims.end()));
    }
    // Distinct words have disjoint primitive sets, so there is nothing to dedup.
    std::sort(next.members.begin(), next.members.end(), ShortlexLess{});
    return next;
}

namespace {

void check_height_request(std::size_t k, const Limits& limits) {
    if (k == 0) throw DomainError("height class index must be positive");
    if (k > limits.max_height) {
        throw ResourceLimitError("height " + std::to_string(k) + " exceeds the ceiling " +
                                 std::to_string(limits.max_height));
    }
}

}  // namespace

HeightClass height_class(std::size_t k, const Limits& limits) {
    check_height_request(k, limits);
    HeightClass cls{1, primitives(Word{})};
    std::sort(cls.members.begin(), cls.members.end(), ShortlexLess{});
    while (cls.k < k) cls = next_height_class(cls);
    return cls;
}

const HeightClass& HeightClassStore::get(std::size_t k) {
    check_height_request(k, limits_);
    std::lock_guard lock(mutex_);
    if (classes_.empty()) classes_.push_back(std::make_unique<const HeightClass>(height_class(1, limits_)));
    while (classes_.size() < k) {
        classes_.push_back(std::make_unique<const HeightClass>(next_height_class(*classes_.back())));
    }
    return *classes_[k - 1];
}

}  // namespace smoothwords
