#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "smoothwords/limits.hpp"
#include "smoothwords/word.hpp"

namespace smoothwords {

/// Δ⁻¹: the word whose j-th run has length w[j], runs alternating and the
/// first run using `start`. expand(ε, ·) = ε.
Word expand(const Word& w, Letter start);

/**
 * All nonempty words v with D(v) = w, sorted shortlex.
 *
 * Candidates are x·Δ⁻¹(w)·y where x (resp. y) is empty or one letter
 * complementing the core's first (resp. last) letter, for both core start
 * letters. Only candidates whose derivative is w are kept: a core run of
 * length one at the boundary would otherwise be discarded by D.
 *
 * primitives(ε) = {1, 2, 12, 21}; ε itself is excluded.
 */
std::vector<Word> primitives(const Word& w);

/// P^k(ε): every smooth word of height exactly k.
struct HeightClass {
    std::size_t k = 0;
    std::vector<Word> members;  // shortlex order

    bool contains(const Word& w) const;
    std::size_t size() const noexcept { return members.size(); }
};

/// P^1(ε) = primitives(ε); P^k(ε) = union of primitives over P^{k-1}(ε).
/// Throws DomainError for k = 0 and ResourceLimitError above limits.max_height.
HeightClass height_class(std::size_t k, const Limits& limits = kDefaultLimits);

/**
 * Memo of height classes. Lower classes are reused when a higher class is
 * requested. get() is safe to call from several threads; returned references
 * stay valid for the lifetime of the store.
 */
class HeightClassStore {
public:
    explicit HeightClassStore(Limits limits = kDefaultLimits) : limits_(limits) {}

    const HeightClass& get(std::size_t k);
    const Limits& limits() const noexcept { return limits_; }

private:
    Limits limits_;
    std::mutex mutex_;
    std::vector<std::unique_ptr<const HeightClass>> classes_;  // classes_[k - 1]
};

/// Next class from the previous one.
HeightClass next_height_class(const HeightClass& previous);

}  // namespace smoothwords
