#pragma once

#include <cstddef>

namespace smoothwords {

/// Resource ceilings. Requests above these throw ResourceLimitError.
struct Limits {
    std::size_t max_height = 12;          // height classes and chain families
    std::size_t max_length = 256;         // length enumeration
    std::size_t max_oracle_length = 24;   // exhaustive 2^n filters
    std::size_t max_shallit_index = 40;   // |K_i| grows like (3/2)^i
    std::size_t max_kolakoski_length = 100'000'000;
};

inline constexpr Limits kDefaultLimits{};

}  // namespace smoothwords
