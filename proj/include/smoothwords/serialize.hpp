#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "smoothwords/chains.hpp"
#include "smoothwords/enumeration.hpp"
#include "smoothwords/primitives.hpp"

namespace smoothwords {

/// Reals in text output: 12 significant digits.
std::string format_real(double value);

/// CSV table with header n,gamma,gamma_prime,h1,h2,freq_min,freq_max.
/// Fractions are written "num/den"; an unknown gamma_prime is an empty cell.
std::string stats_to_csv(const std::vector<StatsRecord>& records);
std::vector<StatsRecord> stats_from_csv(std::string_view text);

/// One JSON object per line, same field names as the CSV header.
std::string stats_to_jsonl(const std::vector<StatsRecord>& records);
std::vector<StatsRecord> stats_from_jsonl(std::string_view text);

/// One chain per line, members joined by '<'.
std::string chains_to_text(const ChainFamily& family);
ChainFamily chains_from_text(std::size_t k, std::string_view text);

/// One word per line.
std::string class_to_text(const HeightClass& cls);
HeightClass class_from_text(std::size_t k, std::string_view text);

}  // namespace smoothwords
