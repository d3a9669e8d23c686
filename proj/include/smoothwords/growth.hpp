#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "smoothwords/enumeration.hpp"
#include "smoothwords/general.hpp"

namespace smoothwords {

/// log 3 / log(3/2), the conjectured growth exponent.
double reference_q();

struct ExponentReport {
    double parameter = 0;  // θ or ξ
    double lower_exponent = 0;
    double upper_exponent = 0;
    double reference_q = 0;
};

/// lower = log 3 / log(2 - θ), upper = log 3 / log(1 + θ), for 0 < θ <= 1/2.
ExponentReport theorem6_exponents(double theta);

/// lower = log(2b-1) / log(1 + (a+b-2)(1-ξ)), upper = log(2b-1) / log(1 + (a+b-2)ξ),
/// for 0 < ξ < 1.
ExponentReport theorem5_exponents(const Alphabet& p, double xi);

struct SingExponents {
    double delta = 0;      // log(a+b) / log((a+b)/2)
    double theta_rev = 0;  // log(2b-1) / log((a+b)/2)
};

SingExponents sing_exponents(const Alphabet& p);

/// Least-squares slope of log γ(n) against log n over n_min <= n <= n_max.
/// InsufficientDataError with fewer than 8 records in range or any γ = 0.
double fit_growth_exponent(std::span<const StatsRecord> records, std::size_t n_min, std::size_t n_max);

/// Least freq_min over records with n >= n0. InsufficientDataError if none.
Rational empirical_theta(std::span<const StatsRecord> records, std::size_t n0 = 32);

struct EnvelopeReport {
    bool upper_ok = true;                     // γ(n) <= n^7.2 for all n >= 2
    std::optional<std::size_t> upper_violation;
    double lower_constant = 0;                // largest c with c n^2.15 <= γ(n)
    bool lower_ok = false;                    // c > 0 and the bound holds everywhere
    std::size_t checked = 0;

    bool passed() const noexcept { return upper_ok && lower_ok; }
};

inline constexpr double kDekkingLowerExponent = 2.15;
inline constexpr double kDekkingUpperExponent = 7.2;

EnvelopeReport dekking_envelope_check(std::span<const StatsRecord> records);

}  // namespace smoothwords
