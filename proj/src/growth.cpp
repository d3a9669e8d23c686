#include "smoothwords/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "smoothwords/errors.hpp"

namespace smoothwords {

double reference_q() { return std::log(3.0) / std::log(1.5); }

ExponentReport theorem6_exponents(double theta) {
    if (!(theta > 0.0 && theta <= 0.5)) throw DomainError("theta must lie in (0, 1/2]");
    ExponentReport r;
    r.parameter = theta;
    r.lower_exponent = std::log(3.0) / std::log(2.0 - theta);
    r.upper_exponent = std::log(3.0) / std::log(1.0 + theta);
    r.reference_q = reference_q();
    return r;
}

ExponentReport theorem5_exponents(const Alphabet& p, double xi) {
    if (!(xi > 0.0 && xi < 1.0)) throw DomainError("xi must lie in (0, 1)");
    const double spread = static_cast<double>(p.a() + p.b()) - 2.0;
    const double numerator = std::log(2.0 * p.b() - 1.0);
    ExponentReport r;
    r.parameter = xi;
    r.lower_exponent = numerator / std::log(1.0 + spread * (1.0 - xi));
    r.upper_exponent = numerator / std::log(1.0 + spread * xi);
    r.reference_q = reference_q();
    return r;
}

SingExponents sing_exponents(const Alphabet& p) {
    const double sum = static_cast<double>(p.a() + p.b());
    if (sum / 2.0 <= 1.0) throw DomainError("(a+b)/2 must exceed 1");
    const double denom = std::log(sum / 2.0);
    return {std::log(sum) / denom, std::log(2.0 * p.b() - 1.0) / denom};
}

double fit_growth_exponent(std::span<const StatsRecord> records, std::size_t n_min, std::size_t n_max) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (const StatsRecord& r : records) {
        if (r.n < n_min || r.n > n_max) continue;
        if (r.gamma == 0 || r.n == 0) throw InsufficientDataError("gamma must be positive at n = " + std::to_string(r.n));
        const double x = std::log(static_cast<double>(r.n));
        const double y = std::log(static_cast<double>(r.gamma));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 8) throw InsufficientDataError("need at least 8 records in range, got " + std::to_string(m));
    const double mean_x = sx / static_cast<double>(m);
    const double var = sxx - sx * mean_x;
    if (var <= 0) throw InsufficientDataError("records span a single length");
    return (sxy - mean_x * sy) / var;
}

Rational empirical_theta(std::span<const StatsRecord> records, std::size_t n0) {
    std::optional<Rational> best;
    for (const StatsRecord& r : records) {
        if (r.n < n0) continue;
        if (!best || r.freq_min < *best) best = r.freq_min;
    }
    if (!best) throw InsufficientDataError("no record with n >= " + std::to_string(n0));
    return *best;
}

EnvelopeReport dekking_envelope_check(std::span<const StatsRecord> records) {
    EnvelopeReport report;
    double c = std::numeric_limits<double>::infinity();
    for (const StatsRecord& r : records) {
        if (r.n < 2) continue;
        ++report.checked;
        const double n = static_cast<double>(r.n);
        const double g = static_cast<double>(r.gamma);
        if (g > std::pow(n, kDekkingUpperExponent) && report.upper_ok) {
            report.upper_ok = false;
            report.upper_violation = r.n;
        }
        c = std::min(c, g / std::pow(n, kDekkingLowerExponent));
    }
    if (report.checked == 0) return report;
    // Rounded down so that c * n^2.15 <= γ(n) survives floating-point
    // evaluation at the minimizing n.
    report.lower_constant = c * (1.0 - 1e-12);
    c = report.lower_constant;
    report.lower_ok = c > 0;
    for (const StatsRecord& r : records) {
        if (r.n >= 2 && c * std::pow(static_cast<double>(r.n), kDekkingLowerExponent) > static_cast<double>(r.gamma)) {
            report.lower_ok = false;
        }
    }
    return report;
}

}  // namespace smoothwords
