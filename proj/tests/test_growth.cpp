#include <cmath>

#include <gtest/gtest.h>

#include "smoothwords/errors.hpp"
#include "smoothwords/growth.hpp"

using namespace smoothwords;

namespace {

std::vector<StatsRecord> synthetic(std::size_t n_max, double exponent) {
    std::vector<StatsRecord> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        StatsRecord r;
        r.n = n;
        r.gamma = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), exponent)));
        r.freq_min = Rational::make(1, 3);
        r.freq_max = Rational::make(2, 3);
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST(Growth, ReferenceQ) { EXPECT_NEAR(reference_q(), std::log(3.0) / std::log(1.5), 1e-15); }

TEST(Growth, Theorem6) {
    const ExponentReport half = theorem6_exponents(0.5);
    EXPECT_NEAR(half.lower_exponent, reference_q(), 1e-12);
    EXPECT_NEAR(half.upper_exponent, reference_q(), 1e-12);
    const ExponentReport chv = theorem6_exponents(0.499162);
    EXPECT_LT(chv.lower_exponent, reference_q());
    EXPECT_GT(chv.upper_exponent, reference_q());
    EXPECT_NEAR(theorem6_exponents(1e-9).lower_exponent, std::log(3.0) / std::log(2.0), 1e-6);
    double prev_lo = 0, prev_hi = 1e9;
    for (double t = 0.05; t <= 0.5 + 1e-12; t += 0.05) {
        const ExponentReport r = theorem6_exponents(std::min(t, 0.5));
        EXPECT_GE(r.lower_exponent, prev_lo);
        EXPECT_LE(r.upper_exponent, prev_hi);
        prev_lo = r.lower_exponent;
        prev_hi = r.upper_exponent;
    }
    EXPECT_THROW(theorem6_exponents(0.0), DomainError);
    EXPECT_THROW(theorem6_exponents(0.6), DomainError);
}

TEST(Growth, Theorem5) {
    const ExponentReport base = theorem5_exponents(Alphabet::base(), 0.5);
    EXPECT_NEAR(base.lower_exponent, reference_q(), 1e-12);
    EXPECT_NEAR(base.upper_exponent, reference_q(), 1e-12);
    for (double xi : {0.2, 0.4, 0.5}) {
        const ExponentReport t5 = theorem5_exponents(Alphabet::base(), xi);
        const ExponentReport t6 = theorem6_exponents(std::min(xi, 1 - xi));
        EXPECT_NEAR(t5.lower_exponent, t6.lower_exponent, 1e-12) << xi;
        EXPECT_NEAR(t5.upper_exponent, t6.upper_exponent, 1e-12) << xi;
    }
    const ExponentReport r13 = theorem5_exponents(Alphabet::make(1, 3), 0.5);
    EXPECT_NEAR(r13.lower_exponent, std::log(5.0) / std::log(2.0), 1e-12);
    EXPECT_NEAR(r13.upper_exponent, std::log(5.0) / std::log(2.0), 1e-12);
    EXPECT_NEAR(theorem5_exponents(Alphabet::make(1, 3), 1 - 1e-12).upper_exponent,
                std::log(5.0) / std::log(3.0), 1e-9);
    EXPECT_THROW(theorem5_exponents(Alphabet::base(), 1.0), DomainError);
}

TEST(Growth, SingExponents) {
    const SingExponents s12 = sing_exponents(Alphabet::base());
    EXPECT_NEAR(s12.delta, reference_q(), 1e-12);
    EXPECT_NEAR(s12.theta_rev, reference_q(), 1e-12);
    const SingExponents s14 = sing_exponents(Alphabet::make(1, 4));
    EXPECT_NEAR(s14.delta, std::log(5.0) / std::log(2.5), 1e-12);
    EXPECT_NEAR(s14.theta_rev, std::log(7.0) / std::log(2.5), 1e-12);
    for (unsigned b = 2; b <= 8; ++b) {
        for (unsigned a = 1; a < b; ++a) {
            const SingExponents s = sing_exponents(Alphabet::make(a, b));
            EXPECT_EQ(s.delta == s.theta_rev, a + 1 == b) << a << "," << b;
        }
    }
}

TEST(Growth, FitSynthetic) {
    EXPECT_NEAR(fit_growth_exponent(synthetic(256, 3.0), 16, 256), 3.0, 1e-9);
    EXPECT_NEAR(fit_growth_exponent(synthetic(64, 0.0), 1, 64), 0.0, 1e-12);
    EXPECT_THROW(fit_growth_exponent(synthetic(64, 3.0), 60, 64), InsufficientDataError);
    EXPECT_THROW(fit_growth_exponent(synthetic(64, 3.0), 100, 200), InsufficientDataError);
}

TEST(Growth, EmpiricalTheta) {
    auto records = synthetic(40, 2.0);
    records[35].freq_min = Rational::make(1, 4);
    records[10].freq_min = Rational::make(1, 10);
    EXPECT_EQ(empirical_theta(records, 32), Rational::make(1, 4));
    EXPECT_THROW(empirical_theta(records, 41), InsufficientDataError);
}

TEST(Growth, RealDataWithinBracket) {
    const auto records = compute_stats(256);
    const double slope = fit_growth_exponent(records, 32, 256);
    const ExponentReport bracket = theorem6_exponents(empirical_theta(records, 32).value());
    EXPECT_GE(slope, 2.2);
    EXPECT_LE(slope, 3.2);
    EXPECT_GE(slope, bracket.lower_exponent);
    EXPECT_LE(slope, bracket.upper_exponent);
}

TEST(Growth, DekkingEnvelope) {
    const auto records = compute_stats(256);
    const EnvelopeReport r = dekking_envelope_check(records);
    EXPECT_TRUE(r.passed());
    EXPECT_GT(r.lower_constant, 0.0);
    EXPECT_EQ(r.checked, 255u);
    auto bad = synthetic(20, 8.0);
    EXPECT_FALSE(dekking_envelope_check(bad).upper_ok);
}
