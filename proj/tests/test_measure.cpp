#include "oracles.hpp"
#include "spectral/measure.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace spectral;

namespace {

const ProblemInstance& inst12() {
    static const auto inst = build_instance(2, 3, 2, {1});
    return inst;
}

std::vector<ProblemInstance> small_family() {
    std::vector<ProblemInstance> out;
    for (long long N : {2, 3}) {
        for (long long R : {3, 5, 7, 15}) {
            if (gcd(BigInt(N), BigInt(R)) != 1) continue;
            for (long long q = 1; q <= 4; ++q) {
                out.push_back(build_instance(N, R, q, {}));
                for (long long a = 1; a < q; ++a) {
                    out.push_back(build_instance(N, R, q, {a}));
                    for (long long b = a + 1; b < q; ++b) out.push_back(build_instance(N, R, q, {a, b}));
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST(Mask, KnownValues) {
    EXPECT_NEAR(std::abs(mask_value(inst12(), 0.0) - 1.0), 0.0, 1e-15);
    // D = {0,1,2,3}: the four fourth roots of unity cancel.
    EXPECT_NEAR(std::abs(mask_value(inst12(), 0.25)), 0.0, 1e-15);
    // x = 1/3: (1 + w + w^2 + 1)/4 with w = e^{2 pi i/3}.
    const std::complex<double> w = std::polar(1.0, 2.0 * M_PI / 3.0);
    EXPECT_NEAR(std::abs(mask_value(inst12(), 1.0 / 3.0) - (2.0 + w + w * w) / 4.0), 0.0, 1e-14);
}

TEST(Mask, ProductFormMatchesDirectSum) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (const auto& inst : small_family()) {
        for (int i = 0; i < 100; ++i) {
            const double x = dist(rng);
            EXPECT_NEAR(std::abs(mask_value(inst, x) - oracle::mask_direct(inst, x)), 0.0, 1e-12);
        }
    }
}

TEST(Fourier, ValueAtZeroIsOne) {
    EXPECT_NEAR(std::abs(fourier_value(inst12(), 0.0) - 1.0), 0.0, 1e-15);
}

TEST(Fourier, VanishesOnZeroSet) {
    EXPECT_LE(std::abs(fourier_value(inst12(), 3.0)), 1e-12);
    EXPECT_LE(std::abs(fourier_value(inst12(), BigInt(-99), 0.0, 1e-12)), 1e-12);
}

TEST(Fourier, MatchesHighPrecisionProduct) {
    const double ours = std::abs(fourier_value(inst12(), 1.0));
    const double ref = oracle::fourier_abs_high(inst12(), 0, 1.0, 200).convert_to<double>();
    EXPECT_NEAR(ours, ref, 1e-10);
}

TEST(Fourier, LargeShiftKeepsPhaseAccuracy) {
    const BigInt shift = BigInt("123456789012345678901");
    const double ours = std::abs(fourier_value(inst12(), shift, 0.3, 1e-12));
    const double ref = static_cast<double>(oracle::fourier_abs_long(inst12(), shift, 0.3));
    EXPECT_NEAR(ours, ref, 1e-10);
}

TEST(Fourier, BoundedByOneAndMatchesLongDoubleOracle) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    for (const auto& inst : small_family()) {
        if (inst.M() > 200) continue;
        for (int i = 0; i < 10; ++i) {
            const double xi = dist(rng);
            const double ours = std::abs(fourier_value(inst, xi));
            EXPECT_LE(ours, 1.0 + 1e-12);
            EXPECT_NEAR(ours, static_cast<double>(oracle::fourier_abs_long(inst, 0, xi)), 1e-10);
        }
    }
}

TEST(Fourier, TruncationGrowsWithMagnitude) {
    const unsigned small = fourier_truncation(inst12(), 1.0, 1e-12);
    const unsigned large = fourier_truncation(inst12(), 1e9, 1e-12);
    EXPECT_GE(small, 1u);
    EXPECT_GT(large, small);
}

TEST(ZeroSet, Examples) {
    EXPECT_TRUE(zero_set_contains(inst12(), BigInt(3)));
    EXPECT_FALSE(zero_set_contains(inst12(), BigInt(12)));
    EXPECT_FALSE(zero_set_contains(inst12(), Rational(1, 2)));
    EXPECT_FALSE(zero_set_contains(inst12(), BigInt(0)));
    const auto inst48 = build_instance(2, 3, 4, {3});
    EXPECT_TRUE(zero_set_contains(inst48, BigInt(120)));
    EXPECT_EQ(zero_set_level(inst12(), BigInt(36)), 1u);
    EXPECT_EQ(zero_set_level(inst12(), BigInt(6)), 0u);
    EXPECT_EQ(zero_set_level(inst12(), BigInt(-9)), 0u);
}

TEST(ZeroSet, MaxLevelRestricts) {
    EXPECT_FALSE(zero_set_level(inst12(), BigInt(36), 0u).has_value());
    EXPECT_EQ(zero_set_level(inst12(), BigInt(36), 1u), 1u);
}

TEST(ZeroSet, AgreesWithEnumerationOnRandomRationals) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> num(-200000, 200000);
    std::uniform_int_distribution<long long> den(1, 4);
    for (const auto& inst : small_family()) {
        const ZeroSetTester tester(inst);
        for (int i = 0; i < 300; ++i) {
            // Bias towards multiples of c so that positives actually occur.
            const long long n = (i % 2 == 0) ? num(rng) * inst.c().convert_to<long long>() / 7 : num(rng);
            const Rational xi(BigInt(n), BigInt(den(rng)));
            const bool expected = oracle::zero_set_by_enumeration(inst, xi);
            EXPECT_EQ(zero_set_contains(inst, xi), expected) << to_decimal(xi);
            if (is_integer(xi)) {
                EXPECT_EQ(tester.contains(numerator_of(xi)), expected);
                EXPECT_EQ(tester.contains(numerator_of(xi).convert_to<std::int64_t>()), expected);
            }
        }
    }
}

TEST(ZeroSet, NumericallyZeroWhereExactlyZero) {
    for (long long xi = -200; xi <= 200; ++xi) {
        if (!zero_set_contains(inst12(), BigInt(xi))) continue;
        EXPECT_LE(std::abs(fourier_value(inst12(), BigInt(xi), 0.0, 1e-12)), 1e-12) << xi;
    }
}

TEST(Hadamard, Examples) {
    const auto& inst = inst12();
    EXPECT_TRUE(hadamard_check_numeric(inst.M(), inst.D(), inst.L()));
    EXPECT_TRUE(hadamard_check_exact(inst, 1));
    EXPECT_TRUE(hadamard_check_exact(inst, 11));
    EXPECT_FALSE(hadamard_check_exact(inst, 2));
    std::vector<BigInt> doubled;
    for (const BigInt& l : inst.L()) doubled.push_back(2 * l);
    EXPECT_FALSE(hadamard_check_numeric(inst.M(), inst.D(), doubled));
}

TEST(Hadamard, Errors) {
    const auto& inst = inst12();
    const std::vector<BigInt> three{0, 3, 6};
    EXPECT_THROW(hadamard_check_numeric(inst.M(), inst.D(), three), SizeMismatch);
    EXPECT_THROW(hadamard_check_exact(inst, 0), ZeroScaling);
}

TEST(HadamardProperties, ExactNumericAndGcdAgree) {
    for (const auto& inst : small_family()) {
        for (long long t = -50; t <= 50; ++t) {
            if (t == 0) continue;
            std::vector<BigInt> tL;
            for (const BigInt& l : inst.L()) tL.push_back(t * l);
            const bool exact = hadamard_check_exact(inst, t);
            EXPECT_EQ(exact, hadamard_check_numeric(inst.M(), inst.D(), tL));
            EXPECT_EQ(exact, gcd(BigInt(std::abs(t)), inst.N()) == 1);
        }
    }
}
