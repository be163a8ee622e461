#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "circlefft/complex_value.hpp"
#include "circlefft/errors.hpp"
#include "circlefft/random_signal.hpp"
#include "circlefft/twiddle.hpp"

using namespace circlefft;

namespace {

// Independent arithmetic oracle: the standard library's complex type.
std::complex<double> to_std(ComplexValue v) { return {v.re, v.im}; }

double dist(ComplexValue a, std::complex<double> b) {
    return std::abs(to_std(a) - b);
}

}  // namespace

TEST_CASE("complex arithmetic matches std::complex on random values") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist_val(-10.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexValue a{dist_val(rng), dist_val(rng)};
        const ComplexValue b{dist_val(rng), dist_val(rng)};
        CHECK(dist(a + b, to_std(a) + to_std(b)) == 0.0);
        CHECK(dist(a - b, to_std(a) - to_std(b)) == 0.0);
        CHECK(dist(a * b, to_std(a) * to_std(b)) <= 1e-14);
        CHECK(dist(conj(a), std::conj(to_std(a))) == 0.0);
        CHECK(norm_sq(a) == doctest::Approx(std::norm(to_std(a))).epsilon(1e-14));
        CHECK(abs(a) == doctest::Approx(std::abs(to_std(a))).epsilon(1e-14));
    }
}

TEST_CASE("hand-checked sums and products") {
    const ComplexValue i{0.0, 1.0};
    CHECK(ComplexValue{1.0, 0.0} + i == ComplexValue{1.0, 1.0});
    CHECK(ComplexValue{2.0, 3.0} + ComplexValue{-2.0, -3.0} == ComplexValue{0.0, 0.0});
    CHECK(ComplexValue{4.5, -7.0} + ComplexValue{0.0, 0.0} == ComplexValue{4.5, -7.0});
    CHECK(i * i == ComplexValue{-1.0, 0.0});
    CHECK(ComplexValue{4.5, -7.0} * ComplexValue{1.0, 0.0} == ComplexValue{4.5, -7.0});
    CHECK(ComplexValue{1.0, 1.0} * ComplexValue{1.0, -1.0} == ComplexValue{2.0, 0.0});
    CHECK(ComplexValue{3.0, 4.0} * ComplexValue{3.0, -4.0} == ComplexValue{25.0, 0.0});
    CHECK(scale(2.0, ComplexValue{1.5, -0.5}) == ComplexValue{3.0, -1.0});
}

TEST_CASE("unit_phasor sits on the unit circle") {
    CHECK(unit_phasor(0.0) == ComplexValue{1.0, 0.0});
    const ComplexValue quarter = unit_phasor(-std::numbers::pi / 2.0);
    CHECK(std::abs(quarter.re) <= 1e-15);
    CHECK(quarter.im == doctest::Approx(-1.0));
    for (int j = 0; j < 50; ++j) {
        const double angle = 0.13 * j - 3.0;
        CHECK(norm_sq(unit_phasor(angle)) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("is_finite flags each non-finite component") {
    CHECK(is_finite(ComplexValue{1.0, -2.0}));
    CHECK_FALSE(is_finite(ComplexValue{std::nan(""), 0.0}));
    CHECK_FALSE(is_finite(ComplexValue{0.0, INFINITY}));
}

TEST_CASE("twiddle_table holds e^{-2*pi*i*j/N}") {
    const TwiddleTable table = twiddle_table(4);
    REQUIRE(table.order == 4);
    REQUIRE(table.factors.size() == 4);
    CHECK(table.factors[0] == ComplexValue{1.0, 0.0});
    CHECK(dist(table.factors[1], {0.0, -1.0}) <= 1e-15);
    CHECK(dist(table.factors[2], {-1.0, 0.0}) <= 1e-15);
    CHECK(dist(table.factors[3], {0.0, 1.0}) <= 1e-15);

    // The 45-degree eighth root has both components at sqrt(2)/2.
    const TwiddleTable eighth = twiddle_table(8);
    CHECK(eighth.factors[1].re == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
    CHECK(eighth.factors[1].im == doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-15));

    // Independent oracle: std::polar with the same angle definition.
    const TwiddleTable big = twiddle_table(48);
    for (std::size_t j = 0; j < 48; ++j) {
        const auto expected = std::polar(1.0, -2.0 * std::numbers::pi * double(j) / 48.0);
        CHECK(dist(big.factors[j], expected) <= 1e-15);
    }
}

TEST_CASE("roots of unity sum to zero for N >= 2") {
    for (std::size_t n : {2, 3, 8, 16, 100, 1024}) {
        const TwiddleTable table = twiddle_table(n);
        ComplexValue sum;
        for (const ComplexValue& factor : table.factors) {
            sum = sum + factor;
        }
        CHECK(abs(sum) <= 1e-10 * double(n));
    }
}

TEST_CASE("twiddle factors obey the root-of-unity structure") {
    const TwiddleTable table = twiddle_table(16);
    for (std::size_t j = 0; j < 16; ++j) {
        CHECK(norm_sq(table.factors[j]) == doctest::Approx(1.0).epsilon(1e-14));
        // w_j * w_{N-j} = w_0 = 1 (conjugate pairs).
        const ComplexValue product = table.factors[j] * table.factors[(16 - j) % 16];
        CHECK(abs(product - ComplexValue{1.0, 0.0}) <= 1e-14);
        // Half-turn flips the sign: w_{j+N/2} = -w_j.
        const ComplexValue opposite = table.factors[(j + 8) % 16];
        CHECK(abs(opposite + table.factors[j]) <= 1e-14);
    }
}

TEST_CASE("twiddle_table(1) is the trivial table and order 0 is rejected") {
    const TwiddleTable table = twiddle_table(1);
    REQUIRE(table.factors.size() == 1);
    CHECK(table.factors[0] == ComplexValue{1.0, 0.0});
    CHECK_THROWS_AS(static_cast<void>(twiddle_table(0)), UnsupportedSizeError);
}

TEST_CASE("random_signal is deterministic per seed and bounded") {
    const Signal a = random_signal(64, 1234);
    const Signal b = random_signal(64, 1234);
    const Signal c = random_signal(64, 1235);
    REQUIRE(a.size() == 64);
    CHECK(a == b);
    CHECK(a != c);
    for (const ComplexValue& sample : a) {
        CHECK(std::abs(sample.re) <= 1.0);
        CHECK(std::abs(sample.im) <= 1.0);
    }
    CHECK(random_signal(0, 1).empty());
}
