#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace circlefft {

// Complex scalar with explicit component arithmetic. The transforms tally
// complex operations at their call sites, so multiplication stays a plain
// 4-mult/2-add kernel with no special-value fixups.
struct ComplexValue {
    double re = 0.0;
    double im = 0.0;

    friend bool operator==(const ComplexValue&, const ComplexValue&) = default;
};

[[nodiscard]] constexpr ComplexValue operator+(ComplexValue a, ComplexValue b) {
    return {a.re + b.re, a.im + b.im};
}

[[nodiscard]] constexpr ComplexValue operator-(ComplexValue a, ComplexValue b) {
    return {a.re - b.re, a.im - b.im};
}

[[nodiscard]] constexpr ComplexValue operator*(ComplexValue a, ComplexValue b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

[[nodiscard]] constexpr ComplexValue conj(ComplexValue a) { return {a.re, -a.im}; }

[[nodiscard]] constexpr ComplexValue scale(double s, ComplexValue a) { return {s * a.re, s * a.im}; }

[[nodiscard]] constexpr double norm_sq(ComplexValue a) { return a.re * a.re + a.im * a.im; }

[[nodiscard]] inline double abs(ComplexValue a) { return std::hypot(a.re, a.im); }

[[nodiscard]] inline bool is_finite(ComplexValue a) {
    return std::isfinite(a.re) && std::isfinite(a.im);
}

// e^{i*angle} on the unit circle.
[[nodiscard]] inline ComplexValue unit_phasor(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

// Time-domain samples a_0 .. a_{N-1}.
using Signal = std::vector<ComplexValue>;

// Frequency-domain bins A_0 .. A_{N-1}; same length as the signal it came from.
using Spectrum = std::vector<ComplexValue>;

}  // namespace circlefft
