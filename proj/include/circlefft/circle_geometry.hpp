#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace circlefft {

// Which circle of a figure a point sits on.
enum class Panel { full, even, odd };

// One DFT term a_n * e^{i*k*theta_n} drawn as the value a_n sitting at angle
// k*theta_n on a unit circle, with theta_n = -2*pi*n/N so the term matches
// the forward transform's e^{-2*pi*i*n*k/N}. Angles land in (-2*pi, 0].
struct CirclePlacement {
    std::string label;     // e.g. "a_3"
    std::size_t index = 0; // original sample index n
    double angle = 0.0;    // radians, k*theta_n reduced mod 2*pi
    double radius = 1.0;   // unit circle in model space
    Panel panel = Panel::full;
};

enum class CombineSign { plus, minus };

// The bin-k row of the even/odd split: the full-circle sum on the left, and
// the two half-size circles whose sums recombine as
//   lhs = even_sum + sign * w * odd_sum,  w = e^{-2*pi*i*(k mod N/2)/N}.
// Rows k and k + N/2 share identical panels; only the sign differs, which is
// how one pair of half-size sums serves two output bins.
struct DecompositionFigure {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<CirclePlacement> lhs;         // N points, Panel::full
    std::vector<CirclePlacement> even_panel;  // N/2 points, Panel::even
    std::vector<CirclePlacement> odd_panel;   // N/2 points, Panel::odd
    std::string odd_factor_label;             // drawn next to the sign
    CombineSign combine_sign = CombineSign::plus;
};

// Places the N terms of bin k. For k = 1 consecutive indices are a uniform
// 2*pi/N apart; multiples of N/gcd collapse onto shared points. Labels
// default to "a_0".."a_{N-1}"; a non-empty labels vector must have exactly N
// entries. Throws std::invalid_argument for n = 0, k >= n, or a bad labels
// size.
[[nodiscard]] std::vector<CirclePlacement> layout_terms(
    std::size_t n, std::size_t k, const std::vector<std::string>& labels = {});

// Builds the full row for bin k of an even-length transform. The odd panel
// has one twiddle factored out, so its points coincide with the even
// panel's: the odd terms are the even terms' positions, one rotation away.
// combine_sign is plus for k < N/2 and minus otherwise. Throws
// std::invalid_argument for odd or zero n, k >= n, or a bad labels size.
[[nodiscard]] DecompositionFigure layout_decomposition(
    std::size_t n, std::size_t k, const std::vector<std::string>& labels = {});

}  // namespace circlefft
