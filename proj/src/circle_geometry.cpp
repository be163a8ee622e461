#include "circlefft/circle_geometry.hpp"

#include <numbers>
#include <stdexcept>

namespace circlefft {
namespace {

// Angle of e^{-2*pi*i*m/n} with the turn count reduced mod n first, so
// coincident terms get the exact same double and never split visually.
double reduced_angle(std::size_t turns, std::size_t n) {
    const std::size_t m = turns % n;
    if (m == 0) {
        return 0.0;
    }
    return -(2.0 * std::numbers::pi * static_cast<double>(m)) / static_cast<double>(n);
}

std::string default_label(std::size_t index) { return "a_" + std::to_string(index); }

void check_arguments(std::size_t n, std::size_t k, const std::vector<std::string>& labels) {
    if (n == 0) {
        throw std::invalid_argument("layout: n must be positive");
    }
    if (k >= n) {
        throw std::invalid_argument("layout: bin index k must satisfy k < n");
    }
    if (!labels.empty() && labels.size() != n) {
        throw std::invalid_argument("layout: labels must be empty or have exactly n entries");
    }
}

}  // namespace

std::vector<CirclePlacement> layout_terms(std::size_t n, std::size_t k,
                                          const std::vector<std::string>& labels) {
    check_arguments(n, k, labels);
    std::vector<CirclePlacement> placements;
    placements.reserve(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        CirclePlacement point;
        point.label = labels.empty() ? default_label(idx) : labels[idx];
        point.index = idx;
        point.angle = reduced_angle(k * idx, n);
        point.radius = 1.0;
        point.panel = Panel::full;
        placements.push_back(std::move(point));
    }
    return placements;
}

DecompositionFigure layout_decomposition(std::size_t n, std::size_t k,
                                         const std::vector<std::string>& labels) {
    check_arguments(n, k, labels);
    if (n % 2 != 0) {
        throw std::invalid_argument("layout_decomposition: n must be even to split");
    }
    const std::size_t half = n / 2;
    const std::size_t k_reduced = k % half;

    DecompositionFigure figure;
    figure.n = n;
    figure.k = k;
    figure.lhs = layout_terms(n, k, labels);
    figure.combine_sign = k < half ? CombineSign::plus : CombineSign::minus;

    // One twiddle w = e^{-2*pi*i*k/N} is factored out of the odd sum; after
    // that both halves are plain size-N/2 bins for the reduced index, so the
    // two panels use the same angles.
    for (std::size_t m = 0; m < half; ++m) {
        const double angle = reduced_angle(k_reduced * m, half);

        CirclePlacement even_point;
        even_point.index = 2 * m;
        even_point.label = labels.empty() ? default_label(2 * m) : labels[2 * m];
        even_point.angle = angle;
        even_point.panel = Panel::even;
        figure.even_panel.push_back(std::move(even_point));

        CirclePlacement odd_point;
        odd_point.index = 2 * m + 1;
        odd_point.label = labels.empty() ? default_label(2 * m + 1) : labels[2 * m + 1];
        odd_point.angle = angle;
        odd_point.panel = Panel::odd;
        figure.odd_panel.push_back(std::move(odd_point));
    }

    if (k_reduced == 0) {
        figure.odd_factor_label = "1";
    } else {
        figure.odd_factor_label = "e^{−2πi·" + std::to_string(k_reduced) +
                                  "/" + std::to_string(n) + "}";
    }
    return figure;
}

}  // namespace circlefft
