#include "circlefft/twiddle.hpp"

#include <cmath>
#include <numbers>

#include "circlefft/errors.hpp"

namespace circlefft {

TwiddleTable twiddle_table(std::size_t order) {
    if (order == 0) {
        throw UnsupportedSizeError("twiddle_table: order must be positive");
    }
    TwiddleTable table;
    table.order = order;
    table.factors.reserve(order);
    for (std::size_t j = 0; j < order; ++j) {
        const double angle = -(2.0 * std::numbers::pi * static_cast<double>(j)) /
                             static_cast<double>(order);
        table.factors.push_back({std::cos(angle), std::sin(angle)});
    }
    return table;
}

}  // namespace circlefft
