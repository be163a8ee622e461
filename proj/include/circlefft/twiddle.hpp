#pragma once

#include <cstddef>
#include <vector>

#include "circlefft/complex_value.hpp"

namespace circlefft {

// Precomputed roots of unity: factors[j] = e^{-2*pi*i*j/order}.
// factors[0] is exactly 1+0i, and for even order factors[j + order/2]
// is the negation of factors[j] -- the sign flip the butterflies reuse.
struct TwiddleTable {
    std::size_t order = 0;
    std::vector<ComplexValue> factors;
};

// Each entry comes from its own cos/sin call rather than repeated
// multiplication, so no rounding error accumulates across the table.
// Rejects order == 0.
[[nodiscard]] TwiddleTable twiddle_table(std::size_t order);

}  // namespace circlefft
