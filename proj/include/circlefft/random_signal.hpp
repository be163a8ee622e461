#pragma once

#include <cstddef>
#include <cstdint>

#include "circlefft/complex_value.hpp"

namespace circlefft {

// Deterministic pseudo-random signal with components uniform in [-1, 1].
// Same (n, seed) always yields the same samples; used for benchmark inputs
// and randomized checks.
[[nodiscard]] Signal random_signal(std::size_t n, std::uint64_t seed);

}  // namespace circlefft
