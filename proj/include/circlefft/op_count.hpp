#pragma once

#include <cstddef>

#include "circlefft/complex_value.hpp"

namespace circlefft {

// Tally of complex arithmetic for one transform run. Subtractions count as
// additions. For a given (algorithm, N) the totals are fixed regardless of
// the sample values.
struct OpCount {
    std::size_t mults = 0;
    std::size_t adds = 0;

    friend bool operator==(const OpCount&, const OpCount&) = default;
};

namespace detail {

// Counted arithmetic used inside the transform kernels. A null sink makes
// these plain operations.
inline ComplexValue mul_counted(ComplexValue a, ComplexValue b, OpCount* ops) {
    if (ops != nullptr) {
        ++ops->mults;
    }
    return a * b;
}

inline ComplexValue add_counted(ComplexValue a, ComplexValue b, OpCount* ops) {
    if (ops != nullptr) {
        ++ops->adds;
    }
    return a + b;
}

inline ComplexValue sub_counted(ComplexValue a, ComplexValue b, OpCount* ops) {
    if (ops != nullptr) {
        ++ops->adds;
    }
    return a - b;
}

}  // namespace detail

}  // namespace circlefft
