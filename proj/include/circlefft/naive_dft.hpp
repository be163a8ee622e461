#pragma once

#include "circlefft/complex_value.hpp"
#include "circlefft/op_count.hpp"

namespace circlefft {

// Direct evaluation of A_k = sum_n a_n * e^{-2*pi*i*n*k/N}, one product per
// term with no algebraic shortcuts. Quadratic by construction: this is the
// reference the fast paths are checked against and the honest baseline for
// the cost model. When ops is supplied it records exactly N^2 complex
// multiplications and N*(N-1) complex additions. Rejects empty input.
[[nodiscard]] Spectrum naive_dft(const Signal& x, OpCount* ops = nullptr);

// Inverse of naive_dft: samples[n] = (1/N) * sum_k bins[k] * e^{+2*pi*i*n*k/N}.
// Rejects empty input.
[[nodiscard]] Signal naive_idft(const Spectrum& bins);

}  // namespace circlefft
