#pragma once

#include <cstddef>
#include <vector>

#include "circlefft/complex_value.hpp"
#include "circlefft/op_count.hpp"
#include "circlefft/twiddle.hpp"

namespace circlefft {

// Per-size state for the iterative transform: the twiddle table plus the
// bit-reversal permutation. Immutable after construction and freely
// shareable across threads.
struct FftPlan {
    std::size_t order = 1;
    TwiddleTable twiddles;
    // bit_reversal[j] is j with its log2(order) bits reversed; the
    // permutation is its own inverse.
    std::vector<std::size_t> bit_reversal;
};

// Construction cost is O(order). Throws UnsupportedSizeError unless order
// is a power of two (order >= 1).
[[nodiscard]] FftPlan make_plan(std::size_t order);

// Radix-2 decimation in time, written as the recursion it is: split into
// even- and odd-index halves, transform each, then for k < N/2 combine
//   bins[k]       = E[k] + w_k * O[k]
//   bins[k + N/2] = E[k] - w_k * O[k]      with w_k = e^{-2*pi*i*k/N}.
// The subtraction reuses the same two half-size sums for the upper bin.
// A 1-point transform is the identity. Allocates per-level scratch; use
// fft_iterative for the in-place performance path. Throws
// UnsupportedSizeError for lengths that are not a power of two.
[[nodiscard]] Spectrum fft_recursive(const Signal& x, OpCount* ops = nullptr);

// The same butterflies unrolled into log2(N) passes over a single buffer,
// after one bit-reversed copy of the input. Output matches fft_recursive
// bit for bit. Counts exactly (N/2)*log2(N) multiplications and N*log2(N)
// additions. Throws std::invalid_argument if x.size() != plan.order.
[[nodiscard]] Spectrum fft_iterative(const Signal& x, const FftPlan& plan,
                                     OpCount* ops = nullptr);

// Inverse transform via conjugation: (1/N) * conj(fft(conj(X))).
// Throws std::invalid_argument if bins.size() != plan.order.
[[nodiscard]] Signal ifft(const Spectrum& bins, const FftPlan& plan);

}  // namespace circlefft
