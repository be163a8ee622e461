#include "circlefft/fft.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

#include "circlefft/errors.hpp"

namespace circlefft {
namespace {

std::size_t reverse_bits(std::size_t value, unsigned bit_count) {
    std::size_t reversed = 0;
    for (unsigned bit = 0; bit < bit_count; ++bit) {
        reversed = (reversed << 1U) | (value & 1U);
        value >>= 1U;
    }
    return reversed;
}

// One node of the even/odd recursion. roots is the top-level table; a
// subproblem of size n uses every (stride)-th entry, so w_k = factors[k*stride].
Spectrum fft_recursive_node(Spectrum x, const TwiddleTable& roots, std::size_t stride,
                            OpCount* ops) {
    const std::size_t n = x.size();
    if (n == 1) {
        return x;  // a 1-point transform is the value itself
    }
    const std::size_t half = n / 2;
    Signal even(half);
    Signal odd(half);
    for (std::size_t i = 0; i < half; ++i) {
        even[i] = x[2 * i];
        odd[i] = x[2 * i + 1];
    }
    const Spectrum even_bins = fft_recursive_node(std::move(even), roots, stride * 2, ops);
    const Spectrum odd_bins = fft_recursive_node(std::move(odd), roots, stride * 2, ops);

    Spectrum bins(n);
    for (std::size_t k = 0; k < half; ++k) {
        const ComplexValue t =
            detail::mul_counted(roots.factors[k * stride], odd_bins[k], ops);
        bins[k] = detail::add_counted(even_bins[k], t, ops);
        // Same two half-size sums, subtracted, give the bin half a period up.
        bins[k + half] = detail::sub_counted(even_bins[k], t, ops);
    }
    return bins;
}

}  // namespace

FftPlan make_plan(std::size_t order) {
    if (order == 0 || !std::has_single_bit(order)) {
        throw UnsupportedSizeError("make_plan: unsupported size " + std::to_string(order) +
                                   " (need a power of two >= 1)");
    }
    FftPlan plan;
    plan.order = order;
    plan.twiddles = twiddle_table(order);
    const auto bits = static_cast<unsigned>(std::countr_zero(order));
    plan.bit_reversal.resize(order);
    for (std::size_t j = 0; j < order; ++j) {
        plan.bit_reversal[j] = reverse_bits(j, bits);
    }
    return plan;
}

Spectrum fft_recursive(const Signal& x, OpCount* ops) {
    if (x.empty() || !std::has_single_bit(x.size())) {
        throw UnsupportedSizeError("fft_recursive: unsupported size " +
                                   std::to_string(x.size()) + " (need a power of two)");
    }
#ifndef NDEBUG
    for (const ComplexValue& sample : x) {
        assert(is_finite(sample));
    }
#endif
    return fft_recursive_node(x, twiddle_table(x.size()), 1, ops);
}

Spectrum fft_iterative(const Signal& x, const FftPlan& plan, OpCount* ops) {
    if (x.size() != plan.order) {
        throw std::invalid_argument("fft_iterative: signal length " +
                                    std::to_string(x.size()) + " does not match plan order " +
                                    std::to_string(plan.order));
    }
    const std::size_t n = plan.order;
    Spectrum out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = x[plan.bit_reversal[i]];
    }
    for (std::size_t len = 2; len <= n; len <<= 1U) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < half; ++j) {
#ifdef CIRCLEFFT_FAULT_SKIP_BUTTERFLY
                // Fault-injection build: drop the last butterfly of the final
                // pass so count verification has a real failure to detect.
                if (len == n && j == half - 1) {
                    continue;
                }
#endif
                const ComplexValue t = detail::mul_counted(
                    plan.twiddles.factors[j * stride], out[i + j + half], ops);
                const ComplexValue u = out[i + j];
                out[i + j] = detail::add_counted(u, t, ops);
                out[i + j + half] = detail::sub_counted(u, t, ops);
            }
        }
    }
    return out;
}

Signal ifft(const Spectrum& bins, const FftPlan& plan) {
    if (bins.size() != plan.order) {
        throw std::invalid_argument("ifft: spectrum length " + std::to_string(bins.size()) +
                                    " does not match plan order " +
                                    std::to_string(plan.order));
    }
    const std::size_t n = plan.order;
    Signal conjugated(n);
    for (std::size_t i = 0; i < n; ++i) {
        conjugated[i] = conj(bins[i]);
    }
    const Spectrum transformed = fft_iterative(conjugated, plan);
    const double inv_n = 1.0 / static_cast<double>(n);
    Signal samples(n);
    for (std::size_t i = 0; i < n; ++i) {
        samples[i] = scale(inv_n, conj(transformed[i]));
    }
    return samples;
}

}  // namespace circlefft
