#include "circlefft/naive_dft.hpp"

#include <cassert>
#include <stdexcept>

#include "circlefft/twiddle.hpp"

namespace circlefft {

Spectrum naive_dft(const Signal& x, OpCount* ops) {
    if (x.empty()) {
        throw std::invalid_argument("naive_dft: empty signal");
    }
#ifndef NDEBUG
    for (const ComplexValue& sample : x) {
        assert(is_finite(sample));
    }
#endif
    const std::size_t n = x.size();
    const TwiddleTable table = twiddle_table(n);
    Spectrum bins(n);
    for (std::size_t k = 0; k < n; ++k) {
        // Start the sum from the n = 0 term, so each bin costs N products
        // and N-1 additions.
        ComplexValue acc = detail::mul_counted(x[0], table.factors[0], ops);
        for (std::size_t m = 1; m < n; ++m) {
            // Integer (m*k) mod N keeps the twiddle index exact for large m*k.
            const ComplexValue term =
                detail::mul_counted(x[m], table.factors[(m * k) % n], ops);
            acc = detail::add_counted(acc, term, ops);
        }
        bins[k] = acc;
    }
    return bins;
}

Signal naive_idft(const Spectrum& bins) {
    if (bins.empty()) {
        throw std::invalid_argument("naive_idft: empty spectrum");
    }
    const std::size_t n = bins.size();
    const TwiddleTable table = twiddle_table(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    Signal samples(n);
    for (std::size_t m = 0; m < n; ++m) {
        ComplexValue acc = bins[0] * conj(table.factors[0]);
        for (std::size_t k = 1; k < n; ++k) {
            acc = acc + bins[k] * conj(table.factors[(m * k) % n]);
        }
        samples[m] = scale(inv_n, acc);
    }
    return samples;
}

}  // namespace circlefft
