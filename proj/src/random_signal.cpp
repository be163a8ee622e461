#include "circlefft/random_signal.hpp"

#include <random>

namespace circlefft {

Signal random_signal(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> component(-1.0, 1.0);
    Signal samples(n);
    for (ComplexValue& sample : samples) {
        sample.re = component(rng);
        sample.im = component(rng);
    }
    return samples;
}

}  // namespace circlefft
