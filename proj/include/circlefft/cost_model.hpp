#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circlefft/op_count.hpp"

namespace circlefft {

enum class Algorithm { naive, fft_recursive, fft_iterative };

[[nodiscard]] std::string_view algorithm_name(Algorithm algorithm);
[[nodiscard]] std::optional<Algorithm> parse_algorithm(std::string_view name);

// Closed forms for the complex-op tallies:
//   naive        -> (N^2, N*(N-1))
//   fft variants -> ((N/2)*log2(N), N*log2(N))
// Multiplications by w = 1 are counted, which is what keeps the fft totals
// exactly on the recurrence M(N) = 2*M(N/2) + N/2. Throws
// UnsupportedSizeError for N = 0, or for a non-power-of-two N with an fft
// variant.
[[nodiscard]] OpCount expected_counts(Algorithm algorithm, std::size_t n);

// One doubling step in the recurrence check. "fft" counts are measured on
// instrumented runs; the *_from_half columns are what the level below
// predicts for them.
struct RecurrenceLevel {
    std::size_t n = 0;
    OpCount fft_measured;
    OpCount fft_half;                  // measured at n/2
    std::size_t mults_from_half = 0;   // 2*fft_half.mults + n/2
    std::size_t adds_from_half = 0;    // 2*fft_half.adds + n
    std::size_t naive_mults = 0;       // measured at n
    std::size_t naive_mults_half = 0;  // measured at n/2
    bool ok = false;
};

struct RecurrenceReport {
    std::vector<RecurrenceLevel> levels;
    bool ok = false;
    std::string failure;  // empty when ok; otherwise names the offending level
};

// Source of measured counts, (algorithm, n) -> OpCount. The default runs the
// real instrumented transforms.
using CountProvider = std::function<OpCount(Algorithm, std::size_t)>;

// Checks, exactly and at every power of two 2..max_n:
//   M(N) == 2*M(N/2) + N/2      (fft multiplications)
//   A(N) == 2*A(N/2) + N        (fft additions)
//   naive_mults(N) == 4 * naive_mults(N/2)
// The last line is the halving identity for splitting one quadratic problem
// into two half-size ones: 2*(N/2)^2 = N^2/2. Throws UnsupportedSizeError
// unless max_n is a power of two >= 2.
[[nodiscard]] RecurrenceReport verify_recurrence(std::size_t max_n,
                                                 const CountProvider& provider = {});

struct BenchRecord {
    Algorithm algorithm = Algorithm::naive;
    std::size_t n = 0;
    int repeats = 0;
    double median_seconds = 0.0;
    OpCount counts;  // from one instrumented run; timing runs are uncounted
};

inline constexpr std::uint64_t kDefaultBenchSeed = 0x0c1bc1eff7ULL;

// Median-of-repeats wall times, one warm-up run per (algorithm, size)
// excluded from the medians. Transforms run strictly one at a time. Sizes an
// algorithm cannot handle are skipped with a note in *notices. Requires
// repeats >= 5 and sizes sorted ascending.
[[nodiscard]] std::vector<BenchRecord> run_benchmark(
    const std::vector<std::size_t>& sizes, const std::vector<Algorithm>& algorithms,
    int repeats, std::uint64_t seed = kDefaultBenchSeed,
    std::vector<std::string>* notices = nullptr);

// Constants of the two cost shapes, fitted in linear space on the stated
// bases (not via log-log slopes; those are kept as a diagnostic only).
struct CostModelFit {
    double c1 = 0.0;  // seconds per N^2 unit (naive records)
    double c2 = 0.0;  // seconds per N*log2(N) unit (fft records)
    double r2_quadratic = 0.0;
    double r2_nlogn = 0.0;
    double loglog_slope_naive = 0.0;  // secondary diagnostic; ~2 expected
    double loglog_slope_fft = 0.0;    // ~1 expected
};

// Least-squares fit of t = c1*N^2 to the naive records and t = c2*N*log2(N)
// to the fft records (both variants pooled). Needs at least 4 distinct sizes
// in each family; throws std::invalid_argument otherwise. R^2 values are
// clamped into [0, 1].
[[nodiscard]] CostModelFit fit_cost_model(const std::vector<BenchRecord>& records);

// CSV with header: algorithm,N,repeats,median_seconds,mults,adds
void write_benchmark_csv(std::ostream& out, const std::vector<BenchRecord>& records);

// JSON object with keys c1, c2, r2_quadratic, r2_nlogn.
void write_fit_json(std::ostream& out, const CostModelFit& fit);

}  // namespace circlefft
