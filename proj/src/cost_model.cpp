#include "circlefft/cost_model.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "circlefft/errors.hpp"
#include "circlefft/fft.hpp"
#include "circlefft/naive_dft.hpp"
#include "circlefft/random_signal.hpp"

namespace circlefft {
namespace {

constexpr std::uint64_t kSizeSeedMix = 0x9e3779b97f4a7c15ULL;

bool is_pow2(std::size_t n) { return n != 0 && std::has_single_bit(n); }

std::size_t log2_exact(std::size_t n) {
    return static_cast<std::size_t>(std::countr_zero(n));
}

// Keeps the timed result alive past the optimizer.
void do_not_optimize(const void* p) { asm volatile("" : : "g"(p) : "memory"); }

OpCount measure_counts(Algorithm algorithm, std::size_t n) {
    // Counts depend on (algorithm, n) only, so any finite input works.
    const Signal input = random_signal(n, kDefaultBenchSeed ^ (n * kSizeSeedMix));
    OpCount ops;
    switch (algorithm) {
        case Algorithm::naive:
            do_not_optimize(naive_dft(input, &ops).data());
            break;
        case Algorithm::fft_recursive:
            do_not_optimize(fft_recursive(input, &ops).data());
            break;
        case Algorithm::fft_iterative: {
            const FftPlan plan = make_plan(n);
            do_not_optimize(fft_iterative(input, plan, &ops).data());
            break;
        }
    }
    return ops;
}

struct SingleTermFit {
    double coefficient = 0.0;
    double r2 = 0.0;
};

// Least squares for t = c*basis with no intercept; R^2 against the mean of t,
// clamped into [0, 1].
SingleTermFit fit_single_term(const std::vector<double>& basis,
                              const std::vector<double>& times) {
    double xt = 0.0;
    double xx = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        xt += basis[i] * times[i];
        xx += basis[i] * basis[i];
    }
    SingleTermFit fit;
    fit.coefficient = xt / xx;
    double mean = 0.0;
    for (double t : times) {
        mean += t;
    }
    mean /= static_cast<double>(times.size());
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double predicted = fit.coefficient * basis[i];
        ss_res += (times[i] - predicted) * (times[i] - predicted);
        ss_tot += (times[i] - mean) * (times[i] - mean);
    }
    fit.r2 = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
    return fit;
}

double loglog_slope(const std::vector<double>& sizes, const std::vector<double>& times) {
    // N=1 and zero-length timings carry no slope information; drop them so the
    // logs stay finite.
    double count = 0.0;
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 2.0 || times[i] <= 0.0) {
            continue;
        }
        const double lx = std::log(sizes[i]);
        const double ly = std::log(times[i]);
        count += 1.0;
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = count * sxx - sx * sx;
    return denom != 0.0 ? (count * sxy - sx * sy) / denom : 0.0;
}

}  // namespace

std::string_view algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::naive:
            return "naive";
        case Algorithm::fft_recursive:
            return "fft_recursive";
        case Algorithm::fft_iterative:
            return "fft_iterative";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    if (name == "naive") {
        return Algorithm::naive;
    }
    if (name == "fft_recursive") {
        return Algorithm::fft_recursive;
    }
    if (name == "fft_iterative") {
        return Algorithm::fft_iterative;
    }
    return std::nullopt;
}

OpCount expected_counts(Algorithm algorithm, std::size_t n) {
    if (n == 0) {
        throw UnsupportedSizeError("expected_counts: n must be positive");
    }
    if (algorithm == Algorithm::naive) {
        return {n * n, n * (n - 1)};
    }
    if (!is_pow2(n)) {
        throw UnsupportedSizeError("expected_counts: unsupported size " + std::to_string(n) +
                                   " for " + std::string(algorithm_name(algorithm)));
    }
    const std::size_t levels = log2_exact(n);
    return {(n / 2) * levels, n * levels};
}

RecurrenceReport verify_recurrence(std::size_t max_n, const CountProvider& provider) {
    if (max_n < 2 || !is_pow2(max_n)) {
        throw UnsupportedSizeError("verify_recurrence: max_n must be a power of two >= 2");
    }
    const CountProvider& measure = provider ? provider : CountProvider(measure_counts);

    std::map<std::size_t, OpCount> fft_counts;
    std::map<std::size_t, std::size_t> naive_mults;
    for (std::size_t n = 1; n <= max_n; n *= 2) {
        fft_counts[n] = measure(Algorithm::fft_iterative, n);
        naive_mults[n] = measure(Algorithm::naive, n).mults;
    }

    RecurrenceReport report;
    report.ok = true;
    for (std::size_t n = 2; n <= max_n; n *= 2) {
        RecurrenceLevel level;
        level.n = n;
        level.fft_measured = fft_counts[n];
        level.fft_half = fft_counts[n / 2];
        level.mults_from_half = 2 * level.fft_half.mults + n / 2;
        level.adds_from_half = 2 * level.fft_half.adds + n;
        level.naive_mults = naive_mults[n];
        level.naive_mults_half = naive_mults[n / 2];
        level.ok = level.fft_measured.mults == level.mults_from_half &&
                   level.fft_measured.adds == level.adds_from_half &&
                   level.naive_mults == 4 * level.naive_mults_half;
        if (!level.ok && report.ok) {
            report.ok = false;
            report.failure = "count recurrence violated at N=" + std::to_string(n) +
                             ": measured (" + std::to_string(level.fft_measured.mults) +
                             " mults, " + std::to_string(level.fft_measured.adds) +
                             " adds), from N/2 expected (" +
                             std::to_string(level.mults_from_half) + ", " +
                             std::to_string(level.adds_from_half) + "); naive mults " +
                             std::to_string(level.naive_mults) + " vs 4*" +
                             std::to_string(level.naive_mults_half);
        }
        report.levels.push_back(level);
    }
    return report;
}

std::vector<BenchRecord> run_benchmark(const std::vector<std::size_t>& sizes,
                                       const std::vector<Algorithm>& algorithms,
                                       int repeats, std::uint64_t seed,
                                       std::vector<std::string>* notices) {
    if (repeats < 5) {
        throw std::invalid_argument("run_benchmark: repeats must be at least 5");
    }
    if (!std::is_sorted(sizes.begin(), sizes.end())) {
        throw std::invalid_argument("run_benchmark: sizes must be sorted ascending");
    }
    for (std::size_t n : sizes) {
        if (n == 0) {
            throw std::invalid_argument("run_benchmark: sizes must be positive");
        }
    }

    using clock = std::chrono::steady_clock;
    std::vector<BenchRecord> records;
    for (Algorithm algorithm : algorithms) {
        for (std::size_t n : sizes) {
            if (algorithm != Algorithm::naive && !is_pow2(n)) {
                if (notices != nullptr) {
                    notices->push_back("skipping " + std::string(algorithm_name(algorithm)) +
                                       " at N=" + std::to_string(n) +
                                       ": size is not a power of two");
                }
                continue;
            }
            const Signal input = random_signal(n, seed ^ (n * kSizeSeedMix));
            FftPlan plan;
            if (algorithm == Algorithm::fft_iterative) {
                plan = make_plan(n);
            }
            const auto run_once = [&](OpCount* ops) {
                switch (algorithm) {
                    case Algorithm::naive:
                        return naive_dft(input, ops);
                    case Algorithm::fft_recursive:
                        return fft_recursive(input, ops);
                    case Algorithm::fft_iterative:
                        return fft_iterative(input, plan, ops);
                }
                return Spectrum{};
            };

            do_not_optimize(run_once(nullptr).data());  // warm-up, untimed

            std::vector<double> times;
            times.reserve(static_cast<std::size_t>(repeats));
            for (int r = 0; r < repeats; ++r) {
                const auto start = clock::now();
                const Spectrum out = run_once(nullptr);
                const auto stop = clock::now();
                do_not_optimize(out.data());
                times.push_back(std::chrono::duration<double>(stop - start).count());
            }
            std::sort(times.begin(), times.end());
            const std::size_t mid = times.size() / 2;
            const double median = times.size() % 2 == 1
                                      ? times[mid]
                                      : 0.5 * (times[mid - 1] + times[mid]);

            BenchRecord record;
            record.algorithm = algorithm;
            record.n = n;
            record.repeats = repeats;
            record.median_seconds = median;
            run_once(&record.counts);
            records.push_back(record);
        }
    }
    return records;
}

CostModelFit fit_cost_model(const std::vector<BenchRecord>& records) {
    std::vector<double> naive_sizes;
    std::vector<double> naive_basis;
    std::vector<double> naive_times;
    std::vector<double> fft_sizes;
    std::vector<double> fft_basis;
    std::vector<double> fft_times;
    std::map<std::size_t, bool> naive_seen;
    std::map<std::size_t, bool> fft_seen;

    for (const BenchRecord& record : records) {
        const auto n = static_cast<double>(record.n);
        if (record.algorithm == Algorithm::naive) {
            naive_sizes.push_back(n);
            naive_basis.push_back(n * n);
            naive_times.push_back(record.median_seconds);
            naive_seen[record.n] = true;
        } else {
            fft_sizes.push_back(n);
            fft_basis.push_back(n * std::log2(n));
            fft_times.push_back(record.median_seconds);
            fft_seen[record.n] = true;
        }
    }
    if (naive_seen.size() < 4 || fft_seen.size() < 4) {
        throw std::invalid_argument(
            "fit_cost_model: need at least 4 distinct sizes for both the naive and fft "
            "records");
    }

    const SingleTermFit quadratic = fit_single_term(naive_basis, naive_times);
    const SingleTermFit nlogn = fit_single_term(fft_basis, fft_times);

    CostModelFit fit;
    fit.c1 = quadratic.coefficient;
    fit.c2 = nlogn.coefficient;
    fit.r2_quadratic = quadratic.r2;
    fit.r2_nlogn = nlogn.r2;
    fit.loglog_slope_naive = loglog_slope(naive_sizes, naive_times);
    fit.loglog_slope_fft = loglog_slope(fft_sizes, fft_times);
    return fit;
}

void write_benchmark_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "algorithm,N,repeats,median_seconds,mults,adds\n";
    char buffer[64];
    for (const BenchRecord& record : records) {
        std::snprintf(buffer, sizeof buffer, "%.9e", record.median_seconds);
        out << algorithm_name(record.algorithm) << ',' << record.n << ',' << record.repeats
            << ',' << buffer << ',' << record.counts.mults << ',' << record.counts.adds
            << '\n';
    }
}

void write_fit_json(std::ostream& out, const CostModelFit& fit) {
    const nlohmann::json doc = {{"c1", fit.c1},
                                {"c2", fit.c2},
                                {"r2_quadratic", fit.r2_quadratic},
                                {"r2_nlogn", fit.r2_nlogn}};
    out << doc.dump(2) << '\n';
}

}  // namespace circlefft
