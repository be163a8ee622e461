#include <bit>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circlefft/circle_geometry.hpp"
#include "circlefft/cost_model.hpp"
#include "circlefft/errors.hpp"
#include "circlefft/fft.hpp"
#include "circlefft/naive_dft.hpp"
#include "circlefft/signal_io.hpp"
#include "circlefft/svg_render.hpp"

namespace {

using namespace circlefft;

// Exit codes, kept stable: 0 ok, 1 usage or bad input, 2 I/O failure,
// 3 verification failure.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kIoFailure = 2;
constexpr int kVerifyFailure = 3;

bool is_pow2(std::size_t n) { return n != 0 && std::has_single_bit(n); }

// Writes to the named file, or to stdout for "-" / empty. Returns false on
// any stream failure.
bool write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return static_cast<bool>(std::cout.flush());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        return false;
    }
    out << text;
    return static_cast<bool>(out.flush());
}

struct TransformOptions {
    std::string input;
    std::string output = "-";
    std::string format = "csv";
    bool inverse = false;
    bool naive = false;
};

int cmd_transform(const TransformOptions& opt) {
    const SignalFormat format = opt.format == "json" ? SignalFormat::json : SignalFormat::csv;

    std::ifstream in(opt.input, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << opt.input << "'\n";
        return kUsage;
    }
    Signal signal;
    try {
        signal = read_signal(in, format);
    } catch (const ParseError& err) {
        std::cerr << opt.input;
        if (err.line() != 0) {
            std::cerr << ':' << err.line();
        }
        std::cerr << ": " << err.what() << '\n';
        return kUsage;
    }

    const bool use_fft = !opt.naive && is_pow2(signal.size());
    if (!opt.naive && !use_fft) {
        std::cerr << "note: length " << signal.size()
                  << " is not a power of two; using the naive transform\n";
    }

    std::vector<ComplexValue> result;
    if (use_fft) {
        const FftPlan plan = make_plan(signal.size());
        result = opt.inverse ? ifft(signal, plan) : fft_iterative(signal, plan);
    } else {
        result = opt.inverse ? naive_idft(signal) : naive_dft(signal);
    }

    std::ostringstream rendered;
    write_signal(rendered, result, format);
    if (!write_text(opt.output, rendered.str())) {
        std::cerr << "error: cannot write '" << opt.output << "'\n";
        return kIoFailure;
    }
    return kOk;
}

struct BenchOptions {
    std::vector<std::size_t> sizes = {256, 512, 1024, 2048};
    std::vector<std::string> algorithms = {"naive", "fft_recursive", "fft_iterative"};
    int repeats = 5;
    std::string csv = "-";
    std::string fit_json;
};

int cmd_bench(const BenchOptions& opt) {
    std::uint64_t seed = kDefaultBenchSeed;
    if (const char* env = std::getenv("CIRCLEFFT_SEED")) {
        char* end = nullptr;
        errno = 0;
        const unsigned long long parsed = std::strtoull(env, &end, 0);
        if (errno != 0 || end == env || *end != '\0') {
            std::cerr << "error: CIRCLEFFT_SEED is not an unsigned integer: '" << env << "'\n";
            return kUsage;
        }
        seed = parsed;
    }

    std::vector<Algorithm> algorithms;
    for (const std::string& name : opt.algorithms) {
        const std::optional<Algorithm> algorithm = parse_algorithm(name);
        if (!algorithm) {
            std::cerr << "error: unknown algorithm '" << name
                      << "' (expected naive, fft_recursive, or fft_iterative)\n";
            return kUsage;
        }
        algorithms.push_back(*algorithm);
    }

    std::vector<std::string> notices;
    std::vector<BenchRecord> records;
    try {
        records = run_benchmark(opt.sizes, algorithms, opt.repeats, seed, &notices);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsage;
    }
    for (const std::string& notice : notices) {
        std::cerr << "note: " << notice << '\n';
    }

    std::ostringstream csv;
    write_benchmark_csv(csv, records);
    if (!write_text(opt.csv, csv.str())) {
        std::cerr << "error: cannot write '" << opt.csv << "'\n";
        return kIoFailure;
    }

    if (!opt.fit_json.empty()) {
        CostModelFit fit;
        try {
            fit = fit_cost_model(records);
        } catch (const std::invalid_argument& err) {
            std::cerr << "error: " << err.what() << '\n';
            return kUsage;
        }
        std::cerr << "fit: c1=" << fit.c1 << " c2=" << fit.c2
                  << " r2_quadratic=" << fit.r2_quadratic << " r2_nlogn=" << fit.r2_nlogn
                  << " loglog_slope_naive=" << fit.loglog_slope_naive
                  << " loglog_slope_fft=" << fit.loglog_slope_fft << '\n';
        std::ostringstream json;
        write_fit_json(json, fit);
        if (!write_text(opt.fit_json, json.str())) {
            std::cerr << "error: cannot write '" << opt.fit_json << "'\n";
            return kIoFailure;
        }
    }
    return kOk;
}

struct VerifyOptions {
    std::size_t max_n = 1024;
};

int cmd_verify(const VerifyOptions& opt) {
    if (opt.max_n < 2 || !is_pow2(opt.max_n)) {
        std::cerr << "error: --max-n must be a power of two >= 2\n";
        return kUsage;
    }

    const RecurrenceReport report = verify_recurrence(opt.max_n);

    std::printf("%6s  %12s  %12s  %12s  %12s  %14s  %14s  %s\n", "N", "fft mults",
                "2M(N/2)+N/2", "fft adds", "2A(N/2)+N", "naive mults", "4*naive(N/2)",
                "status");
    for (const RecurrenceLevel& level : report.levels) {
        std::printf("%6zu  %12zu  %12zu  %12zu  %12zu  %14zu  %14zu  %s\n", level.n,
                    level.fft_measured.mults, level.mults_from_half, level.fft_measured.adds,
                    level.adds_from_half, level.naive_mults, 4 * level.naive_mults_half,
                    level.ok ? "ok" : "VIOLATION");
    }

    const RecurrenceLevel& top = report.levels.back();
    const auto levels = static_cast<std::size_t>(std::countr_zero(opt.max_n));
    std::printf("\narithmetic cost at N=%zu: %zu mults + %zu adds = %zu complex ops\n",
                opt.max_n, top.fft_measured.mults, top.fft_measured.adds,
                top.fft_measured.mults + top.fft_measured.adds);
    std::printf("touch-every-element view: N*(1+log2 N) = %zu elements across %zu levels\n",
                opt.max_n * (1 + levels), levels);
    std::printf("naive halving at N=%zu: two size-N/2 transforms cost 2*%zu = %zu mults, "
                "half of %zu\n",
                opt.max_n, top.naive_mults_half, 2 * top.naive_mults_half, top.naive_mults);

    if (!report.ok) {
        std::cerr << "error: " << report.failure << '\n';
        return kVerifyFailure;
    }
    return kOk;
}

struct DiagramOptions {
    std::size_t n = 0;
    std::size_t k = 0;
    bool decompose = false;
    std::string labels;
    std::string output = "-";
    RenderStyle style;
};

std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> labels;
    std::string current;
    for (char c : csv) {
        if (c == ',') {
            labels.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    labels.push_back(current);
    return labels;
}

int cmd_diagram(const DiagramOptions& opt) {
    if (opt.n == 0 || opt.k >= opt.n) {
        std::cerr << "error: need n >= 1 and 0 <= k < n\n";
        return kUsage;
    }
    if (opt.decompose && !is_pow2(opt.n)) {
        std::cerr << "error: --decompose requires n to be a power of two\n";
        return kUsage;
    }
    std::vector<std::string> labels;
    if (!opt.labels.empty()) {
        labels = split_labels(opt.labels);
        if (labels.size() != opt.n) {
            std::cerr << "error: --labels needs exactly " << opt.n << " comma-separated "
                      << "entries, got " << labels.size() << '\n';
            return kUsage;
        }
    }

    std::string svg;
    try {
        if (opt.decompose) {
            svg = render_decomposition(layout_decomposition(opt.n, opt.k, labels), opt.style);
        } else {
            svg = render_circle(layout_terms(opt.n, opt.k, labels), opt.style);
        }
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsage;
    }

    if (!write_text(opt.output, svg)) {
        std::cerr << "error: cannot write '" << opt.output << "'\n";
        return kIoFailure;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radix-2 FFT toolkit: transforms, operation-count verification, "
                 "benchmarks, and unit-circle diagrams"};
    app.require_subcommand(1);

    TransformOptions transform_opt;
    CLI::App* transform = app.add_subcommand(
        "transform", "Transform a signal file (forward DFT, or inverse with --inverse)");
    transform->add_option("input", transform_opt.input, "signal file to read")->required();
    transform->add_flag("--inverse", transform_opt.inverse, "apply the inverse transform");
    transform->add_flag("--naive", transform_opt.naive,
                        "force the O(N^2) reference implementation");
    transform->add_option("--output", transform_opt.output, "output path ('-' for stdout)");
    transform->add_option("--format", transform_opt.format,
                          "signal format for input and output")
        ->check(CLI::IsMember({"csv", "json"}));

    BenchOptions bench_opt;
    CLI::App* bench =
        app.add_subcommand("bench", "Time the implementations and fit the cost model");
    bench->add_option("--sizes", bench_opt.sizes, "transform sizes, ascending")
        ->delimiter(',');
    bench->add_option("--algorithms", bench_opt.algorithms,
                      "naive, fft_recursive, fft_iterative")
        ->delimiter(',');
    bench->add_option("--repeats", bench_opt.repeats, "timed repeats per size (>= 5)");
    bench->add_option("--csv", bench_opt.csv, "benchmark table destination ('-' for stdout)");
    bench->add_option("--fit-json", bench_opt.fit_json,
                      "write fitted cost-model coefficients here");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check the operation-count recurrences at every power of two");
    verify->add_option("--max-n", verify_opt.max_n, "largest transform size to check");

    DiagramOptions diagram_opt;
    CLI::App* diagram =
        app.add_subcommand("diagram", "Emit an SVG unit-circle diagram for bin k");
    diagram->add_option("--n", diagram_opt.n, "number of samples")->required();
    diagram->add_option("--k", diagram_opt.k, "frequency bin");
    diagram->add_flag("--decompose", diagram_opt.decompose,
                      "draw the even/odd split instead of a single circle");
    diagram->add_option("--labels", diagram_opt.labels,
                        "comma-separated point labels (exactly n of them)");
    diagram->add_option("--output", diagram_opt.output, "output path ('-' for stdout)");
    diagram->add_option("--circle-radius", diagram_opt.style.circle_radius,
                        "circle radius in pixels");
    diagram->add_option("--panel-gap", diagram_opt.style.panel_gap,
                        "space between panels in pixels");
    diagram->add_option("--font-size", diagram_opt.style.font_size, "label size in pixels");
    diagram->add_option("--dot-radius", diagram_opt.style.dot_radius, "dot size in pixels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (transform->parsed()) {
            return cmd_transform(transform_opt);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_opt);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_opt);
        }
        if (diagram->parsed()) {
            return cmd_diagram(diagram_opt);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
