#include "circlefft/signal_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

#include <json.hpp>

#include "circlefft/errors.hpp"

namespace circlefft {
namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

// strtod, but the whole token must be consumed: "1.5x" is an error, not 1.5.
double parse_double(const std::string& token, std::size_t line) {
    const std::string clean = trim(token);
    if (clean.empty()) {
        throw ParseError("missing numeric component", line);
    }
    char* end = nullptr;
    const double value = std::strtod(clean.c_str(), &end);
    if (end != clean.c_str() + clean.size()) {
        throw ParseError("malformed number '" + clean + "'", line);
    }
    if (!std::isfinite(value)) {
        throw ParseError("non-finite component '" + clean + "'", line);
    }
    return value;
}

Signal read_csv(std::istream& in) {
    Signal samples;
    std::string line_text;
    std::size_t line = 0;
    while (std::getline(in, line_text)) {
        ++line;
        const std::string clean = trim(line_text);
        if (clean.empty() || clean.front() == '#') {
            continue;
        }
        const auto comma = clean.find(',');
        if (comma == std::string::npos) {
            throw ParseError("expected 're,im'", line);
        }
        if (clean.find(',', comma + 1) != std::string::npos) {
            throw ParseError("expected exactly one comma", line);
        }
        const double re = parse_double(clean.substr(0, comma), line);
        const double im = parse_double(clean.substr(comma + 1), line);
        samples.push_back({re, im});
    }
    if (in.bad()) {
        throw ParseError("read failure", line);
    }
    if (samples.empty()) {
        throw ParseError("no samples", 0);
    }
    return samples;
}

// Maps a byte offset from the JSON parser back to a 1-based line number.
std::size_t line_of_offset(const std::string& text, std::size_t offset) {
    const std::size_t stop = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + stop, '\n'));
}

Signal read_json(std::istream& in) {
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(err.what(), line_of_offset(text, err.byte));
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(err.what(), 0);
    }
    if (!doc.is_array() || doc.empty()) {
        throw ParseError("expected a nonempty array of [re, im] pairs", 0);
    }
    Signal samples;
    samples.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& entry = doc[i];
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw ParseError("element " + std::to_string(i) + " is not an [re, im] pair", 0);
        }
        const double re = entry[0].get<double>();
        const double im = entry[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw ParseError("element " + std::to_string(i) + " is non-finite", 0);
        }
        samples.push_back({re, im});
    }
    return samples;
}

// %.17g preserves every double exactly through a text round-trip.
std::string exact(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

}  // namespace

Signal read_signal(std::istream& in, SignalFormat format) {
    return format == SignalFormat::csv ? read_csv(in) : read_json(in);
}

void write_signal(std::ostream& out, const std::vector<ComplexValue>& values,
                  SignalFormat format) {
    if (format == SignalFormat::csv) {
        for (const ComplexValue& value : values) {
            out << exact(value.re) << ',' << exact(value.im) << '\n';
        }
        return;
    }
    nlohmann::json doc = nlohmann::json::array();
    for (const ComplexValue& value : values) {
        doc.push_back({value.re, value.im});
    }
    out << doc.dump() << '\n';
}

}  // namespace circlefft
