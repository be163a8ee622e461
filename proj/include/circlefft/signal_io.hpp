#pragma once

#include <iosfwd>

#include "circlefft/complex_value.hpp"

namespace circlefft {

// csv: one sample per line as "re,im"; blank lines and lines starting with
//      '#' are ignored.
// json: a single array of [re, im] pairs.
enum class SignalFormat { csv, json };

// Values round-trip exactly through write_signal/read_signal. Both formats
// reject non-finite components and empty inputs; failures raise ParseError
// carrying a 1-based line number.
[[nodiscard]] Signal read_signal(std::istream& in, SignalFormat format);

void write_signal(std::ostream& out, const std::vector<ComplexValue>& values,
                  SignalFormat format);

}  // namespace circlefft
