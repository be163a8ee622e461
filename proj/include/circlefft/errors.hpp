#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace circlefft {

// A transform size the algorithm cannot handle: zero, or not a power of two
// for the radix-2 paths.
class UnsupportedSizeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Signal-file parsing failure. line() is 1-based; 0 means the position is
// not line-addressable (e.g. an empty stream).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error(message), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace circlefft
