#pragma once

#include <stdexcept>
#include <string>

namespace dekomp {

// Base for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input; `pos` is a 0-based offset into the parsed string
// (or line number for multi-line formats, see message).
struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

// Operation applied to a ring/matrix it is not defined for, or dimension mismatch.
struct DomainError : Error {
    using Error::Error;
};

// A search or factorization exceeded its configured budget; the result would
// have required certification we cannot provide. CLI maps this to exit code 2.
struct CertificationError : Error {
    using Error::Error;
};

}  // namespace dekomp
