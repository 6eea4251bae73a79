#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seifert {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or ill-formed descriptor text. `position` is a 0-based offset
/// into the input string.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position), detail_(what)
    {}

    std::size_t position() const noexcept { return position_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

/// An operation was called on an input outside its domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Filling slope outside the two families with a known extension criterion.
class UnsupportedSlope : public Error {
public:
    using Error::Error;
};

/// The request is well-formed but lies outside what the library classifies.
class OutOfScope : public Error {
public:
    using Error::Error;
};

} // namespace seifert
