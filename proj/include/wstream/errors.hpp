#pragma once

#include <stdexcept>
#include <string>

namespace wstream {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (edge lists, plans, manifests). Carries a 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Invalid configuration: k = 0, empty eligible set, bad flag values.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Operation applied in an invalid state: empty window, double assignment.
class StateError : public Error {
public:
    using Error::Error;
};

// Structured file does not match its format (metadata files, result CSV).
class FormatError : public ParseError {
public:
    using ParseError::ParseError;
};

// Underlying I/O failure.
class IoError : public Error {
public:
    using Error::Error;
};

// Semantic data problems: incomplete assignments, checksum mismatches,
// dataset counts that disagree with the manifest.
class DataError : public Error {
public:
    using Error::Error;
};

} // namespace wstream
