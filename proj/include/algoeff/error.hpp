#pragma once

#include <stdexcept>
#include <string>

namespace algoeff {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input values or inconsistent data (records, arguments, graphs).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed text input. line() is 1-based; 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

    // Same error, message prefixed with the file it came from.
    ParseError in_file(const std::string& file) const { return ParseError(Raw{}, file + ": " + what(), line_); }

private:
    struct Raw {};
    ParseError(Raw, const std::string& what, std::size_t line) : Error(what), line_(line) {}

    std::size_t line_;
};

// Shape inference failure attributed to one node of an architecture graph.
class ShapeError : public Error {
public:
    ShapeError(std::string node, const std::string& what)
        : Error("node '" + node + "': " + what), node_(std::move(node)) {}

    const std::string& node() const noexcept { return node_; }

private:
    std::string node_;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

} // namespace algoeff
