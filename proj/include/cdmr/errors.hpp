#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdmr {

/// Base class for every fault raised by the library. Decision outcomes
/// (NO, unsatisfiable, not tree realisable) are values, never exceptions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

class SearchSpaceTooLarge : public Error {
public:
    using Error::Error;
};

class DisconnectedInput : public Error {
public:
    using Error::Error;
};

class ImproperColouring : public Error {
public:
    using Error::Error;
};

class MalformedRealisation : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

} // namespace cdmr
