#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetcoh {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A jet order went past the configured cap.
class OrderCapExceeded : public Error {
public:
    using Error::Error;
};

/// Ill-formed input to an operation (wrong weight, p >= q, unknown name...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Evaluation point is missing a symbol or assigns h[1] = 0.
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// Syntax error while parsing; carries the byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace jetcoh
