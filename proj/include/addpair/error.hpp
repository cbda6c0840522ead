#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace addpair {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violations on caller-supplied values (mismatched orders,
// out-of-range vertices, overlapping sets, malformed codes).
class InputError : public Error {
public:
    using Error::Error;
};

// Inputs that are well formed but exceed a size guard of the algorithm.
class UnsupportedSize : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error("byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace addpair
