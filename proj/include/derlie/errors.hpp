#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace derlie {

/// Operands live in different ambient dimensions.
class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(std::size_t expected, std::size_t actual)
        : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                                ", got " + std::to_string(actual)) {}
};

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// The query is well formed but no decision procedure exists for it.
class UnsupportedQuery : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace derlie
