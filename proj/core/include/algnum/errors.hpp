#pragma once

#include <stdexcept>
#include <string>

namespace algnum {

// Mathematically invalid input (zero where nonzero required, non-prime
// modulus, non-expanding base, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// The declared precision of an input is insufficient to decide a floor.
// required_extra_bits says how much tighter the input must be.
struct PrecisionError : std::runtime_error {
    long required_extra_bits;
    PrecisionError(const std::string& what, long required_extra)
        : std::runtime_error(what), required_extra_bits(required_extra) {}
};

// A configured cap (iterations, set size, rewrites) was exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace algnum
