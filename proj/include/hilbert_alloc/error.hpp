#pragma once

#include <stdexcept>
#include <string>

namespace hilbert_alloc {

// Invalid input: bad sizes, malformed shapes, out-of-range parameters.
// The CLI maps this to exit status 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A self-check failed. The CLI maps this to exit status 2.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace hilbert_alloc
