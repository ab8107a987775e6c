#ifndef DLMP_ERRORS_HPP
#define DLMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dlmp {

// Malformed input document (bad syntax, missing keys, wrong types).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that violates a model invariant.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured safety limit was exceeded (result-set or state-space size).
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dlmp

#endif
