#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

/// Recoverable misuse: bad input, unsupported operation, degree not covered.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Broken invariant inside the engine (inexact q-division, runaway rewriting,
/// pivot degeneracy).  Maps to process exit code 3.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

class parse_error : public domain_error {
public:
    parse_error(std::size_t position, const std::string& what)
        : domain_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace qhopf
