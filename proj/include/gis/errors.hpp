#pragma once

#include <stdexcept>
#include <string>

namespace gis {

// Malformed instance/solution text. Carries a 1-based line number when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Bad arguments or preconditions violated by the caller.
class invalid_input : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact integer arithmetic left the representable range.
class overflow_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A data-structure invariant failed; indicates a bug, not bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gis
