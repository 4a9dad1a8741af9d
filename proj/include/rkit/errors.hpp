#pragma once

#include <stdexcept>
#include <string>

namespace rkit {

// A checked postcondition or internal consistency guarantee failed.  Signals a
// bug or an uncertified input, never a mathematical result.
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace rkit
